#include <iostream>

#include "optomech/cli.hpp"

int main(int argc, char** argv) {
  return optomech::run_cli(argc, argv, std::cout, std::cerr);
}
