#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "optomech/cli.hpp"

using namespace optomech;

namespace {

const std::string kConfigs = std::string(OPTOMECH_SOURCE_DIR) + "/configs/";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "optomech");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::size_t data_rows(const std::string& csv_text) {
  std::size_t n = 0;
  for (const auto& l : lines(csv_text)) {
    if (!l.empty() && l[0] != '#') ++n;
  }
  return n - 1;  // header
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("optomech_cli_" + name);
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_CASE("steady") {
  const auto r = run({"steady", "--config", kConfigs + "fig2.toml"});
  CHECK(r.code == kExitOk);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "eps_d_over_kappa,alpha_re,alpha_im,alpha_abs,beta1,beta2,delta_a_over_kappa,residual");
  CHECK(l[1].find("579.89") == 0);
}

TEST_CASE("frame, measures, cooling") {
  for (const char* cmd : {"frame", "measures", "cooling"}) {
    const auto r = run({cmd, "--config", kConfigs + "fig2.toml", "--alpha", "100"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out).size() == 2);
  }
  const auto m = run({"measures", "--config", kConfigs + "fig2.toml"});
  CHECK(lines(m.out)[0] == "log_negativity,purity,n_eff1,n_eff2,fidelity");
  const auto f = run({"frame", "--config", kConfigs + "fig2.toml"});
  CHECK(lines(f.out)[1].find("1.1989476363991853,5.8") == 0);
}

TEST_CASE("stability map") {
  const auto r = run({"stability-map", "--config", kConfigs + "fig2.toml", "--g0-range",
                      "0:0.02:3", "--lambda0-range", "29:31:4"});
  CHECK(r.code == kExitOk);
  CHECK(data_rows(r.out) == 12);
}

TEST_CASE("oracle check") {
  const auto r = run({"oracle-check", "--config", kConfigs + "oracle_small.toml", "--alpha",
                      "100", "--cutoffs", "4,4,4"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out)[0].find("max_abs_discrepancy,tail") == 0);
  CHECK(run({"oracle-check", "--config", kConfigs + "oracle_small.toml", "--cutoffs", "4,4"})
            .code == kExitMalformed);
}

TEST_CASE("sweep from a config") {
  const auto r = run({"sweep", "--config", kConfigs + "fig2.toml", "--var", "delta_a", "--range",
                      "5:6:3", "--outputs", "E_N,F"});
  CHECK(r.code == kExitOk);
  CHECK(data_rows(r.out) == 3);
  CHECK(r.out.find("delta_a_over_kappa,log_negativity,fidelity,error") != std::string::npos);

  const auto two = run({"sweep", "--config", kConfigs + "fig2.toml", "--var", "power", "--range",
                        "1e-8:1e-7:2", "--log", "--var2", "nth", "--range2", "0:10:3"});
  CHECK(two.code == kExitOk);
  CHECK(data_rows(two.out) == 6);
}

TEST_CASE("sweep preset to a file") {
  const auto path = std::filesystem::temp_directory_path() / "optomech_cli_fig4.csv";
  std::filesystem::remove(path);
  const auto r = run({"sweep", "--preset", "fig4", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(data_rows(text) == 62);
}

TEST_CASE("malformed input exits with 2") {
  CHECK(run({}).code == kExitMalformed);
  CHECK(run({"explode"}).code == kExitMalformed);
  CHECK(run({"steady"}).code == kExitMalformed);
  CHECK(run({"steady", "--config", "/nonexistent.toml"}).code == kExitMalformed);
  CHECK(run({"sweep", "--preset", "fig10"}).code == kExitMalformed);
  CHECK(run({"sweep", "--config", kConfigs + "fig2.toml", "--var", "temperature", "--range",
             "0:1:3"})
            .code == kExitMalformed);
  CHECK(run({"sweep", "--config", kConfigs + "fig2.toml", "--var", "nth", "--range", "0:1:1"})
            .code == kExitMalformed);
  CHECK(run({"sweep", "--config", kConfigs + "fig2.toml", "--var", "nth"}).code ==
        kExitMalformed);
  const auto bad = scratch("bad.toml", "kappa_hz = 1e5\n");
  const auto r = run({"measures", "--config", bad.string()});
  CHECK(r.code == kExitMalformed);
  CHECK(r.err.find("missing required key") != std::string::npos);
}

TEST_CASE("runtime failures exit with 3") {
  std::ifstream in(kConfigs + "fig2.toml");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  text.replace(text.find("lambda0_over_kappa = 30"), 23, "lambda0_over_kappa = 31");
  text.replace(text.find("delta_a = \"omega1p\""), 19, "delta_a_over_kappa = 5.8");
  const auto unstable = scratch("unstable.toml", text);
  const auto r = run({"measures", "--config", unstable.string()});
  CHECK(r.code == kExitFailure);
  CHECK_FALSE(r.err.empty());

  CHECK(run({"sweep", "--preset", "fig4", "--out", "/nonexistent/dir/out.csv"}).code ==
        kExitFailure);
}

TEST_CASE("installed binary reports exit codes") {
  auto status = [](const std::string& args) {
    const int raw = std::system((std::string(OPTOMECH_CLI) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("--version") == 0);
  CHECK(status("steady --config " + kConfigs + "fig2.toml") == 0);
  CHECK(status("steady") == 2);
  CHECK(status("sweep --preset fig4 --out /nonexistent/dir/x.csv") == 3);
}
