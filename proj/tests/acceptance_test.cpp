// Acceptance runner: executes the eight-check verification suite
// in-process, then exercises the command-line tool for byte-identical
// repeated runs and exit-code behavior, and prints one line per
// criterion. Exits 0 only if every criterion passes.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tpq/verify.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p, bool& ok) {
  std::ifstream f(p, std::ios::binary);
  if (!f) {
    ok = false;
    return {};
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  ok = true;
  return ss.str();
}

bool files_identical(const fs::path& a, const fs::path& b, std::string& why) {
  bool oka = false, okb = false;
  const std::string ca = slurp(a, oka);
  const std::string cb = slurp(b, okb);
  if (!oka || !okb) {
    why = "missing output file " + (oka ? b : a).string();
    return false;
  }
  if (ca != cb) {
    why = a.string() + " and " + b.string() + " differ";
    return false;
  }
  if (ca.empty()) {
    why = a.string() + " is empty";
    return false;
  }
  return true;
}

int run_cmd(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

bool check_cli_determinism(std::string& detail) {
  const char* cli_env = std::getenv("TPQ_CLI");
  if (cli_env == nullptr || std::string(cli_env).empty()) {
    detail = "TPQ_CLI is not set; run through ctest so the tool path is provided";
    return false;
  }
  const std::string cli = std::string("\"") + cli_env + "\"";

  const fs::path root = fs::current_path() / "acceptance_out";
  std::error_code ec;
  fs::remove_all(root, ec);
  for (const char* d : {"sweep_a", "sweep_b", "verify_a", "verify_b", "bad"})
    fs::create_directories(root / d);

  const std::string sweep_args = " lambda --s -2:2:0.5 --rho 0:2:0.5 --seed 7 --output-dir ";
  for (const char* d : {"sweep_a", "sweep_b"}) {
    const fs::path dir = root / d;
    const int rc = run_cmd(cli + sweep_args + dir.string() + " > " +
                           (dir / "log.txt").string() + " 2>&1");
    if (rc != 0) {
      detail = "sweep run in " + dir.string() + " exited with code " + std::to_string(rc);
      return false;
    }
  }
  std::string why;
  if (!files_identical(root / "sweep_a" / "lambda.csv", root / "sweep_b" / "lambda.csv", why)) {
    detail = "sweep outputs not byte-identical: " + why;
    return false;
  }

  for (const char* d : {"verify_a", "verify_b"}) {
    const fs::path dir = root / d;
    const int rc = run_cmd(cli + " verify --seed 0 --output-dir " + dir.string() + " > " +
                           (dir / "log.txt").string() + " 2>&1");
    if (rc != 0) {
      detail = "verify run in " + dir.string() + " exited with code " + std::to_string(rc) +
               " (expected 0 on a passing suite)";
      return false;
    }
  }
  if (!files_identical(root / "verify_a" / "verify_report.csv",
                       root / "verify_b" / "verify_report.csv", why)) {
    detail = "verify reports not byte-identical: " + why;
    return false;
  }

  const int bad_rc = run_cmd(cli + " lambda --s 4:-4:1 --output-dir " + (root / "bad").string() +
                             " > " + (root / "bad" / "log.txt").string() + " 2>&1");
  if (bad_rc != 2) {
    detail = "malformed range exited with code " + std::to_string(bad_rc) + " (expected 2)";
    return false;
  }

  detail =
      "repeated sweep and verify runs byte-identical; verify exited 0; malformed config "
      "exited 2";
  return true;
}

}  // namespace

int main() {
  std::vector<tpq::verify::CheckResult> results;
  tpq::verify::run_all({0}, [&results](const tpq::verify::CheckResult& c) {
    results.push_back(c);
    std::fprintf(stderr, "  [%s] %s: %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                 c.detail.c_str());
    std::fflush(stderr);
  });
  if (results.size() != 8) {
    std::printf("criterion 0: FAIL - suite ran %zu of 8 checks\n", results.size());
    return 1;
  }

  std::string cli_detail;
  const bool cli_ok = check_cli_determinism(cli_detail);

  const char* labels[8] = {
      "two-projection algebra representation and distinguished sums",
      "oscillator symbol quantizes to the shifted number operator",
      "smeared symbol agrees with independent oracles",
      "positivity, range, and monotone trends of the smeared pair",
      "deep-cone scaling converges at the expected rate",
      "finite sections fill the unit interval monotonically",
      "evolution contracts: unitarity, composition, observables, transport",
      "deterministic byte-identical outputs and exit codes",
  };

  bool all = true;
  for (int i = 0; i < 8; ++i) {
    bool pass = results[static_cast<std::size_t>(i)].pass;
    std::string detail = results[static_cast<std::size_t>(i)].detail;
    if (i == 7) {
      pass = pass && cli_ok;
      detail += "; " + cli_detail;
    }
    all = all && pass;
    std::printf("criterion %d: %s - %s (%s)\n", i + 1, pass ? "PASS" : "FAIL", labels[i],
                detail.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
