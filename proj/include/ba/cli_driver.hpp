#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ba::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct RunManifest {
  std::string command;
  std::string family;
  int n = 0;
  std::string l, m, mults;
  std::string config_path;
  std::vector<std::string> checks;
  std::string out_path;
  std::string format = "json";
  long long max_size = 2'000'000;
  std::string poly = "k2";
  bool timing = false;
  unsigned seed = 0;  // reserved for randomized tests; the mathematics never reads it
};

const std::vector<std::string>& known_checks();

int cmd_build(const RunManifest& m, std::ostream& out, std::ostream& err);
int cmd_construct(const RunManifest& m, std::ostream& out, std::ostream& err);
int cmd_verify(const RunManifest& m, std::ostream& out, std::ostream& err);
int cmd_show_operator(const RunManifest& m, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ba::cli
