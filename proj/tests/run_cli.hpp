#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string cli_path() {
  const char* env = std::getenv("SHIDIST_CLI");
  if (env == nullptr || *env == '\0') {
    throw std::runtime_error("SHIDIST_CLI must point at the CLI binary");
  }
  return env;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the CLI with the given argument string via the shell, capturing
// both streams. env_prefix, when given, is prepended verbatim (e.g.
// "FOO=bar ").
inline RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
  static int counter = 0;
  const std::string base = "/tmp/shidist-cli-" + std::to_string(getpid()) + "-" +
                           std::to_string(counter++);
  const std::string out_file = base + ".out", err_file = base + ".err";
  const std::string cmd =
      env_prefix + cli_path() + " " + args + " >" + out_file + " 2>" + err_file;
  const int rc = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return result;
}

}  // namespace testutil
