#pragma once

// Runs the command-line tool and captures its output.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace testproc {

struct Result {
  int code = -1;
  std::string out;
};

/// Runs `HLNET_CLI_PATH args` through the shell with stderr discarded.
inline Result run_cli(const std::string &args, const std::string &env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + "\"" HLNET_CLI_PATH "\" " + args + " 2>/dev/null";
  Result result;
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe)
    return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string golden(const std::string &name) { return read_file(std::string(HLNET_GOLDEN_DIR) + "/" + name); }

} // namespace testproc
