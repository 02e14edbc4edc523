#pragma once

#include <array>
#include <complex>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using cd = std::complex<double>;

inline double rel_err(cd got, cd want) {
  double d = std::abs(got - want);
  double m = std::abs(want);
  return m > 0 ? d / m : d;
}

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
    rows.push_back(cols);
  }
  return rows;
}

inline std::string data_path(const std::string& file) { return std::string(KOSHLIAKOV_TEST_DATA) + "/" + file; }

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing standard output. Standard error is left alone
// unless the command redirects it.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
