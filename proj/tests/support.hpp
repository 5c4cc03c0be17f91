#pragma once

// Shared helpers for the test binaries: fixture locations, scratch dirs,
// and a subprocess runner for the CLI tests.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace testsupport {

namespace fs = std::filesystem;

inline fs::path test_data_dir() { return fs::path(UIMPACT_TEST_DATA_DIR); }
inline fs::path demo_data_dir() { return fs::path(UIMPACT_DEMO_DATA_DIR); }
inline fs::path csu_data_dir() { return fs::path(UIMPACT_CSU_DATA_DIR); }

#ifdef UIMPACT_TOOL
inline std::string tool_path() { return UIMPACT_TOOL; }
#endif

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& hint) {
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            (hint + "-" + std::to_string(rd()) + "-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct ToolResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

#ifdef UIMPACT_TOOL
// Runs the CLI with the given argument string, capturing stdout/stderr.
inline ToolResult run_tool(const std::string& args, const TempDir& scratch,
                           const std::string& tag = "run") {
  const fs::path out_file = scratch / (tag + ".stdout");
  const fs::path err_file = scratch / (tag + ".stderr");
  const std::string command = std::string(tool_path()) + " " + args + " > " +
                              out_file.string() + " 2> " + err_file.string();
  const int status = std::system(command.c_str());
  ToolResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_file);
  result.err = read_file(err_file);
  return result;
}
#endif

}  // namespace testsupport
