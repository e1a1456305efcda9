#include <atomic>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "riemwave/cli.hpp"

namespace riemwave::cli {

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::filesystem::filesystem_error("cannot create output directory", dir, ec);
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  static std::atomic<unsigned long> counter{0};
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::filesystem::filesystem_error("cannot open for writing", tmp,
                                              std::make_error_code(std::errc::io_error));
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::filesystem::filesystem_error("write failed", tmp, std::make_error_code(std::errc::io_error));
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace riemwave::cli
