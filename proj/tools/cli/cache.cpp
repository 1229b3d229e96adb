#include "cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "weylchar/errors.hpp"

namespace weylchar::cli {

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_))
    throw InputError("cannot use cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path DiskCache::path_for(const std::string& op, const std::string& key) const {
  return dir_ / (op + "-" + fnv1a64_hex(key) + ".cache");
}

std::string DiskCache::header(const std::string& key) const {
  return std::string(format_version) + " fnv1a64=" + fnv1a64_hex(key) + " key=" + key + "\n";
}

std::optional<std::string> DiskCache::load(const std::string& op, const std::string& key) const {
  std::ifstream in(path_for(op, key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const std::string expected = header(key);
  if (text.compare(0, expected.size(), expected) != 0) return std::nullopt;
  return text.substr(expected.size());
}

namespace {
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};
}  // namespace

void DiskCache::store(const std::string& op, const std::string& key, const std::string& payload) const {
  FileLock lock(dir_ / ".lock");
  const auto target = path_for(op, key);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // an unwritable cache only costs recomputation
    out << header(key) << payload;
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace weylchar::cli
