#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace weylchar::cli {

// One file per (operation, key) under a directory. The file starts with a
// header line naming the format version, the digest and the full key; a
// file whose header does not match the request is treated as a miss, so a
// version bump or a digest collision never returns a wrong payload.
class DiskCache {
 public:
  static constexpr std::string_view format_version = "weylchar-cache/1";

  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& op, const std::string& key) const;

  std::optional<std::string> load(const std::string& op, const std::string& key) const;
  // Writes under an exclusive advisory lock and renames into place.
  void store(const std::string& op, const std::string& key, const std::string& payload) const;

 private:
  std::string header(const std::string& key) const;
  std::filesystem::path dir_;
};

// 64-bit FNV-1a, 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

}  // namespace weylchar::cli
