#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

namespace gctlab {

// On-disk memo for expensive exact tables (character tables, plethysm
// expansions). Versioned self-describing text with a trailing checksum;
// anything that fails to parse or verify is treated as absent and rebuilt.
// Caching is best-effort: an unusable directory degrades to recompute,
// never to a crash.
//
// Directory resolution: explicit override (CLI --cache-dir), then the
// GCTLAB_CACHE_DIR environment variable, then a per-user cache location.
class DiskCache {
 public:
  static DiskCache& instance() {
    static DiskCache cache;
    return cache;
  }

  static constexpr const char* kMagic = "gctlab-cache/1";

  void set_directory(std::string dir) {
    std::lock_guard<std::mutex> lock(mutex_);
    override_dir_ = std::move(dir);
  }

  void set_enabled(bool enabled) {
    std::lock_guard<std::mutex> lock(mutex_);
    enabled_ = enabled;
  }

  std::string directory() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!override_dir_.empty()) return override_dir_;
    if (const char* env = std::getenv("GCTLAB_CACHE_DIR"); env && *env)
      return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
      return std::string(xdg) + "/gctlab";
    if (const char* home = std::getenv("HOME"); home && *home)
      return std::string(home) + "/.cache/gctlab";
    return ".gctlab-cache";
  }

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }

  // Returns the verified payload for the key, or nothing. Corrupt or
  // mismatched files count as misses.
  std::optional<std::string> load(const std::string& key) {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) {
      ++misses_;
      return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();

    // last line: "checksum <hex>"
    std::size_t mark = content.rfind("checksum ");
    if (mark == std::string::npos || mark == 0 || content[mark - 1] != '\n') {
      ++misses_;
      return std::nullopt;
    }
    std::string body = content.substr(0, mark);
    std::string tail = content.substr(mark + 9);
    while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r'))
      tail.pop_back();
    char expected[17];
    std::snprintf(expected, sizeof expected, "%016llx",
                  static_cast<unsigned long long>(fnv1a(body)));
    if (tail != expected) {
      ++misses_;
      return std::nullopt;
    }
    std::string header = std::string(kMagic) + " " + key + "\n";
    if (body.rfind(header, 0) != 0) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return body.substr(header.size());
  }

  void store(const std::string& key, const std::string& payload) {
    if (!enabled()) return;
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::path dir(directory());
    fs::create_directories(dir, ec);
    if (ec) return;
    std::string body = std::string(kMagic) + " " + key + "\n" + payload;
    char sum[17];
    std::snprintf(sum, sizeof sum, "%016llx",
                  static_cast<unsigned long long>(fnv1a(body)));
    fs::path final_path = path_for(key);
    fs::path tmp_path = final_path;
    tmp_path += ".tmp." + std::to_string(
        static_cast<unsigned long>(reinterpret_cast<std::uintptr_t>(this)) ^
        static_cast<unsigned long>(std::hash<std::string>{}(key)));
    {
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      if (!out) return;
      out << body << "checksum " << sum << "\n";
      if (!out.good()) {
        out.close();
        fs::remove(tmp_path, ec);
        return;
      }
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) fs::remove(tmp_path, ec);
  }

  // Serializes concurrent builders of the same key: the first builds and
  // stores, later arrivals wait and then read the finished value.
  std::string get_or_build(const std::string& key,
                           const std::function<std::string()>& builder) {
    std::shared_ptr<std::mutex> gate;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto& slot = gates_[key];
      if (!slot) slot = std::make_shared<std::mutex>();
      gate = slot;
    }
    std::lock_guard<std::mutex> build_lock(*gate);
    if (auto cached = load(key)) return *cached;
    std::string fresh = builder();
    store(key, fresh);
    return fresh;
  }

  void reset_counters() {
    hits_ = 0;
    misses_ = 0;
  }

 private:
  DiskCache() = default;

  bool enabled() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return enabled_;
  }

  std::filesystem::path path_for(const std::string& key) const {
    return std::filesystem::path(directory()) / (key + ".cache");
  }

  static std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  mutable std::mutex mutex_;
  std::string override_dir_;
  bool enabled_ = true;
  std::map<std::string, std::shared_ptr<std::mutex>> gates_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

}  // namespace gctlab
