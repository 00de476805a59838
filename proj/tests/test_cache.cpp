#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "gctlab/cache.hpp"
#include "gctlab/character_cache.hpp"
#include "gctlab/plethysm.hpp"

namespace fs = std::filesystem;
using gctlab::DiskCache;

namespace {

struct TempCacheDir {
  fs::path path;
  TempCacheDir() {
    path = fs::temp_directory_path() /
           ("gctlab-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
    DiskCache::instance().set_directory(path.string());
  }
  ~TempCacheDir() {
    DiskCache::instance().set_directory("");
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static std::atomic<int>& counter() {
    static std::atomic<int> c{0};
    return c;
  }
};

}  // namespace

TEST_CASE("store and load round-trip with checksum") {
  TempCacheDir tmp;
  auto& cache = DiskCache::instance();
  CHECK_FALSE(cache.load("alpha").has_value());
  cache.store("alpha", "line one\nline two\n");
  auto loaded = cache.load("alpha");
  REQUIRE(loaded.has_value());
  CHECK(*loaded == "line one\nline two\n");
}

TEST_CASE("corruption is a miss, not a crash") {
  TempCacheDir tmp;
  auto& cache = DiskCache::instance();
  cache.store("beta", "payload\n");
  REQUIRE(cache.load("beta").has_value());

  // flip a payload byte: checksum mismatch
  fs::path file = tmp.path / "beta.cache";
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(static_cast<std::streamoff>(std::string(DiskCache::kMagic).size()) +
            7);
    f.put('X');
  }
  CHECK_FALSE(cache.load("beta").has_value());

  // truncated file
  { std::ofstream f(file, std::ios::trunc); f << "garbage"; }
  CHECK_FALSE(cache.load("beta").has_value());

  // wrong key inside a well-formed file
  cache.store("gamma", "payload\n");
  fs::copy_file(tmp.path / "gamma.cache", file,
                fs::copy_options::overwrite_existing);
  CHECK_FALSE(cache.load("beta").has_value());
}

TEST_CASE("get_or_build builds once and serializes concurrent builders") {
  TempCacheDir tmp;
  auto& cache = DiskCache::instance();
  std::atomic<int> builds{0};
  auto build = [&] {
    ++builds;
    return std::string("expensive\n");
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&] {
      CHECK(cache.get_or_build("delta", build) == "expensive\n");
    });
  for (auto& t : pool) t.join();
  CHECK(builds.load() == 1);
  CHECK(cache.get_or_build("delta", build) == "expensive\n");
  CHECK(builds.load() == 1);
}

TEST_CASE("character table serialization round-trips") {
  auto table = gctlab::build_character_table(5);
  std::string blob = gctlab::serialize_character_table(table);
  auto parsed = gctlab::parse_character_table(blob);
  CHECK(parsed.n == 5);
  REQUIRE(parsed.values.size() == table.values.size());
  for (std::size_t i = 0; i < table.values.size(); ++i)
    CHECK(parsed.values[i] == table.values[i]);
  CHECK_NOTHROW(gctlab::check_character_table(parsed));

  // tampered payloads are rejected by the parser
  std::string bad = blob;
  bad.replace(bad.find("values"), 6, "valueZ");
  CHECK_THROWS_AS(gctlab::parse_character_table(bad),
                  gctlab::invalid_input_error);
}

TEST_CASE("cached tables hit the disk the second time") {
  TempCacheDir tmp;
  auto& cache = DiskCache::instance();
  cache.reset_counters();
  // bypass the in-process memo by touching serialization directly
  const std::string key = "character_table_probe_6";
  auto first = cache.get_or_build(key, [] {
    return gctlab::serialize_character_table(gctlab::build_character_table(6));
  });
  auto hits_before = cache.hits();
  auto second = cache.get_or_build(key, [] {
    FAIL("builder must not run again");
    return std::string();
  });
  CHECK(first == second);
  CHECK(cache.hits() == hits_before + 1);
  CHECK_NOTHROW(gctlab::parse_character_table(second));
}

TEST_CASE("corrupt table files rebuild instead of crashing") {
  TempCacheDir tmp;
  {
    std::ofstream f(tmp.path / "character_table_7.cache", std::ios::trunc);
    f << "this is not a table\n";
  }
  const auto& table = gctlab::character_table(7);
  CHECK(table.n == 7);
  CHECK_NOTHROW(gctlab::check_character_table(table));
  // the rebuild refreshed the file into a loadable state
  auto reloaded = DiskCache::instance().load("character_table_7");
  REQUIRE(reloaded.has_value());
  CHECK_NOTHROW(gctlab::parse_character_table(*reloaded));
}

TEST_CASE("plethysm expansions survive the disk round-trip") {
  TempCacheDir tmp;
  const auto& fresh = gctlab::detail::compute_plethysm_sym_sym(3, 2);
  std::string blob = gctlab::detail::serialize_expansion(fresh);
  auto parsed = gctlab::detail::parse_expansion(blob, 3, 2);
  CHECK(parsed.entries.size() == fresh.entries.size());
  for (const auto& [lambda, coeff] : fresh.entries)
    CHECK(parsed.coefficient(lambda) == coeff);
  CHECK_THROWS_AS(gctlab::detail::parse_expansion(blob, 2, 3),
                  gctlab::invalid_input_error);
}
