#pragma once

#include <sstream>
#include <string>

#include "gctlab/cache.hpp"
#include "gctlab/characters.hpp"

namespace gctlab {

inline std::string serialize_character_table(const CharacterTable& t) {
  std::ostringstream out;
  out << "character_table\nn " << t.n << "\nclasses " << t.classes.size()
      << "\n";
  for (std::size_t i = 0; i < t.classes.size(); ++i)
    out << t.classes[i].str() << " " << t.class_sizes[i] << "\n";
  out << "values\n";
  for (const auto& row : t.values) {
    for (std::size_t k = 0; k < row.size(); ++k)
      out << (k ? " " : "") << row[k];
    out << "\n";
  }
  return out.str();
}

// Throws on any structural problem; the cache layer maps that to a rebuild.
inline CharacterTable parse_character_table(const std::string& payload) {
  std::istringstream in(payload);
  std::string word;
  CharacterTable t;
  std::size_t count = 0;
  if (!(in >> word) || word != "character_table")
    throw invalid_input_error("bad table header");
  if (!(in >> word) || word != "n" || !(in >> t.n) || t.n < 1)
    throw invalid_input_error("bad table rank");
  if (!(in >> word) || word != "classes" || !(in >> count) || count == 0)
    throw invalid_input_error("bad class count");
  for (std::size_t i = 0; i < count; ++i) {
    std::string text;
    long long size = 0;
    if (!(in >> text >> size)) throw invalid_input_error("truncated classes");
    Partition mu = Partition::parse(text);
    if (mu.size() != t.n) throw invalid_input_error("class of wrong size");
    t.classes.push_back(mu);
    t.class_sizes.push_back(size);
  }
  t.irreducibles = t.classes;
  if (!(in >> word) || word != "values")
    throw invalid_input_error("missing values block");
  t.values.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    t.values[i].resize(count);
    for (std::size_t k = 0; k < count; ++k)
      if (!(in >> t.values[i][k]))
        throw invalid_input_error("truncated values");
  }
  // cheap structural gate; full orthogonality is exercised in the tests
  Integer total = 0;
  for (long long s : t.class_sizes) total += Integer(s);
  if (!(total == Integer::factorial(t.n)))
    throw invalid_input_error("class sizes do not sum to n!");
  for (std::size_t i = 0; i < count; ++i) {
    if (!(Integer(t.values[i].back()) ==
          hook_length_dimension(t.irreducibles[i])))
      throw invalid_input_error("dimension column mismatch");
  }
  return t;
}

// Disk-backed, process-memoized character table. Corrupt or stale cache
// entries rebuild silently.
inline const CharacterTable& character_table(
    int n, int ceiling = kCharacterTableCeiling) {
  if (n < 1) throw invalid_input_error("character table: n must be positive");
  if (n > ceiling)
    throw resource_limit_error("character table for S_" + std::to_string(n) +
                               " exceeds ceiling " + std::to_string(ceiling));
  static std::mutex memo_mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> memo;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto& slot = memo[n];
  if (slot) return *slot;

  const std::string key = "character_table_" + std::to_string(n);
  std::string payload = DiskCache::instance().get_or_build(key, [n] {
    return serialize_character_table(build_character_table(n));
  });
  try {
    slot = std::make_unique<CharacterTable>(parse_character_table(payload));
  } catch (const std::exception&) {
    // checksum passed but the format is stale; rebuild from scratch
    slot = std::make_unique<CharacterTable>(build_character_table(n));
    DiskCache::instance().store(key, serialize_character_table(*slot));
  }
  return *slot;
}

}  // namespace gctlab
