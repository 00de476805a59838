#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gctlab/bigint.hpp"
#include "gctlab/errors.hpp"
#include "gctlab/partition.hpp"

namespace gctlab {

// Default ceiling for full character tables. p(20) = 627 classes and
// 20! still fits in 64 bits; past that the table is no longer desk scale.
constexpr int kCharacterTableCeiling = 20;

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw resource_limit_error("character arithmetic overflow");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw resource_limit_error("character arithmetic overflow");
  return r;
}

}  // namespace detail

// Centralizer order z_mu = prod_i i^{m_i} m_i! of a cycle type.
inline Integer centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int part : mu.parts()) ++mult[part];
  Integer z = 1;
  for (auto [cycle, count] : mult) {
    for (int i = 0; i < count; ++i) z *= Integer(cycle);
    z *= Integer::factorial(count);
  }
  return z;
}

inline Integer conjugacy_class_size(const Partition& mu) {
  return Integer::factorial(mu.size()).exact_div(centralizer_order(mu));
}

// Classes of S_m with their sizes, in decreasing lexicographic order.
// Built once per m and shared; immutable afterwards.
struct SymmetricGroupClasses {
  int m = 0;
  std::vector<Partition> classes;
  std::vector<Integer> sizes;
  Integer group_order;

  static const SymmetricGroupClasses& of(int m) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SymmetricGroupClasses>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[m];
    if (!slot) {
      auto fresh = std::make_unique<SymmetricGroupClasses>();
      fresh->m = m;
      fresh->classes = enumerate_partitions(m);
      fresh->sizes.reserve(fresh->classes.size());
      for (const auto& mu : fresh->classes)
        fresh->sizes.push_back(conjugacy_class_size(mu));
      fresh->group_order = Integer::factorial(m);
      slot = std::move(fresh);
    }
    return *slot;
  }

  int index_of(const Partition& mu) const {
    // classes are in decreasing lex order
    auto it = std::lower_bound(classes.begin(), classes.end(), mu,
                               [](const Partition& a, const Partition& b) {
                                 return a > b;
                               });
    if (it == classes.end() || !(*it == mu))
      throw invalid_input_error("not a class of S_" + std::to_string(m));
    return static_cast<int>(it - classes.begin());
  }
};

namespace detail {

// First-column hook encoding of a shape: the strictly increasing beta set
// {lambda_i + (k-1-i)}. Removing a border strip of length c is the move
// b -> b-c on one beta, legal when b >= c and b-c is free; the strip height
// parity is the number of betas jumped over.
inline std::vector<int> beta_set(const Partition& p) {
  int k = p.height();
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    beta[static_cast<std::size_t>(k - 1 - i)] = p.part(i) + (k - 1 - i);
  return beta;  // increasing
}

inline Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end());
  int k = static_cast<int>(beta.size());
  std::vector<int> parts;
  parts.reserve(beta.size());
  for (int i = k - 1; i >= 0; --i) {
    int part = beta[static_cast<std::size_t>(i)] - i;
    if (part > 0) parts.push_back(part);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

struct MnMemo {
  std::unordered_map<std::pair<Partition, Partition>, long long,
                     PartitionPairHash>
      values;
};

// Murnaghan-Nakayama recursion, peeling the largest cycle first so the
// remaining cycle type stays a partition (and memoizes well).
inline long long mn_recurse(const Partition& shape, const Partition& cycles,
                            MnMemo& memo) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, cycles);
  if (auto it = memo.values.find(key); it != memo.values.end())
    return it->second;

  const int strip = cycles.part(0);
  const Partition rest(
      std::vector<int>(cycles.parts().begin() + 1, cycles.parts().end()));

  long long total = 0;
  std::vector<int> beta = beta_set(shape);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b < strip) continue;
    int target = b - strip;
    bool occupied = false;
    int jumped = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < b) ++jumped;
    }
    if (occupied) continue;
    std::vector<int> next_beta = beta;
    next_beta[i] = target;
    long long sub = mn_recurse(partition_from_beta(std::move(next_beta)),
                               rest, memo);
    total = checked_add(total, (jumped % 2 == 0) ? sub : -sub);
  }
  memo.values.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// Single character value chi_lambda(mu) of S_m, m = |lambda| = |mu|.
inline long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw invalid_input_error("mn_character: |lambda| = " +
                              std::to_string(lambda.size()) + " but |mu| = " +
                              std::to_string(mu.size()));
  detail::MnMemo memo;
  return detail::mn_recurse(lambda, mu, memo);
}

// Number of standard Young tableaux of the shape, by the hook length
// formula. Independent of the MN recursion; used to pin chi(identity).
inline Integer hook_length_dimension(const Partition& p) {
  Partition conj = conjugate(p);
  Integer hooks = 1;
  for (int i = 0; i < p.height(); ++i)
    for (int j = 0; j < p.part(i); ++j)
      hooks *= Integer((p.part(i) - j) + (conj.part(j) - i) - 1);
  return Integer::factorial(p.size()).exact_div(hooks);
}

// Caches full character rows (one shape, all classes of S_m) behind a
// mutex. The shared MN memo makes consecutive rows of the same S_m cheap.
class CharacterRowCache {
 public:
  explicit CharacterRowCache(int m) : m_(m) {}

  int m() const { return m_; }

  std::vector<long long> row(const Partition& lambda) {
    if (lambda.size() != m_)
      throw invalid_input_error("character row: size mismatch");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = rows_.find(lambda);
    if (it != rows_.end()) {
      ++hits_;
      return it->second;
    }
    const auto& sym = SymmetricGroupClasses::of(m_);
    std::vector<long long> values;
    values.reserve(sym.classes.size());
    for (const auto& mu : sym.classes)
      values.push_back(detail::mn_recurse(lambda, mu, memo_));
    auto [pos, unused] = rows_.emplace(lambda, std::move(values));
    return pos->second;
  }

  std::uint64_t hits() const { return hits_; }

 private:
  int m_;
  std::mutex mutex_;
  detail::MnMemo memo_;
  std::unordered_map<Partition, std::vector<long long>, PartitionHash> rows_;
  std::uint64_t hits_ = 0;
};

// <chi_a * chi_b, chi_c> over S_m: the Kronecker multiplicity. Exact, via
// big-integer accumulation and an exact division by m! at the end; a
// nonzero remainder or negative result would mean broken character data
// and raises instead of returning garbage.
inline Integer inner_product_triple(const Partition& alpha,
                                    const Partition& beta,
                                    const Partition& gamma,
                                    CharacterRowCache* cache = nullptr) {
  const int m = alpha.size();
  if (beta.size() != m || gamma.size() != m)
    throw invalid_input_error("inner_product_triple: sizes differ");
  if (m == 0) return 1;

  const auto& sym = SymmetricGroupClasses::of(m);
  std::vector<long long> ra, rb, rc;
  if (cache != nullptr) {
    ra = cache->row(alpha);
    rb = cache->row(beta);
    rc = cache->row(gamma);
  } else {
    detail::MnMemo memo;
    auto fill = [&](const Partition& shape, std::vector<long long>& out) {
      out.reserve(sym.classes.size());
      for (const auto& mu : sym.classes)
        out.push_back(detail::mn_recurse(shape, mu, memo));
    };
    fill(alpha, ra);
    fill(beta, rb);
    fill(gamma, rc);
  }

  Integer sum = 0;
  for (std::size_t k = 0; k < sym.classes.size(); ++k) {
    Integer term = sym.sizes[k];
    term *= Integer(ra[k]);
    term *= Integer(rb[k]);
    term *= Integer(rc[k]);
    sum += term;
  }
  Integer result = sum.exact_div(sym.group_order);
  if (result.sign() < 0)
    throw verification_error("negative Kronecker multiplicity for (" +
                             alpha.str() + ")x(" + beta.str() + "):(" +
                             gamma.str() + ")");
  return result;
}

// Complete character table of S_n. Rows and columns both run over
// partitions of n in decreasing lexicographic order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreducibles;
  std::vector<Partition> classes;
  std::vector<long long> class_sizes;
  std::vector<std::vector<long long>> values;  // [irreducible][class]

  long long value(const Partition& lambda, const Partition& mu) const {
    const auto& sym = SymmetricGroupClasses::of(n);
    int row = sym.index_of(lambda);
    int col = sym.index_of(mu);
    return values[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
};

inline CharacterTable build_character_table(
    int n, int ceiling = kCharacterTableCeiling) {
  if (n < 1) throw invalid_input_error("character table: n must be positive");
  if (n > ceiling)
    throw resource_limit_error("character table for S_" + std::to_string(n) +
                               " exceeds ceiling " + std::to_string(ceiling));
  const auto& sym = SymmetricGroupClasses::of(n);
  CharacterTable table;
  table.n = n;
  table.irreducibles = sym.classes;
  table.classes = sym.classes;
  table.class_sizes.reserve(sym.sizes.size());
  for (const auto& s : sym.sizes) table.class_sizes.push_back(s.to_int64());

  detail::MnMemo memo;
  table.values.reserve(table.irreducibles.size());
  for (const auto& lambda : table.irreducibles) {
    std::vector<long long> row;
    row.reserve(table.classes.size());
    for (const auto& mu : table.classes)
      row.push_back(detail::mn_recurse(lambda, mu, memo));
    table.values.push_back(std::move(row));
  }
  return table;
}

// Exact structural checks: class sizes sum to n!, row orthogonality, and
// the identity column against the hook length formula. Raises on the first
// violation; used after every table build or cache load.
inline void check_character_table(const CharacterTable& t) {
  Integer total = 0;
  for (long long s : t.class_sizes) total += Integer(s);
  if (!(total == Integer::factorial(t.n)))
    throw verification_error("class sizes of S_" + std::to_string(t.n) +
                             " do not sum to n!");
  const Integer order = Integer::factorial(t.n);
  const std::size_t count = t.irreducibles.size();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      Integer dot = 0;
      for (std::size_t k = 0; k < count; ++k) {
        Integer term = Integer(t.class_sizes[k]);
        term *= Integer(t.values[a][k]);
        term *= Integer(t.values[b][k]);
        dot += term;
      }
      const Integer expected = a == b ? order : Integer(0);
      if (!(dot == expected))
        throw verification_error("row orthogonality fails for S_" +
                                 std::to_string(t.n));
    }
    // identity class is the all-ones cycle type (1^n): last in decreasing lex
    long long dim = t.values[a].back();
    if (!(Integer(dim) == hook_length_dimension(t.irreducibles[a])))
      throw verification_error("identity column disagrees with hook lengths");
  }
  // column orthogonality: sum_lambda chi(mu) chi(nu) = z_mu [mu = nu]
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u; v < count; ++v) {
      Integer dot = 0;
      for (std::size_t a = 0; a < count; ++a)
        dot += Integer(t.values[a][u]) * Integer(t.values[a][v]);
      const Integer expected =
          u == v ? centralizer_order(t.classes[u]) : Integer(0);
      if (!(dot == expected))
        throw verification_error("column orthogonality fails for S_" +
                                 std::to_string(t.n));
    }
  }
}

}  // namespace gctlab
