#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "gctlab/bigint.hpp"
#include "gctlab/cache.hpp"
#include "gctlab/character_cache.hpp"
#include "gctlab/characters.hpp"
#include "gctlab/errors.hpp"
#include "gctlab/partition.hpp"
#include "gctlab/rational.hpp"

namespace gctlab {

// Ceiling on d*m: the Schur extraction runs over a full S_{dm} character
// table, which is desk scale up to 18 boxes.
constexpr int kPlethysmCeiling = 18;

// Schur expansion of a degree-(d*m) symmetric function: partition ->
// positive multiplicity. Ordered decreasing-lex for reproducible output.
struct SchurExpansion {
  int d = 0;
  int m = 0;
  std::map<Partition, Integer, std::greater<Partition>> entries;

  Integer coefficient(const Partition& lambda) const {
    auto it = entries.find(lambda);
    return it == entries.end() ? Integer(0) : it->second;
  }
};

namespace detail {

// h_d[h_m] in the power-sum basis. Every pi gets a rational coefficient;
// scaled by d! (m!)^d all of them are integers, which is how they are
// accumulated: as exact integers over one common denominator.
//
// Route: h_d = sum_{mu |- d} p_mu / z_mu, and p_a[h_m] = h_m[p_a]
// = sum_{nu |- m} p_{a*nu} / z_nu, so each mu contributes products over
// its parts of stretched power sums.
inline std::map<Partition, Integer> plethysm_power_sums_scaled(int d, int m,
                                                               Integer* scale) {
  const Integer common =
      [&] {
        Integer s = Integer::factorial(d);
        const Integer mfact = Integer::factorial(m);
        for (int i = 0; i < d; ++i) s *= mfact;
        return s;
      }();
  *scale = common;

  std::map<Partition, Integer> total;
  const auto mus = enumerate_partitions(d);
  const auto nus = enumerate_partitions(m);
  std::vector<Integer> z_nu;
  z_nu.reserve(nus.size());
  for (const auto& nu : nus) z_nu.push_back(centralizer_order(nu));

  for (const auto& mu : mus) {
    const Integer z_mu = centralizer_order(mu);
    // partial products over the parts of mu: cycle type -> scaled coeff
    std::map<Partition, Integer> partial;
    partial[Partition()] = common.exact_div(z_mu);
    for (int part : mu.parts()) {
      std::map<Partition, Integer> next;
      for (const auto& [pi, coeff] : partial) {
        for (std::size_t t = 0; t < nus.size(); ++t) {
          // append part * nu to pi
          std::vector<int> merged = pi.parts();
          for (int v : nus[t].parts()) merged.push_back(part * v);
          std::sort(merged.begin(), merged.end(), std::greater<>());
          Partition key(std::move(merged));
          next[key] += coeff.exact_div(z_nu[t]);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pi, coeff] : partial) total[pi] += coeff;
  }
  return total;
}

inline std::string serialize_expansion(const SchurExpansion& e) {
  std::ostringstream out;
  out << "plethysm_sym_sym\nd " << e.d << "\nm " << e.m << "\nentries "
      << e.entries.size() << "\n";
  for (const auto& [lambda, coeff] : e.entries)
    out << lambda.str() << " " << coeff.str() << "\n";
  return out.str();
}

inline SchurExpansion parse_expansion(const std::string& payload, int d,
                                      int m) {
  std::istringstream in(payload);
  std::string word;
  SchurExpansion e;
  std::size_t count = 0;
  int dd = 0, mm = 0;
  if (!(in >> word) || word != "plethysm_sym_sym")
    throw invalid_input_error("bad plethysm header");
  if (!(in >> word >> dd) || word != "d" || dd != d)
    throw invalid_input_error("plethysm d mismatch");
  if (!(in >> word >> mm) || word != "m" || mm != m)
    throw invalid_input_error("plethysm m mismatch");
  if (!(in >> word >> count) || word != "entries")
    throw invalid_input_error("bad plethysm entry count");
  e.d = d;
  e.m = m;
  for (std::size_t i = 0; i < count; ++i) {
    std::string text, value;
    if (!(in >> text >> value)) throw invalid_input_error("truncated plethysm");
    Partition lambda = Partition::parse(text);
    Integer coeff = Integer::from_string(value);
    if (lambda.size() != d * m || coeff.sign() <= 0)
      throw invalid_input_error("invalid plethysm entry");
    e.entries.emplace(lambda, coeff);
  }
  return e;
}

inline SchurExpansion compute_plethysm_sym_sym(int d, int m) {
  SchurExpansion out;
  out.d = d;
  out.m = m;
  Integer scale;
  auto scaled = plethysm_power_sums_scaled(d, m, &scale);

  const int boxes = d * m;
  const CharacterTable& table = character_table(boxes, kPlethysmCeiling);
  const auto& sym = SymmetricGroupClasses::of(boxes);

  // <h_d[h_m], s_lambda> = sum_pi coeff(pi) chi_lambda(pi)
  std::vector<std::pair<std::size_t, Integer>> terms;
  terms.reserve(scaled.size());
  for (const auto& [pi, coeff] : scaled)
    terms.emplace_back(static_cast<std::size_t>(sym.index_of(pi)), coeff);

  for (std::size_t row = 0; row < table.irreducibles.size(); ++row) {
    Integer sum = 0;
    for (const auto& [col, coeff] : terms)
      sum += coeff * Integer(table.values[row][col]);
    Integer value = sum.exact_div(scale);
    if (value.sign() < 0)
      throw verification_error("negative plethysm coefficient at (" +
                               table.irreducibles[row].str() + ")");
    if (value.sign() > 0) out.entries.emplace(table.irreducibles[row], value);
  }
  return out;
}

}  // namespace detail

// Exact Schur expansion of Sym^d(Sym^m), i.e. of h_d composed with h_m.
// Disk-cached and process-memoized; the ceiling violation is an error.
inline const SchurExpansion& plethysm_sym_sym(int d, int m) {
  if (d < 1 || m < 1)
    throw invalid_input_error("plethysm_sym_sym: d and m must be positive");
  if (d * m > kPlethysmCeiling)
    throw resource_limit_error(
        "plethysm_sym_sym: d*m = " + std::to_string(d * m) +
        " exceeds ceiling " + std::to_string(kPlethysmCeiling));

  static std::mutex memo_mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SchurExpansion>> memo;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto& slot = memo[{d, m}];
  if (slot) return *slot;

  const std::string key =
      "plethysm_" + std::to_string(d) + "_" + std::to_string(m);
  std::string payload = DiskCache::instance().get_or_build(key, [d, m] {
    return detail::serialize_expansion(detail::compute_plethysm_sym_sym(d, m));
  });
  try {
    slot = std::make_unique<SchurExpansion>(
        detail::parse_expansion(payload, d, m));
  } catch (const std::exception&) {
    slot = std::make_unique<SchurExpansion>(
        detail::compute_plethysm_sym_sym(d, m));
    DiskCache::instance().store(key, detail::serialize_expansion(*slot));
  }
  return *slot;
}

// Necessary ambient condition for occurrence in the degree-d coordinate
// ring component: lambda must appear in Sym^d(Sym^m) at all.
inline bool occurs_in_ambient(const Partition& lambda, int d, int m) {
  if (lambda.size() != d * m) return false;
  return plethysm_sym_sym(d, m).coefficient(lambda).sign() > 0;
}

}  // namespace gctlab
