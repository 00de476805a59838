#pragma once

#include <atomic>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gctlab/branching.hpp"
#include "gctlab/characters.hpp"
#include "gctlab/kronecker.hpp"
#include "gctlab/partition.hpp"
#include "gctlab/plethysm.hpp"
#include "gctlab/separability.hpp"

namespace gctlab {

// Self-verification sweeps: every closed form and construction in the
// library checked against the character oracle over its whole documented
// domain. These back the CLI verify command; the acceptance suite runs
// them as well.

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

// Fixed task list, worker pool, slot-per-task results: output independent
// of the worker count.
inline void run_indexed(std::size_t count, int threads,
                        const std::function<void(std::size_t)>& task) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<int>(threads, static_cast<int>(count));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        task(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

// Two-row closed form against the oracle: every ordered triple of two-row
// partitions for every m up to the bound.
inline CheckResult check_rw_two_row(int max_m = 12, int threads = 1) {
  std::vector<int> ms;
  for (int m = 1; m <= max_m; ++m) ms.push_back(m);
  std::vector<std::string> failures(ms.size());
  std::atomic<long long> instances{0};
  detail::run_indexed(ms.size(), threads, [&](std::size_t idx) {
    const int m = ms[idx];
    CharacterRowCache cache(m);
    const auto shapes = enumerate_partitions(m, 2);
    std::ostringstream bad;
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        for (const auto& c : shapes) {
          long long closed = rw_two_row(a, b, c);
          Integer oracle = inner_product_triple(a, b, c, &cache);
          ++instances;
          if (!(oracle == Integer(closed))) {
            bad << " (" << a.str() << ")(" << b.str() << ")(" << c.str()
                << "): closed " << closed << " oracle " << oracle.str();
          }
        }
    failures[idx] = bad.str();
  });
  CheckResult r;
  r.name = "rw_two_row_vs_oracle";
  std::string all;
  for (const auto& f : failures) all += f;
  r.passed = all.empty();
  r.detail = r.passed ? std::to_string(instances.load()) + " ordered triples, m <= " +
                            std::to_string(max_m) + ", exact agreement"
                      : "mismatches:" + all;
  return r;
}

// Four-row closed form against the oracle on its whole in-domain range.
inline CheckResult check_rw_four_row(int max_m = 12, int threads = 1) {
  std::vector<int> ms;
  for (int m = 4; m <= max_m; ++m) ms.push_back(m);
  std::vector<std::string> failures(ms.size());
  std::atomic<long long> instances{0};
  detail::run_indexed(ms.size(), threads, [&](std::size_t idx) {
    const int m = ms[idx];
    CharacterRowCache cache(m);
    const auto two_rows = enumerate_partitions(m, 2);
    std::vector<Partition> thirds;
    for (const auto& p : enumerate_partitions(m, 4))
      if (p.height() == 4 && p.part(2) == p.part(3)) thirds.push_back(p);
    std::ostringstream bad;
    for (const auto& a : two_rows)
      for (const auto& b : two_rows)
        for (const auto& c : thirds) {
          long long closed;
          try {
            closed = rw_four_row(a, b, c);
          } catch (const closed_form_inapplicable_error&) {
            continue;
          }
          Integer oracle = inner_product_triple(a, b, c, &cache);
          ++instances;
          if (!(oracle == Integer(closed)))
            bad << " (" << a.str() << ")(" << b.str() << ")(" << c.str()
                << "): closed " << closed << " oracle " << oracle.str();
        }
    failures[idx] = bad.str();
  });
  CheckResult r;
  r.name = "rw_four_row_vs_oracle";
  std::string all;
  for (const auto& f : failures) all += f;
  r.passed = all.empty();
  r.detail = r.passed ? std::to_string(instances.load()) +
                            " in-domain instances, m <= " +
                            std::to_string(max_m) + ", exact agreement"
                      : "mismatches:" + all;
  return r;
}

inline SuiteReport verify_rw(int threads = 1) {
  SuiteReport report;
  report.suite = "rw";
  report.checks.push_back(check_rw_two_row(12, threads));
  report.checks.push_back(check_rw_four_row(12, threads));
  return report;
}

// The parity law: for the two-row rectangle delta = (m/2, m/2), a two-row
// rho occurs in the tensor square exactly when its second row is even.
// Both the dispatcher route and the raw oracle are held to it.
inline SuiteReport verify_parity(int threads = 1) {
  SuiteReport report;
  report.suite = "parity";
  std::vector<int> ms = {4, 6, 8, 10, 12};
  std::vector<CheckResult> results(ms.size());
  detail::run_indexed(ms.size(), threads, [&](std::size_t idx) {
    const int m = ms[idx];
    CharacterRowCache cache(m);
    const Partition delta({m / 2, m / 2});
    std::ostringstream bad;
    int count = 0;
    for (const auto& rho : enumerate_partitions(m, 2)) {
      const bool expected = rho.part(1) % 2 == 0;
      const bool via_dispatch = tensor_square_contains(delta, rho, &cache);
      const bool via_oracle =
          inner_product_triple(delta, delta, rho, &cache).sign() > 0;
      ++count;
      if (via_dispatch != expected || via_oracle != expected)
        bad << " rho=(" << rho.str() << ") expected " << expected;
    }
    CheckResult r;
    r.name = "parity_m_" + std::to_string(m);
    r.passed = bad.str().empty();
    r.detail = r.passed ? std::to_string(count) + " two-row rho checked"
                        : "violations:" + bad.str();
    results[idx] = r;
  });
  report.checks = std::move(results);
  return report;
}

// Certificates for every nontrivial ordered row pair with even sizes and
// |lambda| + |mu| <= total. Emission already oracle-verifies; this re-checks
// the certificate invariants independently.
inline SuiteReport verify_psl2(int total = 8, int threads = 1) {
  SuiteReport report;
  report.suite = "psl2";
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a <= total; a += 2)
    for (int b = 0; a + b <= total; b += 2)
      if (a + b > 0) pairs.emplace_back(a, b);
  std::vector<CheckResult> results(pairs.size());
  detail::run_indexed(pairs.size(), threads, [&](std::size_t idx) {
    auto [a, b] = pairs[idx];
    const Partition lambda = a ? Partition({a}) : Partition();
    const Partition mu = b ? Partition({b}) : Partition();
    CheckResult r;
    r.name = "psl2_lambda_" + std::to_string(a) + "_mu_" + std::to_string(b);
    try {
      SeparabilityCertificate cert = find_separating_rho_n2(lambda, mu);
      bool ok = cert.coeff_target.sign() > 0 && cert.coeff_rect.is_zero() &&
                cert.m_used >= 4 * (a + b) && cert.m_used % 2 == 0 &&
                cert.rho.size() == cert.m_used;
      // independent oracle recomputation of both coefficients
      CharacterRowCache cache(cert.m_used);
      const Partition lbar = pad_columns(lambda, 2, cert.m_used);
      const Partition mbar = pad_columns(mu, 2, cert.m_used);
      const Partition delta({cert.m_used / 2, cert.m_used / 2});
      ok = ok &&
           inner_product_triple(lbar, mbar, cert.rho, &cache) ==
               cert.coeff_target &&
           inner_product_triple(delta, delta, cert.rho, &cache).is_zero();
      r.passed = ok;
      r.detail = "m=" + std::to_string(cert.m_used) + " rho=(" +
                 cert.rho.str() + ") target=" + cert.coeff_target.str() +
                 " case=" + to_string(cert.case_tag);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results[idx] = r;
  });
  report.checks = std::move(results);
  return report;
}

// Plethysm invariants: the even-second-row law for Sym^2(Sym^m) and the
// binomial dimension identity for all d*m up to the bound.
inline SuiteReport verify_plethysm(int max_boxes = 12, int threads = 1) {
  SuiteReport report;
  report.suite = "plethysm";

  {
    CheckResult r;
    r.name = "sym2_even_rows";
    std::ostringstream bad;
    for (int m = 1; m <= 6; ++m) {
      const SchurExpansion& e = plethysm_sym_sym(2, m);
      std::map<Partition, Integer, std::greater<Partition>> expected;
      for (int i = 0; i <= m; i += 2)
        expected.emplace(i == 0 ? Partition({2 * m})
                                : Partition({2 * m - i, i}),
                         Integer(1));
      if (!(e.entries.size() == expected.size() &&
            std::equal(e.entries.begin(), e.entries.end(), expected.begin(),
                       [](const auto& x, const auto& y) {
                         return x.first == y.first && x.second == y.second;
                       })))
        bad << " m=" << m << " expansion wrong";
    }
    r.passed = bad.str().empty();
    r.detail = r.passed ? "Sym^2(Sym^m) = sum of s_(2m-i,i), i even, m <= 6"
                        : bad.str();
    report.checks.push_back(r);
  }

  std::vector<std::pair<int, int>> dms;
  for (int d = 1; d <= max_boxes; ++d)
    for (int m = 1; d * m <= max_boxes; ++m) dms.emplace_back(d, m);
  std::vector<CheckResult> dim_checks(dms.size());
  detail::run_indexed(dms.size(), threads, [&](std::size_t idx) {
    auto [d, m] = dms[idx];
    CheckResult r;
    r.name = "dimension_d" + std::to_string(d) + "_m" + std::to_string(m);
    const int rank = d * m;
    const SchurExpansion& e = plethysm_sym_sym(d, m);
    Integer lhs = 0;
    for (const auto& [lambda, coeff] : e.entries)
      lhs += coeff * weyl_dimension_gl(lambda, rank);
    const Integer sym_dim = Integer::binomial(Integer(rank + m - 1), m);
    const Integer rhs = Integer::binomial(sym_dim + Integer(d - 1), d);
    r.passed = lhs == rhs;
    r.detail = r.passed ? "sum coeff*dim = " + lhs.str()
                        : "lhs " + lhs.str() + " rhs " + rhs.str();
    dim_checks[idx] = r;
  });
  for (auto& c : dim_checks) report.checks.push_back(std::move(c));
  return report;
}

// Branching dimension conservation for single-step restriction and Levi
// restriction, over all shapes of size <= 8 and ranks <= 4; Levi entries
// must also agree with the Littlewood-Richardson coefficients.
inline SuiteReport verify_branching(int max_size = 8, int max_rank = 4,
                                    int threads = 1) {
  SuiteReport report;
  report.suite = "branching";

  std::vector<CheckResult> gl_checks;
  {
    std::vector<int> ranks;
    for (int r = 2; r <= max_rank; ++r) ranks.push_back(r);
    gl_checks.resize(ranks.size());
    detail::run_indexed(ranks.size(), threads, [&](std::size_t idx) {
      const int rank = ranks[idx];
      std::ostringstream bad;
      int count = 0;
      for (int s = 0; s <= max_size; ++s)
        for (const auto& lambda : enumerate_partitions(s, rank)) {
          const auto branch = gl_branch(lambda, rank, rank - 1);
          Integer total = 0;
          for (const auto& e : branch.entries)
            total += Integer(e.multiplicity) *
                     weyl_dimension_gl(e.weight, rank - 1);
          ++count;
          if (!(total == weyl_dimension_gl(lambda, rank)))
            bad << " lambda=(" << lambda.str() << ") rank " << rank;
        }
      CheckResult r;
      r.name = "gl_branch_dimensions_rank_" + std::to_string(rank);
      r.passed = bad.str().empty();
      r.detail = r.passed ? std::to_string(count) + " restrictions conserved"
                          : "violations:" + bad.str();
      gl_checks[idx] = r;
    });
  }
  for (auto& c : gl_checks) report.checks.push_back(std::move(c));

  std::vector<std::pair<int, int>> kls;
  for (int k = 1; k <= max_rank; ++k)
    for (int l = 1; k + l <= max_rank; ++l) kls.emplace_back(k, l);
  std::vector<CheckResult> levi_checks(kls.size());
  detail::run_indexed(kls.size(), threads, [&](std::size_t idx) {
    auto [k, l] = kls[idx];
    std::ostringstream bad;
    int count = 0;
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : enumerate_partitions(s, k + l)) {
        const auto levi = levi_restrict(lambda, k, l);
        Integer total = 0;
        for (const auto& e : levi.entries) {
          total += Integer(e.multiplicity) * weyl_dimension_gl(e.left, k) *
                   weyl_dimension_gl(e.right, l);
          if (e.multiplicity != lr_coefficient(lambda, e.left, e.right))
            bad << " LR mismatch at (" << lambda.str() << ")";
        }
        ++count;
        if (!(total == weyl_dimension_gl(lambda, k + l)))
          bad << " lambda=(" << lambda.str() << ") k=" << k << " l=" << l;
      }
    CheckResult r;
    r.name = "levi_dimensions_k" + std::to_string(k) + "_l" + std::to_string(l);
    r.passed = bad.str().empty();
    r.detail = r.passed ? std::to_string(count) + " restrictions conserved"
                        : "violations:" + bad.str();
    levi_checks[idx] = r;
  });
  for (auto& c : levi_checks) report.checks.push_back(std::move(c));
  return report;
}

inline std::vector<SuiteReport> verify_suites(const std::string& suite,
                                              int threads = 1) {
  std::vector<SuiteReport> reports;
  if (suite == "rw" || suite == "all") reports.push_back(verify_rw(threads));
  if (suite == "parity" || suite == "all")
    reports.push_back(verify_parity(threads));
  if (suite == "psl2" || suite == "all")
    reports.push_back(verify_psl2(8, threads));
  if (suite == "plethysm" || suite == "all")
    reports.push_back(verify_plethysm(12, threads));
  if (suite == "branching" || suite == "all")
    reports.push_back(verify_branching(8, 4, threads));
  if (reports.empty())
    throw invalid_input_error("unknown verify suite: " + suite);
  return reports;
}

}  // namespace gctlab
