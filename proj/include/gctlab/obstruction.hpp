#pragma once

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "gctlab/bigint.hpp"
#include "gctlab/characters.hpp"
#include "gctlab/errors.hpp"
#include "gctlab/kronecker.hpp"
#include "gctlab/partition.hpp"
#include "gctlab/plethysm.hpp"

namespace gctlab {

// Candidate search for strong obstructions against the determinant orbit
// closure at parameters (n, m, d): n the permanent side, m the matrix side
// (ambient rank m^2), d the degree. Every lambda |- m*d is classified by
// the implementable necessary filters:
//
//   passes_ambient  — lambda occurs in Sym^d(Sym^m), the ambient of the
//                     degree-d coordinate ring component;
//   passes_height   — height(lambda) <= n^2 + 1, the permanent-side
//                     restriction bound in the polynomial normalization;
//   det_coefficient — the Kronecker multiplicity c_{(d^m),(d^m),lambda},
//                     the det^d-line type count in the GL_m x GL_m
//                     restriction; 0 means the determinant side excludes
//                     lambda.
//
// is_candidate = ambient && height && det_coefficient == 0. Candidates
// satisfy all implemented necessary conditions; they are leads, not proofs
// of obstruction.
struct ObstructionCandidate {
  Partition lambda;
  int n = 0;
  int m = 0;
  int d = 0;
  bool passes_ambient = false;
  bool passes_height = false;
  Integer det_coefficient;
  bool is_candidate = false;
};

// Multiplicity of the determinant-power line type: the Kronecker
// coefficient of lambda against two copies of the m-row rectangle (d^m).
inline Integer det_admissible_coefficient(const Partition& lambda, int d,
                                          int m,
                                          CharacterRowCache* cache = nullptr,
                                          bool oracle_only = false) {
  if (lambda.size() != m * d)
    throw invalid_input_error("det_admissible_coefficient: |lambda| = " +
                              std::to_string(lambda.size()) + " but m*d = " +
                              std::to_string(m * d));
  Partition rectangle(std::vector<int>(static_cast<std::size_t>(m), d));
  const auto method =
      oracle_only ? KroneckerMethod::oracle : KroneckerMethod::automatic;
  return kronecker(rectangle, rectangle, lambda, method, false, cache).value;
}

// Height bound from the restriction theorem for the padded permanent: in
// the polynomial-weight normalization the dual-diagram bound becomes
// height(lambda) <= n^2 + 1 directly.
inline bool perm_side_height_ok(const Partition& lambda, int n, int m, int d) {
  if (lambda.size() != m * d)
    throw invalid_input_error("perm_side_height_ok: |lambda| != m*d");
  (void)m;
  return lambda.height() <= n * n + 1;
}

// Classifies every lambda |- m*d, in decreasing lex order. The sweep over
// lambda is embarrassingly parallel; results are merged by input order so
// the output is identical for every thread count.
inline std::vector<ObstructionCandidate> classify_obstruction_candidates(
    int n, int m, int d, int threads = 1) {
  if (n < 1 || m < 1 || d < 1)
    throw invalid_input_error("obstruction scan: n, m, d must be positive");
  const SchurExpansion& ambient = plethysm_sym_sym(d, m);  // checks ceiling

  const auto lambdas = enumerate_partitions(m * d);
  std::vector<ObstructionCandidate> table(lambdas.size());
  CharacterRowCache cache(m * d);

  auto classify_one = [&](std::size_t idx) {
    const Partition& lambda = lambdas[idx];
    ObstructionCandidate c;
    c.lambda = lambda;
    c.n = n;
    c.m = m;
    c.d = d;
    c.passes_ambient = ambient.coefficient(lambda).sign() > 0;
    c.passes_height = perm_side_height_ok(lambda, n, m, d);
    c.det_coefficient = det_admissible_coefficient(lambda, d, m, &cache);
    c.is_candidate = c.passes_ambient && c.passes_height &&
                     c.det_coefficient.is_zero();
    table[idx] = std::move(c);
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) classify_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(threads, static_cast<int>(lambdas.size()));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lambdas.size();
             i = next.fetch_add(1))
          classify_one(i);
      });
    for (auto& t : pool) t.join();
  }
  return table;
}

// The candidate list: all classified lambda with every necessary filter
// passing, decreasing lex.
inline std::vector<ObstructionCandidate> strong_obstruction_candidates(
    int n, int m, int d, int threads = 1) {
  std::vector<ObstructionCandidate> out;
  for (auto& c : classify_obstruction_candidates(n, m, d, threads))
    if (c.is_candidate) out.push_back(std::move(c));
  return out;
}

}  // namespace gctlab
