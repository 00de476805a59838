#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gctlab/bigint.hpp"
#include "gctlab/errors.hpp"
#include "gctlab/partition.hpp"

namespace gctlab {

// Littlewood-Richardson coefficient N^lambda_{mu,nu}: the number of
// semistandard skew tableaux of shape lambda/mu and content nu whose
// reverse reading word is a lattice word. Counted directly by filling the
// skew cells in reverse reading order (top row first, right to left), which
// lets the lattice condition and the column/row constraints prune as we go.
// Size mismatches yield 0; they are not errors.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!contains(lambda, mu)) return 0;
  if (nu.empty()) return 1;  // empty skew shape, empty content
  if (nu.height() > lambda.height()) return 0;

  const int rows = lambda.height();
  const int letters = nu.height();
  std::vector<int> remaining(nu.parts().begin(), nu.parts().end());
  std::vector<int> placed(static_cast<std::size_t>(letters), 0);
  // entries[i][j] for the skew cells, 0 = empty
  std::vector<std::vector<int>> entry(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i)
    entry[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(lambda.part(i)), 0);

  // reverse reading order: row 0 right-to-left, then row 1, ...
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < rows; ++i)
    for (int j = lambda.part(i) - 1; j >= mu.part(i); --j)
      order.emplace_back(i, j);

  long long count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == order.size()) {
      ++count;
      return;
    }
    auto [i, j] = order[pos];
    // row: weakly increasing left to right; the right neighbour is placed
    int hi = letters;
    if (j + 1 < lambda.part(i) && entry[i][static_cast<std::size_t>(j + 1)])
      hi = entry[i][static_cast<std::size_t>(j + 1)];
    // column: strictly increasing downwards; the cell above is placed
    int lo = 1;
    if (i > 0 && j < lambda.part(i - 1) && j >= mu.part(i - 1))
      lo = entry[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
    else if (i > 0 && j < mu.part(i - 1))
      lo = 1;  // above cell is inside mu, no constraint
    for (int v = lo; v <= hi; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      // lattice: after placing v, #v's so far must not exceed #(v-1)'s
      if (v > 1 && placed[static_cast<std::size_t>(v - 1)] + 1 >
                       placed[static_cast<std::size_t>(v - 2)])
        continue;
      entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      ++placed[static_cast<std::size_t>(v - 1)];
      fill(pos + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
      --placed[static_cast<std::size_t>(v - 1)];
      entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    }
  };
  fill(0);
  return count;
}

struct BranchingEntry {
  Partition weight;
  long long multiplicity = 1;
};

struct BranchingResult {
  Partition source;
  int from_rank = 0;
  int to_rank = 0;
  std::vector<BranchingEntry> entries;  // decreasing lex, no duplicates
};

// One-step GL restriction GL_r -> GL_{r-1}: all mu interlacing lambda
// (lambda_i >= mu_i >= lambda_{i+1}), each with multiplicity one. Multi-step
// restriction is explicit composition so the bookkeeping stays auditable.
inline BranchingResult gl_branch(const Partition& lambda, int from_rank,
                                 int to_rank) {
  if (from_rank < 1 || to_rank != from_rank - 1)
    throw invalid_input_error(
        "gl_branch: single-step restriction requires to_rank = from_rank - 1");
  if (lambda.height() > from_rank)
    throw invalid_input_error("gl_branch: height " +
                              std::to_string(lambda.height()) +
                              " exceeds rank " + std::to_string(from_rank));
  BranchingResult out;
  out.source = lambda;
  out.from_rank = from_rank;
  out.to_rank = to_rank;
  std::vector<int> mu(static_cast<std::size_t>(to_rank), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == to_rank) {
      std::vector<int> parts;
      for (int v : mu)
        if (v > 0) parts.push_back(v);
      out.entries.push_back({Partition(std::move(parts)), 1});
      return;
    }
    for (int v = lambda.part(i); v >= lambda.part(i + 1); --v) {
      if (i > 0 && v > mu[static_cast<std::size_t>(i - 1)]) continue;
      mu[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
    mu[static_cast<std::size_t>(i)] = 0;
  };
  rec(0);
  std::sort(out.entries.begin(), out.entries.end(),
            [](const BranchingEntry& a, const BranchingEntry& b) {
              return a.weight > b.weight;
            });
  return out;
}

struct LeviEntry {
  Partition left;   // height <= k factor
  Partition right;  // height <= l factor
  long long multiplicity = 0;
};

struct LeviRestriction {
  Partition source;
  int left_rank = 0;
  int right_rank = 0;
  std::vector<LeviEntry> entries;  // decreasing lex on (left, right)
};

// Restriction of V_lambda(GL_{k+l}) to the Levi GL_k x GL_l: every pair
// (rho, delta) with positive Littlewood-Richardson multiplicity
// N^lambda_{rho,delta}.
inline LeviRestriction levi_restrict(const Partition& lambda, int k, int l) {
  if (k < 1 || l < 1)
    throw invalid_input_error("levi_restrict: ranks must be positive");
  if (lambda.height() > k + l)
    throw invalid_input_error("levi_restrict: height " +
                              std::to_string(lambda.height()) +
                              " exceeds rank " + std::to_string(k + l));
  LeviRestriction out;
  out.source = lambda;
  out.left_rank = k;
  out.right_rank = l;
  for (int left_size = 0; left_size <= lambda.size(); ++left_size) {
    const int right_size = lambda.size() - left_size;
    for (const auto& rho : enumerate_partitions(left_size, k)) {
      if (!contains(lambda, rho)) continue;
      if (rho.first_part() > lambda.first_part()) continue;
      for (const auto& delta : enumerate_partitions(right_size, l)) {
        long long mult = lr_coefficient(lambda, rho, delta);
        if (mult > 0) out.entries.push_back({rho, delta, mult});
      }
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const LeviEntry& a, const LeviEntry& b) {
              if (!(a.left == b.left)) return a.left > b.left;
              return a.right > b.right;
            });
  return out;
}

// Does the Levi restriction contain the SL_k x SL_l trivial module? A GL
// factor is SL-trivial exactly when its weight is empty or a full-height
// rectangle (a power of the determinant).
inline bool contains_trivial_levi(const Partition& lambda, int k, int l) {
  auto sl_trivial = [](const Partition& p, int rank) {
    return p.empty() || is_rectangle(p, rank);
  };
  for (const auto& e : levi_restrict(lambda, k, l).entries)
    if (sl_trivial(e.left, k) && sl_trivial(e.right, l)) return true;
  return false;
}

// Weyl dimension of V_p(GL_rank) as the hook content product, exact.
inline Integer weyl_dimension_gl(const Partition& p, int rank) {
  if (p.height() > rank) return 0;
  Partition conj = conjugate(p);
  Integer num = 1, den = 1;
  for (int i = 0; i < p.height(); ++i) {
    for (int j = 0; j < p.part(i); ++j) {
      num *= Integer(rank + j - i);
      den *= Integer((p.part(i) - j) + (conj.part(j) - i) - 1);
    }
  }
  return num.exact_div(den);
}

}  // namespace gctlab
