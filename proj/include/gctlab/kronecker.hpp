#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "gctlab/characters.hpp"
#include "gctlab/errors.hpp"
#include "gctlab/partition.hpp"

namespace gctlab {

// Kronecker coefficients c_{alpha,beta,gamma} of S_m: the character oracle
// for arbitrary shapes, plus the Remmel-Whitehead closed forms for the
// two-row and (d,c,a,a) cases, cross-validated against the oracle over
// their whole domain in the verification suites.

enum class KroneckerMethod { automatic, oracle, two_row, four_row };

inline std::string to_string(KroneckerMethod m) {
  switch (m) {
    case KroneckerMethod::automatic: return "auto";
    case KroneckerMethod::oracle: return "oracle";
    case KroneckerMethod::two_row: return "two_row_closed_form";
    case KroneckerMethod::four_row: return "four_row_closed_form";
  }
  return "?";
}

struct KroneckerResult {
  Integer value;
  KroneckerMethod method_used = KroneckerMethod::oracle;
  bool cross_checked = false;
};

namespace detail {

inline long long floor_div(long long a, long long b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

inline long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace detail

// Closed form for three two-row shapes (a one-row shape counts as second
// row zero). The arguments are sorted internally so the second rows come
// weakly increasing; that is exactly the symmetry normalization under
// which the formula is stated. With l <= h <= c the coefficient is
// (1 + w - v) when w >= v and zero otherwise, where
//   w = floor((l + h - c) / 2),  v = max(0, ceil((l + h + c - m) / 2)).
inline long long rw_two_row(const Partition& p1, const Partition& p2,
                            const Partition& p3) {
  const int m = p1.size();
  if (p2.size() != m || p3.size() != m)
    throw invalid_input_error("rw_two_row: sizes differ");
  for (const Partition* p : {&p1, &p2, &p3})
    if (p->height() > 2)
      throw closed_form_inapplicable_error(
          "rw_two_row: shape (" + p->str() + ") has more than two rows");
  if (m == 0) return 1;

  std::array<long long, 3> second = {p1.part(1), p2.part(1), p3.part(1)};
  std::sort(second.begin(), second.end());
  const long long l = second[0], h = second[1], c = second[2];
  const long long w = detail::floor_div(l + h - c, 2);
  const long long v = std::max(0LL, detail::ceil_div(l + h + c - m, 2));
  return w >= v ? 1 + w - v : 0;
}

// Closed form for c_{(k,h),(M,l),(d,c,a,a)}: two two-row shapes against a
// four-row shape whose last two rows agree, valid when a > 0 and
// ceil((h+1)/2) <= h - c, with h the larger of the two second rows. Each
// sum counts the integers in its index range; an empty range contributes
// nothing. The difference of the two counts is the coefficient.
inline long long rw_four_row(const Partition& first, const Partition& second,
                             const Partition& third) {
  const int m = first.size();
  if (second.size() != m || third.size() != m)
    throw invalid_input_error("rw_four_row: sizes differ");
  if (first.height() > 2 || second.height() > 2)
    throw closed_form_inapplicable_error(
        "rw_four_row: first two shapes must have at most two rows");
  if (third.height() != 4 || third.part(2) != third.part(3))
    throw closed_form_inapplicable_error(
        "rw_four_row: third shape must be (d,c,a,a) with a > 0");
  const long long a = third.part(2);
  const long long c = third.part(1);
  const long long h = std::max(first.part(1), second.part(1));
  const long long l = std::min(first.part(1), second.part(1));
  if (detail::ceil_div(h + 1, 2) > h - c)
    throw closed_form_inapplicable_error(
        "rw_four_row: ceil((h+1)/2) <= h-c fails for h=" + std::to_string(h) +
        ", c=" + std::to_string(c));

  const long long lo1 = h - c;
  const long long up1 = std::min(l, detail::floor_div(l - a + h - c, 2));
  const long long sum1 = std::max(0LL, up1 - lo1 + 1);

  const long long lo2 = std::max(a, l + h + a - m - 1);
  const long long up2 = std::min({l, detail::floor_div(h - 1, 2),
                                  detail::floor_div(l + h + a + c - m - 1, 2)});
  const long long sum2 = std::max(0LL, up2 - lo2 + 1);
  return sum1 - sum2;
}

namespace detail {

inline bool two_row_applicable(const Partition& a, const Partition& b,
                               const Partition& c) {
  return a.height() <= 2 && b.height() <= 2 && c.height() <= 2;
}

// Finds a rotation placing a (d,c,a,a) shape third with two-row shapes
// first; returns false when no rotation is in domain.
inline bool four_row_arrangement(const Partition& a, const Partition& b,
                                 const Partition& c,
                                 std::array<const Partition*, 3>& out) {
  const std::array<const Partition*, 3> ps = {&a, &b, &c};
  for (int third = 0; third < 3; ++third) {
    const Partition& t = *ps[static_cast<std::size_t>(third)];
    if (t.height() != 4 || t.part(2) != t.part(3) || t.part(2) == 0) continue;
    const Partition& f = *ps[static_cast<std::size_t>((third + 1) % 3)];
    const Partition& s = *ps[static_cast<std::size_t>((third + 2) % 3)];
    if (f.height() > 2 || s.height() > 2) continue;
    const long long h = std::max(f.part(1), s.part(1));
    if (ceil_div(h + 1, 2) > h - t.part(1)) continue;
    out = {&f, &s, &t};
    return true;
  }
  return false;
}

}  // namespace detail

// The Kronecker coefficient, by the requested route. automatic prefers a
// closed form whenever one covers the triple and falls back to the
// character oracle otherwise. verify recomputes closed-form values by the
// oracle and refuses to return on disagreement.
inline KroneckerResult kronecker(const Partition& alpha, const Partition& beta,
                                 const Partition& gamma,
                                 KroneckerMethod method = KroneckerMethod::automatic,
                                 bool verify = false,
                                 CharacterRowCache* cache = nullptr) {
  const int m = alpha.size();
  if (beta.size() != m || gamma.size() != m)
    throw invalid_input_error("kronecker: partition sizes differ (" +
                              std::to_string(m) + ", " +
                              std::to_string(beta.size()) + ", " +
                              std::to_string(gamma.size()) + ")");

  KroneckerResult result;
  switch (method) {
    case KroneckerMethod::oracle:
      result.value = inner_product_triple(alpha, beta, gamma, cache);
      result.method_used = KroneckerMethod::oracle;
      return result;  // the oracle is its own ground truth
    case KroneckerMethod::two_row:
      result.value = rw_two_row(alpha, beta, gamma);
      result.method_used = KroneckerMethod::two_row;
      break;
    case KroneckerMethod::four_row:
      result.value = rw_four_row(alpha, beta, gamma);
      result.method_used = KroneckerMethod::four_row;
      break;
    case KroneckerMethod::automatic: {
      std::array<const Partition*, 3> arranged{};
      if (detail::two_row_applicable(alpha, beta, gamma)) {
        result.value = rw_two_row(alpha, beta, gamma);
        result.method_used = KroneckerMethod::two_row;
      } else if (detail::four_row_arrangement(alpha, beta, gamma, arranged)) {
        result.value = rw_four_row(*arranged[0], *arranged[1], *arranged[2]);
        result.method_used = KroneckerMethod::four_row;
      } else {
        result.value = inner_product_triple(alpha, beta, gamma, cache);
        result.method_used = KroneckerMethod::oracle;
        return result;
      }
      break;
    }
  }

  if (verify) {
    Integer oracle = inner_product_triple(alpha, beta, gamma, cache);
    if (!(oracle == result.value))
      throw verification_error(
          "closed form disagrees with character oracle on (" + alpha.str() +
          ")x(" + beta.str() + "):(" + gamma.str() + "): closed form " +
          result.value.str() + ", oracle " + oracle.str());
    result.cross_checked = true;
  }
  if (result.value.sign() < 0)
    throw verification_error("closed form produced a negative coefficient");
  return result;
}

// Occurrence test for W_rho inside the tensor square of the rectangular
// two-row W_delta. Closed form when rho is in some closed-form domain,
// oracle otherwise.
inline bool tensor_square_contains(const Partition& delta, const Partition& rho,
                                   CharacterRowCache* cache = nullptr) {
  if (delta.size() != rho.size())
    throw invalid_input_error("tensor_square_contains: sizes differ");
  if (!is_rectangle(delta, 2))
    throw invalid_input_error(
        "tensor_square_contains: delta must be a two-row rectangle");
  return kronecker(delta, delta, rho, KroneckerMethod::automatic, false, cache)
             .value.sign() > 0;
}

}  // namespace gctlab
