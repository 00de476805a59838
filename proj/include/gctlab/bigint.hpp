#pragma once

#include <algorithm>
#include <cstdint>
#include <compare>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gctlab/errors.hpp"

namespace gctlab {

// Exact signed integer of unbounded magnitude. Character sums, class sizes
// and dimension products outgrow 64 bits well inside the supported ranges
// (32! already needs 118 bits), so every accumulation that can grow runs on
// this type. Sign-magnitude, base 2^32 limbs, least significant first.
//
// The arithmetic is schoolbook throughout: operands in this project stay
// under a few hundred bits, where simplicity beats asymptotics.
class Integer {
 public:
  Integer() = default;

  Integer(long long v) {  // NOLINT: implicit by design, mirrors built-ins
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN by widening through unsigned.
    unsigned long long mag =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
              : static_cast<unsigned long long>(v);
    while (mag != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
      mag >>= 32;
    }
  }

  Integer(int v) : Integer(static_cast<long long>(v)) {}
  Integer(unsigned v) : Integer(static_cast<long long>(v)) {}

  static Integer from_string(std::string_view text) {
    if (text.empty()) throw invalid_input_error("empty integer literal");
    int sign = 1;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
      sign = text[0] == '-' ? -1 : 1;
      pos = 1;
    }
    if (pos == text.size()) throw invalid_input_error("bare sign");
    Integer out;
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c < '0' || c > '9')
        throw invalid_input_error("bad digit in integer literal");
      out.mul_small_add(10u, static_cast<std::uint32_t>(c - '0'));
    }
    if (!out.limbs_.empty()) out.sign_ = sign;
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_int64() const {
    static const Integer lo = Integer(std::numeric_limits<long long>::min());
    static const Integer hi = Integer(std::numeric_limits<long long>::max());
    return *this >= lo && *this <= hi;
  }

  long long to_int64() const {
    if (!fits_int64())
      throw resource_limit_error("integer exceeds 64-bit range: " + str());
    unsigned long long mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      mag = (mag << 32) | limbs_[i];
    return sign_ < 0 ? -static_cast<long long>(mag)
                     : static_cast<long long>(mag);
  }

  std::string str() const {
    if (is_zero()) return "0";
    Integer tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
      std::uint32_t rem = tmp.divmod_small(1000000000u);
      for (int i = 0; i < 9; ++i) {
        out.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  Integer operator-() const {
    Integer r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Integer r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return Integer();
      const Integer& big = c > 0 ? a : b;
      const Integer& small = c > 0 ? b : a;
      r.limbs_ = sub_mag(big.limbs_, small.limbs_);
      r.sign_ = big.sign_;
    }
    return r;
  }

  friend Integer operator-(const Integer& a, const Integer& b) {
    return a + (-b);
  }

  friend Integer operator*(const Integer& a, const Integer& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Integer();
    Integer r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) *
                                b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] =
          static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  Integer& operator+=(const Integer& b) { return *this = *this + b; }
  Integer& operator-=(const Integer& b) { return *this = *this - b; }
  Integer& operator*=(const Integer& b) { return *this = *this * b; }

  // Truncated division (C semantics): quotient rounds toward zero and the
  // remainder carries the dividend's sign.
  struct DivMod;
  DivMod divmod(const Integer& d) const;

  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  // Division that is known to be exact; a nonzero remainder indicates a bug
  // in the caller's mathematics and is reported, never rounded away.
  Integer exact_div(const Integer& d) const;

  static Integer gcd(Integer a, Integer b);

  static Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= Integer(i);
    return r;
  }

  static Integer binomial(const Integer& n, int k) {
    if (k < 0) return Integer();
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= n - Integer(i);
    return r.exact_div(factorial(k));
  }

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  void shift_left_one() {
    std::uint32_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }

  // *this = *this * m + add, on the magnitude; used by the base-10 parser.
  void mul_small_add(std::uint32_t m, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    if (!limbs_.empty()) sign_ = 1;
  }

  // Divides the magnitude in place, returns the remainder.
  std::uint32_t divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                          (i < small.size() ? small[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += (1LL << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

struct Integer::DivMod {
  Integer quot;
  Integer rem;
};

inline Integer::DivMod Integer::divmod(const Integer& d) const {
  if (d.is_zero()) throw invalid_input_error("division by zero");
  DivMod out;
  if (cmp_mag(limbs_, d.limbs_) < 0) {
    out.rem = *this;
    return out;
  }
  // Shift-subtract long division on magnitudes, one bit at a time.
  const std::size_t bits = limbs_.size() * 32;
  Integer rem, quot;
  quot.limbs_.assign(limbs_.size(), 0);
  for (std::size_t i = bits; i-- > 0;) {
    rem.shift_left_one();
    if ((limbs_[i / 32] >> (i % 32)) & 1u) {
      if (rem.limbs_.empty()) rem.limbs_.push_back(0);
      rem.limbs_[0] |= 1u;
      rem.sign_ = 1;
    }
    if (cmp_mag(rem.limbs_, d.limbs_) >= 0) {
      rem.limbs_ = sub_mag(rem.limbs_, d.limbs_);
      if (rem.limbs_.empty()) rem.sign_ = 0;
      quot.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  quot.trim();
  if (!quot.limbs_.empty()) quot.sign_ = sign_ * d.sign_;
  if (!rem.limbs_.empty()) rem.sign_ = sign_;
  out.quot = quot;
  out.rem = rem;
  return out;
}

inline Integer operator/(const Integer& a, const Integer& b) {
  return a.divmod(b).quot;
}

inline Integer operator%(const Integer& a, const Integer& b) {
  return a.divmod(b).rem;
}

inline Integer Integer::exact_div(const Integer& d) const {
  DivMod dm = divmod(d);
  if (!dm.rem.is_zero())
    throw verification_error("exact division left remainder " + dm.rem.str() +
                             " (dividing " + str() + " by " + d.str() + ")");
  return dm.quot;
}

inline Integer Integer::gcd(Integer a, Integer b) {
  if (a.sign_ < 0) a.sign_ = 1;
  if (b.sign_ < 0) b.sign_ = 1;
  while (!b.is_zero()) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline std::string to_string(const Integer& v) { return v.str(); }

template <typename Stream>
Stream& operator<<(Stream& os, const Integer& v) {
  return os << v.str();
}

}  // namespace gctlab
