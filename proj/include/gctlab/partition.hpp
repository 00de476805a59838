#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gctlab/errors.hpp"

namespace gctlab {

// A partition: weakly decreasing positive parts, canonical (no stored
// zeros). The empty partition is the trivial one. This is the universal
// index type of the project: symmetric group classes and irreducibles, GL
// highest weights, Schur function labels all live here.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw invalid_input_error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw invalid_input_error("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Text format used everywhere in the repo: comma-separated weakly
  // decreasing integers, e.g. "4,2,1"; the empty string is the empty
  // partition. Deliberately rejects unsorted input instead of fixing it.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      if (tok.empty()) throw invalid_input_error("empty partition component");
      int value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw invalid_input_error(std::string("bad partition component '") +
                                    std::string(tok) + "'");
        value = value * 10 + (c - '0');
        if (value > 1000000)
          throw invalid_input_error("partition part out of range");
      }
      if (value == 0)
        throw invalid_input_error("partition parts must be positive");
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int height() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Row length, 0-indexed; rows past the height read as 0.
  int part(int i) const {
    return i >= 0 && i < height() ? parts_[i] : 0;
  }

  int first_part() const { return parts_.empty() ? 0 : parts_[0]; }
  const std::vector<int>& parts() const { return parts_; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) = default;

  // Lexicographic on the part vectors; enumeration output is *decreasing*
  // in this order.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int part : p.parts())
      h = h * 1099511628211ULL + static_cast<std::size_t>(part) + 1;
    return h;
  }
};

struct PartitionPairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& pp) const {
    PartitionHash h;
    return h(pp.first) * 0x100000001b3ULL ^ h(pp.second);
  }
};

// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.first_part()), 0);
  for (int i = 0; i < p.height(); ++i)
    for (int j = 0; j < p.part(i); ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

// The lambda(m) construction: grow p to size m by prepending full columns
// of length n. Requires height(p) < n and m = |p| (mod n).
inline Partition pad_columns(const Partition& p, int n, int m) {
  if (n <= 0 || m <= 0) throw invalid_input_error("pad_columns: n, m must be positive");
  if (p.height() >= n)
    throw invalid_input_error("pad_columns: height must be below column length");
  if (m < p.size() || (m - p.size()) % n != 0)
    throw invalid_input_error("pad_columns: size " + std::to_string(m) +
                              " unreachable from |p|=" + std::to_string(p.size()) +
                              " mod " + std::to_string(n));
  int cols = (m - p.size()) / n;
  if (cols == 0 && p.height() < n) {
    // No columns to add; p itself already has size m.
    return p;
  }
  std::vector<int> out(static_cast<std::size_t>(n), cols);
  for (int i = 0; i < p.height(); ++i) out[static_cast<std::size_t>(i)] += p.part(i);
  return Partition(std::move(out));
}

// Removes every full-length column of height n; inverse of pad_columns on
// its range, and the SL_n reduction of a GL_n weight.
inline Partition strip_full_columns(const Partition& p, int n) {
  if (n <= 0) throw invalid_input_error("strip_full_columns: n must be positive");
  if (p.height() > n)
    throw invalid_input_error("strip_full_columns: height exceeds n");
  if (p.height() < n) return p;
  int cols = p.part(n - 1);
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (p.part(i) - cols > 0) out.push_back(p.part(i) - cols);
  return Partition(std::move(out));
}

// Dual weight of V_p(GL_l) reduced to SL_l: complement of p inside the
// l x p_1 rectangle read bottom-up, then full columns stripped.
inline Partition sl_dual(const Partition& p, int l) {
  if (l <= 0) throw invalid_input_error("sl_dual: rank must be positive");
  if (p.height() > l)
    throw invalid_input_error("sl_dual: height " + std::to_string(p.height()) +
                              " exceeds rank " + std::to_string(l));
  int width = p.first_part();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) out.push_back(width - p.part(l - 1 - i));
  return strip_full_columns(Partition(std::move(out)), l);
}

inline bool is_rectangle(const Partition& p, int height) {
  if (p.empty() || p.height() != height) return false;
  return p.part(0) == p.part(height - 1);
}

constexpr int kUnboundedHeight = -1;

// All partitions of n with at most max_height parts, in decreasing
// lexicographic order, each exactly once. max_height = kUnboundedHeight
// lifts the bound.
inline std::vector<Partition> enumerate_partitions(
    int n, int max_height = kUnboundedHeight) {
  if (n < 0) throw invalid_input_error("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  // Descending first-part recursion emits decreasing-lex order directly.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(current));
      return;
    }
    if (max_height != kUnboundedHeight &&
        static_cast<int>(current.size()) >= max_height)
      return;
    int lo = 1;
    if (max_height != kUnboundedHeight) {
      int rows_left = max_height - static_cast<int>(current.size());
      lo = (remaining + rows_left - 1) / rows_left;  // parts below this can't finish
    }
    for (int part = std::min(remaining, max_part); part >= lo; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

// True when q's diagram sits inside p's.
inline bool contains(const Partition& p, const Partition& q) {
  if (q.height() > p.height()) return false;
  for (int i = 0; i < q.height(); ++i)
    if (q.part(i) > p.part(i)) return false;
  return true;
}

inline Partition row_sum(const Partition& a, const Partition& b) {
  std::vector<int> out;
  int rows = std::max(a.height(), b.height());
  out.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) out.push_back(a.part(i) + b.part(i));
  return Partition(std::move(out));
}

}  // namespace gctlab
