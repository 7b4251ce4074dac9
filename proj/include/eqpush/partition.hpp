#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, staircases and semistandard Young tableaux.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqpush/error.hpp"

namespace eqpush {

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw Error(ErrorKind::InvalidPartition, "negative part in " + describe(parts_));
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw Error(ErrorKind::InvalidPartition, "parts not weakly decreasing in " + describe(parts_));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  /// Nonzero parts only.
  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// λ_i for 0-based i, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to exactly n entries (n must be >= length()).
  std::vector<int> padded(std::size_t n) const {
    std::vector<int> out(n, 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  static std::string describe(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }

  std::vector<int> parts_;
};

/// Staircase (n, n-1, ..., 1); empty for n = 0.
inline Partition rho(int n) {
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

/**
 * Finds μ with λ = 2μ + staircase componentwise over n entries.
 *
 * Returns nullopt when some λ_i - staircase_i is negative or odd. Throws
 * InvalidPartition when λ or the staircase has more than n parts.
 */
inline std::optional<Partition> decompose(const Partition& lambda, std::size_t n, const Partition& staircase) {
  if (lambda.length() > n)
    throw Error(ErrorKind::InvalidPartition,
                "partition has " + std::to_string(lambda.length()) + " parts, more than n = " + std::to_string(n));
  if (staircase.length() > n) throw Error(ErrorKind::InvalidPartition, "staircase longer than n");
  std::vector<int> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    int diff = lambda[i] - staircase[i];
    if (diff < 0 || diff % 2 != 0) return std::nullopt;
    mu[i] = diff / 2;
  }
  for (std::size_t i = 1; i < n; ++i)
    if (mu[i] > mu[i - 1]) return std::nullopt;
  return Partition(std::move(mu));
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts())
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition(std::move(out));
}

/// Filling of a Young diagram: rows weakly increase, columns strictly increase.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// Number of times each value 1..d occurs, as a 0-based vector of length d.
  std::vector<int> content(std::size_t d) const {
    std::vector<int> counts(d, 0);
    for (const auto& row : rows)
      for (int v : row) ++counts[static_cast<std::size_t>(v - 1)];
    return counts;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/**
 * All semistandard tableaux of the given shape with entries in {1..d}.
 *
 * Exhaustive backtracking, cells filled row by row; results come out in
 * lexicographic order of the row-reading word. Meant for small shapes.
 */
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int d) {
  std::vector<Tableau> out;
  if (static_cast<int>(shape.length()) > d) return out;
  const Partition columns = conjugate(shape);
  Tableau current{shape, {}};
  for (int part : shape.parts()) current.rows.emplace_back(static_cast<std::size_t>(part), 0);

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.length()) {
      out.push_back(current);
      return;
    }
    if (c == current.rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, current.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, current.rows[r - 1][c] + 1);
    // Leave room for the strictly larger entries below this cell.
    int hi = d - (columns[c] - static_cast<int>(r) - 1);
    for (int v = lo; v <= hi; ++v) {
      current.rows[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

/// Parses "4,3,1"; the literal "0" and the empty string give the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos || item.size() > 6)
      throw Error(ErrorKind::ParseError, "bad partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(std::string(item)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

/// "4,3,1"; the empty partition prints as "0".
inline std::string format_partition(const Partition& lambda) {
  if (lambda.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < lambda.length(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return s;
}

/**
 * Every partition with at most max_length parts, largest part at most max_part
 * and weight at most max_weight, in graded reverse-lexicographic order
 * (by weight, then descending parts).
 */
inline std::vector<Partition> partitions_within(std::size_t max_length, int max_part, int max_weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> grow = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_length) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      grow(remaining - p, p);
      cur.pop_back();
    }
  };
  for (int w = 0; w <= max_weight; ++w) grow(w, max_part);
  return out;
}

}  // namespace eqpush
