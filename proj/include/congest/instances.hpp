#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congest/errors.hpp"

namespace congest {

/// Dense bit vector indexed 1..k. Text form lists x_1 first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t k, bool value = false) : bits_(k, value ? 1 : 0) {}

  static BitVector parse(std::string_view text);
  std::string to_string() const;

  std::size_t size() const { return bits_.size(); }
  /// 1-based access.
  bool at(std::size_t p) const;
  void set(std::size_t p, bool value);
  std::size_t count() const;

  bool operator==(const BitVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// x, y of equal length k and threshold 1 <= rho <= k.
class IntersectionInstance {
 public:
  IntersectionInstance(BitVector x, BitVector y, std::uint32_t rho);

  std::size_t k() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& y() const { return y_; }
  std::uint32_t rho() const { return rho_; }

 private:
  BitVector x_;
  BitVector y_;
  std::uint32_t rho_;
};

/// Number of indices p with x_p = y_p = 1.
std::size_t intersection_size(const BitVector& x, const BitVector& y);

/// 0 iff fewer than rho indices intersect.
int eval_int(const IntersectionInstance& inst);
/// 0 iff some index intersects.
int eval_disj(const BitVector& x, const BitVector& y);

/// Lexicographic rank (1-based) of the pair (i, j), 1 <= i < j <= s.
std::uint64_t pair_to_index(std::uint32_t i, std::uint32_t j, std::uint32_t s);
/// Inverse of pair_to_index for 1 <= p <= s(s-1)/2.
std::pair<std::uint32_t, std::uint32_t> index_to_pair(std::uint64_t p, std::uint32_t s);

/// i-th least-significant bit (1-based) of p - 1.
int bit_b(std::uint64_t p, std::uint32_t i);

}  // namespace congest
