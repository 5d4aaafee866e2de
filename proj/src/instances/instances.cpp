#include "congest/instances.hpp"

#include <algorithm>

namespace congest {

BitVector BitVector::parse(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (text[p] != '0' && text[p] != '1') {
      throw InputError("bit string may contain only '0' and '1', got '" + std::string(text) + "'");
    }
    v.bits_[p] = text[p] == '1';
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t p = 0; p < bits_.size(); ++p) s[p] = bits_[p] ? '1' : '0';
  return s;
}

bool BitVector::at(std::size_t p) const {
  if (p < 1 || p > bits_.size()) {
    throw InputError("bit index " + std::to_string(p) + " outside [1," +
                     std::to_string(bits_.size()) + "]");
  }
  return bits_[p - 1] != 0;
}

void BitVector::set(std::size_t p, bool value) {
  if (p < 1 || p > bits_.size()) {
    throw InputError("bit index " + std::to_string(p) + " outside [1," +
                     std::to_string(bits_.size()) + "]");
  }
  bits_[p - 1] = value ? 1 : 0;
}

std::size_t BitVector::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

IntersectionInstance::IntersectionInstance(BitVector x, BitVector y, std::uint32_t rho)
    : x_(std::move(x)), y_(std::move(y)), rho_(rho) {
  if (x_.size() != y_.size()) throw InputError("x and y must have equal length");
  if (x_.size() < 1) throw InputError("instance length k must be positive");
  if (rho_ < 1 || rho_ > x_.size()) {
    throw InputError("rho must lie in [1, k]; got rho=" + std::to_string(rho_) +
                     ", k=" + std::to_string(x_.size()));
  }
}

std::size_t intersection_size(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) {
    throw InputError("length mismatch: |x|=" + std::to_string(x.size()) +
                     ", |y|=" + std::to_string(y.size()));
  }
  std::size_t count = 0;
  for (std::size_t p = 1; p <= x.size(); ++p) count += (x.at(p) && y.at(p)) ? 1 : 0;
  return count;
}

int eval_int(const IntersectionInstance& inst) {
  return intersection_size(inst.x(), inst.y()) < inst.rho() ? 0 : 1;
}

int eval_disj(const BitVector& x, const BitVector& y) {
  return intersection_size(x, y) >= 1 ? 0 : 1;
}

std::uint64_t pair_to_index(std::uint32_t i, std::uint32_t j, std::uint32_t s) {
  if (!(1 <= i && i < j && j <= s)) {
    throw InputError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                     ") must satisfy 1 <= i < j <= s=" + std::to_string(s));
  }
  const std::uint64_t ii = i, jj = j, ss = s;
  return (ii - 1) * (2 * ss - ii) / 2 + (jj - ii);
}

std::pair<std::uint32_t, std::uint32_t> index_to_pair(std::uint64_t p, std::uint32_t s) {
  const std::uint64_t ss = s;
  const std::uint64_t k = ss >= 2 ? ss * (ss - 1) / 2 : 0;
  if (p < 1 || p > k) {
    throw InputError("pair index " + std::to_string(p) + " outside [1," + std::to_string(k) + "]");
  }
  // Row i holds s - i pairs; walk rows, which is O(s) and exact.
  std::uint64_t before = 0;
  for (std::uint32_t i = 1; i < s; ++i) {
    const std::uint64_t row = ss - i;
    if (p <= before + row) return {i, static_cast<std::uint32_t>(i + (p - before))};
    before += row;
  }
  throw std::logic_error("index_to_pair: unreachable");
}

int bit_b(std::uint64_t p, std::uint32_t i) {
  if (p < 1 || i < 1) throw InputError("bit_b requires p >= 1 and i >= 1");
  if (i > 64) return 0;
  return static_cast<int>(((p - 1) >> (i - 1)) & 1U);
}

}  // namespace congest
