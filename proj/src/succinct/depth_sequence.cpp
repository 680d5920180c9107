#include "posheap/succinct/depth_sequence.hpp"

#include <algorithm>
#include <bit>

#include "posheap/io.hpp"
#include "posheap/text.hpp"

namespace posheap::succinct {

DepthSequence::DepthSequence(const std::vector<std::uint32_t>& values) : size_(values.size()) {
  for (auto v : values) {
    if (v == 0) throw ValidationError("depth values start at 1");
    max_value_ = std::max(max_value_, v);
  }
  width_ = std::max(1u, static_cast<unsigned>(std::bit_width(max_value_)));
  packed_.assign((size_ * width_ + 63) / 64 + 1, 0);
  positions_.assign(max_value_ + 1, {});
  for (std::size_t i = 0; i < size_; ++i) {
    const std::uint64_t v = values[i];
    const std::size_t bit = i * width_;
    packed_[bit >> 6] |= v << (bit & 63);
    if ((bit & 63) + width_ > 64) packed_[(bit >> 6) + 1] |= v >> (64 - (bit & 63));
    positions_[values[i]].push_back(static_cast<std::uint32_t>(i + 1));
  }
}

std::uint32_t DepthSequence::raw(std::size_t i) const noexcept {
  const std::size_t bit = i * width_;
  std::uint64_t v = packed_[bit >> 6] >> (bit & 63);
  if ((bit & 63) + width_ > 64) v |= packed_[(bit >> 6) + 1] << (64 - (bit & 63));
  return static_cast<std::uint32_t>(v & ((std::uint64_t{1} << width_) - 1));
}

std::uint32_t DepthSequence::access(std::size_t i) const {
  if (i < 1 || i > size_) throw RangeError("depth sequence index out of range");
  return raw(i - 1);
}

std::size_t DepthSequence::partial_rank(std::size_t i) const {
  const auto& occ = positions_[access(i)];
  return static_cast<std::size_t>(std::lower_bound(occ.begin(), occ.end(), i) - occ.begin()) + 1;
}

std::size_t DepthSequence::count(std::uint32_t d) const noexcept {
  return d < positions_.size() ? positions_[d].size() : 0;
}

std::size_t DepthSequence::select(std::uint32_t d, std::size_t r) const {
  if (r < 1 || r > count(d)) throw NotFoundError("depth sequence has fewer copies than requested");
  return positions_[d][r - 1];
}

std::vector<std::uint32_t> DepthSequence::values() const {
  std::vector<std::uint32_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = raw(i);
  return out;
}

std::size_t DepthSequence::size_in_bits() const noexcept {
  std::size_t bits = 64 * packed_.size() + 128;
  for (const auto& p : positions_) bits += 32 * p.size() + 64;
  return bits;
}

void DepthSequence::write(std::ostream& out) const {
  io::put_u64(out, size_);
  for (std::size_t i = 0; i < size_; ++i) io::put_u32(out, raw(i));
}

DepthSequence DepthSequence::read(std::istream& in) {
  const auto n = io::get_item_count(in, std::uint64_t{1} << 34, 32);
  std::vector<std::uint32_t> values;
  values.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto v = io::get_u32(in);
    if (v == 0 || v > n) throw CorruptionError("depth value out of range");
    values.push_back(v);
  }
  return DepthSequence(values);
}

}  // namespace posheap::succinct
