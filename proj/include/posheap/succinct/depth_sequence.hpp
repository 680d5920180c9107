#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace posheap::succinct {

/// Sequence over a small alphabet of depths 1..h with access, partial rank and
/// select. Values are bit-packed at ceil(log2(h+1)) bits; per-depth occurrence
/// lists answer select directly and partial rank by binary search.
class DepthSequence {
 public:
  DepthSequence() = default;
  explicit DepthSequence(const std::vector<std::uint32_t>& values);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t max_value() const noexcept { return max_value_; }

  std::uint32_t access(std::size_t i) const;          // 1-based
  std::size_t partial_rank(std::size_t i) const;      // copies of values[i] in values[1..i]
  std::size_t select(std::uint32_t d, std::size_t r) const;  // position of the r-th copy of d
  std::size_t count(std::uint32_t d) const noexcept;

  std::vector<std::uint32_t> values() const;
  std::size_t size_in_bits() const noexcept;

  void write(std::ostream& out) const;
  static DepthSequence read(std::istream& in);

  friend bool operator==(const DepthSequence& a, const DepthSequence& b) {
    return a.size_ == b.size_ && a.packed_ == b.packed_;
  }

 private:
  std::uint32_t raw(std::size_t i) const noexcept;

  std::size_t size_ = 0;
  std::uint32_t max_value_ = 0;
  unsigned width_ = 1;
  std::vector<std::uint64_t> packed_;
  std::vector<std::vector<std::uint32_t>> positions_;  // positions_[d] sorted, 1-based
};

}  // namespace posheap::succinct
