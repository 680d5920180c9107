#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace posheap::succinct {

/// Static bitvector with rank/select. Positions are 1-based; rank(0, b) = 0.
/// Ranks are sampled every 512 bits; select binary-searches the samples.
class Bitvector {
 public:
  Bitvector() = default;
  explicit Bitvector(const std::vector<bool>& bits);

  std::size_t size() const noexcept { return size_; }
  bool operator[](std::size_t pos) const;   // 1-based
  std::size_t rank(std::size_t pos, bool bit) const;
  std::size_t select(std::size_t k, bool bit) const;
  std::size_t count(bool bit) const noexcept { return bit ? ones_ : size_ - ones_; }

  std::size_t size_in_bits() const noexcept;

  void write(std::ostream& out) const;
  static Bitvector read(std::istream& in);

 private:
  void build_samples();
  bool raw(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  static constexpr std::size_t kWordsPerBlock = 8;

  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> block_ones_;  // ones before each 512-bit block
  std::size_t size_ = 0;
  std::size_t ones_ = 0;
};

}  // namespace posheap::succinct
