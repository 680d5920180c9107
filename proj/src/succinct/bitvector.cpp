#include "posheap/succinct/bitvector.hpp"

#include <bit>

#include "posheap/io.hpp"
#include "posheap/text.hpp"

namespace posheap::succinct {

Bitvector::Bitvector(const std::vector<bool>& bits) : size_(bits.size()) {
  words_.assign((size_ + 63) / 64, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  build_samples();
}

void Bitvector::build_samples() {
  block_ones_.clear();
  block_ones_.reserve(words_.size() / kWordsPerBlock + 2);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (w % kWordsPerBlock == 0) block_ones_.push_back(acc);
    acc += static_cast<std::uint64_t>(std::popcount(words_[w]));
  }
  block_ones_.push_back(acc);
  ones_ = static_cast<std::size_t>(acc);
}

bool Bitvector::operator[](std::size_t pos) const {
  if (pos < 1 || pos > size_) throw RangeError("bitvector position out of range");
  return raw(pos - 1);
}

std::size_t Bitvector::rank(std::size_t pos, bool bit) const {
  if (pos > size_) throw RangeError("bitvector rank position out of range");
  const std::size_t word = pos >> 6;
  std::size_t ones = block_ones_[word / kWordsPerBlock];
  for (std::size_t w = word - word % kWordsPerBlock; w < word; ++w) ones += std::popcount(words_[w]);
  if (pos & 63) ones += std::popcount(words_[word] & ((std::uint64_t{1} << (pos & 63)) - 1));
  return bit ? ones : pos - ones;
}

std::size_t Bitvector::select(std::size_t k, bool bit) const {
  if (k < 1 || k > count(bit)) throw NotFoundError("bitvector select beyond occurrence count");
  // Last block whose prefix count is < k.
  std::size_t lo = 0, hi = block_ones_.size() - 1;
  auto before = [&](std::size_t b) {
    const std::size_t bits_before = std::min(b * kWordsPerBlock * 64, size_);
    return bit ? static_cast<std::size_t>(block_ones_[b]) : bits_before - static_cast<std::size_t>(block_ones_[b]);
  };
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (before(mid) < k) lo = mid; else hi = mid;
  }
  std::size_t remaining = k - before(lo);
  for (std::size_t w = lo * kWordsPerBlock; w < words_.size(); ++w) {
    std::uint64_t word = bit ? words_[w] : ~words_[w];
    if (!bit && w == words_.size() - 1 && (size_ & 63)) word &= (std::uint64_t{1} << (size_ & 63)) - 1;
    const auto c = static_cast<std::size_t>(std::popcount(word));
    if (c >= remaining) {
      for (std::size_t r = 1; r < remaining; ++r) word &= word - 1;
      return w * 64 + static_cast<std::size_t>(std::countr_zero(word)) + 1;
    }
    remaining -= c;
  }
  throw NotFoundError("bitvector select fell off the end");
}

std::size_t Bitvector::size_in_bits() const noexcept {
  return 64 * (words_.size() + block_ones_.size()) + 128;
}

void Bitvector::write(std::ostream& out) const {
  io::put_u64(out, size_);
  for (auto w : words_) io::put_u64(out, w);
}

Bitvector Bitvector::read(std::istream& in) {
  Bitvector bv;
  bv.size_ = static_cast<std::size_t>(io::get_item_count(in, std::uint64_t{1} << 40, 1));
  bv.words_.resize((bv.size_ + 63) / 64);
  for (auto& w : bv.words_) w = io::get_u64(in);
  if ((bv.size_ & 63) && !bv.words_.empty() && (bv.words_.back() >> (bv.size_ & 63)) != 0) {
    throw CorruptionError("bitvector padding bits set");
  }
  bv.build_samples();
  return bv;
}

}  // namespace posheap::succinct
