#include "posheap/bridge/sa_access.hpp"

namespace posheap::bridge {

PlainSAAccess::PlainSAAccess(std::vector<std::uint32_t> sa) : sa_(std::move(sa)) {
  if (sa_.empty()) sa_.push_back(0);
  const std::size_t n = sa_.size() - 1;
  isa_.assign(n + 1, 0);
  for (std::size_t r = 1; r <= n; ++r) {
    if (sa_[r] < 1 || sa_[r] > n || isa_[sa_[r]] != 0) throw ValidationError("suffix array is not a permutation");
    isa_[sa_[r]] = static_cast<std::uint32_t>(r);
  }
}

std::uint32_t PlainSAAccess::sa(std::size_t rank) const {
  if (rank < 1 || rank >= sa_.size()) throw RangeError("suffix array rank out of range");
  return sa_[rank];
}

std::uint32_t PlainSAAccess::isa(std::size_t pos) const {
  if (pos < 1 || pos >= isa_.size()) throw RangeError("text position out of range");
  return isa_[pos];
}

}  // namespace posheap::bridge
