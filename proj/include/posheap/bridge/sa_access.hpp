#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "posheap/suffix/suffix_array.hpp"

namespace posheap::bridge {

/// Suffix array access: sa(i) and isa(i) for 1 <= i <= n. Implementations may
/// be slow (a compressed suffix array costs t per call); callers treat each
/// call as one unit of work.
class SAAccess {
 public:
  virtual ~SAAccess() = default;
  virtual std::size_t size() const = 0;
  virtual std::uint32_t sa(std::size_t rank) const = 0;
  virtual std::uint32_t isa(std::size_t pos) const = 0;
};

/// Stored arrays, O(1) per call.
class PlainSAAccess final : public SAAccess {
 public:
  explicit PlainSAAccess(std::vector<std::uint32_t> sa);
  explicit PlainSAAccess(const suffix::SuffixArrayBundle& b) : sa_(b.sa), isa_(b.isa) {}

  std::size_t size() const override { return sa_.size() - 1; }
  std::uint32_t sa(std::size_t rank) const override;
  std::uint32_t isa(std::size_t pos) const override;
  const std::vector<std::uint32_t>& sa_array() const noexcept { return sa_; }

 private:
  std::vector<std::uint32_t> sa_, isa_;
};

/// Forwards to another provider and counts the calls.
class CountingSAAccess final : public SAAccess {
 public:
  explicit CountingSAAccess(const SAAccess& inner) : inner_(&inner) {}

  std::size_t size() const override { return inner_->size(); }
  std::uint32_t sa(std::size_t rank) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_->sa(rank);
  }
  std::uint32_t isa(std::size_t pos) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_->isa(pos);
  }
  std::uint64_t calls() const noexcept { return calls_.load(); }
  void reset() noexcept { calls_ = 0; }

 private:
  const SAAccess* inner_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace posheap::bridge
