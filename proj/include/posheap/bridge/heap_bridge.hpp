#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posheap/bridge/sa_access.hpp"
#include "posheap/heap/position_heap.hpp"
#include "posheap/succinct/depth_sequence.hpp"

namespace posheap::bridge {

/// D[i] = depth of the node labelled SA[i]. Serial and OpenMP versions give
/// identical arrays (0-based vectors, D[0] is rank 1).
std::vector<std::uint32_t> depth_by_rank_serial(const heap::PositionHeap& h, std::span<const std::uint32_t> sa);
std::vector<std::uint32_t> depth_by_rank_omp(const heap::PositionHeap& h, std::span<const std::uint32_t> sa);
/// E[t] = depth of the node at preorder rank t, t = 1..n.
std::vector<std::uint32_t> depth_by_preorder_serial(const heap::PositionHeap& h);
std::vector<std::uint32_t> depth_by_preorder_omp(const heap::PositionHeap& h);

/// A heap plus D and E, answering SA and SA^-1. The r-th copy of depth d in
/// D and in E name the same node, because equal-depth nodes read left to
/// right are in suffix order.
class HeapArrayBridge final : public SAAccess {
 public:
  HeapArrayBridge(heap::PositionHeap h, succinct::DepthSequence d, succinct::DepthSequence e);

  const heap::PositionHeap& heap() const noexcept { return heap_; }
  const succinct::DepthSequence& d() const noexcept { return d_; }
  const succinct::DepthSequence& e() const noexcept { return e_; }

  std::uint32_t sa_access(std::size_t rank) const;
  std::uint32_t isa_access(std::size_t pos) const;

  std::size_t size() const override { return d_.size(); }
  std::uint32_t sa(std::size_t rank) const override { return sa_access(rank); }
  std::uint32_t isa(std::size_t pos) const override { return isa_access(pos); }

  /// D/E consistency: same multiset, and every (d, r) pair in E lands on a
  /// node of depth d.
  heap::VerifyReport verify() const;

 private:
  heap::PositionHeap heap_;
  succinct::DepthSequence d_, e_;
};

HeapArrayBridge build_bridge(heap::PositionHeap h, const suffix::SuffixArrayBundle& bundle);

}  // namespace posheap::bridge
