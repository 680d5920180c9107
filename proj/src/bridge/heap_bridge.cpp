#include "posheap/bridge/heap_bridge.hpp"

#include <algorithm>

namespace posheap::bridge {

std::vector<std::uint32_t> depth_by_rank_serial(const heap::PositionHeap& h, std::span<const std::uint32_t> sa) {
  const std::size_t n = sa.size() - 1;
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = h.depth(sa[i + 1]);
  return out;
}

std::vector<std::uint32_t> depth_by_rank_omp(const heap::PositionHeap& h, std::span<const std::uint32_t> sa) {
  const auto n = static_cast<std::int64_t>(sa.size() - 1);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = h.depth(sa[i + 1]);
  return out;
}

std::vector<std::uint32_t> depth_by_preorder_serial(const heap::PositionHeap& h) {
  const auto order = h.preorder_labels();
  std::vector<std::uint32_t> out(order.size() - 1);
  for (std::size_t t = 1; t < order.size(); ++t) out[t - 1] = h.depth(order[t]);
  return out;
}

std::vector<std::uint32_t> depth_by_preorder_omp(const heap::PositionHeap& h) {
  const auto order = h.preorder_labels();
  const auto n = static_cast<std::int64_t>(order.size() - 1);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 1; t <= n; ++t) out[t - 1] = h.depth(order[t]);
  return out;
}

HeapArrayBridge::HeapArrayBridge(heap::PositionHeap h, succinct::DepthSequence d, succinct::DepthSequence e)
    : heap_(std::move(h)), d_(std::move(d)), e_(std::move(e)) {
  if (d_.size() != heap_.text_size() || e_.size() != heap_.text_size()) {
    throw ValidationError("depth arrays do not match the heap size");
  }
}

std::uint32_t HeapArrayBridge::sa_access(std::size_t rank) const {
  const auto depth = d_.access(rank);
  const auto t = e_.select(depth, d_.partial_rank(rank));
  return heap_.label_at(t);
}

std::uint32_t HeapArrayBridge::isa_access(std::size_t pos) const {
  if (pos < 1 || pos > size()) throw RangeError("text position out of range");
  const auto t = heap_.node_of_label(static_cast<heap::Label>(pos));
  return static_cast<std::uint32_t>(d_.select(e_.access(t), e_.partial_rank(t)));
}

heap::VerifyReport HeapArrayBridge::verify() const {
  auto dv = d_.values(), ev = e_.values();
  std::sort(dv.begin(), dv.end());
  std::sort(ev.begin(), ev.end());
  if (dv != ev) return heap::VerifyReport::fail("depth-multiset", "D is not a permutation of E");
  for (std::size_t t = 1; t <= e_.size(); ++t) {
    if (heap_.depth(heap_.label_at(t)) != e_.access(t)) {
      return heap::VerifyReport::fail("preorder-depth", "E disagrees with the heap at rank " + std::to_string(t));
    }
  }
  // Every rank must map to a label whose own rank comes back.
  std::vector<bool> seen(size() + 1, false);
  for (std::size_t r = 1; r <= size(); ++r) {
    const auto l = sa_access(r);
    if (l < 1 || l > size() || seen[l] || isa_access(l) != r) {
      return heap::VerifyReport::fail("sa-roundtrip", "rank " + std::to_string(r));
    }
    seen[l] = true;
  }
  return heap::VerifyReport::pass();
}

HeapArrayBridge build_bridge(heap::PositionHeap h, const suffix::SuffixArrayBundle& bundle) {
  if (bundle.size() != h.text_size()) throw ValidationError("heap and suffix array differ in length");
  succinct::DepthSequence d(depth_by_rank_omp(h, bundle.sa));
  succinct::DepthSequence e(depth_by_preorder_omp(h));
  return HeapArrayBridge(std::move(h), std::move(d), std::move(e));
}

}  // namespace posheap::bridge
