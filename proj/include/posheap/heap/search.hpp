#pragma once

#include "posheap/heap/heap_search.hpp"
#include "posheap/heap/position_heap.hpp"

namespace posheap::heap {

/// View of a PositionHeap for heap_search: nodes are labels and a label is
/// its own position.
class PositionHeapView {
 public:
  using Label = heap::Label;
  using Node = heap::Label;

  explicit PositionHeapView(const PositionHeap& h) : h_(&h) {}

  Node root() const { return 0; }
  std::optional<Node> child(Node v, Symbol c) const { return h_->child(v, c); }
  std::uint32_t depth(Node v) const { return h_->depth(v); }
  Node node_of(Label l) const { return l; }
  Label label_of(Node v) const { return v; }
  Node max_reach(Label l) const { return h_->max_reach(l); }
  bool is_ancestor(Node a, Node b) const { return h_->is_ancestor(a, b); }
  template <class F>
  void for_each_in_subtree(Node v, F&& f) const {
    const auto order = h_->preorder_labels();
    const std::size_t from = h_->node_of_label(v);
    for (std::size_t k = from; k < from + h_->subtree_size(v); ++k) f(order[k]);
  }
  std::optional<Label> shift(Label l, std::size_t d) const {
    if (l + d > h_->text_size()) return std::nullopt;
    return static_cast<Label>(l + d);
  }
  std::uint32_t report(Label l) const { return l; }

 private:
  const PositionHeap* h_;
};

inline std::vector<std::uint32_t> search(const PositionHeap& h, std::span<const Symbol> pattern,
                                         SearchTrace* trace = nullptr) {
  return heap_search(PositionHeapView(h), pattern, trace);
}

}  // namespace posheap::heap
