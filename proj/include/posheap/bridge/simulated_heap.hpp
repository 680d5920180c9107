#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "posheap/bridge/sa_access.hpp"
#include "posheap/heap/heap_search.hpp"
#include "posheap/heap/position_heap.hpp"
#include "posheap/succinct/depth_sequence.hpp"
#include "posheap/succinct/paren_tree.hpp"
#include "posheap/suffix/ancestors.hpp"

namespace posheap::bridge {

/// Heap parentheses with one star per suffix rank r, placed inside the pair
/// of node maxreach(SA[r]) among that node's children in trie order.
succinct::ParenTree build_augmented_parens(const heap::PositionHeap& h, const TerminatedText& text,
                                           std::span<const std::uint32_t> sa);

struct SpaceInventory {
  std::size_t tree_bits = 0;       // plain parentheses
  std::size_t augmented_bits = 0;  // parentheses with stars
  std::size_t first_char_bits = 0;
  std::size_t d_bits = 0, e_bits = 0;
  std::size_t total() const noexcept { return tree_bits + augmented_bits + first_char_bits + d_bits + e_bits; }
};

/// A position heap answered from SA/SA^-1 access plus small structures, with
/// no explicit node labels. Nodes are preorder ranks (root = 0).
class SimulatedHeap {
 public:
  using Node = std::size_t;

  SimulatedHeap(std::shared_ptr<const SAAccess> sa, succinct::ParenTree tree, succinct::ParenTree augmented,
                suffix::FirstCharIndex first_chars, succinct::DepthSequence d, succinct::DepthSequence e);

  static SimulatedHeap build(const heap::PositionHeap& h, const TerminatedText& text,
                             std::shared_ptr<const SAAccess> sa);

  std::size_t size() const noexcept { return d_.size(); }
  std::size_t node_count() const noexcept { return tree_.node_count(); }

  heap::Label sim_label(Node t) const;
  Node sim_node_of_label(heap::Label i) const;
  std::uint32_t sim_depth(Node t) const;
  Symbol sim_edge_label(Node t) const;
  Node sim_maximal_reach(heap::Label i) const;
  bool is_ancestor(Node a, Node b) const { return tree_.is_ancestor(a, b); }
  std::size_t subtree_size(Node t) const { return tree_.subtree_size(t); }
  std::optional<Node> sim_child(Node t, Symbol c) const;

  const SAAccess& sa_access() const noexcept { return *sa_; }
  const succinct::ParenTree& tree() const noexcept { return tree_; }
  const succinct::ParenTree& augmented() const noexcept { return aug_; }
  const suffix::FirstCharIndex& first_chars() const noexcept { return fci_; }
  const succinct::DepthSequence& d() const noexcept { return d_; }
  const succinct::DepthSequence& e() const noexcept { return e_; }
  SpaceInventory space() const;

 private:
  std::shared_ptr<const SAAccess> sa_;
  succinct::ParenTree tree_, aug_;
  suffix::FirstCharIndex fci_;
  succinct::DepthSequence d_, e_;
};

class SimulatedHeapView {
 public:
  using Node = SimulatedHeap::Node;
  using Label = heap::Label;

  explicit SimulatedHeapView(const SimulatedHeap& s) : s_(&s) {}

  Node root() const { return 0; }
  std::optional<Node> child(Node v, Symbol c) const { return s_->sim_child(v, c); }
  std::uint32_t depth(Node v) const { return s_->sim_depth(v); }
  Node node_of(Label l) const { return s_->sim_node_of_label(l); }
  Label label_of(Node v) const { return s_->sim_label(v); }
  Node max_reach(Label l) const { return s_->sim_maximal_reach(l); }
  bool is_ancestor(Node a, Node b) const { return s_->is_ancestor(a, b); }
  template <class F>
  void for_each_in_subtree(Node v, F&& f) const {
    const std::size_t end = v + s_->subtree_size(v);
    for (Node t = v; t < end; ++t) f(s_->sim_label(t));
  }
  std::optional<Label> shift(Label l, std::size_t d) const {
    if (l + d > s_->size()) return std::nullopt;
    return static_cast<Label>(l + d);
  }
  std::uint32_t report(Label l) const { return l; }

 private:
  const SimulatedHeap* s_;
};

inline std::vector<std::uint32_t> simulated_search(const SimulatedHeap& s, std::span<const Symbol> pattern,
                                                   heap::SearchTrace* trace = nullptr) {
  return heap::heap_search(SimulatedHeapView(s), pattern, trace);
}

}  // namespace posheap::bridge
