#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posheap/succinct/paren_tree.hpp"
#include "posheap/text.hpp"

namespace posheap::heap {

using Label = std::uint32_t;

/// Outcome of a structural audit. `invariant` names the first check that
/// failed; empty when ok.
struct VerifyReport {
  bool ok = true;
  std::string invariant;
  std::string detail;

  static VerifyReport pass() { return {}; }
  static VerifyReport fail(std::string inv, std::string det) { return {false, std::move(inv), std::move(det)}; }
};

/// Static position heap over a terminated text. Nodes are identified by
/// their label 0..n (the root is 0). Children are sorted by edge symbol.
/// Preorder ranks are 0-based with the root at rank 0.
class PositionHeap {
 public:
  PositionHeap() = default;

  /// Assembles a heap from per-label parents (parents[0] ignored) and maximal
  /// reach (entry 0 ignored). Edge symbols come from the text. Throws
  /// ValidationError if the parents do not form a tree rooted at 0 or two
  /// siblings share an edge symbol.
  PositionHeap(const TerminatedText& text, std::vector<Label> parents, std::vector<Label> max_reach);

  /// Replaces the maximal-reach array (size n+1, entry 0 ignored).
  void set_max_reach(std::vector<Label> max_reach);

  std::size_t text_size() const noexcept { return parent_.size() - 1; }
  std::size_t node_count() const noexcept { return parent_.size(); }

  Label parent(Label i) const { return parent_[check(i)]; }
  std::uint32_t depth(Label i) const { return depth_[check(i)]; }
  Symbol edge(Label i) const { return edge_[check(i)]; }
  std::span<const Label> children(Label i) const {
    check(i);
    return {child_list_.data() + child_begin_[i], child_list_.data() + child_begin_[i + 1]};
  }
  std::optional<Label> child(Label i, Symbol c) const;

  /// Label of the deepest node whose path label prefixes S[i..n].
  Label max_reach(Label i) const;
  /// Ancestor-or-self, by preorder interval containment.
  bool is_ancestor(Label i, Label j) const {
    return pre_[check(i)] <= pre_[check(j)] && pre_[j] < pre_[i] + size_[i];
  }
  /// Preorder rank of the node labelled i.
  std::size_t node_of_label(Label i) const { return pre_[check(i)]; }
  Label label_at(std::size_t rank) const;
  std::size_t subtree_size(Label i) const { return size_[check(i)]; }
  std::span<const Label> preorder_labels() const noexcept { return preorder_; }
  std::uint32_t height() const noexcept { return height_; }

  /// Balanced parentheses of the tree in preorder, no stars.
  succinct::ParenTree to_parens() const;
  /// Rebuilds from the parenthesis form, labels in preorder and maximal reach.
  static PositionHeap from_parts(const TerminatedText& text, const succinct::ParenTree& tree,
                                 std::span<const Label> preorder_labels, std::vector<Label> max_reach);

  VerifyReport verify(const TerminatedText& text) const;

  friend bool operator==(const PositionHeap& a, const PositionHeap& b) {
    return a.parent_ == b.parent_ && a.max_reach_ == b.max_reach_ && a.edge_ == b.edge_ &&
           a.preorder_ == b.preorder_;
  }

 private:
  friend struct PositionHeapTestAccess;

  Label check(Label i) const {
    if (i >= parent_.size()) throw RangeError("heap label out of range");
    return i;
  }
  void index();

  std::vector<Label> parent_;
  std::vector<Symbol> edge_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<Label> child_list_;
  std::vector<Label> max_reach_;
  std::vector<std::uint32_t> pre_, size_;
  std::vector<Label> preorder_;
  std::uint32_t height_ = 0;
};

/// Inserts positions 1..n in increasing order, each as a new leaf at the
/// first missing child on its descent, then fills in maximal reach.
PositionHeap build_naive(const TerminatedText& text);

/// Maximal reach of every label by descending from the root; O(n h).
std::vector<Label> compute_maximal_reach(const PositionHeap& heap, const TerminatedText& text);

}  // namespace posheap::heap
