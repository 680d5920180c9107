#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "posheap/bridge/sa_access.hpp"
#include "posheap/heap/heap_search.hpp"
#include "posheap/heap/position_heap.hpp"
#include "posheap/succinct/paren_tree.hpp"
#include "posheap/suffix/ancestors.hpp"
#include "posheap/suffix/suffix_tree.hpp"

namespace posheap::sheap {

using heap::Label;

/// Explicit output of the suffix-trie recursion; node j is the j-th created
/// (labels are preorder ranks). lo/hi are the SA rank interval of the trie
/// point the node was created on.
struct SuffixHeapShape {
  std::vector<Label> parent;          // parent[0] = 0
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> lo, hi;
  std::vector<Label> max_reach;       // [0] unused
  std::size_t peak_stack = 0;         // frames, for the work-space report
};

/// Runs the recursive construction on the suffix trie, simulated on the
/// suffix tree with (node, depth) trie points and an explicit stack.
SuffixHeapShape build_shape(const suffix::SuffixTree& st);

/// Maximal reach from the rank intervals: the deepest node whose interval
/// holds rank i. O(n) by sweeping each node's gaps between children.
std::vector<Label> shape_maximal_reach(const SuffixHeapShape& shape);

/// Stars placed right after the open of node maxreach(i), in order i = 1..n.
succinct::ParenTree sheap_augmented_parens(const SuffixHeapShape& shape);

struct SheapSpace {
  std::size_t parens_bits = 0;
  std::size_t first_char_bits = 0;
  std::size_t total() const noexcept { return parens_bits + first_char_bits; }
};

/// Suffix heap kept as the starred parentheses plus the first-character
/// index; everything else comes from SA access.
class SuffixHeap {
 public:
  SuffixHeap(std::shared_ptr<const bridge::SAAccess> sa, succinct::ParenTree augmented,
             suffix::FirstCharIndex first_chars);

  std::size_t size() const noexcept { return fci_.size(); }
  std::size_t node_count() const noexcept { return aug_.node_count(); }
  std::uint32_t depth(Label j) const { return static_cast<std::uint32_t>(aug_.depth(check(j))); }
  std::size_t subtree_size(Label j) const { return aug_.subtree_size(check(j)); }
  bool is_ancestor(Label a, Label b) const { return aug_.is_ancestor(check(a), check(b)); }
  std::optional<Label> parent(Label j) const;

  Symbol edge_label(Label j) const;
  Label maximal_reach(Label i) const;
  std::optional<Label> child(Label j, Symbol c) const;

  const bridge::SAAccess& sa_access() const noexcept { return *sa_; }
  const succinct::ParenTree& augmented() const noexcept { return aug_; }
  const suffix::FirstCharIndex& first_chars() const noexcept { return fci_; }
  SheapSpace space() const noexcept { return {aug_.size_in_bits(), fci_.size_in_bits()}; }

  /// Label = preorder rank is structural; checks path labels against the
  /// text, sibling order, maximal reach (deepest, monotone) and node count.
  heap::VerifyReport verify(const TerminatedText& text) const;

 private:
  Label check(Label j) const {
    if (j >= node_count()) throw RangeError("suffix heap label out of range");
    return j;
  }

  std::shared_ptr<const bridge::SAAccess> sa_;
  succinct::ParenTree aug_;
  suffix::FirstCharIndex fci_;
};

SuffixHeap build_suffix_heap(const suffix::SuffixTree& st, const suffix::SuffixArrayBundle& bundle,
                             const TerminatedText& text, std::shared_ptr<const bridge::SAAccess> sa = nullptr);

class SuffixHeapView {
 public:
  using Label = sheap::Label;
  using Node = sheap::Label;

  explicit SuffixHeapView(const SuffixHeap& h) : h_(&h) {}

  Node root() const { return 0; }
  std::optional<Node> child(Node v, Symbol c) const { return h_->child(v, c); }
  std::uint32_t depth(Node v) const { return h_->depth(v); }
  Node node_of(Label l) const { return l; }
  Label label_of(Node v) const { return v; }
  Node max_reach(Label l) const { return h_->maximal_reach(l); }
  bool is_ancestor(Node a, Node b) const { return h_->is_ancestor(a, b); }
  template <class F>
  void for_each_in_subtree(Node v, F&& f) const {
    const std::size_t end = v + h_->subtree_size(v);
    for (std::size_t j = v; j < end; ++j) f(static_cast<Label>(j));
  }
  std::optional<Label> shift(Label j, std::size_t d) const {
    const std::size_t p = h_->sa_access().sa(j) + d;
    if (p > h_->size()) return std::nullopt;
    return h_->sa_access().isa(p);
  }
  std::uint32_t report(Label j) const { return h_->sa_access().sa(j); }

 private:
  const SuffixHeap* h_;
};

inline std::vector<std::uint32_t> sheap_search(const SuffixHeap& h, std::span<const Symbol> pattern,
                                               heap::SearchTrace* trace = nullptr) {
  return heap::heap_search(SuffixHeapView(h), pattern, trace);
}

}  // namespace posheap::sheap
