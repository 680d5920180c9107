#pragma once

#include <cstdint>
#include <vector>

#include "posheap/heap/position_heap.hpp"
#include "posheap/suffix/ancestors.hpp"
#include "posheap/suffix/suffix_tree.hpp"

namespace posheap::heap {

struct ConversionStats {
  std::vector<Label> split_labels;        // heap labels placed on inserted nodes
  std::size_t scan_lookups = 0;           // child_toward answered by scanning
  std::size_t level_ancestor_lookups = 0; // child_toward answered through st2
  std::uint64_t st2_checksum_before = 0;
  std::uint64_t st2_checksum_after = 0;
  bool marks_monotone = true;             // i+1 marked nodes after step i
};

/// Two views of one suffix tree. st2 is the tree itself and is never changed;
/// st1 shares its node ids and adds subdivision nodes with fresh ids past
/// the original range.
class OverlayState {
 public:
  using Node = std::uint32_t;
  static constexpr std::size_t kScanThreshold = 2;

  explicit OverlayState(const suffix::SuffixTree& st);
  OverlayState(const OverlayState&) = delete;  // the mark service points into parent1_
  OverlayState& operator=(const OverlayState&) = delete;

  const suffix::SuffixTree& st2() const noexcept { return *st2_; }
  std::size_t st1_node_count() const noexcept { return parent1_.size(); }
  bool is_original(Node v) const noexcept { return v < original_; }
  Node parent1(Node v) const { return parent1_[v]; }
  std::uint32_t string_depth1(Node v) const { return sdepth1_[v]; }
  std::size_t child_count1(Node v) const;
  /// Original node at the bottom of v's chain (v itself for original nodes).
  Node bottom(Node v) const { return is_original(v) ? v : bottom_[v - original_]; }

  Node lowest_marked_ancestor(Node v) const { return marks_.lowest_marked_ancestor(v); }
  void mark(Node v) { marks_.mark(v); }
  std::size_t marked_count() const noexcept { return marks_.marked_count(); }

  /// The st1 child of u on the path to `leaf`; UsageError if u is not a
  /// strict st1 ancestor of it.
  Node child_toward(Node u, Node leaf);
  /// Same, forcing the scan or the st2 route. For cross-checking only.
  Node child_toward_scan(Node u, Node leaf) const;
  Node child_toward_level_ancestor(Node u, Node leaf) const;

  /// Inserts v' at string depth sd(u)+1 on the st1 edge (u, v).
  Node split_edge(Node u, Node v);

  std::size_t scan_lookups = 0, level_ancestor_lookups = 0;

 private:
  std::uint32_t leaf_rank(Node leaf) const { return st2_->lo(leaf); }
  bool covers(Node v, std::uint32_t rank) const {
    const Node b = bottom(v);
    return st2_->lo(b) <= rank && rank <= st2_->hi(b);
  }

  const suffix::SuffixTree* st2_;
  std::size_t original_;
  suffix::LevelAncestorService la_;
  std::vector<std::uint32_t> parent1_, sdepth1_;
  std::vector<Node> top_;           // per original node: topmost st1 node of its chain
  std::vector<Node> single_child_;  // per inserted node
  std::vector<Node> bottom_;        // per inserted node
  suffix::MarkedAncestorService marks_;
};

/// Position heap of `text` from its suffix tree by marking and subdividing
/// an overlay of the tree. Equal to build_naive(text).
PositionHeap suffix_tree_to_heap(const suffix::SuffixTree& st, const TerminatedText& text,
                                 ConversionStats* stats = nullptr);

}  // namespace posheap::heap
