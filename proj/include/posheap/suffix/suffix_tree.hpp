#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posheap/suffix/suffix_array.hpp"
#include "posheap/text.hpp"

namespace posheap::suffix {

/// Static suffix tree built from SA + LCP. Node 0 is the root. Children are
/// kept in lexicographic edge order, so leaves read left to right follow SA.
/// Each node covers the SA rank interval [lo, hi]; a leaf has lo == hi.
class SuffixTree {
 public:
  using Node = std::uint32_t;
  static constexpr Node kRoot = 0;
  static constexpr Node kNoNode = 0xffffffffu;

  SuffixTree(const TerminatedText& text, const SuffixArrayBundle& bundle);

  std::size_t node_count() const noexcept { return parent_.size(); }
  std::size_t text_size() const noexcept { return text_size_; }

  Node parent(Node v) const { return parent_[v]; }
  std::span<const Node> children(Node v) const {
    return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
  }
  std::uint32_t string_depth(Node v) const { return sdepth_[v]; }
  std::uint32_t node_depth(Node v) const { return ndepth_[v]; }
  std::uint32_t lo(Node v) const { return lo_[v]; }
  std::uint32_t hi(Node v) const { return hi_[v]; }
  std::uint32_t leaf_count(Node v) const { return hi_[v] - lo_[v] + 1; }
  bool is_leaf(Node v) const { return child_begin_[v] == child_begin_[v + 1]; }
  /// Text position of some suffix passing through v (the leftmost leaf).
  std::uint32_t representative(Node v) const { return sa_[lo_[v]]; }
  /// Suffix start of a leaf.
  std::uint32_t leaf_label(Node v) const { return representative(v); }
  Node leaf_of_position(std::size_t pos) const { return leaf_of_rank_[isa_[pos]]; }
  Node leaf_of_rank(std::size_t rank) const { return leaf_of_rank_[rank]; }
  /// k-th (0-based) character of v's path label.
  Symbol path_char(Node v, std::size_t k) const { return text_[representative(v) + k]; }

  /// Child of v whose edge starts with c.
  Node child_by_symbol(Node v, Symbol c) const;

  /// Order-independent digest of the structure; used to check immutability.
  std::uint64_t checksum() const noexcept;

 private:
  std::vector<Symbol> text_;  // 1-based copy: text_[0] unused
  std::vector<std::uint32_t> sa_, isa_;
  std::size_t text_size_ = 0;
  std::vector<Node> parent_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<Node> child_list_;
  std::vector<std::uint32_t> sdepth_, ndepth_, lo_, hi_;
  std::vector<Node> leaf_of_rank_;
};

}  // namespace posheap::suffix
