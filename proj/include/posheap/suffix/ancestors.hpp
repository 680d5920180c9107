#pragma once

#include <cstdint>
#include <vector>

#include "posheap/succinct/bitvector.hpp"
#include "posheap/suffix/suffix_tree.hpp"

namespace posheap::suffix {

/// Lowest marked ancestor by walking parent pointers. The parent array is
/// borrowed and may grow while the service is alive (new nodes start
/// unmarked). Node 0 is the root and is always marked.
class MarkedAncestorService {
 public:
  explicit MarkedAncestorService(const std::vector<std::uint32_t>& parents);

  void mark(std::uint32_t v);
  bool is_marked(std::uint32_t v) const { return v < marks_.size() && marks_[v]; }
  std::uint32_t lowest_marked_ancestor(std::uint32_t v) const;
  std::size_t marked_count() const noexcept { return marked_; }

 private:
  const std::vector<std::uint32_t>* parents_;
  std::vector<bool> marks_;
  std::size_t marked_ = 0;
};

/// Level ancestor over a static tree: one preorder-sorted list per depth, and
/// a query is a binary search for the last node at that depth that starts no
/// later than v in preorder.
class LevelAncestorService {
 public:
  /// parents[0] is ignored (node 0 is the root).
  explicit LevelAncestorService(const SuffixTree& tree);
  explicit LevelAncestorService(const std::vector<std::uint32_t>& parents);

  std::uint32_t depth(std::uint32_t v) const { return depth_[v]; }
  /// Throws RangeError if d > depth(v).
  std::uint32_t level_ancestor(std::uint32_t v, std::uint32_t d) const;

 private:
  void index(const std::vector<std::vector<std::uint32_t>>& children);

  std::vector<std::uint32_t> depth_, pre_;
  std::vector<std::vector<std::uint32_t>> level_pre_, level_node_;
};

/// S[sa[p]] for any rank p from a bitvector over ranks marking where the first
/// character changes, plus the distinct characters in order.
class FirstCharIndex {
 public:
  FirstCharIndex() = default;
  FirstCharIndex(const TerminatedText& text, std::span<const std::uint32_t> sa);
  FirstCharIndex(succinct::Bitvector starts, std::vector<Symbol> chars);

  Symbol char_at_rank(std::size_t p) const;
  std::size_t size() const noexcept { return starts_.size(); }
  const succinct::Bitvector& starts() const noexcept { return starts_; }
  const std::vector<Symbol>& chars() const noexcept { return chars_; }
  std::size_t size_in_bits() const noexcept { return starts_.size_in_bits() + 32 * chars_.size(); }

 private:
  succinct::Bitvector starts_;
  std::vector<Symbol> chars_;
};

}  // namespace posheap::suffix
