#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posheap::succinct {

enum class Paren : std::uint8_t { kOpen = 0, kClose = 1, kStar = 2 };

/// Balanced parentheses over {(, ), *}, two bits per symbol. Nodes are named
/// by preorder rank (root = 0). Stars do not change the excess, so every tree
/// query ignores them.
///
/// Stream positions are 0-based. Per 128-symbol block the structure keeps
/// cumulative symbol counts and the minimum excess; a segment tree over block
/// minima drives find_close/enclose.
class ParenTree {
 public:
  ParenTree() = default;
  explicit ParenTree(const std::vector<Paren>& symbols);

  /// Parses "(", ")", "*"; whitespace is skipped. Throws ValidationError if
  /// the result is unbalanced, empty, or has stars outside the root pair.
  static ParenTree parse(std::string_view text);
  /// Tree from parents in preorder: parents[0] is ignored (root), parents[t] < t.
  static ParenTree from_preorder_parents(const std::vector<std::uint32_t>& parents);

  std::size_t length() const noexcept { return length_; }
  Paren at(std::size_t pos) const noexcept {
    return static_cast<Paren>((packed_[pos >> 2] >> ((pos & 3) * 2)) & 3u);
  }
  std::size_t node_count() const noexcept { return count(Paren::kOpen); }
  std::size_t star_count() const noexcept { return count(Paren::kStar); }
  std::size_t count(Paren p) const noexcept { return totals_[static_cast<int>(p)]; }

  /// Occurrences of `p` in positions [0, pos).
  std::size_t rank(Paren p, std::size_t pos) const;
  /// Position of the k-th (1-based) occurrence of `p`.
  std::size_t select(Paren p, std::size_t k) const;
  /// #open - #close over [0, pos).
  long excess(std::size_t pos) const { return static_cast<long>(rank(Paren::kOpen, pos)) - static_cast<long>(rank(Paren::kClose, pos)); }

  std::size_t find_close(std::size_t open_pos) const;
  /// Open position of the tightest pair strictly enclosing `pos`.
  std::optional<std::size_t> enclose(std::size_t pos) const;

  // Preorder-rank navigation.
  std::size_t open_of(std::size_t node) const { return select(Paren::kOpen, node + 1); }
  std::size_t node_of_open(std::size_t open_pos) const { return rank(Paren::kOpen, open_pos); }
  std::size_t depth(std::size_t node) const { return static_cast<std::size_t>(excess(open_of(node))); }
  std::size_t subtree_size(std::size_t node) const;
  bool is_ancestor(std::size_t a, std::size_t b) const { return a <= b && b < a + subtree_size(a); }
  std::optional<std::size_t> parent(std::size_t node) const;
  std::vector<std::size_t> children(std::size_t node) const;

  /// Preorder rank of the node whose pair most tightly encloses the
  /// star_index-th star (1-based).
  std::size_t enclosing_node(std::size_t star_index) const;
  /// (#opens before the i-th star) - 1.
  std::size_t star_to_open_rank(std::size_t star_index) const;

  /// Preorder parent array (root entry is 0).
  std::vector<std::uint32_t> to_preorder_parents() const;
  ParenTree without_stars() const;
  std::string to_string() const;

  std::size_t size_in_bits() const noexcept;
  void write(std::ostream& out) const;
  static ParenTree read(std::istream& in);

  friend bool operator==(const ParenTree& a, const ParenTree& b) {
    return a.length_ == b.length_ && a.packed_ == b.packed_;
  }

 private:
  static constexpr std::size_t kBlock = 128;

  void build_index();
  void validate() const;
  std::optional<std::size_t> fwd_search(std::size_t from, long target) const;
  std::optional<std::size_t> bwd_search(std::size_t from, long target) const;
  std::size_t seg_first(std::size_t node, std::size_t lo, std::size_t hi, std::size_t from, long target) const;
  std::size_t seg_last(std::size_t node, std::size_t lo, std::size_t hi, std::size_t to, long target) const;
  std::size_t blocks() const noexcept { return (length_ + kBlock - 1) / kBlock; }

  std::vector<std::uint8_t> packed_;
  std::size_t length_ = 0;
  std::size_t totals_[3] = {0, 0, 0};
  // Cumulative counts of (open, close, star) before each block, interleaved.
  std::vector<std::uint32_t> block_counts_;
  // min excess over positions (b*kBlock, (b+1)*kBlock], i.e. after each symbol.
  std::vector<std::int32_t> block_min_;
  std::vector<std::int32_t> seg_;
  std::size_t seg_size_ = 0;
};

}  // namespace posheap::succinct
