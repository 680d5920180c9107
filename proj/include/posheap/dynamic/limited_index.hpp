#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posheap/dynamic/dynamic_text.hpp"
#include "posheap/heap/heap_search.hpp"
#include "posheap/heap/position_heap.hpp"

namespace posheap::dynamic {

/// Position heap over W = S' ! S'' where W's characters live in a
/// DynamicText and heap labels are handles into it.
///
/// S' is S cut into blocks by unique dividers; every block but the last has
/// length in [2M, 4M]. S'' holds one window per S' divider: the M characters
/// on each side of it (fewer on the right if S ends first), each window
/// followed by its own divider. The heap is relaxed: every node's path label
/// is a prefix of W at its handle, but parents need not be older than
/// children.
class LimitedIndex {
 public:
  using Handle = DynamicText::Handle;

  static LimitedIndex new_limited(const TerminatedText& s, std::size_t M);
  /// Restores an index from a saved W; the layout and heap are re-checked.
  static LimitedIndex from_working_string(std::span<const Symbol> w, std::size_t M, Symbol next_divider);

  LimitedIndex(LimitedIndex&&) = default;
  LimitedIndex& operator=(LimitedIndex&&) = default;

  /// T goes before the character now at pos, 1 <= pos <= |S|.
  void insert_substring(std::size_t pos, std::span<const Symbol> t);
  /// Removes S[pos .. pos+len-1]; the terminator must stay.
  void delete_substring(std::size_t pos, std::size_t len);
  /// Sorted occurrences of P in S, 1 <= |P| <= M.
  std::vector<std::uint32_t> search_limited(std::span<const Symbol> pattern,
                                            heap::SearchTrace* trace = nullptr) const;
  TerminatedText current_string() const;

  std::size_t max_pattern() const noexcept { return M_; }
  std::size_t text_size() const noexcept { return w_.size() - k_ - windows_total(); }
  std::size_t working_size() const noexcept { return w_.size(); }
  std::vector<Symbol> working_string() const { return w_.to_vector(); }
  Symbol next_divider() const noexcept { return next_div_; }
  std::size_t s_prime_dividers() const noexcept { return k_; }
  /// Separators between S'' blocks; the sentinel after the last is not counted.
  std::size_t s_double_prime_dividers() const noexcept { return k_ == 0 ? 0 : k_ - 1; }
  std::size_t height() const noexcept;
  std::size_t heap_nodes() const noexcept { return nodes_.size() - free_nodes_.size(); }

  /// Heap entries removed or inserted by the last edit.
  std::size_t last_touch() const noexcept { return last_touch_; }
  std::size_t total_touch() const noexcept { return total_touch_; }

  /// S' and S'' with dividers numbered #1, #2, ... in order of appearance and
  /// '$' for the terminator; S'''s trailing sentinel is left out.
  std::string render_s_prime() const;
  std::string render_s_double_prime() const;

  /// Block bounds, divider uniqueness, window centering, S' = S; with
  /// `coverage` also that every substring of length <= M lies in a block or
  /// a window.
  heap::VerifyReport check_layout(bool coverage = false) const;
  /// Path labels, one node per live W position, sibling order, height.
  heap::VerifyReport verify_heap() const;

  // Heap view for the generic search.
  struct HeapNode {
    Handle label = DynamicText::kNone;
    std::uint32_t parent = 0, depth = 0;
    Symbol edge = 0;
    std::vector<std::pair<Symbol, std::uint32_t>> kids;  // sorted by symbol
  };
  const HeapNode& heap_node(std::uint32_t x) const { return nodes_[x]; }
  std::uint32_t node_of_handle(Handle h) const { return node_of_[h]; }
  const DynamicText& text() const noexcept { return w_; }
  std::optional<std::uint32_t> heap_child(std::uint32_t v, Symbol c) const;
  std::uint32_t heap_max_reach(Handle h) const;
  /// S position of the character at a W handle, or 0 for a divider.
  std::uint32_t s_position(Handle h) const;

 private:
  LimitedIndex() = default;

  struct Window {
    std::vector<Symbol> left, right;
  };

  std::size_t windows_total() const noexcept { return 1 + k_ + window_chars_; }  // '!' and S''
  Symbol new_divider();
  std::size_t w_rank_of_s(std::size_t s) const;
  std::size_t divider_rank(std::size_t j) const { return w_.rank(w_.select_divider(j)); }
  std::size_t bang_rank() const { return divider_rank(k_ + 1); }
  std::size_t block_length(std::size_t b) const;  // 1-based S' block
  std::vector<Symbol> window_for(std::size_t j) const;

  void heap_insert(Handle h);
  void heap_erase(Handle h);
  std::uint32_t new_node();

  void edit(std::size_t first, std::size_t last, std::size_t del_len, std::span<const Symbol> ins);
  void rebuild_heap();

  std::size_t M_ = 1;
  DynamicText w_;
  std::size_t k_ = 0;             // S' dividers
  std::size_t window_chars_ = 0;  // characters in S'' windows, dividers excluded
  Symbol next_div_ = kDividerBase;
  Handle bang_ = DynamicText::kNone;

  std::vector<HeapNode> nodes_;  // [0] is the root
  std::vector<std::uint32_t> free_nodes_;
  std::vector<std::uint32_t> node_of_;  // by handle
  std::vector<std::size_t> depth_count_;
  std::size_t last_touch_ = 0, total_touch_ = 0;
};

class LimitedIndexView {
 public:
  using Label = DynamicText::Handle;
  using Node = std::uint32_t;

  explicit LimitedIndexView(const LimitedIndex& x) : x_(&x) {}

  Node root() const { return 0; }
  std::optional<Node> child(Node v, Symbol c) const { return x_->heap_child(v, c); }
  std::uint32_t depth(Node v) const { return x_->heap_node(v).depth; }
  Node node_of(Label l) const { return x_->node_of_handle(l); }
  Label label_of(Node v) const { return x_->heap_node(v).label; }
  Node max_reach(Label l) const { return x_->heap_max_reach(l); }
  bool is_ancestor(Node a, Node b) const {
    const std::uint32_t da = depth(a);
    while (depth(b) > da) b = x_->heap_node(b).parent;
    return a == b;
  }
  template <class F>
  void for_each_in_subtree(Node v, F&& f) const {
    std::vector<Node> stack{v};
    while (!stack.empty()) {
      const Node u = stack.back();
      stack.pop_back();
      f(label_of(u));
      for (const auto& kid : x_->heap_node(u).kids) stack.push_back(kid.second);
    }
  }
  std::optional<Label> shift(Label l, std::size_t d) const {
    const std::size_t r = x_->text().rank(l) + d;
    if (r > x_->text().size()) return std::nullopt;
    return x_->text().at(r);
  }
  std::uint32_t report(Label l) const { return x_->s_position(l); }

 private:
  const LimitedIndex* x_;
};

}  // namespace posheap::dynamic
