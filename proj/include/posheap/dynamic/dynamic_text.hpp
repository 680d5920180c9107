#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "posheap/text.hpp"

namespace posheap::dynamic {

/// Divider symbols sit above the text range and are never reused.
inline constexpr Symbol kDividerBase = 0x80000000u;
inline constexpr bool is_divider(Symbol c) noexcept { return c >= kDividerBase; }

/// AVL tree over a symbol sequence with order statistics and a per-subtree
/// divider count. Handles stay put while a character lives; ids of erased
/// characters are reused by later inserts. Ranks are 1-based.
class DynamicText {
 public:
  using Handle = std::uint32_t;
  static constexpr Handle kNone = 0xffffffffu;

  DynamicText() = default;
  explicit DynamicText(std::span<const Symbol> symbols) { insert(1, symbols); }

  std::size_t size() const noexcept { return sz(root_); }
  std::size_t divider_count() const noexcept { return mk(root_); }
  std::size_t height() const noexcept { return ht(root_); }

  Symbol symbol(Handle h) const { return pool_[h].sym; }
  bool live(Handle h) const noexcept { return h < pool_.size() && pool_[h].live; }
  std::size_t rank(Handle h) const;
  Handle at(std::size_t rank) const;
  Handle next(Handle h) const;
  Symbol symbol_at(std::size_t rank) const { return symbol(at(rank)); }

  /// Dividers among ranks [1, r].
  std::size_t dividers_through(std::size_t r) const;
  /// The j-th divider (1-based).
  Handle select_divider(std::size_t j) const;
  /// The j-th non-divider (1-based).
  Handle select_plain(std::size_t j) const;

  /// New symbols take ranks pos, pos+1, ...; pos <= size()+1.
  std::vector<Handle> insert(std::size_t pos, std::span<const Symbol> symbols);
  /// Removes ranks [pos, pos+len).
  void erase(std::size_t pos, std::size_t len);

  std::vector<Symbol> to_vector() const;
  std::vector<Symbol> slice(std::size_t pos, std::size_t len) const;
  /// Largest handle id ever issued + 1.
  std::size_t handle_capacity() const noexcept { return pool_.size(); }

  /// Checks balance, sizes, counts and parent links; empty string if fine.
  std::string check() const;

  /// Split and join on raw subtrees; insert and erase are built on these.
  std::pair<Handle, Handle> split(Handle t, std::size_t k);
  Handle join(Handle l, Handle m, Handle r);
  Handle join2(Handle l, Handle r);

 private:
  struct Node {
    Symbol sym = 0;
    Handle l = kNone, r = kNone, p = kNone;
    std::uint32_t size = 1, marks = 0;
    std::uint8_t h = 1;
    bool live = true;
  };

  std::size_t sz(Handle x) const noexcept { return x == kNone ? 0 : pool_[x].size; }
  std::size_t mk(Handle x) const noexcept { return x == kNone ? 0 : pool_[x].marks; }
  int ht(Handle x) const noexcept { return x == kNone ? 0 : pool_[x].h; }
  void pull(Handle x);
  Handle rotate_left(Handle x);
  Handle rotate_right(Handle x);
  Handle rebalance(Handle x);
  Handle build(const std::vector<Handle>& hs, std::size_t lo, std::size_t hi);
  Handle fresh(Symbol c);
  void release(Handle t);
  std::string check_node(Handle x, Handle parent) const;

  std::vector<Node> pool_;
  std::vector<Handle> free_;
  Handle root_ = kNone;
};

}  // namespace posheap::dynamic
