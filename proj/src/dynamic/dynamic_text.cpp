#include "posheap/dynamic/dynamic_text.hpp"

#include <algorithm>
#include <cstdlib>

namespace posheap::dynamic {

void DynamicText::pull(Handle x) {
  Node& n = pool_[x];
  n.size = static_cast<std::uint32_t>(1 + sz(n.l) + sz(n.r));
  n.marks = static_cast<std::uint32_t>((is_divider(n.sym) ? 1 : 0) + mk(n.l) + mk(n.r));
  n.h = static_cast<std::uint8_t>(1 + std::max(ht(n.l), ht(n.r)));
  if (n.l != kNone) pool_[n.l].p = x;
  if (n.r != kNone) pool_[n.r].p = x;
}

DynamicText::Handle DynamicText::rotate_left(Handle x) {
  const Handle y = pool_[x].r;
  pool_[x].r = pool_[y].l;
  pool_[y].l = x;
  pull(x);
  pull(y);
  return y;
}

DynamicText::Handle DynamicText::rotate_right(Handle x) {
  const Handle y = pool_[x].l;
  pool_[x].l = pool_[y].r;
  pool_[y].r = x;
  pull(x);
  pull(y);
  return y;
}

DynamicText::Handle DynamicText::rebalance(Handle x) {
  pull(x);
  const int bf = ht(pool_[x].l) - ht(pool_[x].r);
  if (bf > 1) {
    const Handle l = pool_[x].l;
    if (ht(pool_[l].l) < ht(pool_[l].r)) pool_[x].l = rotate_left(l);
    return rotate_right(x);
  }
  if (bf < -1) {
    const Handle r = pool_[x].r;
    if (ht(pool_[r].r) < ht(pool_[r].l)) pool_[x].r = rotate_right(r);
    return rotate_left(x);
  }
  return x;
}

DynamicText::Handle DynamicText::join(Handle l, Handle m, Handle r) {
  if (ht(l) > ht(r) + 1) {
    pool_[l].r = join(pool_[l].r, m, r);
    return rebalance(l);
  }
  if (ht(r) > ht(l) + 1) {
    pool_[r].l = join(l, m, pool_[r].l);
    return rebalance(r);
  }
  pool_[m].l = l;
  pool_[m].r = r;
  pull(m);
  return m;
}

std::pair<DynamicText::Handle, DynamicText::Handle> DynamicText::split(Handle t, std::size_t k) {
  if (t == kNone) return {kNone, kNone};
  const Handle l = pool_[t].l, r = pool_[t].r;
  pool_[t].l = pool_[t].r = kNone;
  if (l != kNone) pool_[l].p = kNone;
  if (r != kNone) pool_[r].p = kNone;
  const std::size_t ls = sz(l);
  if (k <= ls) {
    auto [a, b] = split(l, k);
    const Handle right = join(b, t, r);
    pool_[right].p = kNone;
    return {a, right};
  }
  auto [a, b] = split(r, k - ls - 1);
  const Handle left = join(l, t, a);
  pool_[left].p = kNone;
  return {left, b};
}

DynamicText::Handle DynamicText::join2(Handle l, Handle r) {
  if (l == kNone) return r;
  if (r == kNone) return l;
  auto [rest, last] = split(l, sz(l) - 1);
  const Handle t = join(rest, last, r);
  pool_[t].p = kNone;
  return t;
}

DynamicText::Handle DynamicText::fresh(Symbol c) {
  Handle h;
  if (!free_.empty()) {
    h = free_.back();
    free_.pop_back();
    pool_[h] = Node{};
  } else {
    h = static_cast<Handle>(pool_.size());
    pool_.emplace_back();
  }
  pool_[h].sym = c;
  pool_[h].marks = is_divider(c) ? 1 : 0;
  return h;
}

DynamicText::Handle DynamicText::build(const std::vector<Handle>& hs, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return kNone;
  const std::size_t mid = lo + (hi - lo) / 2;
  const Handle x = hs[mid];
  pool_[x].l = build(hs, lo, mid);
  pool_[x].r = build(hs, mid + 1, hi);
  pull(x);
  return x;
}

std::vector<DynamicText::Handle> DynamicText::insert(std::size_t pos, std::span<const Symbol> symbols) {
  if (pos == 0 || pos > size() + 1) throw RangeError("insert rank " + std::to_string(pos));
  std::vector<Handle> hs;
  hs.reserve(symbols.size());
  for (Symbol c : symbols) hs.push_back(fresh(c));
  if (hs.empty()) return hs;
  Handle t = build(hs, 0, hs.size());
  pool_[t].p = kNone;
  auto [a, b] = split(root_, pos - 1);
  root_ = join2(join2(a, t), b);
  pool_[root_].p = kNone;
  return hs;
}

void DynamicText::release(Handle t) {
  if (t == kNone) return;
  std::vector<Handle> stack{t};
  while (!stack.empty()) {
    const Handle x = stack.back();
    stack.pop_back();
    if (pool_[x].l != kNone) stack.push_back(pool_[x].l);
    if (pool_[x].r != kNone) stack.push_back(pool_[x].r);
    pool_[x].live = false;
    free_.push_back(x);
  }
}

void DynamicText::erase(std::size_t pos, std::size_t len) {
  if (len == 0) return;
  if (pos == 0 || pos + len - 1 > size()) throw RangeError("erase range");
  auto [a, rest] = split(root_, pos - 1);
  auto [mid, b] = split(rest, len);
  release(mid);
  root_ = join2(a, b);
  if (root_ != kNone) pool_[root_].p = kNone;
}

std::size_t DynamicText::rank(Handle h) const {
  if (!live(h)) throw RangeError("dead handle");
  std::size_t r = sz(pool_[h].l) + 1;
  for (Handle x = h; pool_[x].p != kNone; x = pool_[x].p) {
    const Handle y = pool_[x].p;
    if (pool_[y].r == x) r += sz(pool_[y].l) + 1;
  }
  return r;
}

DynamicText::Handle DynamicText::at(std::size_t rank) const {
  if (rank == 0 || rank > size()) throw RangeError("rank " + std::to_string(rank));
  Handle x = root_;
  while (true) {
    const std::size_t ls = sz(pool_[x].l);
    if (rank <= ls) {
      x = pool_[x].l;
    } else if (rank == ls + 1) {
      return x;
    } else {
      rank -= ls + 1;
      x = pool_[x].r;
    }
  }
}

DynamicText::Handle DynamicText::next(Handle h) const {
  if (pool_[h].r != kNone) {
    Handle x = pool_[h].r;
    while (pool_[x].l != kNone) x = pool_[x].l;
    return x;
  }
  Handle x = h;
  while (pool_[x].p != kNone && pool_[pool_[x].p].r == x) x = pool_[x].p;
  return pool_[x].p;
}

std::size_t DynamicText::dividers_through(std::size_t r) const {
  if (r > size()) throw RangeError("rank " + std::to_string(r));
  std::size_t count = 0;
  Handle x = root_;
  while (x != kNone && r > 0) {
    const std::size_t ls = sz(pool_[x].l);
    if (r <= ls) {
      x = pool_[x].l;
    } else {
      count += mk(pool_[x].l) + (is_divider(pool_[x].sym) ? 1 : 0);
      r -= ls + 1;
      x = pool_[x].r;
    }
  }
  return count;
}

DynamicText::Handle DynamicText::select_divider(std::size_t j) const {
  if (j == 0 || j > divider_count()) throw NotFoundError("divider " + std::to_string(j));
  Handle x = root_;
  while (true) {
    const std::size_t lm = mk(pool_[x].l);
    if (j <= lm) {
      x = pool_[x].l;
      continue;
    }
    j -= lm;
    if (is_divider(pool_[x].sym)) {
      if (j == 1) return x;
      --j;
    }
    x = pool_[x].r;
  }
}

DynamicText::Handle DynamicText::select_plain(std::size_t j) const {
  if (j == 0 || j > size() - divider_count()) throw NotFoundError("character " + std::to_string(j));
  Handle x = root_;
  while (true) {
    const std::size_t lp = sz(pool_[x].l) - mk(pool_[x].l);
    if (j <= lp) {
      x = pool_[x].l;
      continue;
    }
    j -= lp;
    if (!is_divider(pool_[x].sym)) {
      if (j == 1) return x;
      --j;
    }
    x = pool_[x].r;
  }
}

std::vector<Symbol> DynamicText::to_vector() const {
  std::vector<Symbol> out;
  out.reserve(size());
  if (root_ == kNone) return out;
  Handle x = root_;
  while (pool_[x].l != kNone) x = pool_[x].l;
  for (; x != kNone; x = next(x)) out.push_back(pool_[x].sym);
  return out;
}

std::vector<Symbol> DynamicText::slice(std::size_t pos, std::size_t len) const {
  std::vector<Symbol> out;
  if (len == 0) return out;
  out.reserve(len);
  for (Handle x = at(pos); out.size() < len; x = next(x)) {
    if (x == kNone) throw RangeError("slice past the end");
    out.push_back(pool_[x].sym);
  }
  return out;
}

std::string DynamicText::check_node(Handle x, Handle parent) const {
  if (x == kNone) return {};
  const Node& n = pool_[x];
  if (!n.live) return "dead node in tree";
  if (n.p != parent) return "parent link";
  if (n.size != 1 + sz(n.l) + sz(n.r)) return "size";
  if (n.marks != (is_divider(n.sym) ? 1u : 0u) + mk(n.l) + mk(n.r)) return "divider count";
  if (n.h != 1 + std::max(ht(n.l), ht(n.r))) return "height";
  if (std::abs(ht(n.l) - ht(n.r)) > 1) return "balance";
  auto e = check_node(n.l, x);
  return e.empty() ? check_node(n.r, x) : e;
}

std::string DynamicText::check() const { return check_node(root_, kNone); }

}  // namespace posheap::dynamic
