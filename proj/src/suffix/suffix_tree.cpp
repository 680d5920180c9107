#include "posheap/suffix/suffix_tree.hpp"

#include <algorithm>

namespace posheap::suffix {

SuffixTree::SuffixTree(const TerminatedText& text, const SuffixArrayBundle& bundle)
    : sa_(bundle.sa), isa_(bundle.isa), text_size_(text.size()) {
  const std::size_t n = text_size_;
  text_.assign(n + 2, kTerminator);
  for (std::size_t i = 1; i <= n; ++i) text_[i] = text[i];

  // Stack construction over LCP intervals. Children are recorded as
  // (parent, child) pairs and grouped at the end; nodes get ids in creation
  // order, which is not preorder, so ordering is by lo.
  std::vector<std::pair<Node, Node>> edges;
  edges.reserve(2 * n);
  auto new_node = [&](std::uint32_t sd, std::uint32_t lo) {
    parent_.push_back(kNoNode);
    sdepth_.push_back(sd);
    lo_.push_back(lo);
    hi_.push_back(lo);
    return static_cast<Node>(parent_.size() - 1);
  };
  new_node(0, 1);
  leaf_of_rank_.assign(n + 1, kNoNode);

  std::vector<Node> stack{kRoot};
  auto attach = [&](Node child, Node parent) {
    parent_[child] = parent;
    edges.emplace_back(parent, child);
  };
  for (std::size_t i = 1; i <= n + 1; ++i) {
    const std::uint32_t h = i <= n ? bundle.lcp[i] : 0;
    Node last = kNoNode;
    while (sdepth_[stack.back()] > h) {
      last = stack.back();
      stack.pop_back();
      hi_[last] = static_cast<std::uint32_t>(i - 1);
      const Node top = stack.back();
      if (sdepth_[top] >= h) {
        attach(last, top);
      } else {
        const Node x = new_node(h, lo_[last]);
        attach(last, x);
        stack.push_back(x);
      }
    }
    if (i > n) break;
    const auto suffix_len = static_cast<std::uint32_t>(n - sa_[i] + 1);
    const Node leaf = new_node(suffix_len, static_cast<std::uint32_t>(i));
    leaf_of_rank_[i] = leaf;
    stack.push_back(leaf);
  }
  hi_[kRoot] = static_cast<std::uint32_t>(n);

  const std::size_t count = parent_.size();
  std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : lo_[a.second] < lo_[b.second];
  });
  child_begin_.assign(count + 1, 0);
  for (const auto& e : edges) ++child_begin_[e.first + 1];
  for (std::size_t v = 0; v < count; ++v) child_begin_[v + 1] += child_begin_[v];
  child_list_.resize(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) child_list_[k] = edges[k].second;

  // Node depth is parent depth + 1. Parent ids are not always smaller, so walk
  // top-down.
  ndepth_.assign(count, 0);
  std::vector<Node> todo{kRoot};
  while (!todo.empty()) {
    const Node v = todo.back();
    todo.pop_back();
    for (Node c : children(v)) {
      ndepth_[c] = ndepth_[v] + 1;
      todo.push_back(c);
    }
  }
}

SuffixTree::Node SuffixTree::child_by_symbol(Node v, Symbol c) const {
  const auto kids = children(v);
  const std::uint32_t sd = sdepth_[v];
  auto it = std::lower_bound(kids.begin(), kids.end(), c,
                             [&](Node w, Symbol s) { return path_char(w, sd) < s; });
  if (it == kids.end() || path_char(*it, sd) != c) return kNoNode;
  return *it;
}

std::uint64_t SuffixTree::checksum() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    mix(parent_[v]);
    mix(sdepth_[v]);
    mix(lo_[v]);
    mix(hi_[v]);
  }
  for (Node c : child_list_) mix(c);
  return h;
}

}  // namespace posheap::suffix
