#include "posheap/heap/position_heap.hpp"

#include <algorithm>
#include <unordered_map>

namespace posheap::heap {

PositionHeap::PositionHeap(const TerminatedText& text, std::vector<Label> parents, std::vector<Label> max_reach)
    : parent_(std::move(parents)) {
  const std::size_t n = text.size();
  if (parent_.size() != n + 1) throw ValidationError("heap needs one parent entry per label");
  parent_[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (parent_[i] > n) throw ValidationError("heap parent out of range");
  }

  child_begin_.assign(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) ++child_begin_[parent_[i] + 1];
  for (std::size_t i = 0; i <= n; ++i) child_begin_[i + 1] += child_begin_[i];
  child_list_.resize(n);
  {
    std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (std::size_t i = 1; i <= n; ++i) child_list_[fill[parent_[i]]++] = static_cast<Label>(i);
  }

  // Depth and edge symbols top-down; anything unreachable means a cycle.
  depth_.assign(n + 1, 0);
  edge_.assign(n + 1, kTerminator);
  std::vector<Label> order{0};
  order.reserve(n + 1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Label v = order[k];
    for (std::uint32_t c = child_begin_[v]; c < child_begin_[v + 1]; ++c) {
      const Label w = child_list_[c];
      depth_[w] = depth_[v] + 1;
      if (w + depth_[w] - 1 > n) throw ValidationError("heap node deeper than its suffix");
      edge_[w] = text[w + depth_[w] - 1];
      order.push_back(w);
    }
  }
  if (order.size() != n + 1) throw ValidationError("heap parents do not form a tree");
  for (std::size_t v = 0; v <= n; ++v) {
    auto* b = child_list_.data() + child_begin_[v];
    auto* e = child_list_.data() + child_begin_[v + 1];
    std::sort(b, e, [&](Label x, Label y) { return edge_[x] < edge_[y]; });
    for (auto* p = b; p + 1 < e; ++p) {
      if (edge_[p[0]] == edge_[p[1]]) throw ValidationError("siblings share an edge symbol");
    }
  }
  index();
  set_max_reach(std::move(max_reach));
}

void PositionHeap::set_max_reach(std::vector<Label> max_reach) {
  if (max_reach.empty()) max_reach.assign(parent_.size(), 0);
  if (max_reach.size() != parent_.size()) throw ValidationError("maximal reach needs one entry per label");
  for (auto r : max_reach) {
    if (r >= parent_.size()) throw ValidationError("maximal reach out of range");
  }
  max_reach_ = std::move(max_reach);
  max_reach_[0] = 0;
}

void PositionHeap::index() {
  const std::size_t count = parent_.size();
  pre_.assign(count, 0);
  size_.assign(count, 1);
  preorder_.clear();
  preorder_.reserve(count);
  height_ = 0;
  std::vector<Label> stack{0};
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    pre_[v] = static_cast<std::uint32_t>(preorder_.size());
    preorder_.push_back(v);
    height_ = std::max(height_, depth_[v]);
    for (std::uint32_t c = child_begin_[v + 1]; c-- > child_begin_[v];) stack.push_back(child_list_[c]);
  }
  for (std::size_t k = count; k-- > 1;) size_[parent_[preorder_[k]]] += size_[preorder_[k]];
}

std::optional<Label> PositionHeap::child(Label i, Symbol c) const {
  const auto kids = children(i);
  auto it = std::lower_bound(kids.begin(), kids.end(), c, [&](Label w, Symbol s) { return edge_[w] < s; });
  if (it == kids.end() || edge_[*it] != c) return std::nullopt;
  return *it;
}

Label PositionHeap::max_reach(Label i) const {
  if (i == 0 || i >= parent_.size()) throw RangeError("maximal reach is defined for labels 1..n");
  return max_reach_[i];
}

Label PositionHeap::label_at(std::size_t rank) const {
  if (rank >= preorder_.size()) throw RangeError("preorder rank out of range");
  return preorder_[rank];
}

succinct::ParenTree PositionHeap::to_parens() const {
  if (parent_.empty()) return {};
  std::vector<std::uint32_t> pre_parents(preorder_.size(), 0);
  for (std::size_t k = 1; k < preorder_.size(); ++k) pre_parents[k] = pre_[parent_[preorder_[k]]];
  return succinct::ParenTree::from_preorder_parents(pre_parents);
}

PositionHeap PositionHeap::from_parts(const TerminatedText& text, const succinct::ParenTree& tree,
                                      std::span<const Label> preorder_labels, std::vector<Label> max_reach) {
  const std::size_t n = text.size();
  if (tree.node_count() != n + 1 || preorder_labels.size() != n + 1) {
    throw ValidationError("heap parts disagree on node count");
  }
  std::vector<bool> seen(n + 1, false);
  for (auto l : preorder_labels) {
    if (l > n || seen[l]) throw ValidationError("heap labels are not a permutation");
    seen[l] = true;
  }
  if (preorder_labels[0] != 0) throw ValidationError("root must be labelled 0");
  const auto pre_parents = tree.to_preorder_parents();
  std::vector<Label> parents(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) parents[preorder_labels[k]] = preorder_labels[pre_parents[k]];
  PositionHeap h(text, std::move(parents), std::move(max_reach));
  if (!std::equal(h.preorder_.begin(), h.preorder_.end(), preorder_labels.begin())) {
    throw ValidationError("stored preorder disagrees with sibling order");
  }
  return h;
}

VerifyReport PositionHeap::verify(const TerminatedText& text) const {
  const std::size_t n = text.size();
  if (parent_.size() != n + 1) return VerifyReport::fail("node-count", "expected n+1 nodes");
  if (preorder_.empty() || preorder_[0] != 0) return VerifyReport::fail("root-label", "root must carry label 0");
  for (Label i = 1; i <= n; ++i) {
    if (parent_[i] >= i) {
      return VerifyReport::fail("parent-order", "label " + std::to_string(i) + " has parent " + std::to_string(parent_[i]));
    }
    if (depth_[i] != depth_[parent_[i]] + 1) return VerifyReport::fail("depth", "label " + std::to_string(i));
    if (i + depth_[i] - 1 > n) return VerifyReport::fail("depth-bound", "label " + std::to_string(i));
  }
  // Path label prefix property: walking up from i, the node at depth k has
  // edge S[i + k - 1].
  for (Label i = 1; i <= n; ++i) {
    for (Label w = i; w != 0; w = parent_[w]) {
      if (edge_[w] != text[i + depth_[w] - 1]) {
        return VerifyReport::fail("path-label", "label " + std::to_string(i) + " is not a prefix of its suffix");
      }
    }
  }
  for (Label v = 0; v <= n; ++v) {
    const auto kids = children(v);
    for (std::size_t k = 1; k < kids.size(); ++k) {
      if (!(edge_[kids[k - 1]] < edge_[kids[k]])) {
        return VerifyReport::fail("sibling-order", "children of " + std::to_string(v) + " out of order");
      }
    }
    for (auto w : kids) {
      if (parent_[w] != v) return VerifyReport::fail("child-list", "label " + std::to_string(w));
    }
  }
  for (std::size_t k = 0; k < preorder_.size(); ++k) {
    if (pre_[preorder_[k]] != k) return VerifyReport::fail("preorder-index", "rank " + std::to_string(k));
  }
  for (Label i = 1; i <= n; ++i) {
    const Label r = max_reach_[i];
    const std::uint32_t d = depth_[r];
    if (i + d - 1 > n) return VerifyReport::fail("maximal-reach", "label " + std::to_string(i) + " overshoots");
    for (Label w = r; w != 0; w = parent_[w]) {
      if (edge_[w] != text[i + depth_[w] - 1]) {
        return VerifyReport::fail("maximal-reach", "label " + std::to_string(i) + " target is not a prefix");
      }
    }
    if (i + d <= n && child(r, text[i + d])) {
      return VerifyReport::fail("maximal-reach", "label " + std::to_string(i) + " target is not the deepest");
    }
  }
  return VerifyReport::pass();
}

PositionHeap build_naive(const TerminatedText& text) {
  const std::size_t n = text.size();
  std::vector<Label> parents(n + 1, 0);
  std::unordered_map<std::uint64_t, Label> kids;
  kids.reserve(2 * n);
  auto key = [](Label v, Symbol c) { return (std::uint64_t{v} << 32) | c; };
  for (std::size_t i = 1; i <= n; ++i) {
    Label v = 0;
    std::size_t k = 0;
    // The terminator is unique, so the walk stops before running off the end.
    while (true) {
      auto it = kids.find(key(v, text[i + k]));
      if (it == kids.end()) break;
      v = it->second;
      ++k;
    }
    parents[i] = v;
    kids.emplace(key(v, text[i + k]), static_cast<Label>(i));
  }
  PositionHeap heap(text, std::move(parents), {});
  heap.set_max_reach(compute_maximal_reach(heap, text));
  return heap;
}

std::vector<Label> compute_maximal_reach(const PositionHeap& heap, const TerminatedText& text) {
  const std::size_t n = text.size();
  std::vector<Label> reach(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    Label v = 0;
    std::size_t k = 0;
    while (i + k <= n) {
      const auto c = heap.child(v, text[i + k]);
      if (!c) break;
      v = *c;
      ++k;
    }
    reach[i] = v;
  }
  return reach;
}

}  // namespace posheap::heap
