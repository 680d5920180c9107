#include "posheap/heap/st2heap.hpp"

#include <cassert>

namespace posheap::heap {

OverlayState::OverlayState(const suffix::SuffixTree& st)
    : st2_(&st), original_(st.node_count()), la_(st), marks_(parent1_) {
  parent1_.resize(original_);
  sdepth1_.resize(original_);
  top_.resize(original_);
  for (Node v = 0; v < original_; ++v) {
    parent1_[v] = v == 0 ? 0 : st.parent(v);
    sdepth1_[v] = st.string_depth(v);
    top_[v] = v;
  }
}

std::size_t OverlayState::child_count1(Node v) const {
  return is_original(v) ? st2_->children(v).size() : 1;
}

OverlayState::Node OverlayState::child_toward_scan(Node u, Node leaf) const {
  const auto rank = leaf_rank(leaf);
  if (!is_original(u)) {
    const Node c = single_child_[u - original_];
    if (!covers(c, rank)) throw UsageError("node is not an ancestor of the leaf");
    return c;
  }
  for (Node c : st2_->children(u)) {
    if (st2_->lo(c) <= rank && rank <= st2_->hi(c)) return top_[c];
  }
  throw UsageError("node is not an ancestor of the leaf");
}

OverlayState::Node OverlayState::child_toward_level_ancestor(Node u, Node leaf) const {
  // Only original nodes are ever asked here: an inserted node has one child,
  // which is always below the scan threshold.
  if (!is_original(u)) throw UsageError("level-ancestor route needs an original node");
  const std::uint32_t du = st2_->node_depth(u);
  if (st2_->node_depth(leaf) <= du) throw UsageError("node is not an ancestor of the leaf");
  const Node c = la_.level_ancestor(leaf, du + 1);
  if (st2_->parent(c) != u) throw UsageError("node is not an ancestor of the leaf");
  assert(parent1_[top_[c]] == u);
  return top_[c];
}

OverlayState::Node OverlayState::child_toward(Node u, Node leaf) {
  if (child_count1(u) <= kScanThreshold) {
    ++scan_lookups;
    return child_toward_scan(u, leaf);
  }
  ++level_ancestor_lookups;
  return child_toward_level_ancestor(u, leaf);
}

OverlayState::Node OverlayState::split_edge(Node u, Node v) {
  if (parent1_[v] != u || v == 0) throw UsageError("split_edge needs an st1 edge");
  if (sdepth1_[v] < sdepth1_[u] + 2) throw UsageError("edge label of length 1 cannot be split");
  const auto x = static_cast<Node>(parent1_.size());
  parent1_.push_back(u);
  sdepth1_.push_back(sdepth1_[u] + 1);
  single_child_.push_back(v);
  bottom_.push_back(bottom(v));
  parent1_[v] = x;
  if (is_original(u)) {
    top_[bottom(v)] = x;
  } else {
    single_child_[u - original_] = x;
  }
  return x;
}

PositionHeap suffix_tree_to_heap(const suffix::SuffixTree& st, const TerminatedText& text, ConversionStats* stats) {
  const std::size_t n = text.size();
  if (st.text_size() != n) throw ValidationError("suffix tree and text differ in length");
  const std::uint64_t before = stats ? st.checksum() : 0;

  OverlayState state(st);
  std::vector<Label> label_of(2 * st.node_count() + 1, 0);
  std::vector<Label> parents(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto li = static_cast<Label>(i);
    const auto w = st.leaf_of_position(i);
    const auto u = state.lowest_marked_ancestor(w);
    OverlayState::Node target;
    if (u == w) {
      target = w;
      parents[i] = label_of[state.lowest_marked_ancestor(state.parent1(w))];
    } else {
      auto v = state.child_toward(u, w);
      if (state.string_depth1(v) != state.string_depth1(u) + 1) {
        v = state.split_edge(u, v);
        if (stats) stats->split_labels.push_back(li);
      }
      target = v;
      parents[i] = label_of[u];
    }
    if (target >= label_of.size()) label_of.resize(2 * target + 1, 0);
    label_of[target] = li;
    state.mark(target);
    if (stats && state.marked_count() != i + 1) stats->marks_monotone = false;
  }

  std::vector<Label> reach(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    reach[i] = label_of[state.lowest_marked_ancestor(st.leaf_of_position(i))];
  }
  if (stats) {
    stats->scan_lookups = state.scan_lookups;
    stats->level_ancestor_lookups = state.level_ancestor_lookups;
    stats->st2_checksum_before = before;
    stats->st2_checksum_after = st.checksum();
  }
  return PositionHeap(text, std::move(parents), std::move(reach));
}

}  // namespace posheap::heap
