#include "posheap/bridge/simulated_heap.hpp"

#include "posheap/bridge/heap_bridge.hpp"

namespace posheap::bridge {

succinct::ParenTree build_augmented_parens(const heap::PositionHeap& h, const TerminatedText& text,
                                           std::span<const std::uint32_t> sa) {
  using succinct::Paren;
  const std::size_t n = text.size();
  // Stars of each node in rank order, bucketed by label.
  std::vector<std::uint32_t> begin(n + 2, 0);
  for (std::size_t r = 1; r <= n; ++r) ++begin[h.max_reach(sa[r]) + 1];
  for (std::size_t v = 0; v <= n; ++v) begin[v + 1] += begin[v];
  std::vector<std::uint32_t> ranks(n);
  {
    std::vector<std::uint32_t> fill(begin.begin(), begin.end() - 1);
    for (std::size_t r = 1; r <= n; ++r) ranks[fill[h.max_reach(sa[r])]++] = static_cast<std::uint32_t>(r);
  }
  // Key of a star inside node v: the next suffix character below v, or -1
  // when the suffix ends exactly at v.
  auto key = [&](std::uint32_t r, heap::Label v) -> std::int64_t {
    const std::size_t at = sa[r] + h.depth(v);
    return at <= n ? static_cast<std::int64_t>(text[at]) : -1;
  };

  std::vector<Paren> out;
  out.reserve(3 * n + 2);
  struct Frame {
    heap::Label v;
    std::uint32_t child, star;
  };
  std::vector<Frame> stack{{0, 0, begin[0]}};
  out.push_back(Paren::kOpen);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto kids = h.children(f.v);
    const bool more_kids = f.child < kids.size();
    const bool more_stars = f.star < begin[f.v + 1];
    if (more_stars && (!more_kids || key(ranks[f.star], f.v) < static_cast<std::int64_t>(h.edge(kids[f.child])))) {
      out.push_back(Paren::kStar);
      ++f.star;
    } else if (more_kids) {
      const heap::Label c = kids[f.child++];
      out.push_back(Paren::kOpen);
      stack.push_back({c, 0, begin[c]});
    } else {
      out.push_back(Paren::kClose);
      stack.pop_back();
    }
  }
  return succinct::ParenTree(out);
}

SimulatedHeap::SimulatedHeap(std::shared_ptr<const SAAccess> sa, succinct::ParenTree tree,
                             succinct::ParenTree augmented, suffix::FirstCharIndex first_chars,
                             succinct::DepthSequence d, succinct::DepthSequence e)
    : sa_(std::move(sa)), tree_(std::move(tree)), aug_(std::move(augmented)), fci_(std::move(first_chars)),
      d_(std::move(d)), e_(std::move(e)) {
  const std::size_t n = sa_->size();
  if (tree_.node_count() != n + 1 || aug_.node_count() != n + 1 || aug_.star_count() != n || d_.size() != n ||
      e_.size() != n || fci_.size() != n) {
    throw ValidationError("simulated heap parts disagree on size");
  }
}

SimulatedHeap SimulatedHeap::build(const heap::PositionHeap& h, const TerminatedText& text,
                                   std::shared_ptr<const SAAccess> sa) {
  const std::size_t n = text.size();
  if (sa->size() != n || h.text_size() != n) throw ValidationError("heap, text and suffix array differ in length");
  std::vector<std::uint32_t> sa_arr(n + 1, 0);
  for (std::size_t r = 1; r <= n; ++r) sa_arr[r] = sa->sa(r);
  auto aug = build_augmented_parens(h, text, sa_arr);
  auto tree = aug.without_stars();
  suffix::FirstCharIndex fci(text, sa_arr);
  succinct::DepthSequence d(depth_by_rank_omp(h, sa_arr));
  succinct::DepthSequence e(depth_by_preorder_omp(h));
  return SimulatedHeap(std::move(sa), std::move(tree), std::move(aug), std::move(fci), std::move(d), std::move(e));
}

heap::Label SimulatedHeap::sim_label(Node t) const {
  if (t == 0) return 0;
  if (t > size()) throw RangeError("preorder rank out of range");
  return sa_->sa(d_.select(e_.access(t), e_.partial_rank(t)));
}

SimulatedHeap::Node SimulatedHeap::sim_node_of_label(heap::Label i) const {
  if (i == 0) return 0;
  if (i > size()) throw RangeError("label out of range");
  const std::size_t p = sa_->isa(i);
  return e_.select(d_.access(p), d_.partial_rank(p));
}

std::uint32_t SimulatedHeap::sim_depth(Node t) const {
  if (t == 0) return 0;
  return e_.access(t);
}

Symbol SimulatedHeap::sim_edge_label(Node t) const {
  if (t == 0 || t > size()) throw RangeError("edge labels exist for preorder ranks 1..n");
  const auto i = sim_label(t);
  const auto d = e_.access(t);
  return fci_.char_at_rank(sa_->isa(i + d - 1));
}

SimulatedHeap::Node SimulatedHeap::sim_maximal_reach(heap::Label i) const {
  if (i < 1 || i > size()) throw RangeError("maximal reach is defined for labels 1..n");
  return aug_.enclosing_node(sa_->isa(i));
}

std::optional<SimulatedHeap::Node> SimulatedHeap::sim_child(Node t, Symbol c) const {
  // Children are t+1, then each next sibling one subtree further on. Edge
  // symbols are increasing, so the scan can stop early.
  const std::size_t end = t + tree_.subtree_size(t);
  for (Node u = t + 1; u < end; u += tree_.subtree_size(u)) {
    const Symbol e = sim_edge_label(u);
    if (e == c) return u;
    if (e > c) break;
  }
  return std::nullopt;
}

SpaceInventory SimulatedHeap::space() const {
  SpaceInventory s;
  s.tree_bits = tree_.size_in_bits();
  s.augmented_bits = aug_.size_in_bits();
  s.first_char_bits = fci_.size_in_bits();
  s.d_bits = d_.size_in_bits();
  s.e_bits = e_.size_in_bits();
  return s;
}

}  // namespace posheap::bridge
