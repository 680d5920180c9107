#pragma once

// Multi-round position-heap search, written once against a small view
// interface so the plain heap, the suffix heap, the simulated heap and the
// dynamic heap share it.
//
// A view provides:
//   using Node, Label;
//   Node root() const;
//   std::optional<Node> child(Node, Symbol) const;
//   std::uint32_t depth(Node) const;
//   Node node_of(Label) const;            Label label_of(Node) const;
//   Node max_reach(Label) const;
//   bool is_ancestor(Node a, Node b) const;          // ancestor-or-self
//   template <class F> void for_each_in_subtree(Node, F&&) const;  // F(Label)
//   std::optional<Label> shift(Label, std::size_t d) const;  // label of position +d
//   std::uint32_t report(Label) const;                // text position

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "posheap/text.hpp"

namespace posheap::heap {

struct SearchRound {
  std::uint32_t depth = 0;
  std::uint64_t node_label = 0;
  std::size_t candidates = 0;  // list size after this round
};

struct SearchTrace {
  std::vector<SearchRound> rounds;
  std::size_t candidates_total = 0;
};

template <class View>
std::vector<std::uint32_t> heap_search(const View& view, std::span<const Symbol> pattern,
                                       SearchTrace* trace = nullptr) {
  using Node = typename View::Node;
  using Label = typename View::Label;
  if (pattern.empty()) throw UsageError("search pattern must be non-empty");
  const std::size_t m = pattern.size();

  std::vector<Node> path;
  auto descend = [&](std::size_t from) {
    path.clear();
    Node v = view.root();
    for (std::size_t k = from; k < m; ++k) {
      const auto c = view.child(v, pattern[k]);
      if (!c) break;
      v = *c;
      path.push_back(v);
    }
    return v;
  };
  auto note = [&](std::uint32_t d, Node v, std::size_t cands) {
    if (!trace) return;
    trace->rounds.push_back({d, static_cast<std::uint64_t>(view.label_of(v)), cands});
    trace->candidates_total += cands;
  };

  std::vector<std::uint32_t> out;
  Node v = descend(0);
  auto d = static_cast<std::uint32_t>(path.size());
  if (d == 0) {
    note(0, v, 0);
    return out;
  }
  if (d == m) {
    view.for_each_in_subtree(v, [&](Label l) { out.push_back(view.report(l)); });
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const Label l = view.label_of(path[k]);
      if (view.is_ancestor(v, view.max_reach(l))) out.push_back(view.report(l));
    }
    note(d, v, out.size());
    std::sort(out.begin(), out.end());
    return out;
  }

  // (origin, current) pairs: current is the label at origin + matched.
  std::vector<std::pair<Label, Label>> cands;
  for (Node w : path) {
    const Label l = view.label_of(w);
    if (view.max_reach(l) == v) cands.emplace_back(l, l);
  }
  note(d, v, cands.size());
  std::size_t matched = d;
  std::uint32_t last = d;

  while (!cands.empty()) {
    const Node vp = descend(matched);
    const auto dp = static_cast<std::uint32_t>(path.size());
    if (dp == 0) {
      cands.clear();
      note(0, vp, 0);
      break;
    }
    const bool full = matched + dp == m;
    std::size_t keep = 0;
    for (auto [origin, cur] : cands) {
      const auto next = view.shift(cur, last);
      if (!next) continue;
      const Node w = view.node_of(*next);
      bool ok;
      if (full) {
        ok = view.is_ancestor(vp, w) || (view.is_ancestor(w, vp) && view.is_ancestor(vp, view.max_reach(*next)));
      } else {
        ok = view.is_ancestor(w, vp) && view.max_reach(*next) == vp;
      }
      if (ok) cands[keep++] = {origin, *next};
    }
    cands.resize(keep);
    note(dp, vp, keep);
    if (full) break;
    matched += dp;
    last = dp;
  }
  out.reserve(cands.size());
  for (auto [origin, cur] : cands) out.push_back(view.report(origin));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace posheap::heap
