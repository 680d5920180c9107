#include "posheap/sheap/suffix_heap.hpp"

#include <algorithm>
#include <string>

namespace posheap::sheap {

namespace {

struct Frame {
  suffix::SuffixTree::Node v;
  std::uint32_t k;  // trie depth of the point, sd(parent(v)) < k <= sd(v)
  std::uint32_t c;
  Label parent;
};

}  // namespace

SuffixHeapShape build_shape(const suffix::SuffixTree& st) {
  SuffixHeapShape out;
  const std::size_t n = st.text_size();
  out.parent.reserve(n + 1);
  out.depth.reserve(n + 1);
  out.lo.reserve(n + 1);
  out.hi.reserve(n + 1);
  out.parent.push_back(0);
  out.depth.push_back(0);
  out.lo.push_back(1);
  out.hi.push_back(static_cast<std::uint32_t>(n));

  std::vector<Frame> stack;
  const auto root_kids = st.children(suffix::SuffixTree::kRoot);
  for (auto it = root_kids.rbegin(); it != root_kids.rend(); ++it) stack.push_back({*it, 1, 1, 0});

  std::vector<Frame> calls;
  while (!stack.empty()) {
    out.peak_stack = std::max(out.peak_stack, stack.size());
    const Frame f = stack.back();
    stack.pop_back();
    const auto x = static_cast<Label>(out.parent.size());
    out.parent.push_back(f.parent);
    out.depth.push_back(f.k);
    out.lo.push_back(st.lo(f.v));
    out.hi.push_back(st.hi(f.v));
    const std::uint32_t leaves = st.leaf_count(f.v);
    if (f.c == leaves) continue;

    calls.clear();
    if (f.k < st.string_depth(f.v)) {
      // Mid-edge: one child, same leaves, so leaves > c always holds.
      calls.push_back({f.v, f.k + 1, f.c + 1, x});
    } else {
      std::uint32_t c = f.c;
      const auto kids = st.children(f.v);
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const std::uint32_t k1 = st.string_depth(f.v) + 1;
        if (st.leaf_count(kids[i]) > c) {
          calls.push_back({kids[i], k1, c + 1, x});
          for (std::size_t j = i + 1; j < kids.size(); ++j) calls.push_back({kids[j], k1, 1, x});
          break;
        }
        c -= st.leaf_count(kids[i]);
      }
    }
    for (auto it = calls.rbegin(); it != calls.rend(); ++it) stack.push_back(*it);
  }
  if (out.parent.size() != n + 1) {
    throw ValidationError("suffix heap build produced " + std::to_string(out.parent.size()) + " nodes, want " +
                          std::to_string(n + 1));
  }
  out.max_reach = shape_maximal_reach(out);
  return out;
}

std::vector<Label> shape_maximal_reach(const SuffixHeapShape& shape) {
  const std::size_t N = shape.parent.size();
  std::vector<Label> reach(N, 0);
  // next[x] = first rank of x's interval not yet handed to a child or x.
  std::vector<std::uint32_t> next(N);
  for (std::size_t x = 0; x < N; ++x) next[x] = shape.lo[x];
  auto fill_to = [&](Label x, std::uint32_t end) {  // ranks [next[x], end) belong to x
    for (std::uint32_t r = next[x]; r < end; ++r) reach[r] = x;
  };
  // Children appear in preorder after their parent, with increasing lo.
  for (std::size_t y = 1; y < N; ++y) {
    const Label p = shape.parent[y];
    fill_to(p, shape.lo[y]);
    next[p] = shape.hi[y] + 1;
  }
  for (std::size_t x = 0; x < N; ++x) fill_to(static_cast<Label>(x), shape.hi[x] + 1);
  reach[0] = 0;
  return reach;
}

succinct::ParenTree sheap_augmented_parens(const SuffixHeapShape& shape) {
  using succinct::Paren;
  const std::size_t N = shape.parent.size();
  std::vector<Paren> out;
  out.reserve(3 * N);
  std::vector<Label> open;
  std::size_t star = 1;
  for (std::size_t t = 0; t < N; ++t) {
    if (t > 0) {
      while (open.back() != shape.parent[t]) {
        out.push_back(Paren::kClose);
        open.pop_back();
      }
    }
    out.push_back(Paren::kOpen);
    open.push_back(static_cast<Label>(t));
    while (star < N && shape.max_reach[star] == t) {
      out.push_back(Paren::kStar);
      ++star;
    }
  }
  out.insert(out.end(), open.size(), Paren::kClose);
  if (star != N) throw ValidationError("maximal reach is not monotone");
  return succinct::ParenTree(out);
}

SuffixHeap::SuffixHeap(std::shared_ptr<const bridge::SAAccess> sa, succinct::ParenTree augmented,
                       suffix::FirstCharIndex first_chars)
    : sa_(std::move(sa)), aug_(std::move(augmented)), fci_(std::move(first_chars)) {
  if (!sa_) throw ValidationError("suffix heap needs SA access");
  const std::size_t n = fci_.size();
  if (sa_->size() != n || aug_.node_count() != n + 1 || aug_.star_count() != n) {
    throw ValidationError("suffix heap parts disagree on n");
  }
}

std::optional<Label> SuffixHeap::parent(Label j) const {
  const auto p = aug_.parent(check(j));
  if (!p) return std::nullopt;
  return static_cast<Label>(*p);
}

Symbol SuffixHeap::edge_label(Label j) const {
  if (j == 0) throw RangeError("the root has no edge");
  check(j);
  return fci_.char_at_rank(sa_->isa(sa_->sa(j) + depth(j) - 1));
}

Label SuffixHeap::maximal_reach(Label i) const {
  if (i == 0 || i > size()) throw RangeError("maximal reach of label " + std::to_string(i));
  return static_cast<Label>(aug_.star_to_open_rank(i));
}

std::optional<Label> SuffixHeap::child(Label j, Symbol c) const {
  const std::size_t end = j + subtree_size(j);
  for (std::size_t u = j + 1; u < end; u += aug_.subtree_size(u)) {
    const Symbol e = edge_label(static_cast<Label>(u));
    if (e == c) return static_cast<Label>(u);
    if (e > c) break;
  }
  return std::nullopt;
}

heap::VerifyReport SuffixHeap::verify(const TerminatedText& text) const {
  const std::size_t n = size();
  if (text.size() != n) return heap::VerifyReport::fail("node-count", "text length differs");
  if (node_count() != n + 1) return heap::VerifyReport::fail("node-count", std::to_string(node_count()));
  auto prefix_of_suffix = [&](Label a, std::size_t len, std::uint32_t pos) {
    // Path label of a (= S[sa(a)..], length len) against S[pos..].
    const std::size_t s = sa_->sa(a);
    if (pos + len - 1 > n) return false;
    for (std::size_t q = 0; q < len; ++q) {
      if (text[s + q] != text[pos + q]) return false;
    }
    return true;
  };
  for (Label j = 1; j <= n; ++j) {
    const std::size_t d = depth(j);
    const std::uint32_t s = sa_->sa(j);
    if (d == 0 || s + d - 1 > n) return heap::VerifyReport::fail("depth-bound", std::to_string(j));
    const Label p = *parent(j);
    if (p >= j) return heap::VerifyReport::fail("preorder-label", std::to_string(j));
    if (p != 0 && !prefix_of_suffix(p, d - 1, s)) return heap::VerifyReport::fail("path-label", std::to_string(j));
  }
  for (Label j = 0; j <= n; ++j) {
    std::optional<Symbol> prev;
    const std::size_t end = j + subtree_size(j);
    for (std::size_t u = j + 1; u < end; u += aug_.subtree_size(u)) {
      const Symbol e = edge_label(static_cast<Label>(u));
      if (prev && !(*prev < e)) return heap::VerifyReport::fail("sibling-order", std::to_string(j));
      prev = e;
    }
  }
  Label last = 0;
  for (Label i = 1; i <= n; ++i) {
    const Label m = maximal_reach(i);
    const std::uint32_t s = sa_->sa(i);
    if (m < last) return heap::VerifyReport::fail("maximal-reach", "not monotone at " + std::to_string(i));
    last = m;
    const std::size_t d = depth(m);
    if (m != 0 && !prefix_of_suffix(m, d, s)) return heap::VerifyReport::fail("maximal-reach", std::to_string(i));
    if (s + d <= n && child(m, text[s + d])) {
      return heap::VerifyReport::fail("maximal-reach", "not deepest at " + std::to_string(i));
    }
  }
  return heap::VerifyReport::pass();
}

SuffixHeap build_suffix_heap(const suffix::SuffixTree& st, const suffix::SuffixArrayBundle& bundle,
                             const TerminatedText& text, std::shared_ptr<const bridge::SAAccess> sa) {
  if (st.text_size() != text.size() || bundle.sa.size() != text.size() + 1) {
    throw ValidationError("suffix heap inputs disagree on n");
  }
  if (!sa) sa = std::make_shared<bridge::PlainSAAccess>(bundle);
  const auto shape = build_shape(st);
  return SuffixHeap(std::move(sa), sheap_augmented_parens(shape), suffix::FirstCharIndex(text, bundle.sa));
}

}  // namespace posheap::sheap
