#include "posheap/suffix/ancestors.hpp"

#include <algorithm>
#include <utility>

namespace posheap::suffix {

MarkedAncestorService::MarkedAncestorService(const std::vector<std::uint32_t>& parents)
    : parents_(&parents) {
  mark(0);
}

void MarkedAncestorService::mark(std::uint32_t v) {
  if (v >= marks_.size()) marks_.resize(std::max<std::size_t>(v + 1, 2 * marks_.size()), false);
  if (!marks_[v]) {
    marks_[v] = true;
    ++marked_;
  }
}

std::uint32_t MarkedAncestorService::lowest_marked_ancestor(std::uint32_t v) const {
  if (v >= parents_->size()) throw RangeError("marked ancestor query on unknown node");
  while (!is_marked(v)) v = (*parents_)[v];
  return v;
}

LevelAncestorService::LevelAncestorService(const SuffixTree& tree) {
  std::vector<std::vector<std::uint32_t>> children(tree.node_count());
  for (std::uint32_t v = 0; v < tree.node_count(); ++v) {
    const auto kids = tree.children(v);
    children[v].assign(kids.begin(), kids.end());
  }
  index(children);
}

LevelAncestorService::LevelAncestorService(const std::vector<std::uint32_t>& parents) {
  std::vector<std::vector<std::uint32_t>> children(parents.size());
  for (std::uint32_t v = 1; v < parents.size(); ++v) children[parents[v]].push_back(v);
  index(children);
}

void LevelAncestorService::index(const std::vector<std::vector<std::uint32_t>>& children) {
  const std::size_t count = children.size();
  depth_.assign(count, 0);
  pre_.assign(count, 0);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    pre_[v] = next++;
    if (depth_[v] >= level_pre_.size()) {
      level_pre_.resize(depth_[v] + 1);
      level_node_.resize(depth_[v] + 1);
    }
    // Preorder is generated in increasing order, so each list stays sorted.
    level_pre_[depth_[v]].push_back(pre_[v]);
    level_node_[depth_[v]].push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) {
      depth_[*it] = depth_[v] + 1;
      stack.push_back(*it);
    }
  }
}

std::uint32_t LevelAncestorService::level_ancestor(std::uint32_t v, std::uint32_t d) const {
  if (v >= depth_.size()) throw RangeError("level ancestor query on unknown node");
  if (d > depth_[v]) throw RangeError("level ancestor depth exceeds node depth");
  const auto& pres = level_pre_[d];
  const auto it = std::upper_bound(pres.begin(), pres.end(), pre_[v]);
  return level_node_[d][static_cast<std::size_t>(it - pres.begin()) - 1];
}

FirstCharIndex::FirstCharIndex(const TerminatedText& text, std::span<const std::uint32_t> sa) {
  const std::size_t n = text.size();
  std::vector<bool> bits(n, false);
  for (std::size_t p = 1; p <= n; ++p) {
    const Symbol c = text[sa[p]];
    if (p == 1 || c != chars_.back()) {
      bits[p - 1] = true;
      chars_.push_back(c);
    }
  }
  starts_ = succinct::Bitvector(bits);
}

FirstCharIndex::FirstCharIndex(succinct::Bitvector starts, std::vector<Symbol> chars)
    : starts_(std::move(starts)), chars_(std::move(chars)) {
  if (starts_.count(true) != chars_.size() || (starts_.size() > 0 && !starts_[1])) {
    throw CorruptionError("first-character index is inconsistent");
  }
}

Symbol FirstCharIndex::char_at_rank(std::size_t p) const {
  if (p < 1 || p > starts_.size()) throw RangeError("rank out of range");
  return chars_[starts_.rank(p, true) - 1];
}

}  // namespace posheap::suffix
