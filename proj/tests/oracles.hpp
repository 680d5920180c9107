#pragma once

// Brute-force references used by the tests. Everything here is deliberately
// naive: quadratic scans, sorting all suffixes, map-based tries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "posheap/text.hpp"

namespace oracle {

using posheap::Symbol;
using posheap::TerminatedText;

inline TerminatedText random_text(std::mt19937_64& rng, std::size_t len, unsigned sigma) {
  std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
  std::string s(len, 'a');
  for (auto& c : s) c = static_cast<char>('a' + pick(rng));
  return TerminatedText::from_bytes(s);
}

inline std::vector<Symbol> random_pattern(std::mt19937_64& rng, std::size_t len, unsigned sigma) {
  std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
  std::vector<Symbol> p(len);
  for (auto& c : p) c = 'a' + pick(rng);
  return p;
}

/// Pattern copied from the text at a random start, so most queries hit.
inline std::vector<Symbol> sampled_pattern(std::mt19937_64& rng, const TerminatedText& t, std::size_t len) {
  const std::size_t n = t.size();
  len = std::min(len, n);
  std::uniform_int_distribution<std::size_t> pick(1, n - len + 1);
  const std::size_t s = pick(rng);
  std::vector<Symbol> p(len);
  for (std::size_t k = 0; k < len; ++k) p[k] = t[s + k];
  return p;
}

inline std::vector<std::uint32_t> occurrences(const TerminatedText& t, const std::vector<Symbol>& p) {
  std::vector<std::uint32_t> out;
  const std::size_t n = t.size(), m = p.size();
  for (std::size_t i = 1; i + m <= n + 1; ++i) {
    std::size_t k = 0;
    while (k < m && t[i + k] == p[k]) ++k;
    if (k == m) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

inline bool suffix_less(const TerminatedText& t, std::size_t a, std::size_t b) {
  const auto s = t.symbols();
  return std::lexicographical_compare(s.begin() + (a - 1), s.end(), s.begin() + (b - 1), s.end());
}

/// 1-based SA with sa[0] = 0.
inline std::vector<std::uint32_t> suffix_array(const TerminatedText& t) {
  std::vector<std::uint32_t> sa(t.size() + 1, 0);
  for (std::size_t i = 1; i <= t.size(); ++i) sa[i] = static_cast<std::uint32_t>(i);
  std::sort(sa.begin() + 1, sa.end(), [&](auto a, auto b) { return suffix_less(t, a, b); });
  return sa;
}

inline std::uint32_t lcp_of(const TerminatedText& t, std::size_t a, std::size_t b) {
  std::uint32_t h = 0;
  while (a + h <= t.size() && b + h <= t.size() && t[a + h] == t[b + h]) ++h;
  return h;
}

/// Position heap as a map-based trie, built by inserting 1..n in order.
struct TrieHeap {
  struct Node {
    std::uint32_t label = 0;
    std::uint32_t depth = 0;
    Node* parent = nullptr;
    std::map<Symbol, std::unique_ptr<Node>> kids;
  };

  std::unique_ptr<Node> root = std::make_unique<Node>();
  std::vector<Node*> by_label;
  std::vector<std::uint32_t> max_reach;  // by label, [0] unused

  explicit TrieHeap(const TerminatedText& t) : TrieHeap(t, {}) {}

  // Label k is the suffix starting at order[k]; empty order = positions.
  // order = SA gives the suffix heap.
  TrieHeap(const TerminatedText& t, std::vector<std::uint32_t> order) {
    const std::size_t n = t.size();
    if (order.empty()) {
      order.resize(n + 1);
      for (std::size_t k = 0; k <= n; ++k) order[k] = static_cast<std::uint32_t>(k);
    }
    by_label.assign(n + 1, nullptr);
    by_label[0] = root.get();
    for (std::size_t lab = 1; lab <= n; ++lab) {
      const std::size_t i = order[lab];
      Node* v = root.get();
      std::size_t k = 0;
      while (true) {
        auto it = v->kids.find(t[i + k]);
        if (it == v->kids.end()) break;
        v = it->second.get();
        ++k;
      }
      auto fresh = std::make_unique<Node>();
      fresh->label = static_cast<std::uint32_t>(lab);
      fresh->depth = v->depth + 1;
      fresh->parent = v;
      by_label[lab] = fresh.get();
      v->kids.emplace(t[i + k], std::move(fresh));
    }
    max_reach.assign(n + 1, 0);
    for (std::size_t lab = 1; lab <= n; ++lab) {
      const std::size_t i = order[lab];
      Node* v = root.get();
      std::size_t k = 0;
      while (i + k <= n) {
        auto it = v->kids.find(t[i + k]);
        if (it == v->kids.end()) break;
        v = it->second.get();
        ++k;
      }
      max_reach[lab] = v->label;
    }
  }

  std::vector<std::uint32_t> preorder_labels() const {
    std::vector<std::uint32_t> out;
    walk(root.get(), [&](const Node* v) { out.push_back(v->label); });
    return out;
  }

  std::uint32_t parent_label(std::uint32_t i) const { return by_label[i]->parent->label; }

  template <class F>
  static void walk(const Node* v, F&& f) {
    f(v);
    for (const auto& [c, kid] : v->kids) walk(kid.get(), f);
  }
};

/// Tightest enclosing open (as preorder rank) of the k-th star, by a stack scan.
inline std::size_t enclosing_by_stack(const std::string& parens, std::size_t star_index) {
  std::vector<std::size_t> stack;
  std::size_t opens = 0, stars = 0;
  for (char c : parens) {
    if (c == '(') {
      stack.push_back(opens++);
    } else if (c == ')') {
      stack.pop_back();
    } else if (c == '*' && ++stars == star_index) {
      return stack.back();
    }
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace oracle
