#include "posheap/dynamic/limited_index.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace posheap::dynamic {

namespace {

constexpr std::uint32_t kNoNode = 0xffffffffu;

std::string render(std::span<const Symbol> w, std::size_t& next_number) {
  std::string out;
  for (Symbol c : w) {
    if (is_divider(c)) {
      out += '#' + std::to_string(next_number++);
    } else if (c == kTerminator) {
      out += '$';
    } else {
      out += c <= 0xff ? static_cast<char>(c) : '?';
    }
  }
  return out;
}

// Near-equal cut of `seg` into k parts.
std::vector<std::vector<Symbol>> cut(const std::vector<Symbol>& seg, std::size_t k) {
  std::vector<std::vector<Symbol>> out;
  const std::size_t base = seg.size() / k, extra = seg.size() % k;
  std::size_t at = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t len = base + (i < extra ? 1 : 0);
    out.emplace_back(seg.begin() + static_cast<long>(at), seg.begin() + static_cast<long>(at + len));
    at += len;
  }
  return out;
}

}  // namespace

Symbol LimitedIndex::new_divider() {
  if (next_div_ == 0xffffffffu) throw std::overflow_error("out of divider symbols");
  return next_div_++;
}

LimitedIndex LimitedIndex::new_limited(const TerminatedText& s, std::size_t M) {
  if (M < 1) throw UsageError("max pattern length must be at least 1");
  LimitedIndex x;
  x.M_ = M;
  const Symbol bang = x.new_divider();
  const std::size_t n = s.size(), B = 2 * M;
  const std::size_t blocks = (n + B - 1) / B;
  x.k_ = blocks - 1;

  std::vector<Symbol> w;
  w.reserve(n + 4 * n / B + 4 * M + 2);
  for (std::size_t i = 1; i <= n; ++i) {
    w.push_back(s[i]);
    if (i % B == 0 && i < n) w.push_back(x.new_divider());
  }
  w.push_back(bang);
  for (std::size_t j = 1; j <= x.k_; ++j) {
    const std::size_t t = j * B;  // S characters before divider j
    for (std::size_t i = t - M + 1; i <= std::min(n, t + M); ++i) {
      w.push_back(s[i]);
      ++x.window_chars_;
    }
    w.push_back(x.new_divider());
  }
  x.w_ = DynamicText(w);
  x.bang_ = x.w_.select_divider(x.k_ + 1);
  x.rebuild_heap();
  return x;
}

LimitedIndex LimitedIndex::from_working_string(std::span<const Symbol> w, std::size_t M, Symbol next_divider) {
  if (M < 1) throw UsageError("max pattern length must be at least 1");
  LimitedIndex x;
  x.M_ = M;
  std::size_t dividers = 0;
  for (Symbol c : w) {
    if (is_divider(c)) {
      ++dividers;
      if (c >= next_divider) throw CorruptionError("divider code past the counter");
    }
  }
  if (dividers % 2 == 0) throw CorruptionError("working string needs 2k+1 dividers");
  x.k_ = (dividers - 1) / 2;
  x.window_chars_ = 0;
  x.next_div_ = next_divider;
  x.w_ = DynamicText(w);
  x.bang_ = x.w_.select_divider(x.k_ + 1);
  x.window_chars_ = x.w_.size() - x.w_.rank(x.bang_) - x.k_;
  const auto layout = x.check_layout();
  if (!layout.ok) throw CorruptionError("bad layout: " + layout.invariant + " " + layout.detail);
  x.rebuild_heap();
  return x;
}

std::size_t LimitedIndex::height() const noexcept {
  for (std::size_t d = depth_count_.size(); d-- > 1;) {
    if (depth_count_[d] > 0) return d;
  }
  return 0;
}

std::size_t LimitedIndex::w_rank_of_s(std::size_t s) const { return w_.rank(w_.select_plain(s)); }

std::size_t LimitedIndex::block_length(std::size_t b) const {
  const std::size_t start = b == 1 ? 1 : divider_rank(b - 1) + 1;
  const std::size_t end = b <= k_ ? divider_rank(b) - 1 : bang_rank() - 1;
  return end + 1 - start;
}

std::vector<Symbol> LimitedIndex::window_for(std::size_t j) const {
  const std::size_t r = divider_rank(j);
  const std::size_t a = std::min(M_, block_length(j)), b = std::min(M_, block_length(j + 1));
  auto out = w_.slice(r - a, a);
  const auto right = w_.slice(r + 1, b);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::optional<std::uint32_t> LimitedIndex::heap_child(std::uint32_t v, Symbol c) const {
  const auto& kids = nodes_[v].kids;
  const auto it = std::lower_bound(kids.begin(), kids.end(), c,
                                   [](const std::pair<Symbol, std::uint32_t>& e, Symbol s) { return e.first < s; });
  if (it == kids.end() || it->first != c) return std::nullopt;
  return it->second;
}

std::uint32_t LimitedIndex::heap_max_reach(Handle h) const {
  std::uint32_t v = 0;
  for (Handle x = h; x != DynamicText::kNone; x = w_.next(x)) {
    const auto c = heap_child(v, w_.symbol(x));
    if (!c) break;
    v = *c;
  }
  return v;
}

std::uint32_t LimitedIndex::s_position(Handle h) const {
  if (is_divider(w_.symbol(h))) return 0;
  const std::size_t r = w_.rank(h);
  const std::size_t dv = w_.dividers_through(r);
  if (r < bang_rank()) return static_cast<std::uint32_t>(r - dv);
  const std::size_t j = dv - k_;  // window index
  const std::size_t offset = r - divider_rank(k_ + j);
  const std::size_t t = divider_rank(j) - j;
  const std::size_t a = std::min(M_, block_length(j));
  return static_cast<std::uint32_t>(t - a + offset);
}

std::uint32_t LimitedIndex::new_node() {
  if (!free_nodes_.empty()) {
    const auto u = free_nodes_.back();
    free_nodes_.pop_back();
    nodes_[u] = HeapNode{};
    return u;
  }
  nodes_.emplace_back();
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void LimitedIndex::heap_insert(Handle h) {
  std::uint32_t v = 0;
  Handle x = h;
  while (true) {
    if (x == DynamicText::kNone) throw std::logic_error("heap insert ran off the working string");
    const Symbol c = w_.symbol(x);
    const auto kid = heap_child(v, c);
    if (!kid) {
      const auto u = new_node();
      auto& node = nodes_[u];
      node.label = h;
      node.parent = v;
      node.depth = nodes_[v].depth + 1;
      node.edge = c;
      auto& kids = nodes_[v].kids;
      const auto it = std::lower_bound(kids.begin(), kids.end(), c,
                                       [](const std::pair<Symbol, std::uint32_t>& e, Symbol s) { return e.first < s; });
      kids.insert(it, {c, u});
      if (node_of_.size() <= h) node_of_.resize(w_.handle_capacity(), kNoNode);
      node_of_[h] = u;
      if (depth_count_.size() <= node.depth) depth_count_.resize(node.depth + 1, 0);
      ++depth_count_[node.depth];
      return;
    }
    v = *kid;
    x = w_.next(x);
  }
}

void LimitedIndex::heap_erase(Handle h) {
  std::uint32_t x = node_of_[h];
  node_of_[h] = kNoNode;
  // Pull a child's label up until a leaf is emptied; a descendant's path
  // label extends the vacated one, so every moved label stays valid.
  while (!nodes_[x].kids.empty()) {
    const auto u = nodes_[x].kids.front().second;
    nodes_[x].label = nodes_[u].label;
    node_of_[nodes_[x].label] = x;
    x = u;
  }
  auto& kids = nodes_[nodes_[x].parent].kids;
  kids.erase(std::find_if(kids.begin(), kids.end(), [&](const auto& e) { return e.second == x; }));
  --depth_count_[nodes_[x].depth];
  nodes_[x] = HeapNode{};
  free_nodes_.push_back(x);
}

void LimitedIndex::rebuild_heap() {
  nodes_.assign(1, HeapNode{});
  free_nodes_.clear();
  depth_count_.assign(1, 1);
  node_of_.assign(w_.handle_capacity(), kNoNode);
  if (w_.size() == 0) return;
  for (Handle x = w_.at(1); x != DynamicText::kNone; x = w_.next(x)) heap_insert(x);
}

void LimitedIndex::edit(std::size_t first, std::size_t last, std::size_t del_len, std::span<const Symbol> ins) {
  const std::size_t B = 2 * M_;
  const std::size_t H = std::max<std::size_t>(height(), 1);
  const std::size_t k_old = k_;

  auto block_of = [&](std::size_t s) { return w_.dividers_through(w_rank_of_s(s)) + 1; };
  auto block_start = [&](std::size_t b) { return b == 1 ? std::size_t{1} : divider_rank(b - 1) + 1; };
  auto block_end = [&](std::size_t b) { return b <= k_ ? divider_rank(b) - 1 : bang_rank() - 1; };

  const std::size_t bl = block_of(first);
  std::size_t br = block_of(last);
  std::size_t ws = block_start(bl), we = block_end(br), L = 0;
  while (true) {
    we = block_end(br);
    L = (we - ws + 1) - (br - bl) - del_len + ins.size();
    if (L < B && br <= k_) {  // underflow: take in the following block
      ++br;
      continue;
    }
    break;
  }

  // New S' segment.
  std::vector<Symbol> seg;
  for (Symbol c : w_.slice(ws, we - ws + 1)) {
    if (!is_divider(c)) seg.push_back(c);
  }
  const std::size_t offset = first - (ws - (bl - 1));
  seg.erase(seg.begin() + static_cast<long>(offset), seg.begin() + static_cast<long>(offset + del_len));
  seg.insert(seg.begin() + static_cast<long>(offset), ins.begin(), ins.end());
  std::size_t parts = 1;
  if (L > 2 * B) parts = ins.size() > 2 * B ? L / B : (L + 2 * B - 1) / (2 * B);
  const auto blocks = cut(seg, parts);

  const std::size_t j1 = std::max<std::size_t>(1, bl - 1);
  const std::size_t j2_old = std::min(k_old, br);
  const std::size_t k_new = k_old - (br - bl) + (parts - 1);
  const std::size_t j2_new = std::min(k_new, bl + parts - 1);

  // Handles whose heap entries can change: the rewritten ranges and up to
  // H-1 positions to their left (a path label is at most H long).
  const Handle before = w_.select_divider(k_old + j1);
  const Handle after = j2_old >= j1 ? w_.select_divider(k_old + 1 + j2_old) : DynamicText::kNone;
  const std::size_t rp = w_.rank(before);
  const std::size_t rq = after == DynamicText::kNone ? rp : w_.rank(after);
  std::vector<Handle> affected, keep;
  std::unordered_set<Handle> seen;
  auto collect = [&](std::size_t from, std::size_t to, std::size_t dead_from) {
    from = from > H ? from - H + 1 : 1;
    for (std::size_t r = from; r <= to; ++r) {
      const Handle h = w_.at(r);
      if (!seen.insert(h).second) continue;
      affected.push_back(h);
      if (r < dead_from) keep.push_back(h);
    }
  };
  collect(ws, we, ws);
  collect(rp + 1, rq, rp + 1);
  for (Handle h : affected) heap_erase(h);
  std::size_t touch = affected.size();

  // Rewrite S'.
  std::vector<Symbol> fresh_sp;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) fresh_sp.push_back(new_divider());
    fresh_sp.insert(fresh_sp.end(), blocks[i].begin(), blocks[i].end());
  }
  w_.erase(ws, we - ws + 1);
  auto added = w_.insert(ws, fresh_sp);
  k_ = k_new;

  // Rewrite the S'' windows of dividers j1..j2.
  const std::size_t rp2 = w_.rank(before);
  if (after != DynamicText::kNone) {
    const std::size_t rq2 = w_.rank(after);
    window_chars_ -= (rq2 - rp2) - (j2_old - j1 + 1);
    w_.erase(rp2 + 1, rq2 - rp2);
  }
  std::vector<Symbol> fresh_spp;
  for (std::size_t j = j1; j <= j2_new; ++j) {
    const auto win = window_for(j);
    window_chars_ += win.size();
    fresh_spp.insert(fresh_spp.end(), win.begin(), win.end());
    fresh_spp.push_back(new_divider());
  }
  const auto added2 = w_.insert(rp2 + 1, fresh_spp);
  added.insert(added.end(), added2.begin(), added2.end());

  keep.insert(keep.end(), added.begin(), added.end());
  std::vector<std::pair<std::size_t, Handle>> order;
  order.reserve(keep.size());
  for (Handle h : keep) order.emplace_back(w_.rank(h), h);
  std::sort(order.begin(), order.end());
  for (const auto& [r, h] : order) heap_insert(h);
  touch += order.size();
  last_touch_ = touch;
  total_touch_ += touch;
}

void LimitedIndex::insert_substring(std::size_t pos, std::span<const Symbol> t) {
  const std::size_t n = text_size();
  if (pos < 1 || pos > n) throw RangeError("insert position " + std::to_string(pos) + " outside 1.." + std::to_string(n));
  for (Symbol c : t) {
    if (c == kTerminator || c > kMaxTextSymbol) throw ValidationError("inserted text holds a reserved symbol");
  }
  last_touch_ = 0;
  if (t.empty()) return;
  edit(pos, pos, 0, t);
}

void LimitedIndex::delete_substring(std::size_t pos, std::size_t len) {
  const std::size_t n = text_size();
  last_touch_ = 0;
  if (len == 0) return;
  if (pos < 1 || pos + len - 1 > n) throw RangeError("delete range outside 1.." + std::to_string(n));
  if (pos + len - 1 == n) throw UsageError("cannot delete the terminator");
  edit(pos, pos + len - 1, len, {});
}

std::vector<std::uint32_t> LimitedIndex::search_limited(std::span<const Symbol> pattern,
                                                        heap::SearchTrace* trace) const {
  if (pattern.empty()) throw UsageError("search pattern must be non-empty");
  if (pattern.size() > M_) {
    throw UsageError("pattern longer than the index limit M=" + std::to_string(M_));
  }
  if (std::any_of(pattern.begin(), pattern.end(), is_divider)) return {};
  auto out = heap::heap_search(LimitedIndexView(*this), pattern, trace);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TerminatedText LimitedIndex::current_string() const {
  std::vector<Symbol> s;
  s.reserve(text_size());
  for (Handle x = w_.at(1); x != bang_; x = w_.next(x)) {
    if (!is_divider(w_.symbol(x))) s.push_back(w_.symbol(x));
  }
  return TerminatedText(std::move(s));
}

std::string LimitedIndex::render_s_prime() const {
  const auto w = w_.to_vector();
  std::size_t number = 1;
  return render(std::span<const Symbol>(w).first(bang_rank() - 1), number);
}

std::string LimitedIndex::render_s_double_prime() const {
  const auto w = w_.to_vector();
  std::size_t number = k_ + 1;
  const std::size_t from = bang_rank();
  if (k_ == 0) return {};
  return render(std::span<const Symbol>(w).subspan(from, w.size() - from - 1), number);
}

heap::VerifyReport LimitedIndex::check_layout(bool coverage) const {
  using heap::VerifyReport;
  const auto w = w_.to_vector();
  const std::size_t B = 2 * M_;
  std::unordered_set<Symbol> divs;
  std::vector<std::size_t> at;  // 0-based indices of dividers
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_divider(w[i])) continue;
    if (!divs.insert(w[i]).second) return VerifyReport::fail("divider-unique", std::to_string(w[i]));
    at.push_back(i);
  }
  if (at.size() != 2 * k_ + 1) return VerifyReport::fail("divider-count", std::to_string(at.size()));
  if (w.empty() || !is_divider(w.back())) return VerifyReport::fail("sentinel", "W must end with a divider");
  const std::size_t bang = at[k_];
  if (w[bang] != w_.symbol(bang_)) return VerifyReport::fail("bang", "! moved");

  // S' blocks.
  std::vector<std::vector<Symbol>> blocks(k_ + 1);
  std::vector<Symbol> s;
  for (std::size_t i = 0, b = 0; i < bang; ++i) {
    if (is_divider(w[i])) {
      ++b;
      continue;
    }
    blocks[b].push_back(w[i]);
    s.push_back(w[i]);
  }
  if (s.empty() || s.back() != kTerminator ||
      std::count(s.begin(), s.end(), kTerminator) != 1) {
    return VerifyReport::fail("terminator", "S' must end with the only terminator");
  }
  for (std::size_t b = 0; b <= k_; ++b) {
    const std::size_t len = blocks[b].size();
    const bool last = b == k_;
    if (len > 2 * B || (!last && len < B) || len == 0) {
      return VerifyReport::fail("block-length", "block " + std::to_string(b + 1) + " has " + std::to_string(len));
    }
  }
  // S'' windows, each followed by its divider.
  std::vector<std::size_t> t(k_ + 1, 0);  // S characters before divider j
  for (std::size_t j = 1; j <= k_; ++j) t[j] = t[j - 1] + blocks[j - 1].size();
  std::size_t i = bang + 1;
  for (std::size_t j = 1; j <= k_; ++j) {
    const std::size_t a = std::min(M_, blocks[j - 1].size()), b = std::min(M_, blocks[j].size());
    for (std::size_t q = t[j] - a; q < t[j] + b; ++q, ++i) {
      if (i >= w.size() || w[i] != s[q]) return VerifyReport::fail("window", "window " + std::to_string(j));
    }
    if (i >= w.size() || !is_divider(w[i])) return VerifyReport::fail("window", "no divider after " + std::to_string(j));
    ++i;
  }
  if (i != w.size()) return VerifyReport::fail("window", "trailing characters in S''");
  if (k_ == 0 && w.size() != s.size() + 1) return VerifyReport::fail("window", "S'' must be empty");

  if (coverage) {
    const std::size_t n = s.size();
    std::vector<std::size_t> block_of(n + 1);
    for (std::size_t j = 0, p = 1; j <= k_; ++j) {
      for (std::size_t q = 0; q < blocks[j].size(); ++q) block_of[p++] = j + 1;
    }
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t len = 1; len <= M_ && p + len - 1 <= n; ++len) {
        const std::size_t e = p + len - 1, bp = block_of[p], be = block_of[e];
        if (bp == be) continue;
        const std::size_t j = bp;  // crossing divider j
        const std::size_t a = std::min(M_, blocks[j - 1].size()), b = std::min(M_, blocks[j].size());
        if (be != bp + 1 || p + a < t[j] + 1 || e > t[j] + b) {
          return VerifyReport::fail("coverage", "S[" + std::to_string(p) + ".." + std::to_string(e) + "]");
        }
      }
    }
  }
  return VerifyReport::pass();
}

heap::VerifyReport LimitedIndex::verify_heap() const {
  using heap::VerifyReport;
  const auto w = w_.to_vector();
  if (heap_nodes() != w.size() + 1) return VerifyReport::fail("node-count", std::to_string(heap_nodes()));
  std::vector<Handle> by_rank;
  by_rank.reserve(w.size());
  if (!w.empty()) {
    for (Handle x = w_.at(1); x != DynamicText::kNone; x = w_.next(x)) by_rank.push_back(x);
  }
  for (Handle h : by_rank) {
    const auto u = h < node_of_.size() ? node_of_[h] : kNoNode;
    if (u == kNoNode || nodes_[u].label != h) return VerifyReport::fail("one-node-per-position", std::to_string(h));
  }
  std::vector<std::size_t> count(depth_count_.size(), 0);
  count[0] = 1;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    const auto& node = nodes_[x];
    for (std::size_t k = 0; k < node.kids.size(); ++k) {
      const auto& [c, u] = node.kids[k];
      if (k > 0 && !(node.kids[k - 1].first < c)) return VerifyReport::fail("sibling-order", std::to_string(x));
      const auto& kid = nodes_[u];
      if (kid.parent != x || kid.edge != c || kid.depth != node.depth + 1) {
        return VerifyReport::fail("child-list", std::to_string(u));
      }
      if (kid.depth >= count.size()) return VerifyReport::fail("depth-count", std::to_string(kid.depth));
      ++count[kid.depth];
      stack.push_back(u);
    }
    if (x == 0) continue;
    // Path label against W: walk up comparing one character per level.
    const std::size_t q = w_.rank(node.label);
    if (q + node.depth - 1 > w.size()) return VerifyReport::fail("path-label", "runs past W");
    std::uint32_t y = x;
    for (std::size_t d = node.depth; d >= 1; --d) {
      if (w[q + d - 2] != nodes_[y].edge) return VerifyReport::fail("path-label", std::to_string(x));
      y = nodes_[y].parent;
    }
  }
  if (count != depth_count_) return VerifyReport::fail("depth-count", "histogram differs");
  if (height() > 8 * M_ + 4) return VerifyReport::fail("height", std::to_string(height()));
  return VerifyReport::pass();
}

}  // namespace posheap::dynamic
