#include "posheap/succinct/paren_tree.hpp"

#include <algorithm>
#include <limits>

#include "posheap/io.hpp"
#include "posheap/text.hpp"

namespace posheap::succinct {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

int delta(Paren p) { return p == Paren::kOpen ? 1 : (p == Paren::kClose ? -1 : 0); }

}  // namespace

ParenTree::ParenTree(const std::vector<Paren>& symbols) : length_(symbols.size()) {
  packed_.assign((length_ + 3) / 4, 0);
  for (std::size_t i = 0; i < length_; ++i) {
    packed_[i >> 2] |= static_cast<std::uint8_t>(static_cast<unsigned>(symbols[i]) << ((i & 3) * 2));
  }
  build_index();
  validate();
}

ParenTree ParenTree::parse(std::string_view text) {
  std::vector<Paren> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '(': symbols.push_back(Paren::kOpen); break;
      case ')': symbols.push_back(Paren::kClose); break;
      case '*': symbols.push_back(Paren::kStar); break;
      case ' ': case '\t': case '\n': case '\r': break;
      default: throw ValidationError(std::string("unexpected character in parenthesis string: ") + c);
    }
  }
  return ParenTree(symbols);
}

ParenTree ParenTree::from_preorder_parents(const std::vector<std::uint32_t>& parents) {
  std::vector<Paren> out;
  out.reserve(2 * parents.size());
  std::vector<std::uint32_t> stack;
  for (std::size_t t = 0; t < parents.size(); ++t) {
    if (t > 0) {
      if (parents[t] >= t) throw ValidationError("preorder parent must precede its child");
      while (!stack.empty() && stack.back() != parents[t]) {
        stack.pop_back();
        out.push_back(Paren::kClose);
      }
      if (stack.empty()) throw ValidationError("parent array is not a preorder");
    }
    out.push_back(Paren::kOpen);
    stack.push_back(static_cast<std::uint32_t>(t));
  }
  while (!stack.empty()) {
    stack.pop_back();
    out.push_back(Paren::kClose);
  }
  return ParenTree(out);
}

void ParenTree::build_index() {
  const std::size_t nb = blocks();
  block_counts_.assign(3 * (nb + 1), 0);
  block_min_.assign(nb, std::numeric_limits<std::int32_t>::max());
  std::size_t counts[3] = {0, 0, 0};
  long e = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    if (i % kBlock == 0) {
      for (int s = 0; s < 3; ++s) block_counts_[3 * (i / kBlock) + s] = static_cast<std::uint32_t>(counts[s]);
    }
    const Paren p = at(i);
    ++counts[static_cast<int>(p)];
    e += delta(p);
    auto& m = block_min_[i / kBlock];
    m = std::min<std::int32_t>(m, static_cast<std::int32_t>(e));
  }
  for (int s = 0; s < 3; ++s) {
    block_counts_[3 * nb + s] = static_cast<std::uint32_t>(counts[s]);
    totals_[s] = counts[s];
  }
  seg_size_ = 1;
  while (seg_size_ < std::max<std::size_t>(nb, 1)) seg_size_ <<= 1;
  seg_.assign(2 * seg_size_, std::numeric_limits<std::int32_t>::max());
  for (std::size_t b = 0; b < nb; ++b) seg_[seg_size_ + b] = block_min_[b];
  for (std::size_t v = seg_size_ - 1; v >= 1; --v) seg_[v] = std::min(seg_[2 * v], seg_[2 * v + 1]);
}

void ParenTree::validate() const {
  if (length_ == 0) throw ValidationError("empty parenthesis stream");
  if (at(0) != Paren::kOpen) throw ValidationError("stream must start with the root open");
  long e = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    const Paren p = at(i);
    if (static_cast<unsigned>(p) > 2) throw ValidationError("invalid symbol code");
    if (p == Paren::kStar && e == 0) throw ValidationError("star outside the root pair");
    e += delta(p);
    if (e < 0) throw ValidationError("unbalanced parentheses");
    if (e == 0 && i + 1 != length_) throw ValidationError("more than one root");
  }
  if (e != 0) throw ValidationError("unbalanced parentheses");
}

std::size_t ParenTree::rank(Paren p, std::size_t pos) const {
  if (pos > length_) throw RangeError("paren rank position out of range");
  const std::size_t b = pos / kBlock;
  std::size_t r = block_counts_[3 * b + static_cast<int>(p)];
  for (std::size_t i = b * kBlock; i < pos; ++i) r += at(i) == p;
  return r;
}

std::size_t ParenTree::select(Paren p, std::size_t k) const {
  const int s = static_cast<int>(p);
  if (k < 1 || k > totals_[s]) throw RangeError("paren select beyond occurrence count");
  std::size_t lo = 0, hi = blocks();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (block_counts_[3 * mid + s] < k) lo = mid; else hi = mid;
  }
  std::size_t remaining = k - block_counts_[3 * lo + s];
  for (std::size_t i = lo * kBlock; i < length_; ++i) {
    if (at(i) == p && --remaining == 0) return i;
  }
  throw RangeError("paren select fell off the end");
}

std::size_t ParenTree::seg_first(std::size_t node, std::size_t lo, std::size_t hi, std::size_t from, long target) const {
  if (hi <= from || seg_[node] > target) return kNone;
  if (hi - lo == 1) return lo;
  const std::size_t mid = (lo + hi) / 2;
  const std::size_t left = seg_first(2 * node, lo, mid, from, target);
  return left != kNone ? left : seg_first(2 * node + 1, mid, hi, from, target);
}

std::size_t ParenTree::seg_last(std::size_t node, std::size_t lo, std::size_t hi, std::size_t to, long target) const {
  if (lo > to || seg_[node] > target) return kNone;
  if (hi - lo == 1) return lo;
  const std::size_t mid = (lo + hi) / 2;
  const std::size_t right = seg_last(2 * node + 1, mid, hi, to, target);
  return right != kNone ? right : seg_last(2 * node, lo, mid, to, target);
}

// Smallest p > from with excess(p) <= target.
std::optional<std::size_t> ParenTree::fwd_search(std::size_t from, long target) const {
  long e = excess(from);
  std::size_t i = from;
  const std::size_t block_end = std::min(length_, (from / kBlock + 1) * kBlock);
  for (; i < block_end; ++i) {
    e += delta(at(i));
    if (e <= target) return i + 1;
  }
  const std::size_t b = seg_first(1, 0, seg_size_, from / kBlock + 1, target);
  if (b == kNone || b >= blocks()) return std::nullopt;
  e = excess(b * kBlock);
  for (i = b * kBlock; i < length_; ++i) {
    e += delta(at(i));
    if (e <= target) return i + 1;
  }
  return std::nullopt;
}

// Largest p < from with excess(p) <= target. Block c holds the excess values
// at positions (cB, (c+1)B]; position 0 (excess 0) is handled last.
std::optional<std::size_t> ParenTree::bwd_search(std::size_t from, long target) const {
  if (from == 0) return std::nullopt;
  if (from >= 2) {
    const std::size_t first_block = (from - 2) / kBlock;
    long e = excess(from);
    for (std::size_t p = from - 1; p > first_block * kBlock; --p) {
      e -= delta(at(p));
      if (e <= target) return p;
    }
    if (first_block > 0) {
      const std::size_t c = seg_last(1, 0, seg_size_, first_block - 1, target);
      if (c != kNone) {
        const std::size_t top = (c + 1) * kBlock;
        e = excess(top);
        for (std::size_t p = top; p > c * kBlock; --p) {
          if (e <= target) return p;
          e -= delta(at(p - 1));
        }
        throw CorruptionError("excess index out of sync");
      }
    }
  }
  return target >= 0 ? std::optional<std::size_t>(0) : std::nullopt;
}

std::size_t ParenTree::find_close(std::size_t open_pos) const {
  if (open_pos >= length_ || at(open_pos) != Paren::kOpen) throw RangeError("find_close needs an open position");
  auto p = fwd_search(open_pos + 1, excess(open_pos));
  if (!p) throw CorruptionError("unmatched open parenthesis");
  return *p - 1;
}

std::optional<std::size_t> ParenTree::enclose(std::size_t pos) const {
  if (pos >= length_) throw RangeError("enclose position out of range");
  const long e = excess(pos);
  if (e == 0) return std::nullopt;
  auto p = bwd_search(pos, e - 1);
  if (!p) return std::nullopt;
  return *p;
}

std::size_t ParenTree::subtree_size(std::size_t node) const {
  const std::size_t open = open_of(node);
  return rank(Paren::kOpen, find_close(open)) - node;
}

std::optional<std::size_t> ParenTree::parent(std::size_t node) const {
  if (node == 0) return std::nullopt;
  auto open = enclose(open_of(node));
  if (!open) return std::nullopt;
  return node_of_open(*open);
}

std::vector<std::size_t> ParenTree::children(std::size_t node) const {
  std::vector<std::size_t> out;
  const std::size_t end = node + subtree_size(node);
  for (std::size_t c = node + 1; c < end; c += subtree_size(c)) out.push_back(c);
  return out;
}

std::size_t ParenTree::enclosing_node(std::size_t star_index) const {
  if (star_index < 1 || star_index > star_count()) throw RangeError("star index out of range");
  auto open = enclose(select(Paren::kStar, star_index));
  if (!open) throw CorruptionError("star outside the root pair");
  return node_of_open(*open);
}

std::size_t ParenTree::star_to_open_rank(std::size_t star_index) const {
  if (star_index < 1 || star_index > star_count()) throw RangeError("star index out of range");
  return rank(Paren::kOpen, select(Paren::kStar, star_index)) - 1;
}

std::vector<std::uint32_t> ParenTree::to_preorder_parents() const {
  std::vector<std::uint32_t> parents;
  parents.reserve(node_count());
  std::vector<std::uint32_t> stack;
  for (std::size_t i = 0; i < length_; ++i) {
    const Paren p = at(i);
    if (p == Paren::kOpen) {
      parents.push_back(stack.empty() ? 0 : stack.back());
      stack.push_back(static_cast<std::uint32_t>(parents.size() - 1));
    } else if (p == Paren::kClose) {
      stack.pop_back();
    }
  }
  return parents;
}

ParenTree ParenTree::without_stars() const {
  std::vector<Paren> out;
  out.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) {
    if (at(i) != Paren::kStar) out.push_back(at(i));
  }
  return ParenTree(out);
}

std::string ParenTree::to_string() const {
  std::string s;
  s.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) s.push_back("()*"[static_cast<int>(at(i))]);
  return s;
}

std::size_t ParenTree::size_in_bits() const noexcept {
  return 8 * packed_.size() + 32 * block_counts_.size() + 32 * block_min_.size() + 32 * seg_.size() + 256;
}

void ParenTree::write(std::ostream& out) const {
  io::put_u64(out, length_);
  out.write(reinterpret_cast<const char*>(packed_.data()), static_cast<std::streamsize>(packed_.size()));
}

ParenTree ParenTree::read(std::istream& in) {
  ParenTree t;
  t.length_ = static_cast<std::size_t>(io::get_item_count(in, std::uint64_t{1} << 40, 2));
  t.packed_.resize((t.length_ + 3) / 4);
  if (!in.read(reinterpret_cast<char*>(t.packed_.data()), static_cast<std::streamsize>(t.packed_.size()))) {
    throw CorruptionError("truncated parenthesis stream");
  }
  if ((t.length_ & 3) && (t.packed_.back() >> ((t.length_ & 3) * 2)) != 0) {
    throw CorruptionError("parenthesis stream padding bits set");
  }
  for (std::size_t i = 0; i < t.length_; ++i) {
    if (static_cast<unsigned>(t.at(i)) > 2) throw CorruptionError("invalid parenthesis symbol code");
  }
  t.build_index();
  try {
    t.validate();
  } catch (const ValidationError& e) {
    throw CorruptionError(e.what());
  }
  return t;
}

}  // namespace posheap::succinct
