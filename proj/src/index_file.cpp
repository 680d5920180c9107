#include "posheap/index_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "posheap/heap/search.hpp"
#include "posheap/heap/st2heap.hpp"
#include "posheap/io.hpp"
#include "posheap/suffix/suffix_array.hpp"
#include "posheap/suffix/suffix_tree.hpp"

namespace posheap {

namespace {

constexpr char kMagic[4] = {'P', 'H', 'X', '1'};

template <class T>
std::string payload(const T& x) {
  std::ostringstream out(std::ios::binary);
  x.write(out);
  return out.str();
}

std::string u32s(const std::vector<std::uint32_t>& v) {
  std::ostringstream out(std::ios::binary);
  io::put_u32_array(out, v);
  return out.str();
}

std::vector<std::uint32_t> symbols_of(const TerminatedText& t) { return {t.symbols().begin(), t.symbols().end()}; }

std::vector<std::uint32_t> alphabet_of(std::span<const Symbol> s) {
  std::set<Symbol> a(s.begin(), s.end());
  return {a.begin(), a.end()};
}

class Reader {
 public:
  explicit Reader(std::map<std::string, std::string> sections) : sections_(std::move(sections)) {}
  std::istringstream open(const std::string& tag) const {
    const auto it = sections_.find(tag);
    if (it == sections_.end()) throw CorruptionError("missing section " + tag);
    return std::istringstream(it->second, std::ios::binary);
  }
  template <class F>
  auto parse(const std::string& tag, F&& f) const {
    auto in = open(tag);
    auto v = f(in);
    if (in.peek() != std::char_traits<char>::eof()) throw CorruptionError("trailing bytes in section " + tag);
    return v;
  }
  std::vector<std::uint32_t> array(const std::string& tag) const {
    return parse(tag, [](std::istream& in) { return io::get_u32_array(in); });
  }

 private:
  std::map<std::string, std::string> sections_;
};

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kHeap: return "heap";
    case Variant::kBridge: return "bridge";
    case Variant::kSimulated: return "simulated";
    case Variant::kSuffixHeap: return "sheap";
    case Variant::kDynamic: return "dynamic";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (auto v : {Variant::kHeap, Variant::kBridge, Variant::kSimulated, Variant::kSuffixHeap, Variant::kDynamic}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

Index Index::build(const TerminatedText& text, Variant v, std::size_t max_pattern, bool dollar) {
  Index x;
  x.variant_ = v;
  x.flags_ = dollar ? kFlagDollar : 0;
  if (v == Variant::kDynamic) {
    x.dyn_.emplace(dynamic::LimitedIndex::new_limited(text, max_pattern));
    return x;
  }
  x.text_ = text;
  const auto bundle = suffix::build_sa(text);
  if (v == Variant::kSuffixHeap) {
    x.sa_ = std::make_shared<bridge::PlainSAAccess>(bundle);
    const suffix::SuffixTree st(text, bundle);
    x.sheap_.emplace(sheap::build_suffix_heap(st, bundle, text, x.sa_));
    return x;
  }
  const suffix::SuffixTree st(text, bundle);
  auto h = heap::suffix_tree_to_heap(st, text);
  switch (v) {
    case Variant::kHeap:
      x.heap_.emplace(std::move(h));
      break;
    case Variant::kBridge:
      x.bridge_ = std::make_shared<bridge::HeapArrayBridge>(bridge::build_bridge(std::move(h), bundle));
      break;
    case Variant::kSimulated:
      x.sa_ = std::make_shared<bridge::PlainSAAccess>(bundle);
      x.sim_.emplace(bridge::SimulatedHeap::build(h, text, x.sa_));
      break;
    default:
      break;
  }
  return x;
}

std::vector<std::pair<std::string, std::string>> Index::sections() const {
  std::vector<std::pair<std::string, std::string>> out;
  auto heap_parts = [&](const heap::PositionHeap& h) {
    out.emplace_back("PARN", payload(h.to_parens()));
    out.emplace_back("LABL", u32s({h.preorder_labels().begin(), h.preorder_labels().end()}));
    std::vector<std::uint32_t> reach(h.text_size() + 1, 0);
    for (heap::Label i = 1; i <= h.text_size(); ++i) reach[i] = h.max_reach(i);
    out.emplace_back("MAXR", u32s(reach));
  };
  auto fci_parts = [&](const suffix::FirstCharIndex& f) {
    out.emplace_back("FCIB", payload(f.starts()));
    out.emplace_back("FCIC", u32s(f.chars()));
  };
  if (text_) out.emplace_back("TEXT", u32s(symbols_of(*text_)));
  switch (variant_) {
    case Variant::kHeap:
      heap_parts(*heap_);
      break;
    case Variant::kBridge:
      heap_parts(bridge_->heap());
      out.emplace_back("DSEQ", payload(bridge_->d()));
      out.emplace_back("ESEQ", payload(bridge_->e()));
      break;
    case Variant::kSimulated:
      out.emplace_back("SARR", u32s(sa_->sa_array()));
      out.emplace_back("TREE", payload(sim_->tree()));
      out.emplace_back("AUGP", payload(sim_->augmented()));
      fci_parts(sim_->first_chars());
      out.emplace_back("DSEQ", payload(sim_->d()));
      out.emplace_back("ESEQ", payload(sim_->e()));
      break;
    case Variant::kSuffixHeap:
      out.emplace_back("SARR", u32s(sa_->sa_array()));
      out.emplace_back("AUGP", payload(sheap_->augmented()));
      fci_parts(sheap_->first_chars());
      break;
    case Variant::kDynamic: {
      std::ostringstream p(std::ios::binary);
      io::put_u64(p, dyn_->max_pattern());
      io::put_u32(p, dyn_->next_divider());
      out.emplace_back("DYNP", p.str());
      out.emplace_back("DYNW", u32s(dyn_->working_string()));
      break;
    }
  }
  return out;
}

void Index::save(std::ostream& out) const {
  out.write(kMagic, 4);
  io::put_u32(out, kVersion);
  io::put_u32(out, static_cast<std::uint32_t>(variant_));
  io::put_u32(out, flags_);
  io::put_u64(out, text_size());
  const auto t = text();
  const auto alpha = alphabet_of(t.symbols());
  io::put_u64(out, alpha.size());
  for (auto c : alpha) io::put_u32(out, c);
  const auto secs = sections();
  io::put_u64(out, secs.size());
  for (const auto& [tag, body] : secs) {
    out.write(tag.data(), 4);
    io::put_u64(out, body.size());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
  }
  if (!out) throw std::runtime_error("write failed");
}

void Index::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  save(out);
}

Index Index::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load(in);
}

Index Index::load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) throw CorruptionError("not a PHX1 index");
  if (io::get_u32(in) != kVersion) throw CorruptionError("unsupported index version");
  const auto vcode = io::get_u32(in);
  if (vcode < 1 || vcode > 5) throw CorruptionError("unknown variant");
  Index x;
  x.variant_ = static_cast<Variant>(vcode);
  x.flags_ = io::get_u32(in);
  if (x.flags_ & ~kFlagDollar) throw CorruptionError("unknown flags");
  const auto n = io::get_count(in, std::uint64_t{1} << 32);
  const auto sigma = io::get_item_count(in, n, 32);
  std::vector<std::uint32_t> alpha(sigma);
  for (auto& c : alpha) c = io::get_u32(in);
  const auto count = io::get_count(in, 64);
  std::map<std::string, std::string> secs;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string tag(4, '\0');
    if (!in.read(tag.data(), 4)) throw CorruptionError("truncated section table");
    const auto len = io::get_item_count(in, std::uint64_t{1} << 40, 8);
    std::string body(len, '\0');
    if (!in.read(body.data(), static_cast<std::streamsize>(len))) throw CorruptionError("truncated section " + tag);
    if (!secs.emplace(tag, std::move(body)).second) throw CorruptionError("duplicate section " + tag);
  }
  if (in.peek() != std::char_traits<char>::eof()) throw CorruptionError("trailing bytes after the index");
  const Reader r(std::move(secs));

  try {
    if (x.variant_ == Variant::kDynamic) {
      const auto [M, next] = r.parse("DYNP", [](std::istream& p) {
        const auto m = io::get_u64(p);
        return std::pair{m, io::get_u32(p)};
      });
      const auto w = r.array("DYNW");
      x.dyn_.emplace(dynamic::LimitedIndex::from_working_string(w, M, next));
    } else {
      x.text_.emplace(TerminatedText(r.array("TEXT")));
      const auto& t = *x.text_;
      auto read_heap = [&] {
        const auto tree = r.parse("PARN", [](std::istream& p) { return succinct::ParenTree::read(p); });
        return heap::PositionHeap::from_parts(t, tree, r.array("LABL"), r.array("MAXR"));
      };
      auto read_fci = [&] {
        auto bits = r.parse("FCIB", [](std::istream& p) { return succinct::Bitvector::read(p); });
        const auto chars = r.array("FCIC");
        return suffix::FirstCharIndex(std::move(bits), std::vector<Symbol>(chars.begin(), chars.end()));
      };
      auto read_seq = [&](const char* tag) {
        return r.parse(tag, [](std::istream& p) { return succinct::DepthSequence::read(p); });
      };
      switch (x.variant_) {
        case Variant::kHeap:
          x.heap_.emplace(read_heap());
          break;
        case Variant::kBridge:
          x.bridge_ = std::make_shared<bridge::HeapArrayBridge>(read_heap(), read_seq("DSEQ"), read_seq("ESEQ"));
          break;
        case Variant::kSimulated:
          x.sa_ = std::make_shared<bridge::PlainSAAccess>(r.array("SARR"));
          x.sim_.emplace(x.sa_, r.parse("TREE", [](std::istream& p) { return succinct::ParenTree::read(p); }),
                         r.parse("AUGP", [](std::istream& p) { return succinct::ParenTree::read(p); }), read_fci(),
                         read_seq("DSEQ"), read_seq("ESEQ"));
          break;
        case Variant::kSuffixHeap:
          x.sa_ = std::make_shared<bridge::PlainSAAccess>(r.array("SARR"));
          x.sheap_.emplace(x.sa_, r.parse("AUGP", [](std::istream& p) { return succinct::ParenTree::read(p); }),
                           read_fci());
          break;
        default:
          break;
      }
    }
  } catch (const ValidationError& e) {
    throw CorruptionError(std::string("inconsistent index: ") + e.what());
  } catch (const RangeError& e) {
    throw CorruptionError(std::string("inconsistent index: ") + e.what());
  } catch (const NotFoundError& e) {
    throw CorruptionError(std::string("inconsistent index: ") + e.what());
  }
  if (x.text_size() != n) throw CorruptionError("header length disagrees with the payload");
  if (alphabet_of(x.text().symbols()) != alpha) throw CorruptionError("alphabet table disagrees with the text");
  return x;
}

std::size_t Index::text_size() const { return dyn_ ? dyn_->text_size() : text_->size(); }

TerminatedText Index::text() const { return dyn_ ? dyn_->current_string() : *text_; }

std::size_t Index::height() const {
  switch (variant_) {
    case Variant::kHeap: return heap_->height();
    case Variant::kBridge: return bridge_->heap().height();
    case Variant::kSimulated: return sim_->d().max_value();
    case Variant::kSuffixHeap: {
      std::size_t h = 0;
      for (heap::Label j = 1; j < sheap_->node_count(); ++j) h = std::max<std::size_t>(h, sheap_->depth(j));
      return h;
    }
    case Variant::kDynamic: return dyn_->height();
  }
  return 0;
}

std::size_t Index::node_count() const { return variant_ == Variant::kDynamic ? dyn_->heap_nodes() : text_size() + 1; }

std::vector<std::pair<std::string, std::uint64_t>> Index::section_sizes() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& [tag, body] : sections()) out.emplace_back(tag, body.size());
  return out;
}

std::vector<std::uint32_t> Index::query(std::span<const Symbol> pattern) const {
  switch (variant_) {
    case Variant::kHeap: return heap::search(*heap_, pattern);
    case Variant::kBridge: return heap::search(bridge_->heap(), pattern);
    case Variant::kSimulated: return bridge::simulated_search(*sim_, pattern);
    case Variant::kSuffixHeap: return sheap::sheap_search(*sheap_, pattern);
    case Variant::kDynamic: return dyn_->search_limited(pattern);
  }
  return {};
}

dynamic::LimitedIndex& Index::dynamic_index() {
  if (!dyn_) throw UsageError("not a dynamic index");
  return *dyn_;
}

heap::VerifyReport Index::verify() const {
  using heap::VerifyReport;
  if (variant_ == Variant::kDynamic) {
    auto r = dyn_->check_layout(dyn_->text_size() <= 500);
    return r.ok ? dyn_->verify_heap() : r;
  }
  const auto& t = *text_;
  const auto bundle = suffix::build_sa(t);
  switch (variant_) {
    case Variant::kHeap:
      return heap_->verify(t);
    case Variant::kBridge: {
      auto r = bridge_->heap().verify(t);
      if (!r.ok) return r;
      r = bridge_->verify();
      if (!r.ok) return r;
      if (bridge_->d().values() != bridge::depth_by_rank_serial(bridge_->heap(), bundle.sa)) {
        return VerifyReport::fail("D", "differs from recomputation");
      }
      if (bridge_->e().values() != bridge::depth_by_preorder_serial(bridge_->heap())) {
        return VerifyReport::fail("E", "differs from recomputation");
      }
      return VerifyReport::pass();
    }
    case Variant::kSimulated: {
      if (sa_->sa_array() != bundle.sa) return VerifyReport::fail("SA", "differs from recomputation");
      const auto h = heap::build_naive(t);
      auto want = bridge::SimulatedHeap::build(h, t, sa_);
      if (!(want.tree() == sim_->tree())) return VerifyReport::fail("tree", "differs from recomputation");
      if (!(want.augmented() == sim_->augmented())) return VerifyReport::fail("augmented", "differs from recomputation");
      if (want.first_chars().chars() != sim_->first_chars().chars() ||
          want.first_chars().starts().size() != sim_->first_chars().starts().size()) {
        return VerifyReport::fail("first-char", "differs from recomputation");
      }
      for (std::size_t p = 1; p <= t.size(); ++p) {
        if (want.first_chars().char_at_rank(p) != sim_->first_chars().char_at_rank(p)) {
          return VerifyReport::fail("first-char", std::to_string(p));
        }
      }
      if (want.d().values() != sim_->d().values()) return VerifyReport::fail("D", "differs from recomputation");
      if (want.e().values() != sim_->e().values()) return VerifyReport::fail("E", "differs from recomputation");
      return VerifyReport::pass();
    }
    case Variant::kSuffixHeap:
      if (sa_->sa_array() != bundle.sa) return VerifyReport::fail("SA", "differs from recomputation");
      return sheap_->verify(t);
    default:
      break;
  }
  return VerifyReport::pass();
}

}  // namespace posheap
