#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posheap/bridge/heap_bridge.hpp"
#include "posheap/bridge/simulated_heap.hpp"
#include "posheap/dynamic/limited_index.hpp"
#include "posheap/heap/position_heap.hpp"
#include "posheap/sheap/suffix_heap.hpp"

namespace posheap {

enum class Variant : std::uint32_t { kHeap = 1, kBridge = 2, kSimulated = 3, kSuffixHeap = 4, kDynamic = 5 };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// Any of the five index kinds behind one query/verify/save surface.
///
/// File layout (little-endian): "PHX1", u32 version, u32 variant, u32 flags,
/// u64 n, u64 alphabet size + u32 symbols, u64 section count, then per
/// section a 4-byte tag, u64 payload length and the payload.
class Index {
 public:
  static constexpr std::uint32_t kVersion = 1;
  static constexpr std::uint32_t kFlagDollar = 1;  // '$' in patterns means the terminator

  static Index build(const TerminatedText& text, Variant v, std::size_t max_pattern = 0, bool dollar = false);
  static Index load(std::istream& in);
  static Index load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  Variant variant() const noexcept { return variant_; }
  bool dollar_terminator() const noexcept { return (flags_ & kFlagDollar) != 0; }
  std::size_t text_size() const;
  TerminatedText text() const;
  std::size_t height() const;
  std::size_t node_count() const;
  /// (tag, payload bytes) in file order.
  std::vector<std::pair<std::string, std::uint64_t>> section_sizes() const;

  std::vector<std::uint32_t> query(std::span<const Symbol> pattern) const;
  /// The variant's own invariant suite, with derived parts recomputed from
  /// the stored text where there is one.
  heap::VerifyReport verify() const;

  dynamic::LimitedIndex& dynamic_index();
  const heap::PositionHeap* heap() const noexcept { return heap_ ? &*heap_ : nullptr; }

 private:
  Index() = default;
  std::vector<std::pair<std::string, std::string>> sections() const;

  Variant variant_ = Variant::kHeap;
  std::uint32_t flags_ = 0;
  std::optional<TerminatedText> text_;
  std::optional<heap::PositionHeap> heap_;
  std::shared_ptr<const bridge::HeapArrayBridge> bridge_;
  std::shared_ptr<const bridge::PlainSAAccess> sa_;
  std::optional<bridge::SimulatedHeap> sim_;
  std::optional<sheap::SuffixHeap> sheap_;
  std::optional<dynamic::LimitedIndex> dyn_;
};

}  // namespace posheap
