#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posheap {

/// A text symbol. Text code points are < 2^31; the terminator is 0.
using Symbol = std::uint32_t;

inline constexpr Symbol kTerminator = 0;
inline constexpr Symbol kMaxTextSymbol = 0x7fffffffu;

// Error types. Range and not-found errors derive from the standard classes so
// callers can catch either.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CorruptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A string S[1..n] whose last symbol is a unique terminator smaller than all
/// other symbols. Positions in the public API are 1-based.
class TerminatedText {
 public:
  TerminatedText() : symbols_{kTerminator} {}

  /// Throws ValidationError unless `symbols` ends with the only terminator.
  explicit TerminatedText(std::vector<Symbol> symbols);

  /// Bytes of `s` become symbols; a trailing '$' is read as the terminator
  /// (so "abaababbabbab$" has n = 14). Without a trailing '$' one is appended.
  static TerminatedText from_display(std::string_view s);

  /// Raw bytes; the terminator is appended. A 0x00 byte is rejected.
  static TerminatedText from_bytes(std::string_view bytes);

  std::size_t size() const noexcept { return symbols_.size(); }
  /// 1-based access.
  Symbol operator[](std::size_t pos) const { return symbols_[pos - 1]; }
  Symbol at(std::size_t pos) const;
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Number of distinct symbols, terminator included.
  std::size_t alphabet_size() const;

  /// Renders with the terminator shown as '$'. Symbols above 0xff print as '?'.
  std::string display() const;

 private:
  std::vector<Symbol> symbols_;
};

/// Pattern from a display string: '$' maps to the terminator.
std::vector<Symbol> pattern_from_display(std::string_view s);

/// Pattern from raw bytes, no mapping.
std::vector<Symbol> pattern_from_bytes(std::string_view s);

}  // namespace posheap
