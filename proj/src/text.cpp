#include "posheap/text.hpp"

#include <algorithm>
#include <unordered_set>

namespace posheap {

TerminatedText::TerminatedText(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty() || symbols_.back() != kTerminator) {
    throw ValidationError("text must end with the terminator");
  }
  for (std::size_t i = 0; i + 1 < symbols_.size(); ++i) {
    if (symbols_[i] == kTerminator) throw ValidationError("terminator occurs before the end of the text");
    if (symbols_[i] > kMaxTextSymbol) throw ValidationError("symbol out of text alphabet");
  }
}

TerminatedText TerminatedText::from_display(std::string_view s) {
  if (!s.empty() && s.back() == '$') s.remove_suffix(1);
  std::vector<Symbol> out;
  out.reserve(s.size() + 1);
  for (unsigned char c : s) out.push_back(c == '$' ? kTerminator : Symbol{c});
  out.push_back(kTerminator);
  return TerminatedText(std::move(out));
}

TerminatedText TerminatedText::from_bytes(std::string_view bytes) {
  std::vector<Symbol> out;
  out.reserve(bytes.size() + 1);
  for (unsigned char c : bytes) {
    if (c == 0) throw ValidationError("input contains a 0x00 byte (reserved terminator)");
    out.push_back(c);
  }
  out.push_back(kTerminator);
  return TerminatedText(std::move(out));
}

Symbol TerminatedText::at(std::size_t pos) const {
  if (pos < 1 || pos > symbols_.size()) throw RangeError("text position out of range");
  return symbols_[pos - 1];
}

std::size_t TerminatedText::alphabet_size() const {
  std::unordered_set<Symbol> seen(symbols_.begin(), symbols_.end());
  return seen.size();
}

std::string TerminatedText::display() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol c : symbols_) out.push_back(c == kTerminator ? '$' : (c <= 0xff ? static_cast<char>(c) : '?'));
  return out;
}

std::vector<Symbol> pattern_from_display(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(c == '$' ? kTerminator : Symbol{c});
  return out;
}

std::vector<Symbol> pattern_from_bytes(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(c);
  return out;
}

}  // namespace posheap
