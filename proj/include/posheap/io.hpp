#pragma once

// Little-endian primitive I/O shared by serializers.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "posheap/text.hpp"

namespace posheap::io {

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

inline std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw CorruptionError("unexpected end of stream");
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

inline std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw CorruptionError("unexpected end of stream");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

/// Reads a count and rejects values that cannot fit in the remaining stream.
inline std::uint64_t get_count(std::istream& in, std::uint64_t limit) {
  std::uint64_t v = get_u64(in);
  if (v > limit) throw CorruptionError("implausible length field");
  return v;
}

/// Bytes left in a seekable stream; max for streams that cannot seek.
inline std::uint64_t remaining_bytes(std::istream& in) {
  const auto cur = in.tellg();
  if (cur < 0) return ~std::uint64_t{0};
  in.seekg(0, std::ios::end);
  const auto end = in.tellg();
  in.seekg(cur);
  return end < cur ? 0 : static_cast<std::uint64_t>(end - cur);
}

/// A count of items taking `bits_per_item` bits each that must still fit in
/// the stream, so corrupt lengths fail before any allocation.
inline std::uint64_t get_item_count(std::istream& in, std::uint64_t limit, std::uint64_t bits_per_item) {
  const std::uint64_t v = get_count(in, limit);
  const std::uint64_t left = remaining_bytes(in);
  if (left != ~std::uint64_t{0} && v > left * 8 / bits_per_item + 1) throw CorruptionError("length field past end of stream");
  return v;
}

inline void put_u32_array(std::ostream& out, const std::vector<std::uint32_t>& v) {
  put_u64(out, v.size());
  for (auto x : v) put_u32(out, x);
}

inline std::vector<std::uint32_t> get_u32_array(std::istream& in) {
  auto n = get_item_count(in, std::uint64_t{1} << 34, 32);
  std::vector<std::uint32_t> v;
  v.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
  for (std::uint64_t i = 0; i < n; ++i) v.push_back(get_u32(in));
  return v;
}

}  // namespace posheap::io
