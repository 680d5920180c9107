#include "posheap/parallel/batch_search.hpp"

#include <omp.h>

#include <algorithm>

namespace posheap::parallel {

Hits scan_occurrences(const TerminatedText& text, std::span<const Symbol> pattern) {
  Hits out;
  const std::size_t n = text.size(), m = pattern.size();
  if (m == 0 || m > n) return out;
  const auto s = text.symbols();
  for (std::size_t i = 0; i + m <= n; ++i) {
    if (std::equal(pattern.begin(), pattern.end(), s.begin() + static_cast<long>(i))) {
      out.push_back(static_cast<std::uint32_t>(i + 1));
    }
  }
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace posheap::parallel
