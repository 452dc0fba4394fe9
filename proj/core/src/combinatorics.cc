#include "sepcode/combinatorics.h"

#include <limits>

#include "sepcode/error.h"

namespace sepcode {
namespace {
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t subset_count(std::uint64_t n, std::uint64_t lo,
                           std::uint64_t hi) {
  std::uint64_t total = 0;
  for (std::uint64_t s = lo; s <= hi; ++s) {
    const std::uint64_t c = binomial(n, s);
    if (c > kSat - total) return kSat;
    total += c;
  }
  return total;
}

bool next_combination(std::span<std::size_t> combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t lex_rank(std::span<const std::size_t> combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::uint64_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = prev; v < combo[i]; ++v) {
      rank += binomial(n - v - 1, k - i - 1);
    }
    prev = combo[i] + 1;
  }
  return rank;
}

std::vector<std::size_t> lex_unrank(std::uint64_t rank, std::size_t n,
                                    std::size_t k) {
  if (rank >= binomial(n, k)) throw InvalidArgument("rank out of range");
  std::vector<std::size_t> combo(k);
  std::size_t v = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t block = binomial(n - v - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    combo[i] = v++;
  }
  return combo;
}

std::uint64_t graded_rank(std::span<const std::size_t> combo, std::size_t n,
                          std::size_t lo) {
  return subset_count(n, lo, combo.size() - 1) + lex_rank(combo, n);
}

std::vector<std::size_t> graded_unrank(std::uint64_t rank, std::size_t n,
                                       std::size_t lo, std::size_t hi) {
  for (std::size_t s = lo; s <= hi; ++s) {
    const std::uint64_t c = binomial(n, s);
    if (rank < c) return lex_unrank(rank, n, s);
    rank -= c;
  }
  throw InvalidArgument("rank out of range");
}

}  // namespace sepcode
