#ifndef SEPCODE_COMBINATORICS_H_
#define SEPCODE_COMBINATORICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sepcode {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Sum of C(n, s) for s in [lo, hi], saturating.
std::uint64_t subset_count(std::uint64_t n, std::uint64_t lo,
                           std::uint64_t hi);

// Advances a strictly increasing k-subset of {0, ..., n-1} to its
// lexicographic successor. Returns false after the last one.
bool next_combination(std::span<std::size_t> combo, std::size_t n);

// Position of `combo` among the k-subsets of {0, ..., n-1} in lex order.
std::uint64_t lex_rank(std::span<const std::size_t> combo, std::size_t n);
std::vector<std::size_t> lex_unrank(std::uint64_t rank, std::size_t n,
                                    std::size_t k);

// Subsets of size lo..hi enumerated by size, then lexicographically; these
// convert between that global position and the subset itself.
std::uint64_t graded_rank(std::span<const std::size_t> combo, std::size_t n,
                          std::size_t lo);
std::vector<std::size_t> graded_unrank(std::uint64_t rank, std::size_t n,
                                       std::size_t lo, std::size_t hi);

}  // namespace sepcode

#endif  // SEPCODE_COMBINATORICS_H_
