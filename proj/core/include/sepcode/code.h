#ifndef SEPCODE_CODE_H_
#define SEPCODE_CODE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepcode/error.h"

namespace sepcode {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// An (n, M, q) code: M pairwise distinct codewords of length n over
// {0, ..., q-1}. Columns keep insertion order; set semantics are available
// through sorted() and same_set().
class Code {
 public:
  Code(std::size_t length, std::uint32_t alphabet_size,
       const std::vector<Word>& columns);

  std::size_t length() const { return n_; }
  std::uint32_t alphabet_size() const { return q_; }
  std::size_t size() const { return data_.size() / n_; }

  std::span<const Symbol> column(std::size_t j) const {
    return {data_.data() + j * n_, n_};
  }
  Symbol at(std::size_t col, std::size_t row) const {
    return data_[col * n_ + row];
  }
  std::vector<Word> columns() const;

  // Same columns in lexicographic order.
  Code sorted() const;
  bool same_set(const Code& other) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::size_t n_;
  std::uint32_t q_;
  std::vector<Symbol> data_;  // column-major
};

// The coordinate sets (C0(1), ..., C0(n)) of a subcode. Two subcodes have
// the same descendant code exactly when their keys are equal.
struct DescendantKey {
  std::vector<std::vector<Symbol>> coord_sets;

  friend bool operator==(const DescendantKey&,
                         const DescendantKey&) = default;
};

DescendantKey descendant_key(const Code& code,
                             std::span<const std::size_t> subset);

// Whether `word` lies in desc(subset).
bool in_descendant(const Code& code, std::span<const std::size_t> subset,
                   std::span<const Symbol> word);

// Shortened codes along one coordinate.
//
// by_value[i] is the sorted set of words obtained by deleting coordinate
// `axis` from the codewords whose axis-th symbol is i. For n = 3, cells holds
// the q x q array (row-major) of sets {c_3 : (i, k, c_3) in C}.
struct Projection {
  std::size_t axis = 0;
  std::vector<std::vector<Word>> by_value;
  std::vector<std::vector<Symbol>> cells;
};

Projection projections(const Code& code, std::size_t axis);

// A q x q array of optional symbols, each symbol at most once per row and
// per column.
class PartialLatinSquare {
 public:
  PartialLatinSquare(std::uint32_t order,
                     std::vector<std::optional<Symbol>> cells);

  std::uint32_t order() const { return q_; }
  std::optional<Symbol> at(std::uint32_t row, std::uint32_t col) const {
    return cells_[std::size_t{row} * q_ + col];
  }
  std::size_t filled() const;

  friend bool operator==(const PartialLatinSquare&,
                         const PartialLatinSquare&) = default;

 private:
  std::uint32_t q_;
  std::vector<std::optional<Symbol>> cells_;
};

// Raised when a code has no partial-Latin-square view, or a grid breaks the
// Latin property. `first`/`second` are the offending (row, col) cells; for a
// multiply-occupied cell both name that cell.
class PlsError : public InvalidArgument {
 public:
  using Cell = std::pair<std::uint32_t, std::uint32_t>;
  PlsError(const std::string& what, Cell first, Cell second)
      : InvalidArgument(what), first_(first), second_(second) {}
  Cell first() const { return first_; }
  Cell second() const { return second_; }

 private:
  Cell first_;
  Cell second_;
};

PartialLatinSquare to_pls(const Code& code);
// Columns are the triples (i, j, P_ij) of filled cells in row-major order.
Code from_pls(const PartialLatinSquare& pls);

}  // namespace sepcode

#endif  // SEPCODE_CODE_H_
