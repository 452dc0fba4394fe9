#include "sepcode/code.h"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace sepcode {
namespace {

struct SpanHash {
  std::size_t operator()(std::span<const Symbol> w) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Symbol s : w) {
      h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct SpanEq {
  bool operator()(std::span<const Symbol> a, std::span<const Symbol> b) const {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

void require_length3(const Code& code, const char* what) {
  if (code.length() != 3) {
    throw InvalidArgument(std::string(what) + " requires length 3, got " +
                          std::to_string(code.length()));
  }
}

}  // namespace

Code::Code(std::size_t length, std::uint32_t alphabet_size,
           const std::vector<Word>& columns)
    : n_(length), q_(alphabet_size) {
  if (n_ < 1) throw InvalidArgument("code length must be >= 1");
  if (q_ < 1) throw InvalidArgument("alphabet size must be >= 1");
  if (columns.empty()) throw InvalidArgument("a code needs >= 1 codeword");
  data_.reserve(n_ * columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n_) {
      throw InvalidArgument("codeword " + std::to_string(j) + " has length " +
                            std::to_string(columns[j].size()) +
                            ", expected " + std::to_string(n_));
    }
    for (Symbol s : columns[j]) {
      if (s >= q_) {
        throw InvalidArgument("codeword " + std::to_string(j) +
                              " has symbol " + std::to_string(s) +
                              " outside [0, " + std::to_string(q_ - 1) + "]");
      }
    }
    data_.insert(data_.end(), columns[j].begin(), columns[j].end());
  }
  std::unordered_map<std::span<const Symbol>, std::size_t, SpanHash, SpanEq>
      seen;
  seen.reserve(columns.size());
  for (std::size_t j = 0; j < size(); ++j) {
    auto [it, inserted] = seen.emplace(column(j), j);
    if (!inserted) {
      throw InvalidArgument("duplicate codewords at columns " +
                            std::to_string(it->second) + " and " +
                            std::to_string(j));
    }
  }
}

std::vector<Word> Code::columns() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) {
    auto c = column(j);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

Code Code::sorted() const {
  auto cols = columns();
  std::sort(cols.begin(), cols.end());
  return Code(n_, q_, cols);
}

bool Code::same_set(const Code& other) const {
  return n_ == other.n_ && q_ == other.q_ && sorted() == other.sorted();
}

DescendantKey descendant_key(const Code& code,
                             std::span<const std::size_t> subset) {
  if (subset.empty()) throw InvalidArgument("empty subset");
  for (std::size_t j : subset) {
    if (j >= code.size()) {
      throw InvalidArgument("column index " + std::to_string(j) +
                            " out of range");
    }
  }
  DescendantKey key;
  key.coord_sets.resize(code.length());
  for (std::size_t r = 0; r < code.length(); ++r) {
    auto& set = key.coord_sets[r];
    for (std::size_t j : subset) set.push_back(code.at(j, r));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return key;
}

bool in_descendant(const Code& code, std::span<const std::size_t> subset,
                   std::span<const Symbol> word) {
  if (word.size() != code.length()) return false;
  for (std::size_t r = 0; r < code.length(); ++r) {
    bool found = false;
    for (std::size_t j : subset) {
      if (code.at(j, r) == word[r]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Projection projections(const Code& code, std::size_t axis) {
  if (axis >= code.length()) {
    throw InvalidArgument("axis " + std::to_string(axis) +
                          " out of range for length " +
                          std::to_string(code.length()));
  }
  const std::uint32_t q = code.alphabet_size();
  Projection out;
  out.axis = axis;
  out.by_value.resize(q);
  for (std::size_t j = 0; j < code.size(); ++j) {
    auto c = code.column(j);
    Word shortened;
    shortened.reserve(code.length() - 1);
    for (std::size_t r = 0; r < code.length(); ++r) {
      if (r != axis) shortened.push_back(c[r]);
    }
    out.by_value[c[axis]].push_back(std::move(shortened));
  }
  for (auto& set : out.by_value) std::sort(set.begin(), set.end());
  if (code.length() == 3) {
    out.cells.resize(std::size_t{q} * q);
    for (std::size_t j = 0; j < code.size(); ++j) {
      out.cells[std::size_t{code.at(j, 0)} * q + code.at(j, 1)].push_back(
          code.at(j, 2));
    }
    for (auto& cell : out.cells) std::sort(cell.begin(), cell.end());
  }
  return out;
}

PartialLatinSquare::PartialLatinSquare(
    std::uint32_t order, std::vector<std::optional<Symbol>> cells)
    : q_(order), cells_(std::move(cells)) {
  if (q_ < 1) throw InvalidArgument("order must be >= 1");
  if (cells_.size() != std::size_t{q_} * q_) {
    throw InvalidArgument("expected " + std::to_string(std::size_t{q_} * q_) +
                          " cells, got " + std::to_string(cells_.size()));
  }
  // first occurrence of each symbol per row / per column
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> row_seen(std::size_t{q_} * q_, kNone);
  std::vector<std::uint32_t> col_seen(std::size_t{q_} * q_, kNone);
  for (std::uint32_t i = 0; i < q_; ++i) {
    for (std::uint32_t j = 0; j < q_; ++j) {
      const auto& v = cells_[std::size_t{i} * q_ + j];
      if (!v) continue;
      if (*v >= q_) {
        throw PlsError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                           ") holds symbol " + std::to_string(*v) +
                           " outside the order",
                       {i, j}, {i, j});
      }
      auto& r = row_seen[std::size_t{i} * q_ + *v];
      if (r != kNone) {
        throw PlsError("not a PLS: symbol " + std::to_string(*v) +
                           " repeats in row " + std::to_string(i),
                       {i, r}, {i, j});
      }
      r = j;
      auto& c = col_seen[std::size_t{j} * q_ + *v];
      if (c != kNone) {
        throw PlsError("not a PLS: symbol " + std::to_string(*v) +
                           " repeats in column " + std::to_string(j),
                       {c, j}, {i, j});
      }
      c = i;
    }
  }
}

std::size_t PartialLatinSquare::filled() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(),
                    [](const auto& c) { return c.has_value(); }));
}

PartialLatinSquare to_pls(const Code& code) {
  require_length3(code, "partial Latin square view");
  const std::uint32_t q = code.alphabet_size();
  std::vector<std::optional<Symbol>> cells(std::size_t{q} * q);
  for (std::size_t j = 0; j < code.size(); ++j) {
    const Symbol i = code.at(j, 0);
    const Symbol k = code.at(j, 1);
    auto& cell = cells[std::size_t{i} * q + k];
    if (cell) {
      throw PlsError("cell (" + std::to_string(i) + "," + std::to_string(k) +
                         ") would hold two symbols",
                     {i, k}, {i, k});
    }
    cell = code.at(j, 2);
  }
  return PartialLatinSquare(q, std::move(cells));
}

Code from_pls(const PartialLatinSquare& pls) {
  std::vector<Word> cols;
  for (std::uint32_t i = 0; i < pls.order(); ++i) {
    for (std::uint32_t j = 0; j < pls.order(); ++j) {
      if (auto v = pls.at(i, j)) cols.push_back({i, j, *v});
    }
  }
  if (cols.empty()) throw InvalidArgument("partial Latin square is empty");
  return Code(3, pls.order(), cols);
}

}  // namespace sepcode
