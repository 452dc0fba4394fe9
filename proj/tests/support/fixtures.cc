#include "fixtures.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "sepcode/construct.h"
#include "sepcode/field.h"

namespace sepcode::testing {
namespace {

using Rng = std::mt19937_64;

std::uint32_t uniform_int(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

PartialLatinSquare square_from_rows(
    const std::vector<std::vector<int>>& rows) {
  const auto q = static_cast<std::uint32_t>(rows.size());
  std::vector<std::optional<Symbol>> cells;
  for (const auto& row : rows) {
    for (int v : row) {
      cells.push_back(v < 0 ? std::nullopt
                            : std::optional<Symbol>(static_cast<Symbol>(v)));
    }
  }
  return PartialLatinSquare(q, std::move(cells));
}

// Words whose three pairwise projections stay injective when added.
class LatinBuilder {
 public:
  explicit LatinBuilder(std::uint32_t q) : q_(q) {}

  bool add(const Word& w) {
    const std::array<std::uint64_t, 3> keys = {key(0, w[0], w[1]),
                                               key(1, w[0], w[2]),
                                               key(2, w[1], w[2])};
    for (auto k : keys) {
      if (used_.count(k)) return false;
    }
    used_.insert(keys.begin(), keys.end());
    words_.push_back(w);
    return true;
  }

  std::vector<Word>& words() { return words_; }

 private:
  std::uint64_t key(std::uint64_t view, Symbol x, Symbol y) const {
    return (view * q_ + x) * q_ + y;
  }

  std::uint32_t q_;
  std::set<std::uint64_t> used_;
  std::vector<Word> words_;
};

Code uniform_code(Rng& rng) {
  const std::uint32_t q = uniform_int(rng, 2, 8);
  const std::uint32_t m = uniform_int(rng, 1, std::min<std::uint32_t>(30, q * q * q));
  std::set<Word> words;
  while (words.size() < m) {
    words.insert({uniform_int(rng, 0, q - 1), uniform_int(rng, 0, q - 1),
                  uniform_int(rng, 0, q - 1)});
  }
  std::vector<Word> cols(words.begin(), words.end());
  std::shuffle(cols.begin(), cols.end(), rng);
  return Code(3, q, cols);
}

void fill_latin(LatinBuilder& b, Rng& rng, std::uint32_t q, std::size_t target) {
  for (int attempt = 0; attempt < 400 && b.words().size() < target; ++attempt) {
    b.add({uniform_int(rng, 0, q - 1), uniform_int(rng, 0, q - 1),
           uniform_int(rng, 0, q - 1)});
  }
}

Code latin_code(Rng& rng) {
  const std::uint32_t q = uniform_int(rng, 2, 8);
  const std::size_t target = uniform_int(rng, 1, std::min<std::uint32_t>(30, q * q));
  LatinBuilder b(q);
  fill_latin(b, rng, q, target);
  return Code(3, q, b.words());
}

const std::vector<Code>& separable_bases() {
  static const std::vector<Code> bases = [] {
    std::vector<Code> out = {c4(), weight_one(), phf_cube(2)};
    for (std::uint64_t rank = 0; rank < 2; ++rank) {
      const auto field = FiniteField::make(7, 1, rank);
      out.push_back(df_code(field, ExponentSet::from_pattern(
                                       ExponentPattern::kAll, 1)));
    }
    out.push_back(trivial_fpc(3, 8));
    return out;
  }();
  return bases;
}

Code subcode(Rng& rng) {
  const auto& bases = separable_bases();
  const Code& base = bases[uniform_int(rng, 0, bases.size() - 1)];
  const std::uint32_t q = base.alphabet_size();
  // Relabel each coordinate and permute coordinates; both preserve every
  // property under test.
  std::array<std::vector<Symbol>, 3> relabel;
  for (auto& perm : relabel) {
    perm.resize(q);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  std::array<std::size_t, 3> rows = {0, 1, 2};
  std::shuffle(rows.begin(), rows.end(), rng);
  std::vector<Word> cols;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (uniform_int(rng, 0, 3) == 0) continue;
    Word w(3);
    for (std::size_t r = 0; r < 3; ++r) {
      w[r] = relabel[r][base.at(j, rows[r])];
    }
    cols.push_back(std::move(w));
  }
  if (cols.empty()) cols.push_back(base.columns().front());
  std::shuffle(cols.begin(), cols.end(), rng);
  return Code(3, q, cols);
}

Code planted(Rng& rng) {
  const std::uint32_t q = uniform_int(rng, 3, 8);
  std::vector<Symbol> sym(q);
  std::iota(sym.begin(), sym.end(), 0);
  auto distinct = [&](std::size_t k) {
    std::shuffle(sym.begin(), sym.end(), rng);
    return std::vector<Symbol>(sym.begin(), sym.begin() + k);
  };
  std::vector<Word> pattern;
  if (uniform_int(rng, 0, 1) == 0) {
    const auto ab = distinct(2), cd = distinct(2);
    const auto efg = distinct(3);
    const Symbol a = ab[0], b = ab[1], c = cd[0], d = cd[1], e = efg[0];
    const Symbol f = efg[1];
    const Symbol g = uniform_int(rng, 0, 1) ? efg[2] : f;
    const std::size_t free = uniform_int(rng, 0, 2);
    const std::size_t p = free == 0 ? 1 : 0;
    const std::size_t qq = free == 2 ? 1 : 2;
    for (const auto& t : {std::array{a, e, c}, std::array{a, f, d},
                          std::array{b, g, c}, std::array{b, e, d}}) {
      Word w(3);
      w[p] = t[0];
      w[free] = t[1];
      w[qq] = t[2];
      pattern.push_back(std::move(w));
    }
  } else {
    const auto r0 = distinct(3), r1 = distinct(3), r2 = distinct(3);
    for (std::size_t k = 0; k < 3; ++k) pattern.push_back({r0[k], r1[k], r2[k]});
    for (std::size_t k = 0; k < 3; ++k) {
      pattern.push_back({r0[k], r1[(k + 1) % 3], r2[(k + 2) % 3]});
    }
  }
  LatinBuilder b(q);
  for (const auto& w : pattern) b.add(w);
  const std::size_t target = uniform_int(
      rng, pattern.size(), std::min<std::uint32_t>(30, q * q));
  fill_latin(b, rng, q, target);
  auto cols = b.words();
  // Occasionally break the square shape so the frameproof stage matters.
  if (uniform_int(rng, 0, 3) == 0 && cols.size() < 30) {
    Word w = {uniform_int(rng, 0, q - 1), uniform_int(rng, 0, q - 1),
              uniform_int(rng, 0, q - 1)};
    if (std::find(cols.begin(), cols.end(), w) == cols.end()) cols.push_back(w);
  }
  std::shuffle(cols.begin(), cols.end(), rng);
  return Code(3, q, cols);
}

}  // namespace

Code c4() {
  return Code(3, 4,
              {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 2, 3}, {1, 3, 2},
               {2, 0, 3}, {2, 1, 2}, {2, 3, 0}, {3, 1, 3}, {3, 2, 0}, {3, 3, 1}});
}

PartialLatinSquare b4() {
  return square_from_rows(
      {{0, 1, 2, -1}, {1, -1, 3, 2}, {3, 2, -1, 0}, {-1, 3, 0, 1}});
}

Code weight_one() { return Code(3, 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

Code delta1_instance() {
  return Code(3, 3, {{0, 0, 0}, {0, 1, 1}, {1, 2, 0}, {1, 0, 1}});
}

Code delta2_instance() {
  return Code(3, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 0}});
}

Code nabla_instance() {
  return Code(3, 3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}, {1, 2, 0},
                     {2, 0, 1}});
}

PartialLatinSquare cube4_square() {
  std::vector<std::vector<int>> rows(16, std::vector<int>(16, -1));
  for (int block = 0; block < 4; ++block) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) rows[block * 4 + i][block * 4 + j] = i * 4 + j;
    }
  }
  return square_from_rows(rows);
}

PartialLatinSquare extended2_square() {
  using Block = std::array<std::array<int, 4>, 4>;
  Block a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = i * 4 + j;
  }
  const Block a1 = {{{10, 11, -1, -1},
                     {14, 15, -1, -1},
                     {-1, -1, 0, 1},
                     {-1, -1, 4, 5}}};
  const Block a2 = {{{-1, -1, 8, 9},
                     {-1, -1, 12, 13},
                     {2, 3, -1, -1},
                     {6, 7, -1, -1}}};
  // Block layout by (block row, block column).
  const Block* layout[4][4] = {{&a, &a1, nullptr, nullptr},
                               {nullptr, &a, &a2, nullptr},
                               {nullptr, nullptr, &a, &a1},
                               {&a2, nullptr, nullptr, &a}};
  std::vector<std::vector<int>> rows(16, std::vector<int>(16, -1));
  for (int br = 0; br < 4; ++br) {
    for (int bc = 0; bc < 4; ++bc) {
      if (!layout[br][bc]) continue;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          rows[br * 4 + i][bc * 4 + j] = (*layout[br][bc])[i][j];
        }
      }
    }
  }
  return square_from_rows(rows);
}

std::vector<NamedCode> all_fixtures() {
  std::vector<NamedCode> out = {
      {"c4", c4()},
      {"b4-square", from_pls(b4())},
      {"weight-one", weight_one()},
      {"delta1", delta1_instance()},
      {"delta2", delta2_instance()},
      {"nabla", nabla_instance()},
      {"cube-r2", phf_cube(2)},
      {"cube-r3", phf_cube(3)},
      {"cube-r4", phf_cube(4)},
      {"extended-k2", phf_extended(2)},
      {"trivial-fpc-3-4", trivial_fpc(3, 4)},
  };
  const auto gf7 = FiniteField::make(7, 1);
  out.push_back({"df-q7", df_code(gf7, ExponentSet::from_pattern(
                                           ExponentPattern::kAll, 1))});
  const auto gf13 = FiniteField::make(13, 1);
  out.push_back({"df-q13", df_code(gf13, ExponentSet::from_pattern(
                                             ExponentPattern::kAll, 2))});
  return out;
}

std::vector<Code> random_corpus(std::size_t count, std::uint64_t seed,
                                CorpusStats* stats) {
  Rng rng(seed);
  std::vector<Code> out;
  out.reserve(count);
  CorpusStats local;
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: out.push_back(uniform_code(rng)); ++local.uniform; break;
      case 1: out.push_back(latin_code(rng)); ++local.latin; break;
      case 2: out.push_back(subcode(rng)); ++local.subcode; break;
      default: out.push_back(planted(rng)); ++local.planted; break;
    }
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace sepcode::testing
