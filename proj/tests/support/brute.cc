#include "brute.h"

#include <algorithm>
#include <functional>
#include <set>

namespace sepcode::testing {
namespace {

void for_each_subset(std::size_t m, std::size_t lo, std::size_t hi,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() >= lo && !cur.empty()) f(cur);
    if (cur.size() == hi) return;
    for (std::size_t j = start; j < m; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

using Poly = std::vector<std::int64_t>;

// Remainder of a modulo monic b over GF(p).
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  while (a.size() >= b.size()) {
    const std::int64_t lead = a.back() % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

std::vector<Word> brute_descendants(const Code& code,
                                    const std::vector<std::size_t>& subset) {
  std::vector<Word> out = {Word{}};
  for (std::size_t r = 0; r < code.length(); ++r) {
    std::vector<Word> next;
    for (const Word& prefix : out) {
      for (std::size_t j : subset) {
        Word w = prefix;
        w.push_back(code.at(j, r));
        next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = std::move(next);
  }
  return out;
}

bool brute_separable(const Code& code, std::size_t lo, std::size_t t) {
  std::set<std::vector<Word>> seen;
  bool ok = true;
  for_each_subset(code.size(), lo, t, [&](const std::vector<std::size_t>& s) {
    if (ok && !seen.insert(brute_descendants(code, s)).second) ok = false;
  });
  return ok;
}

bool brute_frameproof(const Code& code, std::size_t t) {
  bool ok = true;
  for_each_subset(code.size(), 1, t, [&](const std::vector<std::size_t>& s) {
    if (!ok) return;
    const auto desc = brute_descendants(code, s);
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (std::find(s.begin(), s.end(), j) != s.end()) continue;
      const auto c = code.column(j);
      if (std::binary_search(desc.begin(), desc.end(), Word(c.begin(), c.end()))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool brute_perfect_hash(const Code& code, std::size_t t) {
  bool ok = true;
  for_each_subset(code.size(), t, t, [&](const std::vector<std::size_t>& s) {
    if (!ok) return;
    for (std::size_t r = 0; r < code.length(); ++r) {
      std::set<Symbol> row;
      for (std::size_t j : s) row.insert(code.at(j, r));
      if (row.size() == s.size()) return;
    }
    ok = false;
  });
  return ok;
}

bool trial_division_irreducible(const std::vector<std::uint32_t>& poly,
                                std::uint32_t p) {
  const Poly f(poly.begin(), poly.end());
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::vector<std::int64_t> low(d, 0);
    while (true) {
      Poly g = low;
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++low[i] == p) low[i++] = 0;
      if (i == d) break;
    }
  }
  return deg >= 1;
}

std::uint64_t brute_order(const FiniteField& field, Element x) {
  Element y = x;
  std::uint64_t k = 1;
  while (y != 1) {
    y = field.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace sepcode::testing
