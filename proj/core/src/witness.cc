#include <algorithm>
#include <set>

#include "sepcode/verify.h"

namespace sepcode {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kScPair: return "SC_PAIR";
    case WitnessKind::kFpcTriple: return "FPC_TRIPLE";
    case WitnessKind::kDelta1: return "DELTA1";
    case WitnessKind::kDelta2: return "DELTA2";
    case WitnessKind::kDelta3: return "DELTA3";
    case WitnessKind::kNabla: return "NABLA";
    case WitnessKind::kPhfSet: return "PHF_SET";
    case WitnessKind::kProjOverlap: return "PROJ_OVERLAP";
  }
  return "?";
}

const char* to_string(Method method) {
  return method == Method::kOracle ? "oracle" : "structural";
}

namespace {

bool valid_distinct(const Code& code, const std::vector<std::size_t>& cols) {
  if (cols.empty()) return false;
  std::set<std::size_t> seen;
  for (std::size_t c : cols) {
    if (c >= code.size() || !seen.insert(c).second) return false;
  }
  return true;
}

bool delta_holds(const Code& code, const Witness& w) {
  if (code.length() != 3 || w.columns.size() != 4 || w.values.size() != 7 ||
      !valid_distinct(code, w.columns)) {
    return false;
  }
  std::size_t free = 1, p = 0, q = 2;
  if (w.kind == WitnessKind::kDelta2) {
    free = 2, p = 0, q = 1;
  } else if (w.kind == WitnessKind::kDelta3) {
    free = 0, p = 1, q = 2;
  }
  const auto& v = w.values;
  const Symbol a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5],
               g = v[6];
  if (a == b || c == d || e == f || e == g) return false;
  const Symbol expect[4][3] = {{a, e, c}, {a, f, d}, {b, g, c}, {b, e, d}};
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t j = w.columns[k];
    if (code.at(j, p) != expect[k][0] || code.at(j, free) != expect[k][1] ||
        code.at(j, q) != expect[k][2]) {
      return false;
    }
  }
  return true;
}

bool nabla_holds(const Code& code, const Witness& w) {
  if (code.length() != 3 || w.columns.size() != 6 ||
      !valid_distinct(code, w.columns)) {
    return false;
  }
  auto at = [&](std::size_t k, std::size_t r) {
    return code.at(w.columns[k], r);
  };
  for (std::size_t r = 0; r < 3; ++r) {
    if (at(0, r) == at(1, r) || at(0, r) == at(2, r) || at(1, r) == at(2, r)) {
      return false;
    }
  }
  // Mixed column k takes row r from base column (k + r) mod 3.
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t r = 0; r < 3; ++r) {
      if (at(3 + k, r) != at((k + r) % 3, r)) return false;
    }
  }
  return true;
}

Word shortened(const Code& code, std::size_t col, std::size_t axis) {
  Word w;
  for (std::size_t r = 0; r < code.length(); ++r) {
    if (r != axis) w.push_back(code.at(col, r));
  }
  return w;
}

bool overlap_holds(const Code& code, const Witness& w) {
  if (!w.axis || *w.axis >= code.length() || w.values.size() != 2 ||
      !valid_distinct(code, w.columns)) {
    return false;
  }
  const std::size_t axis = *w.axis;
  const Symbol i = w.values[0], i2 = w.values[1];
  if (i == i2) return false;
  const auto& c = w.columns;
  auto value = [&](std::size_t k) { return code.at(c[k], axis); };
  auto word = [&](std::size_t k) { return shortened(code, c[k], axis); };
  if (c.size() == 3) {
    return value(0) == i && value(1) == i2 && value(2) == i &&
           word(0) == word(1) && word(0) != word(2);
  }
  if (c.size() == 4) {
    return value(0) == i && value(1) == i2 && value(2) == i &&
           value(3) == i2 && word(0) == word(1) && word(2) == word(3) &&
           word(0) != word(2);
  }
  return false;
}

}  // namespace

bool witness_holds(const Code& code, const Witness& w) {
  switch (w.kind) {
    case WitnessKind::kScPair: {
      if (!valid_distinct(code, w.columns) || !valid_distinct(code, w.second)) {
        return false;
      }
      auto a = w.columns, b = w.second;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a != b && descendant_key(code, a) == descendant_key(code, b);
    }
    case WitnessKind::kFpcTriple: {
      if (w.columns.size() < 2 || !valid_distinct(code, w.columns)) {
        return false;
      }
      const std::span<const std::size_t> coalition(w.columns.data(),
                                                   w.columns.size() - 1);
      return in_descendant(code, coalition, code.column(w.columns.back()));
    }
    case WitnessKind::kDelta1:
    case WitnessKind::kDelta2:
    case WitnessKind::kDelta3:
      return delta_holds(code, w);
    case WitnessKind::kNabla:
      return nabla_holds(code, w);
    case WitnessKind::kPhfSet: {
      if (w.columns.size() < 2 || !valid_distinct(code, w.columns)) {
        return false;
      }
      for (std::size_t r = 0; r < code.length(); ++r) {
        std::set<Symbol> row;
        for (std::size_t c : w.columns) row.insert(code.at(c, r));
        if (row.size() == w.columns.size()) return false;
      }
      return true;
    }
    case WitnessKind::kProjOverlap:
      return overlap_holds(code, w);
  }
  return false;
}

}  // namespace sepcode
