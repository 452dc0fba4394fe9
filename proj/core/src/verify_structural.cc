#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <unordered_map>

#include "sepcode/verify.h"

namespace sepcode {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

void require_length3(const Code& code, const char* what) {
  if (code.length() != 3) {
    throw InvalidArgument(std::string(what) + " requires length 3, got " +
                          std::to_string(code.length()));
  }
}

Word shortened(const Code& code, std::size_t col, std::size_t axis) {
  Word w;
  w.reserve(code.length() - 1);
  for (std::size_t r = 0; r < code.length(); ++r) {
    if (r != axis) w.push_back(code.at(col, r));
  }
  return w;
}

// Columns grouped by their shortened word along `axis`, each group ordered
// by column index.
std::map<Word, std::vector<std::size_t>> group_by_shortened(const Code& code,
                                                            std::size_t axis) {
  std::map<Word, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < code.size(); ++j) {
    groups[shortened(code, j, axis)].push_back(j);
  }
  return groups;
}

// Columns carrying each value on `axis`, in column order.
std::vector<std::vector<std::size_t>> by_axis_value(const Code& code,
                                                    std::size_t axis) {
  std::vector<std::vector<std::size_t>> out(code.alphabet_size());
  for (std::size_t j = 0; j < code.size(); ++j) {
    out[code.at(j, axis)].push_back(j);
  }
  return out;
}

std::uint64_t pair_key(Symbol x, Symbol y) {
  return (std::uint64_t{x} << 32) | y;
}

// Columns indexed by the values of two rows.
class PairIndex {
 public:
  PairIndex(const Code& code, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < code.size(); ++j) {
      map_[pair_key(code.at(j, r1), code.at(j, r2))].push_back(j);
    }
  }

  const std::vector<std::size_t>& find(Symbol x, Symbol y) const {
    auto it = map_.find(pair_key(x, y));
    return it == map_.end() ? empty_ : it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> map_;
  std::vector<std::size_t> empty_;
};

struct ProjectionResult {
  std::optional<Witness> witness;
  std::uint64_t examined = 0;
};

// Finds a shortened word shared by two axis values where one of them has a
// second shortened word. This is exactly the 2-frameproof failure for
// length-3 codes.
ProjectionResult fpc2_projection_scan(const Code& code) {
  ProjectionResult result;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const auto values = by_axis_value(code, axis);
    for (const auto& [word, cols] : group_by_shortened(code, axis)) {
      ++result.examined;
      if (cols.size() < 2) continue;
      for (std::size_t x = 0; x < cols.size(); ++x) {
        for (std::size_t y = 0; y < cols.size(); ++y) {
          if (x == y) continue;
          const Symbol i = code.at(cols[x], axis);
          const auto& same_value = values[i];
          if (same_value.size() < 2) continue;
          const std::size_t other =
              same_value[0] == cols[x] ? same_value[1] : same_value[0];
          Witness w;
          w.kind = WitnessKind::kProjOverlap;
          w.axis = axis;
          w.columns = {cols[x], cols[y], other};
          w.values = {i, code.at(cols[y], axis)};
          result.witness = std::move(w);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

VerifyReport check_fpc2_projection(const Code& code) {
  const auto start = Clock::now();
  require_length3(code, "projection frameproof check");
  auto scan = fpc2_projection_scan(code);
  VerifyReport report;
  report.property = "fpc";
  report.strength = 2;
  report.method = Method::kStructural;
  report.holds = !scan.witness.has_value();
  report.witness = std::move(scan.witness);
  report.examined = scan.examined;
  report.elapsed_ms = millis_since(start);
  return report;
}

VerifyReport check_projection_intersections(const Code& code, int t) {
  const auto start = Clock::now();
  if (code.length() < 2) {
    throw InvalidArgument("projection intersections require length >= 2");
  }
  VerifyReport report;
  report.property = "projection-intersections";
  report.strength = t;
  report.method = Method::kStructural;

  for (std::size_t axis = 0; axis < code.length() && report.holds; ++axis) {
    // (i, i') -> first pair of columns sharing a shortened word.
    std::map<std::pair<Symbol, Symbol>, std::pair<std::size_t, std::size_t>>
        first_shared;
    for (const auto& [word, cols] : group_by_shortened(code, axis)) {
      ++report.examined;
      for (std::size_t x = 0; x < cols.size() && report.holds; ++x) {
        for (std::size_t y = x + 1; y < cols.size(); ++y) {
          std::size_t cx = cols[x];
          std::size_t cy = cols[y];
          if (code.at(cx, axis) > code.at(cy, axis)) std::swap(cx, cy);
          const auto key = std::make_pair(code.at(cx, axis), code.at(cy, axis));
          auto [it, inserted] = first_shared.try_emplace(key, cx, cy);
          if (inserted) continue;
          Witness w;
          w.kind = WitnessKind::kProjOverlap;
          w.axis = axis;
          w.columns = {it->second.first, it->second.second, cx, cy};
          w.values = {key.first, key.second};
          report.witness = std::move(w);
          report.holds = false;
          break;
        }
      }
      if (!report.holds) break;
    }
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

namespace {

struct DeltaScan {
  std::optional<Witness> witness;
  std::uint64_t probes = 0;
};

DeltaScan scan_delta(const Code& code) {
  DeltaScan scan;
  // Free row for each kind, then the two shared rows.
  struct Orientation {
    WitnessKind kind;
    std::size_t free, p, q;
  };
  constexpr Orientation kOrientations[] = {
      {WitnessKind::kDelta1, 1, 0, 2},
      {WitnessKind::kDelta2, 2, 0, 1},
      {WitnessKind::kDelta3, 0, 1, 2},
  };
  for (const auto& o : kOrientations) {
    const PairIndex index(code, o.p, o.q);
    for (const auto& group : by_axis_value(code, o.free)) {
      for (std::size_t x = 0; x < group.size(); ++x) {
        const std::size_t u = group[x];
        for (std::size_t y = x + 1; y < group.size(); ++y) {
          const std::size_t v = group[y];
          const Symbol a = code.at(u, o.p), c = code.at(u, o.q);
          const Symbol b = code.at(v, o.p), d = code.at(v, o.q);
          if (a == b || c == d) continue;
          const Symbol e = code.at(u, o.free);
          scan.probes += 2;
          auto pick = [&](Symbol first, Symbol third) -> std::optional<std::size_t> {
            for (std::size_t j : index.find(first, third)) {
              if (code.at(j, o.free) != e) return j;
            }
            return std::nullopt;
          };
          const auto ad = pick(a, d);
          if (!ad) continue;
          const auto bc = pick(b, c);
          if (!bc) continue;
          Witness w;
          w.kind = o.kind;
          w.columns = {u, *ad, *bc, v};
          w.values = {a, b, c, d, e, code.at(*ad, o.free),
                      code.at(*bc, o.free)};
          scan.witness = std::move(w);
          return scan;
        }
      }
    }
  }
  return scan;
}

struct NablaScan {
  std::optional<Witness> witness;
  std::uint64_t probes = 0;
};

NablaScan scan_nabla(const Code& code) {
  NablaScan scan;
  const std::size_t m = code.size();
  const PairIndex row01(code, 0, 1);
  const PairIndex row02(code, 0, 2);
  const PairIndex row12(code, 1, 2);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_word;
  auto word_key = [&](Symbol x, Symbol y, Symbol z) {
    std::uint64_t h = x;
    h = h * 0x100000001b3ull ^ y;
    h = h * 0x100000001b3ull ^ z;
    return h;
  };
  for (std::size_t j = 0; j < m; ++j) {
    by_word[word_key(code.at(j, 0), code.at(j, 1), code.at(j, 2))].push_back(j);
  }
  auto find_word = [&](Symbol x, Symbol y, Symbol z) -> std::optional<std::size_t> {
    auto it = by_word.find(word_key(x, y, z));
    if (it == by_word.end()) return std::nullopt;
    for (std::size_t j : it->second) {
      if (code.at(j, 0) == x && code.at(j, 1) == y && code.at(j, 2) == z) {
        return j;
      }
    }
    return std::nullopt;
  };
  auto all_differ = [&](std::size_t i, std::size_t j) {
    return code.at(i, 0) != code.at(j, 0) && code.at(i, 1) != code.at(j, 1) &&
           code.at(i, 2) != code.at(j, 2);
  };

  for (std::size_t ia = 0; ia < m; ++ia) {
    const Symbol a0 = code.at(ia, 0), a1 = code.at(ia, 1), a2 = code.at(ia, 2);
    for (std::size_t ib = 0; ib < m; ++ib) {
      if (!all_differ(ia, ib)) continue;
      const Symbol b0 = code.at(ib, 0), b1 = code.at(ib, 1),
                   b2 = code.at(ib, 2);
      ++scan.probes;
      // (a0, b1, c2) fixes c2; (c0, a1, b2) fixes c0; (b0, c1, a2) fixes c1.
      for (std::size_t ix : row01.find(a0, b1)) {
        const Symbol c2 = code.at(ix, 2);
        if (c2 == a2 || c2 == b2) continue;
        for (std::size_t iy : row12.find(a1, b2)) {
          const Symbol c0 = code.at(iy, 0);
          if (c0 == a0 || c0 == b0) continue;
          for (std::size_t iz : row02.find(b0, a2)) {
            const Symbol c1 = code.at(iz, 1);
            if (c1 == a1 || c1 == b1) continue;
            ++scan.probes;
            const auto ic = find_word(c0, c1, c2);
            if (!ic) continue;
            Witness w;
            w.kind = WitnessKind::kNabla;
            w.columns = {ia, ib, *ic, ix, iz, iy};
            scan.witness = std::move(w);
            return scan;
          }
        }
      }
    }
  }
  return scan;
}

}  // namespace

std::optional<Witness> detect_delta(const Code& code) {
  require_length3(code, "four-column pattern detection");
  return scan_delta(code).witness;
}

std::optional<Witness> detect_nabla(const Code& code) {
  require_length3(code, "six-column pattern detection");
  return scan_nabla(code).witness;
}

VerifyReport check_sc3bar_structural(const Code& code) {
  const auto start = Clock::now();
  require_length3(code, "structural separability check");
  VerifyReport report;
  report.property = "sc-bar";
  report.strength = 3;
  report.method = Method::kStructural;

  auto finish = [&](std::optional<Witness> witness) {
    report.holds = !witness.has_value();
    report.witness = std::move(witness);
    report.elapsed_ms = millis_since(start);
    return report;
  };

  auto fpc = fpc2_projection_scan(code);
  report.examined += fpc.examined;
  if (fpc.witness) {
    // Report the coalition and framed word rather than the overlap shape.
    const auto& cols = fpc.witness->columns;
    Witness w;
    w.kind = WitnessKind::kFpcTriple;
    w.columns = {std::min(cols[1], cols[2]), std::max(cols[1], cols[2]),
                 cols[0]};
    return finish(std::move(w));
  }
  auto delta = scan_delta(code);
  report.examined += delta.probes;
  if (delta.witness) return finish(std::move(delta.witness));
  auto nabla = scan_nabla(code);
  report.examined += nabla.probes;
  return finish(std::move(nabla.witness));
}

}  // namespace sepcode
