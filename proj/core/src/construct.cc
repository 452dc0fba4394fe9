#include "sepcode/construct.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <set>
#include <unordered_map>

#include "parallel.h"

namespace sepcode {

Code trivial_fpc(std::size_t n, std::uint32_t q) {
  if (n < 2) throw InvalidArgument("trivial frameproof code needs n >= 2");
  if (q < 2) throw InvalidArgument("trivial frameproof code needs q >= 2");
  std::vector<Word> cols;
  cols.reserve(n * (q - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (Symbol s = 1; s < q; ++s) {
      Word w(n, 0);
      w[i] = s;
      cols.push_back(std::move(w));
    }
  }
  return Code(n, q, cols);
}

Code phf_cube(std::uint32_t r) {
  if (r < 2) throw InvalidArgument("cube construction needs r >= 2");
  if (std::uint64_t{r} * r > 0xffffffffull / r) {
    throw InvalidArgument("cube construction: r too large");
  }
  std::vector<Word> cols;
  cols.reserve(std::size_t{r} * r * r);
  for (Symbol a = 0; a < r; ++a) {
    for (Symbol b = 0; b < r; ++b) {
      for (Symbol c = 0; c < r; ++c) {
        cols.push_back({a * r + b, a * r + c, b * r + c});
      }
    }
  }
  return Code(3, r * r, cols);
}

ExtendedParts phf_extended_parts(std::uint32_t k) {
  if (k < 2 || k % 2 != 0) {
    throw InvalidArgument("extended construction needs an even k >= 2, got " +
                          std::to_string(k));
  }
  if (k > 64) throw InvalidArgument("extended construction: k too large");
  const std::uint32_t r = k * k;
  const std::uint32_t q = r * r;
  auto g = [&](std::uint32_t x, std::uint32_t y) { return r - (x + 1) * k + y; };

  std::vector<Word> even;
  std::vector<Word> odd;
  for (std::uint32_t x = 0; x < k; ++x) {
    for (std::uint32_t y = 0; y < k; ++y) {
      for (std::uint32_t z = 0; z < k; ++z) {
        for (std::uint32_t h = 0; h < r; ++h) {
          const Symbol g1 = (x * k + y + h * r) % q;
          if (h % 2 == 0) {
            even.push_back({g1, (x * k + z + (h + 1) * r) % q,
                            (g(x, y) * r + g(x, z)) % q});
          } else {
            odd.push_back({g1, (g(x, z) + (h + 1) * r) % q,
                           (g(x, y) * r + x * k + z) % q});
          }
        }
      }
    }
  }
  return {phf_cube(r), Code(3, q, even), Code(3, q, odd)};
}

Code phf_extended(std::uint32_t k) {
  auto parts = phf_extended_parts(k);
  std::vector<Word> cols = parts.cube.columns();
  for (const Code* part : {&parts.even, &parts.odd}) {
    auto more = part->columns();
    cols.insert(cols.end(), more.begin(), more.end());
  }
  return Code(3, parts.cube.alphabet_size(), cols);
}

const char* to_string(ExponentPattern pattern) {
  switch (pattern) {
    case ExponentPattern::kAll: return "all";
    case ExponentPattern::kMod3Nonzero: return "mod3-nonzero";
    case ExponentPattern::kEven: return "even";
    case ExponentPattern::kMod3Zero: return "mod3-zero";
    case ExponentPattern::kCustom: return "custom";
  }
  return "?";
}

ExponentPattern parse_exponent_pattern(std::string_view name) {
  for (auto p : {ExponentPattern::kAll, ExponentPattern::kMod3Nonzero,
                 ExponentPattern::kEven, ExponentPattern::kMod3Zero,
                 ExponentPattern::kCustom}) {
    if (name == to_string(p)) return p;
  }
  throw InvalidArgument("unknown exponent pattern '" + std::string(name) +
                        "'");
}

ExponentSet ExponentSet::from_pattern(ExponentPattern pattern,
                                      std::uint64_t t) {
  if (pattern == ExponentPattern::kCustom) {
    throw InvalidArgument("custom exponent sets need an explicit list");
  }
  ExponentSet e;
  e.t = t;
  e.pattern = pattern;
  for (std::uint64_t i = 0; i < t; ++i) {
    bool keep = true;
    switch (pattern) {
      case ExponentPattern::kMod3Nonzero: keep = i % 3 != 0; break;
      case ExponentPattern::kEven: keep = i % 2 == 0; break;
      case ExponentPattern::kMod3Zero: keep = i % 3 == 0; break;
      default: break;
    }
    if (keep) e.s.push_back(i);
  }
  return e;
}

ExponentSet ExponentSet::custom(std::uint64_t t, std::vector<std::uint64_t> s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InvalidArgument("exponent set has repeated entries");
  }
  if (!s.empty() && s.back() >= t) {
    throw InvalidArgument("exponent " + std::to_string(s.back()) +
                          " outside [0, " + std::to_string(t) + ")");
  }
  ExponentSet e;
  e.t = t;
  e.s = std::move(s);
  e.pattern = ExponentPattern::kCustom;
  return e;
}

std::optional<std::uint64_t> ExponentSet::nominal_size(std::uint64_t q) const {
  const std::uint64_t base = q * (q - 1);
  switch (pattern) {
    case ExponentPattern::kAll: return base / 6;
    case ExponentPattern::kMod3Nonzero: return base / 9;
    case ExponentPattern::kEven: return base / 12;
    case ExponentPattern::kMod3Zero: return base / 18;
    case ExponentPattern::kCustom: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::uint64_t sixth(const FiniteField& field) {
  const std::uint64_t q = field.order();
  if (q % 6 != 1) {
    throw InvalidArgument("field order " + std::to_string(q) +
                          " is not 1 mod 6");
  }
  return (q - 1) / 6;
}

void check_exponents(const FiniteField& field, const ExponentSet& s) {
  const std::uint64_t t = sixth(field);
  if (s.t != t) {
    throw InvalidArgument("exponent set built for t=" + std::to_string(s.t) +
                          ", field has t=" + std::to_string(t));
  }
  for (std::uint64_t i : s.s) {
    if (i >= t) throw InvalidArgument("exponent outside [0, t)");
  }
}

// Field context shared by the criterion and its re-check.
struct DfContext {
  const FiniteField& f;
  Element xi;
  Element xi2;
  std::vector<char> in_s;  // indexed by discrete log

  DfContext(const FiniteField& field, const ExponentSet& s)
      : f(field),
        xi(cube_root(field).xi),
        xi2(field.mul(xi, xi)),
        in_s(field.order() - 1, 0) {
    for (std::uint64_t i : s.s) in_s[i] = 1;
  }

  Element e(std::uint64_t i) const { return f.exp(static_cast<std::int64_t>(i)); }

  // The exponent of -num / den when it is nonzero and lies in S.
  std::optional<std::uint64_t> solve(Element num, Element den) const {
    if (num == 0) return std::nullopt;
    const std::uint64_t k = f.dlog(f.div(f.neg(num), den));
    if (!in_s[k]) return std::nullopt;
    return k;
  }
};

template <typename... T>
std::size_t distinct_count(T... v) {
  return std::set<std::uint64_t>{static_cast<std::uint64_t>(v)...}.size();
}

bool six_side_condition(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                        std::uint64_t u, std::uint64_t v, std::uint64_t w) {
  if (x == y && y == z) {
    return x != u && x != v && x != w && distinct_count(u, v, w) == 3;
  }
  if (u == v && v == w) {
    return u != x && u != y && u != z && distinct_count(x, y, z) == 3;
  }
  return distinct_count(x, y, z, u, v, w) == 6;
}

std::optional<DfSolution> solve_four(const DfContext& c,
                                     const std::vector<std::uint64_t>& s) {
  const FiniteField& f = c.f;
  for (std::uint64_t x : s) {
    for (std::uint64_t w : s) {
      if (x == w) continue;
      const auto z = c.solve(f.add(c.e(w), f.mul(c.e(x), c.xi)), c.xi2);
      if (!z) continue;
      const auto y = c.solve(f.add(c.e(x), f.mul(c.e(w), c.xi)), c.xi2);
      if (!y) continue;
      if (distinct_count(x, *y, *z, w) != 4) continue;
      return DfSolution{DfSystem::kDelta, {x, *y, *z, w}};
    }
  }
  return std::nullopt;
}

std::optional<DfSolution> solve_six(const DfContext& c,
                                    const std::vector<std::uint64_t>& s) {
  const FiniteField& f = c.f;
  struct Triple {
    std::uint64_t a, b, c;
  };
  // Right-hand solutions (u, v, w) keyed by w xi - u.
  std::unordered_map<Element, std::vector<Triple>> right;
  for (std::uint64_t u : s) {
    for (std::uint64_t v : s) {
      const auto w = c.solve(f.add(c.e(u), f.mul(c.e(v), c.xi)), c.xi2);
      if (!w) continue;
      right[f.sub(f.mul(c.e(*w), c.xi), c.e(u))].push_back({u, v, *w});
    }
  }
  for (std::uint64_t x : s) {
    for (std::uint64_t y : s) {
      const auto z = c.solve(f.add(c.e(x), f.mul(c.e(y), c.xi2)), c.xi);
      if (!z) continue;
      auto it = right.find(f.sub(f.mul(c.e(x), c.xi), c.e(*z)));
      if (it == right.end()) continue;
      for (const Triple& r : it->second) {
        if (six_side_condition(x, y, *z, r.a, r.b, r.c)) {
          return DfSolution{DfSystem::kNabla, {x, y, *z, r.a, r.b, r.c}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Code df_code(const FiniteField& field, const ExponentSet& s) {
  check_exponents(field, s);
  if (s.s.empty()) throw InvalidArgument("exponent set is empty");
  const Element xi = cube_root(field).xi;
  const Element xi2 = field.mul(xi, xi);
  const auto q = static_cast<std::uint32_t>(field.order());
  std::vector<Word> cols;
  cols.reserve(s.s.size() * q);
  for (std::uint64_t i : s.s) {
    const Element base = field.exp(static_cast<std::int64_t>(i));
    const Element b1 = field.mul(base, xi);
    const Element b2 = field.mul(base, xi2);
    for (Element g = 0; g < q; ++g) {
      cols.push_back({field.add(base, g), field.add(b1, g), field.add(b2, g)});
    }
  }
  return Code(3, q, cols);
}

const char* to_string(DfSystem system) {
  switch (system) {
    case DfSystem::kNone: return "none";
    case DfSystem::kDelta: return "delta";
    case DfSystem::kNabla: return "nabla";
  }
  return "?";
}

DfCriterionResult df_criterion(const FiniteField& field, const ExponentSet& s) {
  check_exponents(field, s);
  const DfContext c(field, s);
  DfCriterionResult result;
  if (auto sol = solve_four(c, s.s)) {
    result.solution = std::move(sol);
  } else if (auto sol6 = solve_six(c, s.s)) {
    result.solution = std::move(sol6);
  }
  result.admissible = !result.solution.has_value();
  return result;
}

bool df_solution_holds(const FiniteField& field, const ExponentSet& s,
                       const DfSolution& solution) {
  check_exponents(field, s);
  const DfContext c(field, s);
  const auto& v = solution.exponents;
  for (std::uint64_t i : v) {
    if (i >= c.in_s.size() || !c.in_s[i]) return false;
  }
  const FiniteField& f = field;
  auto lin = [&](std::uint64_t a, Element ka, std::uint64_t b, Element kb,
                 std::uint64_t d, Element kd) {
    return f.add(f.add(f.mul(c.e(a), ka), f.mul(c.e(b), kb)),
                 f.mul(c.e(d), kd));
  };
  if (solution.system == DfSystem::kDelta && v.size() == 4) {
    const auto [x, y, z, w] = std::array{v[0], v[1], v[2], v[3]};
    return lin(w, 1, x, c.xi, z, c.xi2) == 0 &&
           lin(x, 1, w, c.xi, y, c.xi2) == 0 && distinct_count(x, y, z, w) == 4;
  }
  if (solution.system == DfSystem::kNabla && v.size() == 6) {
    const auto [x, y, z, u, vv, w] =
        std::array{v[0], v[1], v[2], v[3], v[4], v[5]};
    const Element lhs = f.add(f.mul(c.e(x), c.xi), c.e(u));
    const Element rhs = f.add(c.e(z), f.mul(c.e(w), c.xi));
    return lin(x, 1, y, c.xi2, z, c.xi) == 0 &&
           lin(u, 1, vv, c.xi, w, c.xi2) == 0 && lhs == rhs &&
           six_side_condition(x, y, z, u, vv, w);
  }
  return false;
}

EpsSelection EpsSelection::parse(std::string_view text) {
  EpsSelection sel;
  if (text == "first") return sel;
  if (text == "all") {
    sel.mode = Mode::kAll;
    return sel;
  }
  auto number = [&](std::string_view part) {
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InvalidArgument("bad primitive-element selection '" +
                            std::string(text) + "'");
    }
    return v;
  };
  sel.mode = Mode::kRange;
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    sel.lo = sel.hi = number(text);
  } else {
    sel.lo = number(text.substr(0, dash));
    sel.hi = number(text.substr(dash + 1));
    if (sel.lo > sel.hi) {
      throw InvalidArgument("empty primitive-element range '" +
                            std::string(text) + "'");
    }
  }
  return sel;
}

std::vector<DfSearchRecord> df_search(std::uint64_t q,
                                      const DfSearchOptions& options) {
  if (q % 6 != 1) {
    throw InvalidArgument("search needs q = 1 mod 6, got " + std::to_string(q));
  }
  const auto [p, m] = prime_power(q);
  if (options.patterns.empty()) throw InvalidArgument("no patterns requested");
  const FiniteField base = FiniteField::make(p, m);
  const std::uint64_t t = (q - 1) / 6;

  std::vector<ExponentSet> sets;
  for (ExponentPattern pat : options.patterns) {
    sets.push_back(pat == ExponentPattern::kCustom
                       ? ExponentSet::custom(t, options.custom)
                       : ExponentSet::from_pattern(pat, t));
    if (sets.back().s.empty()) {
      throw InvalidArgument(std::string("pattern ") + to_string(pat) +
                            " is empty for q=" + std::to_string(q));
    }
  }

  const auto prims = base.primitive_elements();
  std::uint64_t lo = 0;
  std::uint64_t hi = prims.size() - 1;
  if (options.eps.mode == EpsSelection::Mode::kRange) {
    if (options.eps.lo >= prims.size()) {
      throw InvalidArgument("primitive-element rank " +
                            std::to_string(options.eps.lo) + " exceeds " +
                            std::to_string(prims.size() - 1));
    }
    lo = options.eps.lo;
    hi = std::min<std::uint64_t>(options.eps.hi, prims.size() - 1);
  }

  const std::uint64_t ranks = hi - lo + 1;
  const std::size_t cells = ranks * sets.size();
  std::vector<DfSearchRecord> table(cells);
  std::atomic<std::size_t> next{0};
  internal::run_workers(std::max(1u, options.workers), [&](unsigned) {
    for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1)) {
      const std::uint64_t rank = lo + i / sets.size();
      const ExponentSet& s = sets[i % sets.size()];
      const FiniteField field = base.with_primitive(prims[rank]);
      auto crit = df_criterion(field, s);
      DfSearchRecord& rec = table[i];
      rec.field = field.descriptor();
      rec.eps_rank = rank;
      rec.s = s;
      rec.admissible = crit.admissible;
      rec.size = q * s.s.size();
      rec.violation = std::move(crit.solution);
    }
  });

  if (options.eps.mode != EpsSelection::Mode::kFirst) return table;
  std::vector<bool> found(sets.size(), false);
  std::vector<DfSearchRecord> out;
  for (std::size_t i = 0; i < cells; ++i) {
    const std::size_t pat = i % sets.size();
    if (table[i].admissible && !found[pat]) {
      found[pat] = true;
      out.push_back(std::move(table[i]));
    }
  }
  return out;
}

}  // namespace sepcode
