#include "sepcode/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sepcode {
namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > kSat - a ? kSat : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void require_q(std::uint64_t q, std::uint64_t min) {
  if (q < min) {
    throw InvalidArgument("alphabet size q=" + std::to_string(q) +
                          " below minimum " + std::to_string(min));
  }
}

}  // namespace

const char* to_string(BoundKind kind) {
  return kind == BoundKind::kUpper ? "upper" : "lower";
}

BoundResult upper_general(std::uint64_t n, std::uint64_t q, std::uint64_t t) {
  if (t < 3) throw InvalidArgument("general upper bound needs t >= 3");
  if (n < 2) throw InvalidArgument("general upper bound needs n >= 2");
  require_q(q, 1);
  const std::uint64_t d = t - 1;
  const std::uint64_t r = n % d;
  const std::uint64_t hi = sat_pow(q, (n + d - 1) / d);
  const std::uint64_t lo = sat_pow(q, n / d);
  const std::uint64_t mixed =
      sat_add(sat_mul(r, hi - 1), sat_mul(d - r, lo - 1));
  BoundResult b;
  b.value = std::max(hi, mixed);
  b.kind = BoundKind::kUpper;
  b.source = "upper-general";
  b.notes = "requires M > q";
  b.conditional = true;
  return b;
}

BoundResult upper_n_eq_t(std::uint64_t n, std::uint64_t q) {
  require_q(q, 1);
  BoundResult b;
  b.value = n <= q ? sat_mul(q, q) : sat_mul(n, q);
  b.source = "upper-n-eq-t";
  b.notes = n <= q ? "n <= q" : "n > q";
  return b;
}

BoundResult upper_3bar_len3(std::uint64_t q) {
  require_q(q, 4);
  BoundResult b;
  b.value = sat_mul(3, sat_mul(q, q)) / 4;
  b.source = "upper-3bar-len3";
  b.notes = "requires q >= 4";
  return b;
}

BoundResult lower_3bar_len3(std::uint64_t q) {
  require_q(q, 4);
  BoundResult b;
  b.value = sat_pow(isqrt(q), 3);
  b.kind = BoundKind::kLower;
  b.source = "lower-cube";
  b.notes = "witnessed by the cube code with r = floor(sqrt(q))";
  return b;
}

BoundResult trivial_fpc_size(std::uint64_t n, std::uint64_t q,
                             std::uint64_t t) {
  if (n < 2 || n >= t) {
    throw InvalidArgument("block frameproof size needs 2 <= n < t");
  }
  require_q(q, 2);
  BoundResult b;
  b.value = sat_mul(n, q - 1);
  b.source = "exact-short-length";
  b.notes = "attained by the block frameproof code";
  b.optimal = true;
  return b;
}

std::vector<BoundResult> applicable_bounds(std::uint64_t n, std::uint64_t q,
                                           std::uint64_t t) {
  std::vector<BoundResult> out;
  if (n >= 2 && n < t && q >= 2) {
    out.push_back(trivial_fpc_size(n, q, t));
    return out;
  }
  if (t >= 3 && n >= 2) out.push_back(upper_general(n, q, t));
  if (n == t) out.push_back(upper_n_eq_t(n, q));
  if (n == 3 && t == 3) {
    if (q >= 4) {
      out.push_back(upper_3bar_len3(q));
      out.push_back(lower_3bar_len3(q));
    } else if (q == 2) {
      BoundResult b;
      b.value = 3;
      b.source = "exact-3bar-len3-q2";
      b.notes = "attained by the weight-one code";
      b.optimal = true;
      out.push_back(b);
    }
  }
  std::stable_partition(out.begin(), out.end(), [](const BoundResult& b) {
    return b.kind == BoundKind::kUpper;
  });
  return out;
}

std::optional<BoundResult> tightest_upper(std::uint64_t n, std::uint64_t q,
                                          std::uint64_t t) {
  std::optional<BoundResult> best;
  for (BoundResult b : applicable_bounds(n, q, t)) {
    if (b.kind != BoundKind::kUpper) continue;
    if (b.conditional) {
      b.value = std::max(b.value, q);
      b.conditional = false;
      b.notes = "max(q, conditional bound)";
    }
    if (!best || b.value < best->value) best = b;
  }
  return best;
}

std::optional<Certification> certify(const Code& code,
                                     const VerifyReport& report) {
  if (report.property != "sc-bar" || !report.strength) {
    throw InvalidArgument("certify needs a t-bar separability report, got '" +
                          report.property + "'");
  }
  if (!report.holds) {
    throw InvalidArgument("certify needs a report whose property holds");
  }
  const auto bound = tightest_upper(code.length(), code.alphabet_size(),
                                    static_cast<std::uint64_t>(*report.strength));
  if (!bound) return std::nullopt;
  const std::uint64_t m = code.size();
  if (m > bound->value) {
    throw Error("code size " + std::to_string(m) + " exceeds upper bound " +
                std::to_string(bound->value) + " (" + bound->source + ")");
  }
  Certification c;
  c.size = m;
  c.bound = *bound;
  c.gap = bound->value - m;
  c.optimal = c.gap == 0;
  return c;
}

}  // namespace sepcode
