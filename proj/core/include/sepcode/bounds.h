#ifndef SEPCODE_BOUNDS_H_
#define SEPCODE_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcode/code.h"
#include "sepcode/verify.h"

namespace sepcode {

enum class BoundKind { kUpper, kLower };

const char* to_string(BoundKind kind);

// A closed-form bound on the largest t-bar separable (n, M, q) code.
struct BoundResult {
  std::uint64_t value = 0;
  BoundKind kind = BoundKind::kUpper;
  std::string source;  // stable tag such as "upper-general"
  std::string notes;
  bool conditional = false;  // only valid when the maximum exceeds q
  bool optimal = false;      // the value is attained, so it is exact

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

// max{q^ceil(n/(t-1)), r(q^ceil(n/(t-1)) - 1) + (t-1-r)(q^floor(n/(t-1)) - 1)}
// with r = n mod (t-1); conditional on the maximum exceeding q.
BoundResult upper_general(std::uint64_t n, std::uint64_t q, std::uint64_t t);

// Upper bound when the length equals the strength: q^2 if n <= q, else nq.
BoundResult upper_n_eq_t(std::uint64_t n, std::uint64_t q);

// floor(3q^2 / 4) for length-3, strength-3 codes; q >= 4.
BoundResult upper_3bar_len3(std::uint64_t q);

// floor(sqrt(q))^3 from the cube construction; q >= 4.
BoundResult lower_3bar_len3(std::uint64_t q);

// n(q-1), attained by the block frameproof code; 2 <= n < t.
BoundResult trivial_fpc_size(std::uint64_t n, std::uint64_t q,
                             std::uint64_t t);

// Every bound that applies to (n, q, t), upper bounds first.
std::vector<BoundResult> applicable_bounds(std::uint64_t n, std::uint64_t q,
                                           std::uint64_t t);

// The tightest unconditional upper bound among applicable_bounds, with the
// conditional general bound counted as max(q, value).
std::optional<BoundResult> tightest_upper(std::uint64_t n, std::uint64_t q,
                                          std::uint64_t t);

struct Certification {
  std::uint64_t size = 0;
  BoundResult bound;
  bool optimal = false;
  std::uint64_t gap = 0;
};

// Compares a verified code against the tightest upper bound for its
// parameters; nullopt when no upper bound applies. The report must be a
// holding t-bar separability report with a strength.
std::optional<Certification> certify(const Code& code,
                                     const VerifyReport& report);

}  // namespace sepcode

#endif  // SEPCODE_BOUNDS_H_
