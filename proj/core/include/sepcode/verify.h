#ifndef SEPCODE_VERIFY_H_
#define SEPCODE_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcode/code.h"

namespace sepcode {

enum class WitnessKind {
  kScPair,       // two distinct subsets with equal descendant codes
  kFpcTriple,    // coalition columns followed by the framed codeword
  kDelta1,       // four-column pattern, free coordinate 1 (0-based)
  kDelta2,       // free coordinate 2
  kDelta3,       // free coordinate 0
  kNabla,        // six-column cyclic pattern
  kPhfSet,       // t columns no coordinate separates
  kProjOverlap,  // shortened codes on one axis overlap illegally
};

const char* to_string(WitnessKind kind);

// A violation certificate. Column indices refer to the checked code.
//
//  kScPair      columns = first subset, second = second subset
//  kFpcTriple   columns = coalition..., framed codeword last
//  kDelta*      columns in pattern order (a,e,c) (a,f,d) (b,g,c) (b,e,d)
//               after moving the free coordinate to the middle;
//               values = a b c d e f g
//  kNabla       columns = a, b, c, (a1,b2,c3), (b1,c2,a3), (c1,a2,b3)
//  kPhfSet      columns = the unseparated t-subset
//  kProjOverlap axis set; values = the two axis values i, i'.
//               Three columns (i,w) (i',w) (i,w'): a shared shortened word
//               while A_i has a second element. Four columns (i,w) (i',w)
//               (i,w') (i',w'): two shared words.
struct Witness {
  WitnessKind kind = WitnessKind::kScPair;
  std::vector<std::size_t> columns;
  std::vector<std::size_t> second;
  std::optional<std::size_t> axis;
  std::vector<Symbol> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Method { kOracle, kStructural };

const char* to_string(Method method);

struct VerifyReport {
  std::string property;
  std::optional<int> strength;
  bool holds = true;
  std::optional<Witness> witness;
  Method method = Method::kOracle;
  std::uint64_t examined = 0;
  std::int64_t elapsed_ms = 0;
};

struct VerifyOptions {
  std::uint64_t budget = 100'000'000;
  unsigned workers = 1;
};

// Hashes the descendant key of every subset of size <= t and reports the
// first collision in (size, lex) enumeration order. Throws BudgetExceeded
// when sum_{s<=t} C(M, s) > budget.
VerifyReport oracle_sc_bar(const Code& code, int t,
                           const VerifyOptions& options = {});
// Same, restricted to subsets of size exactly t.
VerifyReport oracle_sc_exact(const Code& code, int t,
                             const VerifyOptions& options = {});

// Frameproof property straight from the definition, any length.
VerifyReport check_fpc(const Code& code, int t,
                       const VerifyOptions& options = {});
// 2-frameproof via shortened-code overlaps; length 3 only.
VerifyReport check_fpc2_projection(const Code& code);
// Pairwise overlaps of same-axis shortened codes are at most one word.
// Necessary for t-bar separability with t >= 2.
VerifyReport check_projection_intersections(const Code& code, int t);

std::optional<Witness> detect_delta(const Code& code);
std::optional<Witness> detect_nabla(const Code& code);

// 3-bar separability of a length-3 code: 2-frameproof and free of the
// four-column and six-column forbidden patterns.
VerifyReport check_sc3bar_structural(const Code& code);

// Every t columns are separated by some coordinate.
VerifyReport check_phf(const Code& code, int t,
                       const VerifyOptions& options = {});

// Re-checks a witness against the code without any detection machinery.
bool witness_holds(const Code& code, const Witness& witness);

}  // namespace sepcode

#endif  // SEPCODE_VERIFY_H_
