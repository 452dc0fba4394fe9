#ifndef SEPCODE_CONSTRUCT_H_
#define SEPCODE_CONSTRUCT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcode/code.h"
#include "sepcode/field.h"

namespace sepcode {

// Block code of length n over q symbols: block i puts 1..q-1 in row i and 0
// elsewhere. M = n(q - 1).
Code trivial_fpc(std::size_t n, std::uint32_t q);

// {(ar + b, ar + c, br + c) : a, b, c in Z_r} over r^2 symbols, with a
// varying slowest and c fastest.
Code phf_cube(std::uint32_t r);

// The three pieces of the extended construction for even k, r = k^2,
// alphabet r^2. `cube` is phf_cube(r); `even` and `odd` come from the even
// and odd shift parameters h in Z_r, enumerated with x, y, z in Z_k varying
// slowest to fastest and h innermost.
struct ExtendedParts {
  Code cube;
  Code even;
  Code odd;
};

ExtendedParts phf_extended_parts(std::uint32_t k);
// cube, then even, then odd part; M = r^3 + k r^2.
Code phf_extended(std::uint32_t k);

enum class ExponentPattern { kAll, kMod3Nonzero, kEven, kMod3Zero, kCustom };

const char* to_string(ExponentPattern pattern);
// Accepts all, mod3-nonzero, even, mod3-zero.
ExponentPattern parse_exponent_pattern(std::string_view name);

// A set of exponents S within [0, t), t = (q - 1) / 6.
struct ExponentSet {
  std::uint64_t t = 0;
  std::vector<std::uint64_t> s;  // sorted, distinct
  ExponentPattern pattern = ExponentPattern::kCustom;

  static ExponentSet from_pattern(ExponentPattern pattern, std::uint64_t t);
  static ExponentSet custom(std::uint64_t t, std::vector<std::uint64_t> s);

  // The size q * |S| the pattern is usually quoted with (floor of
  // q(q-1)/6, /9, /12, /18); none for custom sets.
  std::optional<std::uint64_t> nominal_size(std::uint64_t q) const;

  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;
};

// Translates of the base blocks (eps^i, xi eps^i, xi^2 eps^i), i in S, by
// every g in the field: columns run over i in S (outer) and g in encoding
// order (inner). M = q |S|.
Code df_code(const FiniteField& field, const ExponentSet& s);

// Which forbidden shape an inadmissible exponent set produces.
enum class DfSystem {
  kNone,
  kDelta,  // four unknowns x, y, z, w
  kNabla,  // six unknowns x, y, z, u, v, w
};

const char* to_string(DfSystem system);

struct DfSolution {
  DfSystem system = DfSystem::kNone;
  std::vector<std::uint64_t> exponents;  // (x,y,z,w) or (x,y,z,u,v,w)

  friend bool operator==(const DfSolution&, const DfSolution&) = default;
};

struct DfCriterionResult {
  bool admissible = true;
  std::optional<DfSolution> solution;
};

// Searches S for solutions of the two exponent systems. With
// a = eps^x etc. and xi the cube root:
//
//   four-unknown:  w + x xi + z xi^2 = 0,  x + w xi + y xi^2 = 0,
//                  x, y, z, w pairwise distinct
//   six-unknown:   x + y xi^2 + z xi = 0,  u + v xi + w xi^2 = 0,
//                  x xi + u = z + w xi,
//                  with x not in {u,v,w} and u,v,w distinct if x = y = z,
//                  symmetrically if u = v = w, else all six distinct.
//
// S is admissible iff neither system has a solution inside S, which is
// equivalent to df_code(field, S) being 3-bar separable.
DfCriterionResult df_criterion(const FiniteField& field, const ExponentSet& s);

// Re-substitutes a reported solution into its system and side conditions.
bool df_solution_holds(const FiniteField& field, const ExponentSet& s,
                       const DfSolution& solution);

// Which primitive elements a search visits, by rank in encoding order.
struct EpsSelection {
  enum class Mode { kFirst, kAll, kRange };
  Mode mode = Mode::kFirst;
  std::uint64_t lo = 0;  // inclusive, kRange only
  std::uint64_t hi = 0;  // inclusive, kRange only

  static EpsSelection parse(std::string_view text);  // first|all|N|A-B
};

struct DfSearchRecord {
  FieldDescriptor field;
  std::uint64_t eps_rank = 0;
  ExponentSet s;
  bool admissible = false;
  std::uint64_t size = 0;  // q |S|
  std::optional<DfSolution> violation;
};

struct DfSearchOptions {
  std::vector<ExponentPattern> patterns = {ExponentPattern::kAll};
  std::vector<std::uint64_t> custom;  // used by kCustom
  EpsSelection eps;
  unsigned workers = 1;
};

// Runs df_criterion over the selected primitive elements and patterns of
// GF(q). Records are ordered by eps rank, then pattern order. In kFirst
// mode only the lowest-rank admissible record per pattern is returned
// (none if no rank works); other modes return every visited cell.
std::vector<DfSearchRecord> df_search(std::uint64_t q,
                                      const DfSearchOptions& options);

}  // namespace sepcode

#endif  // SEPCODE_CONSTRUCT_H_
