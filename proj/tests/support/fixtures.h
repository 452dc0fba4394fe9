#ifndef SEPCODE_TESTS_SUPPORT_FIXTURES_H_
#define SEPCODE_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sepcode/code.h"

namespace sepcode::testing {

// The optimal (3, 12, 4) code and its square view.
Code c4();
PartialLatinSquare b4();

// Weight-one code {(1,0,0), (0,1,0), (0,0,1)} over two symbols.
Code weight_one();

// Four columns forming the free-middle-row pattern.
Code delta1_instance();
// The same columns with rows 2 and 3 exchanged.
Code delta2_instance();
// The six-column cyclic pattern over three symbols.
Code nabla_instance();

// Squares printed for the cube code at r = 4 and the extended code at k = 2.
PartialLatinSquare cube4_square();
PartialLatinSquare extended2_square();

struct NamedCode {
  std::string name;
  Code code;
};

// Every fixture above, plus small constructions, by name.
std::vector<NamedCode> all_fixtures();

// Randomized length-3 codes (M <= 30, q <= 8) from a fixed seed: uniform
// codes, random partial Latin squares, subsets of separable codes, and
// codes with planted forbidden patterns.
struct CorpusStats {
  std::size_t uniform = 0;
  std::size_t latin = 0;
  std::size_t subcode = 0;
  std::size_t planted = 0;
};

std::vector<Code> random_corpus(std::size_t count, std::uint64_t seed,
                                CorpusStats* stats = nullptr);

}  // namespace sepcode::testing

#endif  // SEPCODE_TESTS_SUPPORT_FIXTURES_H_
