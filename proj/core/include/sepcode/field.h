#ifndef SEPCODE_FIELD_H_
#define SEPCODE_FIELD_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sepcode {

// A field element in the base-p packed encoding: the coefficient vector
// (c_0, ..., c_{m-1}) of a residue polynomial maps to sum c_i * p^i.
using Element = std::uint32_t;

// Everything needed to rebuild a field bit-for-bit.
struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  // Monic modulus, constant term first, m + 1 entries.
  std::vector<std::uint32_t> modulus;
  Element eps = 0;

  friend bool operator==(const FieldDescriptor&,
                         const FieldDescriptor&) = default;
};

// GF(p^m) with a fixed primitive element and fully tabulated exp/dlog.
//
// Construction picks the lexicographically least monic irreducible modulus
// (coefficients compared constant term first) and the eps_index-th primitive
// element in increasing encoding order. Instances are immutable; every
// operation is const and thread-safe.
//
// Operands are range-checked against q. An element of a larger field is
// rejected as foreign; equal-order fields cannot be told apart by value.
class FiniteField {
 public:
  static FiniteField make(std::uint32_t p, std::uint32_t m,
                          std::optional<std::uint64_t> eps_index = {});
  // Explicit modulus and primitive element. Both are validated.
  static FiniteField from_descriptor(const FieldDescriptor& descriptor);

  // Same modulus, different primitive element.
  FiniteField with_primitive(Element eps) const;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  Element primitive() const { return eps_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldDescriptor descriptor() const;

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element div(Element x, Element y) const;
  Element pow(Element x, std::uint64_t e) const;

  // eps^i for any integer i; the exponent is reduced mod q - 1.
  Element exp(std::int64_t i) const;
  // The unique i in [0, q - 2] with eps^i = x.
  std::uint64_t dlog(Element x) const;

  bool is_primitive(Element x) const;
  // All primitive elements in increasing encoding order.
  std::vector<Element> primitive_elements() const;
  // Position of eps within primitive_elements().
  std::uint64_t primitive_rank() const;

  std::vector<std::uint32_t> coefficients(Element x) const;
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_ &&
           a.eps_ == b.eps_;
  }

 private:
  FiniteField(std::uint32_t p, std::uint32_t m,
              std::vector<std::uint32_t> modulus);

  void check(Element x) const;
  Element poly_mul(Element x, Element y) const;
  Element poly_pow(Element x, std::uint64_t e) const;
  bool poly_is_primitive(Element x) const;
  void tabulate(Element eps);

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> digit_weight_;  // p^i
  std::vector<std::uint64_t> order_factors_;  // distinct primes dividing q-1
  Element eps_ = 0;
  std::vector<Element> exp_;         // eps^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log_;   // log_[x] for x != 0
};

// Primitive third root of unity xi = eps^(2t) where q = 6t + 1.
struct CubeRoot {
  Element xi = 0;
};

CubeRoot cube_root(const FiniteField& field);

bool is_prime(std::uint64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Splits q = p^m; throws InvalidArgument when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace sepcode

#endif  // SEPCODE_FIELD_H_
