#include "sepcode/field.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sepcode/error.h"

namespace sepcode {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

// Dense polynomials over GF(p), constant term first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % p;
  while (e > 0) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  return mod_pow(a, p - 2, p);
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  const std::size_t deg_f = f.size() - 1;
  trim(a);
  while (a.size() > deg_f) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - deg_f;
    for (std::size_t i = 0; i <= deg_f; ++i) {
      const std::uint64_t sub = lead * f[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f,
                 std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result = poly_mod(Poly{1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    const std::uint64_t inv = mod_inv(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by k successive p-th powers.
Poly frobenius_power(std::uint64_t k, const Poly& f, std::uint64_t p) {
  Poly r = poly_mod(Poly{0, 1}, f, p);
  for (std::uint64_t i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
  return r;
}

// Rabin's test for a monic polynomial of degree m >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::uint64_t m = f.size() - 1;
  if (m == 1) return true;
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  if (frobenius_power(m, f, p) != x) return false;
  for (std::uint64_t l : prime_factors(m)) {
    Poly h = poly_sub(frobenius_power(m / l, f, p), x, p);
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) {
    throw InvalidArgument("characteristic " + std::to_string(p) +
                          " is not prime");
  }
  if (m < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field order exceeds 2^32");
    }
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2 || q > kMaxOrder) {
    throw InvalidArgument("order " + std::to_string(q) +
                          " outside [2, 2^32]");
  }
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  }
  std::uint32_t m = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++m;
  return {static_cast<std::uint32_t>(factors[0]), m};
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m,
                         std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(checked_order(p, m)), modulus_(std::move(modulus)) {
  digit_weight_.resize(m_);
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    digit_weight_[i] = w;
    w *= p_;
  }
  order_factors_ = prime_factors(q_ - 1);
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t m,
                              std::optional<std::uint64_t> eps_index) {
  checked_order(p, m);
  // Odometer over (c_0, ..., c_{m-1}) with c_0 most significant.
  std::vector<std::uint32_t> coeffs(m, 0);
  std::optional<std::vector<std::uint32_t>> modulus;
  while (true) {
    Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus.emplace(f.begin(), f.end());
      break;
    }
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0 && ++coeffs[i] == p) coeffs[i--] = 0;
    if (i < 0) break;
  }
  if (!modulus) {
    throw InvalidArgument("no irreducible polynomial of degree " +
                          std::to_string(m) + " over GF(" +
                          std::to_string(p) + ")");
  }

  FiniteField field(p, m, std::move(*modulus));
  Element first = 0;
  for (Element x = 1; x < field.q_; ++x) {
    if (field.poly_is_primitive(x)) {
      first = x;
      break;
    }
  }
  field.tabulate(first);
  const std::uint64_t index = eps_index.value_or(0);
  if (index == 0) return field;
  const auto primitives = field.primitive_elements();
  if (index >= primitives.size()) {
    throw InvalidArgument("primitive element index " + std::to_string(index) +
                          " out of range; GF(" + std::to_string(field.q_) +
                          ") has " + std::to_string(primitives.size()));
  }
  field.tabulate(primitives[index]);
  return field;
}

FiniteField FiniteField::from_descriptor(const FieldDescriptor& d) {
  checked_order(d.p, d.m);
  if (d.modulus.size() != std::size_t{d.m} + 1 || d.modulus.back() != 1) {
    throw InvalidArgument("modulus must be monic of degree " +
                          std::to_string(d.m));
  }
  for (auto c : d.modulus) {
    if (c >= d.p) throw InvalidArgument("modulus coefficient out of range");
  }
  Poly f(d.modulus.begin(), d.modulus.end());
  if (!is_irreducible(f, d.p)) {
    throw InvalidArgument("modulus is reducible");
  }
  FiniteField field(d.p, d.m, d.modulus);
  if (d.eps >= field.q_ || !field.poly_is_primitive(d.eps)) {
    throw InvalidArgument("eps " + std::to_string(d.eps) +
                          " is not a primitive element");
  }
  field.tabulate(d.eps);
  return field;
}

FiniteField FiniteField::with_primitive(Element eps) const {
  check(eps);
  if (!is_primitive(eps)) {
    throw InvalidArgument("eps " + std::to_string(eps) +
                          " is not a primitive element");
  }
  FiniteField copy = *this;
  copy.tabulate(eps);
  return copy;
}

FieldDescriptor FiniteField::descriptor() const {
  return FieldDescriptor{p_, m_, modulus_, eps_};
}

void FiniteField::check(Element x) const {
  if (x >= q_) {
    throw InvalidArgument("element " + std::to_string(x) +
                          " does not belong to GF(" + std::to_string(q_) +
                          ")");
  }
}

Element FiniteField::poly_mul(Element x, Element y) const {
  const auto cx = coefficients(x);
  const auto cy = coefficients(y);
  Poly a(cx.begin(), cx.end());
  Poly b(cy.begin(), cy.end());
  trim(a);
  trim(b);
  Poly f(modulus_.begin(), modulus_.end());
  Poly r = poly_mulmod(a, b, f, p_);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * digit_weight_[i];
  return static_cast<Element>(out);
}

Element FiniteField::poly_pow(Element x, std::uint64_t e) const {
  Element result = 1;
  Element base = x;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

bool FiniteField::poly_is_primitive(Element x) const {
  if (x == 0) return false;
  for (std::uint64_t l : order_factors_) {
    if (poly_pow(x, (q_ - 1) / l) == 1) return false;
  }
  return true;
}

void FiniteField::tabulate(Element eps) {
  eps_ = eps;
  const std::uint64_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  Element cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    exp_[i + n] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = poly_mul(cur, eps);
  }
}

Element FiniteField::add(Element x, Element y) const {
  check(x);
  check(y);
  if (m_ == 1) return static_cast<Element>((std::uint64_t{x} + y) % p_);
  std::uint64_t out = 0;
  std::uint64_t a = x;
  std::uint64_t b = y;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * digit_weight_[i];
    a /= p_;
    b /= p_;
  }
  return static_cast<Element>(out);
}

Element FiniteField::neg(Element x) const {
  check(x);
  if (m_ == 1) return static_cast<Element>((p_ - x) % p_);
  std::uint64_t out = 0;
  std::uint64_t a = x;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * digit_weight_[i];
    a /= p_;
  }
  return static_cast<Element>(out);
}

Element FiniteField::sub(Element x, Element y) const { return add(x, neg(y)); }

Element FiniteField::mul(Element x, Element y) const {
  check(x);
  check(y);
  if (x == 0 || y == 0) return 0;
  return exp_[std::uint64_t{log_[x]} + log_[y]];
}

Element FiniteField::inv(Element x) const {
  check(x);
  if (x == 0) throw InvalidArgument("inverse of zero");
  const std::uint64_t n = q_ - 1;
  return exp_[(n - log_[x]) % n];
}

Element FiniteField::div(Element x, Element y) const {
  return mul(x, inv(y));
}

Element FiniteField::pow(Element x, std::uint64_t e) const {
  check(x);
  if (x == 0) return e == 0 ? 1 : 0;
  const std::uint64_t n = q_ - 1;
  const unsigned __int128 k =
      static_cast<unsigned __int128>(log_[x]) * (e % n);
  return exp_[static_cast<std::uint64_t>(k % n)];
}

Element FiniteField::exp(std::int64_t i) const {
  const auto n = static_cast<std::int64_t>(q_ - 1);
  return exp_[static_cast<std::uint64_t>(((i % n) + n) % n)];
}

std::uint64_t FiniteField::dlog(Element x) const {
  check(x);
  if (x == 0) throw InvalidArgument("discrete log of zero");
  return log_[x];
}

bool FiniteField::is_primitive(Element x) const {
  check(x);
  if (x == 0) return false;
  return std::gcd(std::uint64_t{log_[x]}, q_ - 1) == 1;
}

std::vector<Element> FiniteField::primitive_elements() const {
  std::vector<Element> out;
  const std::uint64_t n = q_ - 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(exp_[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t FiniteField::primitive_rank() const {
  const auto all = primitive_elements();
  return static_cast<std::uint64_t>(
      std::lower_bound(all.begin(), all.end(), eps_) - all.begin());
}

std::vector<std::uint32_t> FiniteField::coefficients(Element x) const {
  check(x);
  std::vector<std::uint32_t> out(m_);
  std::uint64_t a = x;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return out;
}

Element FiniteField::from_coefficients(
    std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) {
    throw InvalidArgument("expected " + std::to_string(m_) + " coefficients");
  }
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range");
    out += coeffs[i] * digit_weight_[i];
  }
  return static_cast<Element>(out);
}

CubeRoot cube_root(const FiniteField& field) {
  const std::uint64_t q = field.order();
  if (q % 6 != 1) {
    throw InvalidArgument("GF(" + std::to_string(q) +
                          ") has no primitive cube root of the required form;"
                          " need q = 1 mod 6");
  }
  const auto t = static_cast<std::int64_t>((q - 1) / 6);
  return CubeRoot{field.exp(2 * t)};
}

}  // namespace sepcode
