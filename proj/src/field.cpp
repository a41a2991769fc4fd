#include "loopforge/field.hpp"

#include "loopforge/error.hpp"
#include "loopforge/numeric.hpp"

namespace loopforge {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  for (std::size_t e = 1; e <= d / 2; ++e) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly div(e + 1);
      std::size_t c = code;
      for (std::size_t i = 0; i < e; ++i) {
        div[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      div[e] = 1;
      if (poly_mod(f, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> builtin_modulus(unsigned p, unsigned k) {
  if (k == 1) return {0, 1};
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
  if (p == 2 && k == 5) return {1, 0, 1, 0, 0, 1};
  if (p == 2 && k == 6) return {1, 1, 0, 0, 0, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 5 && k == 2) return {2, 0, 1};
  if (p == 7 && k == 2) return {1, 0, 1};
  fail(Errc::NoBuiltinModulus, "no built-in modulus for GF(" + std::to_string(p) + "^" +
                                   std::to_string(k) + ")");
}

FiniteField::FiniteField(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p) || k == 0) fail(Errc::InvalidArgument, "field needs a prime p and k >= 1");
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (q_ > 4096) fail(Errc::InvalidArgument, "field order above 4096");
  if (modulus_.empty()) modulus_ = builtin_modulus(p, k);
  if (modulus_.size() != k + 1 || modulus_.back() != 1)
    fail(Errc::InvalidArgument, "modulus must be monic of degree k");
  for (unsigned c : modulus_)
    if (c >= p) fail(Errc::InvalidArgument, "modulus coefficient out of range");
  if (!is_irreducible(p, modulus_)) fail(Errc::InvalidArgument, "modulus is reducible");

  // Find a primitive element by brute force, which also confirms that the
  // nonzero elements form a cyclic group of order q - 1.
  const unsigned n = q_ - 1;
  for (unsigned g = 1; g < q_ && exp_.empty(); ++g) {
    std::vector<unsigned> powers{1};
    unsigned x = g;
    while (x != 1 && powers.size() <= n) {
      powers.push_back(x);
      x = mul_slow(x, g);
    }
    if (powers.size() == n) exp_ = std::move(powers);
  }
  if (exp_.size() != n) fail(Errc::InternalTheoremViolation, "multiplicative group not cyclic");
  exp_.resize(2 * n);
  for (unsigned i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
  log_.assign(q_, 0);
  for (unsigned i = 0; i < n; ++i) log_[exp_[i]] = i;
}

std::vector<unsigned> FiniteField::coefficients(unsigned x) const {
  std::vector<unsigned> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

unsigned FiniteField::from_coefficients(const std::vector<unsigned>& c) const {
  unsigned x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * p_ + c[i] % p_;
  return x;
}

unsigned FiniteField::mul_slow(unsigned a, unsigned b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r);
}

unsigned FiniteField::add(unsigned a, unsigned b) const {
  if (k_ == 1) return (a + b) % p_;
  unsigned r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

unsigned FiniteField::neg(unsigned a) const {
  unsigned r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

unsigned FiniteField::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned FiniteField::mul(unsigned a, unsigned b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) fail(Errc::InvalidArgument, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned FiniteField::pow(unsigned a, long long e) const {
  if (a == 0) {
    if (e < 0) fail(Errc::InvalidArgument, "zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  const long long n = q_ - 1;
  long long l = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (l < 0) l += n;
  return exp_[static_cast<std::size_t>(l)];
}

unsigned FiniteField::frobenius_power(unsigned x, unsigned e) const {
  long long exponent = 1;
  for (unsigned i = 0; i < e % k_; ++i) exponent *= p_;
  return pow(x, exponent);
}

std::string FiniteField::to_string(unsigned x) const {
  if (k_ == 1) return std::to_string(x);
  auto c = coefficients(x);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FiniteField gf(unsigned p, unsigned k) { return FiniteField(p, k); }

FiniteField gf_of_order(unsigned q) {
  const std::size_t p = prime_of_power(q);
  if (p == 0) fail(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  unsigned k = 0;
  for (unsigned r = q; r > 1; r /= static_cast<unsigned>(p)) ++k;
  return FiniteField(static_cast<unsigned>(p), k);
}

}  // namespace loopforge
