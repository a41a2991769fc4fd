#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loopforge {

// GF(p^k) in polynomial basis. An element is encoded as the integer
// sum c_i p^i of its coefficient vector (c_0 is the constant term), so the
// prime subfield is {0, ..., p-1}.
class FiniteField {
 public:
  // modulus: coefficients c_0..c_k of a monic irreducible polynomial of
  // degree k (c_k = 1). Empty selects the built-in modulus.
  FiniteField(unsigned p, unsigned k, std::vector<unsigned> modulus = {});

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  unsigned size() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned sub(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, long long e) const;
  // x^(p^e)
  unsigned frobenius_power(unsigned x, unsigned e) const;
  // A generator of the multiplicative group.
  unsigned primitive_element() const noexcept { return exp_[1]; }

  std::vector<unsigned> coefficients(unsigned x) const;
  unsigned from_coefficients(const std::vector<unsigned>& c) const;
  std::string to_string(unsigned x) const;

 private:
  unsigned mul_slow(unsigned a, unsigned b) const;

  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> exp_;  // exp_[i] = g^i for i in [0, 2(q-1))
  std::vector<unsigned> log_;
};

// Built-in irreducible modulus for GF(p^k); throws NoBuiltinModulus.
std::vector<unsigned> builtin_modulus(unsigned p, unsigned k);

// GF(q) for a prime power q with a built-in modulus.
FiniteField gf(unsigned p, unsigned k);
FiniteField gf_of_order(unsigned q);

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

}  // namespace loopforge
