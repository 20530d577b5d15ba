#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ramify/local_field.hpp"
#include "ramify/rational.hpp"

namespace ramify {

// Monic Eisenstein polynomial of degree n in the sign convention
//   f(X) = X^n - c_1 X^{n-1} + c_2 X^{n-2} - ... + (-1)^n c_n,
// so the coefficient of X^{n-h} is (-1)^h c_h.  An absent entry is an exact
// zero; a present coefficient that happens to vanish at precision is only
// "zero as far as the digits go", and the two are treated differently.
struct EisensteinPoly {
  LocalFieldPtr field;
  long long n = 0;
  long long u = 0, k = 0;  // n = u * p^k with p not dividing u
  std::vector<std::optional<KElem>> c;  // c[h-1] holds c_h

  const std::optional<KElem>& at(long long h) const { return c[h - 1]; }
  // c_h materialized as a K element (exact zeros become zero at field precision)
  KElem coeff(long long h) const;
  // difference g.c_h - c_h with exact zeros honoured; nullopt when both exact
  static std::optional<KElem> diff(const std::optional<KElem>& a,
                                   const std::optional<KElem>& b,
                                   const LocalFieldPtr& field);
  long long nonzero_terms() const;  // leading term plus coefficients with known valuation
};

// The inseparability data of f: tilde entries from the coefficient
// valuations, the invariant indices, and the two-index specialization.
struct InsepProfile {
  long long n = 0, u = 0, k = 0;
  long long p = 0;
  ExtInt e_K;
  std::vector<ExtInt> tilde;    // tilde[j], 0 <= j <= k
  std::vector<long long> idx;   // i_j, finite for separable extensions
  int distinct_count = 0;
  bool two_index = false;       // n = p^k and exactly two distinct indices
  long long A0 = 0, b0 = 0;     // i_0 = p^k A0 - b0, 1 <= b0 <= p^k
  Rational brk;                 // i_0 / (p^k - 1)
};

EisensteinPoly eis_validate(const LocalFieldPtr& field, long long degree,
                            const std::map<long long, KElem>& terms);

std::vector<ExtInt> tilde_indices(const EisensteinPoly& f);
InsepProfile indices(const EisensteinPoly& f);

Rational ram_break(const InsepProfile& prof);
Rational phi_j(const InsepProfile& prof, long long j, const Rational& x);
Rational phi_LK(const InsepProfile& prof, const Rational& x);
long long phi_int(const InsepProfile& prof, long long j, long long ell);
long long rho(const InsepProfile& prof, long long h, long long ell);

// Definition of l-equivalence, using f's profile for the rho exponents.
bool l_equiv(const EisensteinPoly& f, const EisensteinPoly& g, long long ell);

long long vp_of(long long h, uint64_t p);

}  // namespace ramify
