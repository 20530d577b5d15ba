#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramify/eisenstein.hpp"

namespace ramify {

// Element of L = K[X]/(f) on the basis 1, pi_L, ..., pi_L^{n-1}.
using LVec = std::vector<KElem>;

// Substitution polynomial g(X) with coefficients in O_K, exponent -> coeff.
struct UniformizerExpr {
  std::map<long long, KElem> terms;
};

UniformizerExpr parse_uniformizer_expr(const LocalFieldPtr& K, const std::string& s);
std::string uniformizer_expr_str(const UniformizerExpr& e);

LVec l_zero(const EisensteinPoly& f);
LVec l_from_expr(const EisensteinPoly& f, const UniformizerExpr& expr);  // g(pi_L)
LVec l_mul(const EisensteinPoly& f, const LVec& a, const LVec& b);
LVec l_shift(const EisensteinPoly& f, const LVec& a);  // multiply by pi_L
Valuation l_val(const EisensteinPoly& f, const LVec& a);

// Multiplication-by-a matrix on the power basis; column i holds a * pi_L^i.
std::vector<LVec> mul_matrix(const EisensteinPoly& f, const LVec& a);

// det(X I - M) by the Berkowitz division-free scheme.  Returns the monic
// coefficient list [1, a_1, ..., a_n] of X^n + a_1 X^{n-1} + ... + a_n.
// Division-free matters: coefficients live in a truncated ring with zero
// divisors, so any elimination with division would be unsound.
std::vector<KElem> charpoly(const LocalFieldPtr& K, const std::vector<LVec>& M);

KElem norm(const EisensteinPoly& f, const LVec& a);

// Minimum polynomial of expr(pi_L), which must be a uniformizer of L.
EisensteinPoly minpoly_uniformizer(const EisensteinPoly& f, const UniformizerExpr& expr);

}  // namespace ramify
