#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ramify/ext_arith.hpp"

namespace ramify {

// Canonical data of a 3-term polynomial
//   X^{p^k} + (-1)^{b0} omega pi^{A0} X^{p^k - b0} + (-1)^{p^k} a pi,
// with a = 1 + sum_j alpha_j pi^j (+ gamma pi^B when the break B is an
// integer).  alphas holds exactly the free digit positions: 1 <= j <= B-1
// (integral B) or 1 <= j <= floor(B), skipping j = b0 mod p^k, where the
// digit is forced to zero.
struct StandardForm {
  LocalFieldPtr field;
  long long k = 0;
  long long A0 = 0;
  long long b0 = 0;
  RFElem omega;
  std::map<long long, RFElem> alphas;
  std::optional<RFElem> gamma;

  long long pk() const;
  long long i0() const { return pk() * A0 - b0; }
  Rational brk() const { return Rational(i0(), pk() - 1); }
  std::vector<long long> free_alpha_indices() const;
  KElem a_value() const;  // the unit a as a K element at full precision

  bool operator==(const StandardForm& o) const;
  bool operator!=(const StandardForm& o) const { return !(*this == o); }
};

// Renders the exact 3-term polynomial (all other coefficients exact zeros).
EisensteinPoly render(const StandardForm& sf);

enum class StepCase { Case1, Case2Below, Case2At, Case2Above };

const char* step_case_name(StepCase c);

struct ReductionStep {
  long long ell = 0;
  StepCase tag = StepCase::Case1;
  RFElem r;
  long long target_h = 0;
};

struct ReductionTrace {
  KElem xi;
  std::vector<ReductionStep> steps;
  long long ell_reached = 0;
  long long certified_level = 0;
};

// Scales f so its constant term becomes pi mod pi^2; returns the Teichmuller
// scaling factor xi (with xi^{p^k} lifting the old leading digit) and the
// rescaled polynomial with coefficients xi^{-j} c_j.
std::pair<KElem, EisensteinPoly> normalize_constant(const EisensteinPoly& f);

// The 1-standard approximant of a normalized two-index polynomial.
StandardForm initial_approximant(const EisensteinPoly& fhat);
EisensteinPoly one_standard(const EisensteinPoly& fhat);

// Coefficient congruence predicted for the minimum polynomial of
// pi + r pi^{ell+1}, for the level-j contribution (general n = u p^k).
struct PerturbPrediction {
  long long h = 0;
  long long t = 0;
  KElem value;                    // predicted c~_h mod pi^{t+1}
  std::vector<long long> S;       // contributing levels m
  std::vector<long long> gsigns;  // signed integer factors g_m, same order
};

PerturbPrediction perturb_predict(const EisensteinPoly& f, long long ell, const KElem& r,
                                  long long j);

struct ReduceStepResult {
  ReductionStep step;
  EisensteinPoly f_next;
  StandardForm approx_next;
};

// One pass of the induction: f must be ell-standard relative to approx; the
// result is (ell+1)-standard relative to the returned approximant, and both
// the stability relation and the new standardness are re-verified.
ReduceStepResult reduce_step(const EisensteinPoly& f, long long ell,
                             const StandardForm& approx);

struct ReduceResult {
  StandardForm form;
  ReductionTrace trace;
};

long long default_ell_max(const InsepProfile& prof);
// Absolute precision needed to run the reduction out to ell_max.
long long required_precision(const InsepProfile& prof, long long ell_max);

ReduceResult reduce_to_standard(const EisensteinPoly& f, long long ell_max = -1);

}  // namespace ramify
