#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

// Element of F_{p^d}.  coeffs()[i] multiplies g^i; entries reduced mod p.
class RFElem {
 public:
  RFElem() = default;
  RFElem(ResidueFieldPtr owner, std::vector<uint32_t> coeffs);

  const ResidueFieldPtr& field() const { return owner_; }
  const std::vector<uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // Rank in lexicographic coefficient order (constant coefficient first).
  uint64_t lex_index() const;

  bool operator==(const RFElem& o) const;
  bool operator!=(const RFElem& o) const { return !(*this == o); }
  RFElem operator+(const RFElem& o) const;
  RFElem operator-(const RFElem& o) const;
  RFElem operator-() const;
  RFElem operator*(const RFElem& o) const;
  RFElem inv() const;
  RFElem pow(uint64_t e) const;
  RFElem frobenius() const;                // x -> x^p
  RFElem pow_p_iter(long long k) const;    // x -> x^{p^k}, k Frobenius twists
  std::string str() const;

 private:
  ResidueFieldPtr owner_;
  std::vector<uint32_t> coeffs_;
};

// F_{p^d} presented by a monic irreducible modulus in the generator g.
// Irreducibility is certified by exhaustive trial division (d <= 12).
class ResidueField : public std::enable_shared_from_this<ResidueField> {
 public:
  // With no modulus the lexicographically smallest monic irreducible is
  // chosen (coefficients compared low-degree-first), so the field and all
  // derived output are reproducible.
  static ResidueFieldPtr create(uint64_t p, uint32_t d,
                                const std::optional<std::string>& modulus = std::nullopt);

  uint64_t p() const { return p_; }
  uint32_t d() const { return d_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  std::string modulus_str() const;
  bool same_field(const ResidueField& o) const;

  RFElem zero() const;
  RFElem one() const;
  RFElem from_int(long long v) const;  // v mod p times 1
  RFElem from_coeffs(std::vector<uint32_t> c) const;
  RFElem gen() const;  // g
  // Inverse of lex_index(); element_at(0) is 0, element_at(1) the next, ...
  RFElem element_at(uint64_t index) const;
  RFElem parse(const std::string& literal) const;

 private:
  ResidueField(uint64_t p, uint32_t d, std::vector<uint32_t> modulus);
  friend class RFElem;

  uint64_t p_;
  uint32_t d_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;  // length d+1, monic
};

// The F_p-linear data of psi-bar_{i0,omega}(x) = x^{p^k} - (-1)^{A0} b0 omega x
// on F_{p^d}: its matrix, rank, and a deterministic full set of coset
// representatives for the cokernel (first representative 0; [0] if onto).
struct AdditiveMapAnalysis {
  long long k = 0;
  long long A0 = 0;
  long long b0 = 0;
  RFElem omega;
  std::vector<std::vector<uint32_t>> matrix;  // matrix[i][j]: coeff i of psi(g^j)
  int rank = 0;
  std::vector<RFElem> coset_reps;
  std::vector<std::vector<uint32_t>> image_basis;  // echelon basis of the image

  bool in_image(const RFElem& x) const;
};

RFElem rf_pk_root(const RFElem& a, long long k);
RFElem psi_bar_eval(long long k, long long A0, long long b0, const RFElem& omega,
                    const RFElem& x);
AdditiveMapAnalysis analyze_psi_bar(long long k, long long A0, long long b0,
                                    const RFElem& omega);
bool rf_is_nth_power(const RFElem& a, uint64_t n);

// Solves psi-bar(x) = target for any solution; target must be in the image.
RFElem solve_psi_bar(const AdditiveMapAnalysis& an, const RFElem& target);

}  // namespace ramify
