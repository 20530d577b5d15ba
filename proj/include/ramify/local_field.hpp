#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ramify/extint.hpp"
#include "ramify/residue_field.hpp"

namespace ramify {

enum class FieldModel { EqualChar, MixedUnramified };

class LocalField;
using LocalFieldPtr = std::shared_ptr<const LocalField>;

// Valuation report.  An element whose stored digits are all zero only
// certifies v >= prec; callers must never read that as infinity.
struct Valuation {
  bool known = false;
  long long v = 0;
  long long prec = 0;

  bool below_precision() const { return !known; }
};

class KElem;

// The base field K with a fixed uniformizer pi and absolute precision N:
// either F_q((t)) with pi = t, or the unramified extension of Q_p with
// residue field F_q and pi = p.  All element values are integral and live on
// the digit grid pi^0 .. pi^{N-1}.
class LocalField : public std::enable_shared_from_this<LocalField> {
 public:
  static LocalFieldPtr create(FieldModel model, ResidueFieldPtr residue,
                              long long precision);

  FieldModel model() const { return model_; }
  const ResidueFieldPtr& residue() const { return rf_; }
  long long precision() const { return N_; }
  ExtInt e_K() const {
    return model_ == FieldModel::EqualChar ? ExtInt::infinity() : ExtInt(1);
  }
  uint64_t p() const { return rf_->p(); }
  uint32_t d() const { return rf_->d(); }
  uint64_t q() const { return rf_->q(); }
  bool same_field(const LocalField& o) const;

  KElem zero(long long prec = -1) const;
  KElem one() const;
  KElem from_int(long long v) const;
  KElem pi_pow(long long e) const;                       // pi^e
  KElem teich(const RFElem& a) const;                    // Teichmuller lift
  KElem unit_pi_pow(const RFElem& a, long long e) const; // teich(a) * pi^e
  KElem parse(const std::string& literal) const;

  uint64_t p_pow(long long e) const;  // p^e for mixed model, e <= N

 private:
  LocalField(FieldModel model, ResidueFieldPtr rf, long long N);
  friend class KElem;

  FieldModel model_;
  ResidueFieldPtr rf_;
  long long N_;
  std::vector<uint64_t> ppow_;  // mixed model: p^0 .. p^N
};

// Element of K known to absolute precision prec (<= N).
//
// MixedUnramified layout: d coordinates on the basis 1, g, ..., g^{d-1},
// each an integer mod p^prec.  EqualChar layout: prec series digits, each a
// residue element stored as d base-p coordinates.
class KElem {
 public:
  KElem() = default;

  const LocalFieldPtr& field() const { return owner_; }
  long long prec() const { return prec_; }

  Valuation val() const;
  bool is_zero_at_prec() const;            // all stored digits zero
  RFElem residue() const;                  // digit at valuation 0
  RFElem digit_at(long long t) const;      // Teichmuller digit at valuation t
  std::vector<std::pair<long long, RFElem>> digits() const;  // nonzero digits

  KElem add(const KElem& o) const;
  KElem sub(const KElem& o) const;
  KElem neg() const;
  KElem mul(const KElem& o) const;
  KElem inv() const;                       // requires valuation 0
  KElem pow(uint64_t e) const;
  KElem mul_int(long long m) const;
  KElem shift(long long e) const;          // multiply by pi^e, e >= 0
  KElem truncate(long long prec) const;    // reduce the absolute precision
  bool eq(const KElem& o) const;           // same precision and same digits
  std::string str() const;

  static KElem make(LocalFieldPtr owner, long long prec, std::vector<uint64_t> data);
  const std::vector<uint64_t>& raw() const { return a_; }

 private:
  friend class LocalField;
  LocalFieldPtr owner_;
  long long prec_ = 0;
  std::vector<uint64_t> a_;
};

}  // namespace ramify
