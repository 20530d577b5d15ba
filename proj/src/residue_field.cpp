#include "ramify/residue_field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ramify {

namespace {

bool is_prime_u64(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t t = 2; t * t <= p; ++t)
    if (p % t == 0) return false;
  return true;
}

// Dense polynomial over F_p, low-degree-first.  Trailing zeros trimmed.
using FpPoly = std::vector<uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by the monic polynomial m, in place.
void rem_by_monic(FpPoly& a, const FpPoly& m, uint64_t p) {
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint64_t c = a.back();
    size_t sh = a.size() - 1 - dm;
    if (c != 0) {
      for (size_t i = 0; i < dm; ++i) {
        uint64_t sub = (c * m[i]) % p;
        a[sh + i] = (uint32_t)((a[sh + i] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() <= dm) break;
  }
}

bool divides(const FpPoly& div, const FpPoly& a, uint64_t p) {
  // div monic
  FpPoly r = a;
  size_t dd = div.size() - 1;
  if (r.size() <= dd) return false;
  rem_by_monic(r, div, p);
  return r.empty();
}

// Exhaustive factor search: no monic divisor of degree 1..d/2.
bool is_irreducible(const FpPoly& m, uint64_t p) {
  size_t d = m.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  for (size_t e = 1; 2 * e <= d; ++e) {
    // iterate all monic degree-e polynomials
    FpPoly div(e + 1, 0);
    div[e] = 1;
    uint64_t total = 1;
    for (size_t i = 0; i < e; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t t = idx;
      for (size_t i = 0; i < e; ++i) {
        div[i] = (uint32_t)(t % p);
        t /= p;
      }
      if (divides(div, m, p)) return false;
    }
  }
  return true;
}

// Parses a polynomial in g with integer coefficients, e.g. "2*g^3 + g - 1".
FpPoly parse_poly_in_g(const std::string& s, uint64_t p) {
  FpPoly out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  };
  auto add_term = [&](long long coef, long long deg) {
    if (deg < 0 || deg > 64) fail(Errc::BadSpec, "bad exponent in residue literal");
    if ((size_t)deg >= out.size()) out.resize(deg + 1, 0);
    long long c = ((coef % (long long)p) + (long long)p) % (long long)p;
    out[deg] = (uint32_t)((out[deg] + c) % p);
  };
  skip_ws();
  if (i >= s.size()) fail(Errc::BadSpec, "empty residue literal");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) {
      if (first) fail(Errc::BadSpec, "empty residue literal");
      break;
    }
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail(Errc::BadSpec, "expected '+' or '-' in residue literal: " + s);
    }
    first = false;
    bool have_coef = false;
    long long coef = 1;
    if (i < s.size() && std::isdigit((unsigned char)s[i])) {
      coef = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        coef = coef * 10 + (s[i] - '0');
        if (coef > (1LL << 40)) coef %= (long long)p;
        ++i;
      }
      have_coef = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long long deg = 0;
    if (i < s.size() && s[i] == 'g') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
          fail(Errc::BadSpec, "bad exponent in residue literal: " + s);
        deg = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
          deg = deg * 10 + (s[i] - '0');
          ++i;
        }
      }
    } else if (!have_coef) {
      fail(Errc::BadSpec, "unexpected character in residue literal: " + s);
    }
    add_term(sign * coef, deg);
  }
  trim(out);
  return out;
}

}  // namespace

ResidueField::ResidueField(uint64_t p, uint32_t d, std::vector<uint32_t> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
  q_ = 1;
  for (uint32_t i = 0; i < d_; ++i) q_ *= p_;
}

ResidueFieldPtr ResidueField::create(uint64_t p, uint32_t d,
                                     const std::optional<std::string>& modulus) {
  if (!is_prime_u64(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (d < 1 || d > 12) fail(Errc::BadSpec, "extension degree d must be in [1, 12]");
  {
    uint64_t q = 1;
    for (uint32_t i = 0; i < d; ++i) {
      q *= p;
      if (q > (1ULL << 31)) fail(Errc::BadSpec, "residue field too large (q > 2^31)");
    }
  }
  FpPoly m;
  if (modulus.has_value()) {
    m = parse_poly_in_g(*modulus, p);
    if (m.size() != (size_t)d + 1 || m[d] != 1)
      fail(Errc::BadSpec, "modulus must be monic of degree " + std::to_string(d));
    if (!is_irreducible(m, p))
      fail(Errc::ReducibleModulus, "modulus " + *modulus + " is reducible over F_" +
                                       std::to_string(p));
  } else {
    // lexicographically smallest monic irreducible, low-degree coefficients
    // compared first
    m.assign(d + 1, 0);
    m[d] = 1;
    std::vector<uint32_t> c(d, 0);
    bool found = false;
    while (true) {
      for (uint32_t i = 0; i < d; ++i) m[i] = c[i];
      if (is_irreducible(m, p)) {
        found = true;
        break;
      }
      // increment with c[d-1] fastest, so c[0] is the most significant key
      int pos = (int)d - 1;
      while (pos >= 0) {
        if (++c[pos] < p) break;
        c[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    if (!found) fail(Errc::ReducibleModulus, "no irreducible modulus found");
  }
  return ResidueFieldPtr(new ResidueField(p, d, std::move(m)));
}

bool ResidueField::same_field(const ResidueField& o) const {
  return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_;
}

RFElem ResidueField::zero() const {
  return RFElem(shared_from_this(), std::vector<uint32_t>(d_, 0));
}

RFElem ResidueField::one() const { return from_int(1); }

RFElem ResidueField::from_int(long long v) const {
  std::vector<uint32_t> c(d_, 0);
  long long m = ((v % (long long)p_) + (long long)p_) % (long long)p_;
  c[0] = (uint32_t)m;
  return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::from_coeffs(std::vector<uint32_t> c) const {
  if (c.size() != d_) fail(Errc::BadSpec, "coefficient vector has wrong length");
  for (auto& x : c) x %= (uint32_t)p_;
  return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::gen() const {
  std::vector<uint32_t> c(d_, 0);
  if (d_ == 1) {
    // g plays the role of its own residue: reduce g by the linear modulus
    c[0] = (uint32_t)((p_ - modulus_[0]) % p_);
  } else {
    c[1] = 1;
  }
  return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::element_at(uint64_t index) const {
  if (index >= q_) fail(Errc::BadSpec, "element index out of range");
  std::vector<uint32_t> c(d_, 0);
  for (uint32_t i = 0; i < d_; ++i) {
    uint64_t w = 1;
    for (uint32_t j = 0; j + i + 1 < d_ + 0u; ++j) w *= p_;  // p^(d-1-i)
    c[i] = (uint32_t)(index / w);
    index %= w;
  }
  return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::parse(const std::string& literal) const {
  FpPoly raw = parse_poly_in_g(literal, p_);
  rem_by_monic(raw, modulus_, p_);
  raw.resize(d_, 0);
  return RFElem(shared_from_this(), std::move(raw));
}

std::string ResidueField::modulus_str() const {
  std::string out;
  for (int e = (int)d_; e >= 0; --e) {
    uint32_t c = modulus_[e];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += e == 1 ? "g" : "g^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

RFElem::RFElem(ResidueFieldPtr owner, std::vector<uint32_t> coeffs)
    : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {}

bool RFElem::is_zero() const {
  for (uint32_t c : coeffs_)
    if (c) return false;
  return true;
}

uint64_t RFElem::lex_index() const {
  uint64_t idx = 0;
  for (uint32_t c : coeffs_) idx = idx * owner_->p() + c;
  return idx;
}

static void check_same(const RFElem& a, const RFElem& b) {
  if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
    fail(Errc::MixedFields, "residue elements from different fields");
}

bool RFElem::operator==(const RFElem& o) const {
  check_same(*this, o);
  return coeffs_ == o.coeffs_;
}

RFElem RFElem::operator+(const RFElem& o) const {
  check_same(*this, o);
  std::vector<uint32_t> c(coeffs_.size());
  uint64_t p = owner_->p();
  for (size_t i = 0; i < c.size(); ++i) c[i] = (uint32_t)((coeffs_[i] + o.coeffs_[i]) % p);
  return RFElem(owner_, std::move(c));
}

RFElem RFElem::operator-(const RFElem& o) const { return *this + (-o); }

RFElem RFElem::operator-() const {
  std::vector<uint32_t> c(coeffs_.size());
  uint64_t p = owner_->p();
  for (size_t i = 0; i < c.size(); ++i) c[i] = (uint32_t)((p - coeffs_[i]) % p);
  return RFElem(owner_, std::move(c));
}

RFElem RFElem::operator*(const RFElem& o) const {
  check_same(*this, o);
  uint64_t p = owner_->p();
  uint32_t d = owner_->d();
  std::vector<uint64_t> prod(2 * d - 1, 0);
  for (uint32_t i = 0; i < d; ++i) {
    if (!coeffs_[i]) continue;
    for (uint32_t j = 0; j < d; ++j)
      prod[i + j] = (prod[i + j] + (uint64_t)coeffs_[i] * o.coeffs_[j]) % p;
  }
  const auto& m = owner_->modulus();
  for (int t = (int)(2 * d - 2); t >= (int)d; --t) {
    uint64_t c = prod[t];
    if (c) {
      for (uint32_t i = 0; i < d; ++i)
        prod[t - d + i] = (prod[t - d + i] + (p - (c * m[i]) % p)) % p;
    }
    prod[t] = 0;
  }
  std::vector<uint32_t> out(d);
  for (uint32_t i = 0; i < d; ++i) out[i] = (uint32_t)prod[i];
  return RFElem(owner_, std::move(out));
}

RFElem RFElem::pow(uint64_t e) const {
  RFElem base = *this;
  RFElem acc = owner_->one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

RFElem RFElem::inv() const {
  if (is_zero()) fail(Errc::NonUnitInverse, "inverse of zero residue element");
  return pow(owner_->q() - 2);
}

RFElem RFElem::frobenius() const { return pow(owner_->p()); }

RFElem RFElem::pow_p_iter(long long k) const {
  RFElem x = *this;
  long long m = k % owner_->d();
  for (long long i = 0; i < m; ++i) x = x.frobenius();
  return x;
}

std::string RFElem::str() const {
  std::string out;
  for (int e = (int)coeffs_.size() - 1; e >= 0; --e) {
    uint32_t c = coeffs_[e];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += e == 1 ? "g" : "g^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

RFElem rf_pk_root(const RFElem& a, long long k) {
  if (k < 0) fail(Errc::BadSpec, "negative Frobenius power");
  uint32_t d = a.field()->d();
  long long m = ((long long)d - (k % d)) % d;
  return a.pow_p_iter(m);
}

RFElem psi_bar_eval(long long k, long long A0, long long b0, const RFElem& omega,
                    const RFElem& x) {
  if (omega.is_zero()) fail(Errc::ZeroOmega, "psi map requires a nonzero omega");
  const auto& F = omega.field();
  if (b0 % (long long)F->p() == 0) fail(Errc::BadSpec, "psi map requires p not dividing b0");
  RFElem lin = F->from_int(b0) * omega * x;
  if (A0 % 2 == 0) lin = -lin;  // subtract (-1)^{A0} b0 omega x
  return x.pow_p_iter(k) + lin;
}

bool AdditiveMapAnalysis::in_image(const RFElem& x) const {
  std::vector<uint32_t> v = x.coeffs();
  uint64_t p = x.field()->p();
  for (const auto& row : image_basis) {
    size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv == row.size()) continue;
    uint64_t c = v[piv];  // row is normalized with pivot 1
    if (c) {
      for (size_t i = 0; i < v.size(); ++i)
        v[i] = (uint32_t)((v[i] + p - (c * row[i]) % p) % p);
    }
  }
  for (uint32_t c : v)
    if (c) return false;
  return true;
}

AdditiveMapAnalysis analyze_psi_bar(long long k, long long A0, long long b0,
                                    const RFElem& omega) {
  if (omega.is_zero()) fail(Errc::ZeroOmega, "psi map requires a nonzero omega");
  const auto F = omega.field();
  uint32_t d = F->d();
  uint64_t p = F->p();
  AdditiveMapAnalysis an;
  an.k = k;
  an.A0 = A0;
  an.b0 = b0;
  an.omega = omega;
  an.matrix.assign(d, std::vector<uint32_t>(d, 0));
  std::vector<std::vector<uint32_t>> cols;
  for (uint32_t j = 0; j < d; ++j) {
    std::vector<uint32_t> c(d, 0);
    c[j] = 1;
    RFElem gj = F->from_coeffs(c);
    RFElem y = psi_bar_eval(k, A0, b0, omega, gj);
    for (uint32_t i = 0; i < d; ++i) an.matrix[i][j] = y.coeffs()[i];
    cols.push_back(y.coeffs());
  }
  // Gaussian elimination over F_p on the columns: echelon basis of the image.
  std::vector<std::vector<uint32_t>> basis;
  for (auto v : cols) {
    for (const auto& row : basis) {
      size_t piv = 0;
      while (piv < row.size() && row[piv] == 0) ++piv;
      uint64_t c = v[piv];
      if (c) {
        for (size_t i = 0; i < v.size(); ++i)
          v[i] = (uint32_t)((v[i] + p - (c * row[i]) % p) % p);
      }
    }
    size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv < v.size()) {
      // normalize pivot to 1
      uint64_t inv = 1, base = v[piv], e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (size_t i = 0; i < v.size(); ++i) v[i] = (uint32_t)((v[i] * inv) % p);
      basis.push_back(v);
    }
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    size_t pa = 0, pb = 0;
    while (pa < a.size() && a[pa] == 0) ++pa;
    while (pb < b.size() && b[pb] == 0) ++pb;
    return pa < pb;
  });
  an.image_basis = basis;
  an.rank = (int)basis.size();

  if (an.rank == (int)d) {
    an.coset_reps = {F->zero()};  // onto: the conventional {0}
    return an;
  }
  uint64_t want = 1;
  for (uint32_t i = 0; i < d - (uint32_t)an.rank; ++i) want *= p;
  for (uint64_t idx = 0; idx < F->q() && an.coset_reps.size() < want; ++idx) {
    RFElem x = F->element_at(idx);
    bool fresh = true;
    for (const auto& r : an.coset_reps) {
      if (an.in_image(x - r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) an.coset_reps.push_back(x);
  }
  if (an.coset_reps.size() != want)
    fail(Errc::PostconditionFailed, "coset representative search came up short");
  return an;
}

bool rf_is_nth_power(const RFElem& a, uint64_t n) {
  if (n == 0) fail(Errc::BadSpec, "power test needs n >= 1");
  if (a.is_zero()) return true;
  uint64_t qm1 = a.field()->q() - 1;
  uint64_t g = std::gcd(n % qm1 == 0 ? qm1 : n % qm1, qm1);
  return a.pow(qm1 / g) == a.field()->one();
}

RFElem solve_psi_bar(const AdditiveMapAnalysis& an, const RFElem& target) {
  const auto F = target.field();
  if (!an.in_image(target))
    fail(Errc::BadSpec, "psi solve target is not in the image");
  if (F->q() <= 81) {
    for (uint64_t idx = 0; idx < F->q(); ++idx) {
      RFElem x = F->element_at(idx);
      if (psi_bar_eval(an.k, an.A0, an.b0, an.omega, x) == target) return x;
    }
    fail(Errc::PostconditionFailed, "exhaustive psi solve failed on an image element");
  }
  // F_p-linear solve on the stored matrix.
  uint32_t d = F->d();
  uint64_t p = F->p();
  std::vector<std::vector<uint64_t>> aug(d, std::vector<uint64_t>(d + 1, 0));
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = 0; j < d; ++j) aug[i][j] = an.matrix[i][j];
    aug[i][d] = target.coeffs()[i];
  }
  auto inv_mod = [&](uint64_t x) {
    uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  uint32_t row = 0;
  std::vector<int> pivot_col(d, -1);
  for (uint32_t col = 0; col < d && row < d; ++col) {
    uint32_t sel = row;
    while (sel < d && aug[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(aug[sel], aug[row]);
    uint64_t iv = inv_mod(aug[row][col]);
    for (uint32_t j = 0; j <= d; ++j) aug[row][j] = aug[row][j] * iv % p;
    for (uint32_t i = 0; i < d; ++i) {
      if (i != row && aug[i][col]) {
        uint64_t f = aug[i][col];
        for (uint32_t j = 0; j <= d; ++j)
          aug[i][j] = (aug[i][j] + p - f * aug[row][j] % p) % p;
      }
    }
    pivot_col[row] = (int)col;
    ++row;
  }
  std::vector<uint32_t> sol(d, 0);
  for (uint32_t i = 0; i < row; ++i)
    if (pivot_col[i] >= 0) sol[pivot_col[i]] = (uint32_t)aug[i][d];
  RFElem x = F->from_coeffs(sol);
  if (psi_bar_eval(an.k, an.A0, an.b0, an.omega, x) != target)
    fail(Errc::PostconditionFailed, "linear psi solve failed on an image element");
  return x;
}

}  // namespace ramify
