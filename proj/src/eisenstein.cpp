#include "ramify/eisenstein.hpp"

#include <algorithm>
#include <set>

namespace ramify {

long long vp_of(long long h, uint64_t p) {
  if (h == 0) fail(Errc::BadSpec, "vp of zero");
  long long v = 0;
  while (h % (long long)p == 0) {
    h /= (long long)p;
    ++v;
  }
  return v;
}

KElem EisensteinPoly::coeff(long long h) const {
  const auto& e = at(h);
  return e.has_value() ? *e : field->zero();
}

std::optional<KElem> EisensteinPoly::diff(const std::optional<KElem>& a,
                                          const std::optional<KElem>& b,
                                          const LocalFieldPtr& field) {
  (void)field;
  if (!a.has_value() && !b.has_value()) return std::nullopt;
  if (!b.has_value()) return a;
  if (!a.has_value()) return b->neg();
  return a->sub(*b);
}

long long EisensteinPoly::nonzero_terms() const {
  long long count = 1;  // X^n
  for (long long h = 1; h <= n; ++h) {
    if (!at(h).has_value()) continue;
    if (at(h)->val().known) ++count;
  }
  return count;
}

EisensteinPoly eis_validate(const LocalFieldPtr& field, long long degree,
                            const std::map<long long, KElem>& terms) {
  if (!field) fail(Errc::BadSpec, "polynomial needs a field");
  if (degree < 1) fail(Errc::BadSpec, "degree must be positive");
  EisensteinPoly f;
  f.field = field;
  f.n = degree;
  f.k = vp_of(degree, field->p());
  f.u = degree;
  for (long long i = 0; i < f.k; ++i) f.u /= (long long)field->p();
  f.c.assign(degree, std::nullopt);
  for (const auto& [h, v] : terms) {
    if (h < 1 || h > degree)
      fail(Errc::NotEisenstein, "term index " + std::to_string(h) + " out of range");
    if (!v.field()->same_field(*field)) fail(Errc::MixedFields, "coefficient from another field");
    f.c[h - 1] = v;
  }
  for (long long h = 1; h <= degree; ++h) {
    const auto& e = f.at(h);
    if (!e.has_value()) continue;
    if (e->prec() < 1)
      fail(Errc::InsufficientPrecision, "coefficient c_" + std::to_string(h) + " has no digits");
    if (!e->digit_at(0).is_zero())
      fail(Errc::NotEisenstein, "c_" + std::to_string(h) + " is a unit");
  }
  // the constant term must have valuation exactly 1
  const auto& cn = f.at(degree);
  if (!cn.has_value()) fail(Errc::NotEisenstein, "constant term is zero");
  auto v = cn->val();
  if (!v.known) {
    if (v.prec < 2)
      fail(Errc::InsufficientPrecision, "constant term needs at least two digits");
    fail(Errc::NotEisenstein, "constant term has valuation >= 2");
  }
  if (v.v != 1) fail(Errc::NotEisenstein, "constant term has valuation != 1");
  return f;
}

std::vector<ExtInt> tilde_indices(const EisensteinPoly& f) {
  uint64_t p = f.field->p();
  std::vector<ExtInt> out(f.k + 1, ExtInt::infinity());
  for (long long j = 0; j <= f.k; ++j) {
    ExtInt best = ExtInt::infinity();
    std::vector<long long> bounds;
    for (long long h = 1; h <= f.n; ++h) {
      if (vp_of(h, p) > j) continue;
      const auto& e = f.at(h);
      if (!e.has_value()) continue;  // exact zero contributes nothing
      auto v = e->val();
      if (v.known) {
        best = ExtInt::min(best, ExtInt(f.n * v.v - h));
      } else {
        bounds.push_back(f.n * v.prec - h);
      }
    }
    for (long long b : bounds) {
      if (best.is_inf() || ExtInt(b) < best)
        fail(Errc::InsufficientPrecision,
             "a coefficient that is zero at precision could still attain the level-" +
                 std::to_string(j) + " minimum");
    }
    out[j] = best;
  }
  return out;
}

InsepProfile indices(const EisensteinPoly& f) {
  InsepProfile prof;
  prof.n = f.n;
  prof.u = f.u;
  prof.k = f.k;
  prof.p = (long long)f.field->p();
  prof.e_K = f.field->e_K();
  prof.tilde = tilde_indices(f);
  prof.idx.assign(f.k + 1, 0);
  for (long long j = 0; j <= f.k; ++j) {
    ExtInt best = ExtInt::infinity();
    for (long long jp = j; jp <= f.k; ++jp) {
      ExtInt term = prof.tilde[jp];
      if (jp != j) {
        if (prof.e_K.is_inf()) continue;  // infinite shift never attains the min
        term = term + ExtInt((jp - j) * f.n * prof.e_K.value());
      }
      best = ExtInt::min(best, term);
    }
    if (best.is_inf())
      fail(Errc::NotSeparable,
           "index i_" + std::to_string(j) + " is infinite; the extension is inseparable");
    prof.idx[j] = best.value();
  }
  std::set<long long> seen(prof.idx.begin(), prof.idx.end());
  prof.distinct_count = (int)seen.size();
  if (f.u == 1 && prof.distinct_count == 2) {
    prof.two_index = true;
    long long pk = f.n;
    long long r = prof.idx[0] % pk;
    prof.b0 = r == 0 ? pk : pk - r;
    prof.A0 = (prof.idx[0] + prof.b0) / pk;
    prof.brk = Rational(prof.idx[0], pk - 1);
  }
  return prof;
}

Rational ram_break(const InsepProfile& prof) {
  if (!prof.two_index) fail(Errc::NotTwoIndex, "break is defined for two-index profiles");
  return prof.brk;
}

Rational phi_j(const InsepProfile& prof, long long j, const Rational& x) {
  if (x < Rational(0)) fail(Errc::BadSpec, "phi is defined for x >= 0");
  if (j < 0 || j > prof.k) fail(Errc::BadSpec, "phi level out of range");
  long long pj = 1;
  Rational best = Rational(prof.idx[0]) + x;
  for (long long j0 = 1; j0 <= j; ++j0) {
    pj *= prof.p;
    best = Rational::min(best, Rational(prof.idx[j0]) + Rational(pj) * x);
  }
  return best;
}

Rational phi_LK(const InsepProfile& prof, const Rational& x) {
  return phi_j(prof, prof.k, x) / Rational(prof.n);
}

long long phi_int(const InsepProfile& prof, long long j, long long ell) {
  if (ell < 0) fail(Errc::BadSpec, "phi is defined for x >= 0");
  if (j < 0 || j > prof.k) fail(Errc::BadSpec, "phi level out of range");
  long long pj = 1;
  long long best = prof.idx[0] + ell;
  for (long long j0 = 1; j0 <= j; ++j0) {
    pj *= prof.p;
    best = std::min(best, prof.idx[j0] + pj * ell);
  }
  return best;
}

long long rho(const InsepProfile& prof, long long h, long long ell) {
  if (h < 1 || h > prof.n) fail(Errc::BadSpec, "rho index out of range");
  if (ell < 1) fail(Errc::BadSpec, "rho level must be >= 1");
  long long j = std::min(vp_of(h, (uint64_t)prof.p), prof.k);
  long long phi = phi_int(prof, j, ell);
  return (phi + h + prof.n - 1) / prof.n;  // ceiling
}

bool l_equiv(const EisensteinPoly& f, const EisensteinPoly& g, long long ell) {
  if (!f.field->same_field(*g.field)) fail(Errc::MixedFields, "polynomials over different fields");
  if (f.n != g.n) fail(Errc::BadSpec, "polynomials of different degrees");
  InsepProfile prof = indices(f);
  for (long long h = 1; h <= f.n; ++h) {
    long long need = rho(prof, h, ell);
    auto dv = EisensteinPoly::diff(g.at(h), f.at(h), f.field);
    if (!dv.has_value()) continue;  // exactly equal coefficients
    auto v = dv->val();
    if (v.known) {
      if (v.v < need) return false;
      continue;
    }
    if (v.prec < need)
      fail(Errc::InsufficientPrecision,
           "coefficient difference at h = " + std::to_string(h) + " is known only mod pi^" +
               std::to_string(v.prec) + " but rho = " + std::to_string(need));
  }
  return true;
}

}  // namespace ramify
