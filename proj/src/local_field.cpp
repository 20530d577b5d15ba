#include "ramify/local_field.hpp"

#include <algorithm>
#include <cctype>

namespace ramify {

namespace {

void check_compat(const KElem& a, const KElem& b) {
  if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
    fail(Errc::MixedFields, "elements of different local fields");
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)(((unsigned __int128)a * b) % m);
}

}  // namespace

LocalField::LocalField(FieldModel model, ResidueFieldPtr rf, long long N)
    : model_(model), rf_(std::move(rf)), N_(N) {
  if (model_ == FieldModel::MixedUnramified) {
    ppow_.resize(N_ + 1);
    ppow_[0] = 1;
    for (long long i = 1; i <= N_; ++i) ppow_[i] = ppow_[i - 1] * rf_->p();
  }
}

LocalFieldPtr LocalField::create(FieldModel model, ResidueFieldPtr residue,
                                 long long precision) {
  if (!residue) fail(Errc::BadSpec, "local field needs a residue field");
  if (precision < 1) fail(Errc::BadSpec, "precision must be at least 1");
  if (precision > 4096) fail(Errc::BadSpec, "precision too large");
  if (model == FieldModel::MixedUnramified) {
    // exact coordinates are machine integers mod p^N
    unsigned __int128 pn = 1;
    for (long long i = 0; i < precision; ++i) {
      pn *= residue->p();
      if (pn > ((unsigned __int128)1 << 62))
        fail(Errc::BadSpec, "p^precision exceeds 2^62; reduce the precision");
    }
  }
  return LocalFieldPtr(new LocalField(model, std::move(residue), precision));
}

bool LocalField::same_field(const LocalField& o) const {
  return model_ == o.model_ && N_ == o.N_ && rf_->same_field(*o.rf_);
}

uint64_t LocalField::p_pow(long long e) const {
  if (model_ != FieldModel::MixedUnramified || e < 0 || e > N_)
    fail(Errc::BadSpec, "p_pow out of range");
  return ppow_[e];
}

KElem KElem::make(LocalFieldPtr owner, long long prec, std::vector<uint64_t> data) {
  KElem x;
  x.owner_ = std::move(owner);
  x.prec_ = prec;
  x.a_ = std::move(data);
  return x;
}

KElem LocalField::zero(long long prec) const {
  if (prec < 0) prec = N_;
  size_t n = model_ == FieldModel::MixedUnramified ? d() : (size_t)prec * d();
  return KElem::make(shared_from_this(), prec, std::vector<uint64_t>(n, 0));
}

KElem LocalField::one() const { return from_int(1); }

KElem LocalField::from_int(long long v) const {
  if (model_ == FieldModel::MixedUnramified) {
    uint64_t m = ppow_[N_];
    long long r = v % (long long)m;
    if (r < 0) r += (long long)m;
    std::vector<uint64_t> data(d(), 0);
    data[0] = (uint64_t)r;
    return KElem::make(shared_from_this(), N_, std::move(data));
  }
  std::vector<uint64_t> data((size_t)N_ * d(), 0);
  long long r = v % (long long)p();
  if (r < 0) r += (long long)p();
  data[0] = (uint64_t)r;
  return KElem::make(shared_from_this(), N_, std::move(data));
}

KElem LocalField::pi_pow(long long e) const { return one().shift(e); }

KElem LocalField::teich(const RFElem& a) const {
  if (!a.field()->same_field(*rf_)) fail(Errc::MixedFields, "residue element of another field");
  if (model_ == FieldModel::EqualChar) {
    std::vector<uint64_t> data((size_t)N_ * d(), 0);
    for (uint32_t i = 0; i < d(); ++i) data[i] = a.coeffs()[i];
    return KElem::make(shared_from_this(), N_, std::move(data));
  }
  std::vector<uint64_t> data(d(), 0);
  for (uint32_t i = 0; i < d(); ++i) data[i] = a.coeffs()[i];
  KElem y = KElem::make(shared_from_this(), N_, std::move(data));
  // y -> y^q gains at least one digit of agreement per step
  for (long long it = 0; it < N_; ++it) y = y.pow(q());
  return y;
}

KElem LocalField::unit_pi_pow(const RFElem& a, long long e) const {
  return teich(a).shift(e);
}

// ---------------------------------------------------------------------------
// KElem arithmetic

Valuation KElem::val() const {
  Valuation out;
  out.prec = prec_;
  if (owner_->model() == FieldModel::MixedUnramified) {
    uint64_t p = owner_->p();
    long long best = -1;
    for (uint64_t c : a_) {
      if (c == 0) continue;
      long long v = 0;
      while (c % p == 0) {
        c /= p;
        ++v;
      }
      if (best < 0 || v < best) best = v;
    }
    if (best >= 0 && best < prec_) {
      out.known = true;
      out.v = best;
    }
    return out;
  }
  uint32_t d = owner_->d();
  for (long long t = 0; t < prec_; ++t) {
    for (uint32_t i = 0; i < d; ++i) {
      if (a_[(size_t)t * d + i]) {
        out.known = true;
        out.v = t;
        return out;
      }
    }
  }
  return out;
}

bool KElem::is_zero_at_prec() const {
  for (uint64_t c : a_)
    if (c) return false;
  return true;
}

RFElem KElem::residue() const {
  if (prec_ < 1) fail(Errc::InsufficientPrecision, "no digits available");
  uint32_t d = owner_->d();
  std::vector<uint32_t> c(d, 0);
  if (owner_->model() == FieldModel::MixedUnramified) {
    for (uint32_t i = 0; i < d; ++i) c[i] = (uint32_t)(a_[i] % owner_->p());
  } else {
    for (uint32_t i = 0; i < d; ++i) c[i] = (uint32_t)a_[i];
  }
  return owner_->residue()->from_coeffs(std::move(c));
}

KElem KElem::add(const KElem& o) const {
  check_compat(*this, o);
  long long prec = std::min(prec_, o.prec_);
  uint32_t d = owner_->d();
  if (owner_->model() == FieldModel::MixedUnramified) {
    uint64_t m = owner_->p_pow(prec);
    std::vector<uint64_t> out(d);
    for (uint32_t i = 0; i < d; ++i) out[i] = (a_[i] % m + o.a_[i] % m) % m;
    return KElem::make(owner_, prec, std::move(out));
  }
  uint64_t p = owner_->p();
  std::vector<uint64_t> out((size_t)prec * d);
  for (size_t i = 0; i < out.size(); ++i) out[i] = (a_[i] + o.a_[i]) % p;
  return KElem::make(owner_, prec, std::move(out));
}

KElem KElem::neg() const {
  uint32_t d = owner_->d();
  if (owner_->model() == FieldModel::MixedUnramified) {
    uint64_t m = owner_->p_pow(prec_);
    std::vector<uint64_t> out(d);
    for (uint32_t i = 0; i < d; ++i) out[i] = (m - a_[i] % m) % m;
    return KElem::make(owner_, prec_, std::move(out));
  }
  uint64_t p = owner_->p();
  std::vector<uint64_t> out(a_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = (p - a_[i]) % p;
  return KElem::make(owner_, prec_, std::move(out));
}

KElem KElem::sub(const KElem& o) const { return add(o.neg()); }

KElem KElem::mul(const KElem& o) const {
  check_compat(*this, o);
  long long prec = std::min(prec_, o.prec_);
  uint32_t d = owner_->d();
  const auto& mod = owner_->residue()->modulus();
  if (owner_->model() == FieldModel::MixedUnramified) {
    uint64_t m = owner_->p_pow(prec);
    std::vector<uint64_t> prod(2 * d - 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
      uint64_t xi = a_[i] % m;
      if (!xi) continue;
      for (uint32_t j = 0; j < d; ++j)
        prod[i + j] = (uint64_t)((prod[i + j] + (unsigned __int128)xi * (o.a_[j] % m)) % m);
    }
    for (int t = (int)(2 * d - 2); t >= (int)d; --t) {
      uint64_t c = prod[t];
      if (c) {
        for (uint32_t i = 0; i < d; ++i) {
          uint64_t sub = mulmod(c, mod[i], m);
          prod[t - d + i] = (prod[t - d + i] + m - sub) % m;
        }
      }
      prod[t] = 0;
    }
    prod.resize(d);
    return KElem::make(owner_, prec, std::move(prod));
  }
  uint64_t p = owner_->p();
  std::vector<uint64_t> out((size_t)prec * d, 0);
  std::vector<uint64_t> block(2 * d - 1);
  for (long long i = 0; i < prec; ++i) {
    const uint64_t* x = a_.data() + (size_t)i * d;
    bool xz = true;
    for (uint32_t u = 0; u < d; ++u) xz = xz && !x[u];
    if (xz) continue;
    for (long long j = 0; i + j < prec && j < o.prec_; ++j) {
      const uint64_t* y = o.a_.data() + (size_t)j * d;
      std::fill(block.begin(), block.end(), 0);
      for (uint32_t u = 0; u < d; ++u) {
        if (!x[u]) continue;
        for (uint32_t v = 0; v < d; ++v) block[u + v] = (block[u + v] + x[u] * y[v]) % p;
      }
      for (int t = (int)(2 * d - 2); t >= (int)d; --t) {
        uint64_t c = block[t];
        if (c) {
          for (uint32_t u = 0; u < d; ++u)
            block[t - d + u] = (block[t - d + u] + p - c * mod[u] % p) % p;
        }
        block[t] = 0;
      }
      uint64_t* dst = out.data() + (size_t)(i + j) * d;
      for (uint32_t u = 0; u < d; ++u) dst[u] = (dst[u] + block[u]) % p;
    }
  }
  return KElem::make(owner_, prec, std::move(out));
}

KElem KElem::pow(uint64_t e) const {
  KElem base = *this;
  KElem acc = owner_->one().truncate(prec_);
  while (e) {
    if (e & 1) acc = acc.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return acc;
}

KElem KElem::mul_int(long long mval) const {
  if (owner_->model() == FieldModel::MixedUnramified) {
    uint64_t m = owner_->p_pow(prec_);
    long long r = mval % (long long)m;
    if (r < 0) r += (long long)m;
    std::vector<uint64_t> out(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) out[i] = mulmod(a_[i] % m, (uint64_t)r, m);
    return KElem::make(owner_, prec_, std::move(out));
  }
  uint64_t p = owner_->p();
  long long r = mval % (long long)p;
  if (r < 0) r += (long long)p;
  std::vector<uint64_t> out(a_.size());
  for (size_t i = 0; i < a_.size(); ++i) out[i] = a_[i] * (uint64_t)r % p;
  return KElem::make(owner_, prec_, std::move(out));
}

KElem KElem::inv() const {
  Valuation v = val();
  if (!v.known || v.v != 0)
    fail(Errc::NonUnitInverse, "inverse requires a certified unit (valuation 0)");
  if (owner_->model() == FieldModel::MixedUnramified) {
    KElem z = owner_->teich(residue().inv()).truncate(prec_);
    KElem two = owner_->from_int(2).truncate(prec_);
    long long steps = 1;
    while ((1LL << steps) < prec_) ++steps;
    for (long long i = 0; i <= steps; ++i) z = z.mul(two.sub(mul(z)));
    return z;
  }
  // series inverse by the digit recurrence
  uint32_t d = owner_->d();
  auto F = owner_->residue();
  auto block = [&](const std::vector<uint64_t>& data, long long t) {
    std::vector<uint32_t> c(d);
    for (uint32_t i = 0; i < d; ++i) c[i] = (uint32_t)data[(size_t)t * d + i];
    return F->from_coeffs(std::move(c));
  };
  RFElem a0inv = block(a_, 0).inv();
  std::vector<RFElem> b(prec_);
  b[0] = a0inv;
  for (long long i = 1; i < prec_; ++i) {
    RFElem s = F->zero();
    for (long long j = 1; j <= i; ++j) s = s + block(a_, j) * b[i - j];
    b[i] = -(a0inv * s);
  }
  std::vector<uint64_t> out((size_t)prec_ * d);
  for (long long t = 0; t < prec_; ++t)
    for (uint32_t i = 0; i < d; ++i) out[(size_t)t * d + i] = b[t].coeffs()[i];
  return KElem::make(owner_, prec_, std::move(out));
}

KElem KElem::shift(long long e) const {
  if (e < 0) fail(Errc::BadSpec, "negative pi shift");
  if (e == 0) return *this;
  long long prec = std::min(prec_ + e, owner_->precision());
  uint32_t d = owner_->d();
  if (owner_->model() == FieldModel::MixedUnramified) {
    uint64_t m = owner_->p_pow(prec);
    uint64_t f = e >= prec ? 0 : owner_->p_pow(e) % m;
    std::vector<uint64_t> out(d);
    for (uint32_t i = 0; i < d; ++i) out[i] = mulmod(a_[i] % m, f, m);
    return KElem::make(owner_, prec, std::move(out));
  }
  std::vector<uint64_t> out((size_t)prec * d, 0);
  for (long long t = 0; t + e < prec && t < prec_; ++t)
    for (uint32_t i = 0; i < d; ++i) out[(size_t)(t + e) * d + i] = a_[(size_t)t * d + i];
  return KElem::make(owner_, prec, std::move(out));
}

KElem KElem::truncate(long long prec) const {
  if (prec > prec_) fail(Errc::BadSpec, "truncate cannot raise precision");
  if (prec == prec_) return *this;
  if (prec < 0) fail(Errc::BadSpec, "negative precision");
  uint32_t d = owner_->d();
  if (owner_->model() == FieldModel::MixedUnramified) {
    std::vector<uint64_t> out(d);
    uint64_t m = prec == 0 ? 1 : owner_->p_pow(prec);
    for (uint32_t i = 0; i < d; ++i) out[i] = a_[i] % m;
    return KElem::make(owner_, prec, std::move(out));
  }
  std::vector<uint64_t> out(a_.begin(), a_.begin() + (size_t)prec * d);
  return KElem::make(owner_, prec, std::move(out));
}

RFElem KElem::digit_at(long long t) const {
  if (t < 0) fail(Errc::BadSpec, "negative digit index");
  if (t >= prec_)
    fail(Errc::InsufficientPrecision,
         "digit at valuation " + std::to_string(t) + " needs precision > " +
             std::to_string(t) + ", have " + std::to_string(prec_));
  if (owner_->model() == FieldModel::EqualChar) {
    uint32_t d = owner_->d();
    std::vector<uint32_t> c(d);
    for (uint32_t i = 0; i < d; ++i) c[i] = (uint32_t)a_[(size_t)t * d + i];
    return owner_->residue()->from_coeffs(std::move(c));
  }
  KElem cur = *this;
  uint64_t p = owner_->p();
  for (long long s = 0; s < t; ++s) {
    RFElem r = cur.residue();
    if (!r.is_zero()) cur = cur.sub(owner_->teich(r).truncate(cur.prec_));
    std::vector<uint64_t> next(cur.a_.size());
    for (size_t i = 0; i < cur.a_.size(); ++i) next[i] = cur.a_[i] / p;
    cur = KElem::make(owner_, cur.prec_ - 1, std::move(next));
  }
  return cur.residue();
}

std::vector<std::pair<long long, RFElem>> KElem::digits() const {
  std::vector<std::pair<long long, RFElem>> out;
  if (owner_->model() == FieldModel::EqualChar) {
    uint32_t d = owner_->d();
    for (long long t = 0; t < prec_; ++t) {
      std::vector<uint32_t> c(d);
      bool nz = false;
      for (uint32_t i = 0; i < d; ++i) {
        c[i] = (uint32_t)a_[(size_t)t * d + i];
        nz = nz || c[i];
      }
      if (nz) out.emplace_back(t, owner_->residue()->from_coeffs(std::move(c)));
    }
    return out;
  }
  KElem cur = *this;
  uint64_t p = owner_->p();
  for (long long t = 0; t < prec_; ++t) {
    RFElem r = cur.residue();
    if (!r.is_zero()) {
      out.emplace_back(t, r);
      cur = cur.sub(owner_->teich(r).truncate(cur.prec_));
    }
    std::vector<uint64_t> next(cur.a_.size());
    for (size_t i = 0; i < cur.a_.size(); ++i) next[i] = cur.a_[i] / p;
    cur = KElem::make(owner_, cur.prec_ - 1, std::move(next));
  }
  return out;
}

bool KElem::eq(const KElem& o) const {
  check_compat(*this, o);
  return prec_ == o.prec_ && a_ == o.a_;
}

std::string KElem::str() const {
  auto ds = digits();
  if (ds.empty()) return "0";
  std::string out;
  for (const auto& [t, r] : ds) {
    if (!out.empty()) out += " + ";
    out += "(" + r.str() + ")*pi^" + std::to_string(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// K-element literal parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
};

long long parse_uint(Cursor& c, uint64_t clamp) {
  c.ws();
  if (c.i >= c.s.size() || !std::isdigit((unsigned char)c.s[c.i]))
    fail(Errc::BadSpec, "expected an integer in K literal: " + c.s);
  unsigned __int128 v = 0;
  while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) {
    v = v * 10 + (c.s[c.i] - '0');
    if (clamp && v > (unsigned __int128)clamp * 4) v %= clamp;
    ++c.i;
  }
  return (long long)v;
}

long long parse_pi_exp(Cursor& c) {
  // cursor sits right after "pi"
  c.ws();
  if (c.i < c.s.size() && c.s[c.i] == '^') {
    ++c.i;
    return parse_uint(c, 0);
  }
  return 1;
}

}  // namespace

KElem LocalField::parse(const std::string& literal) const {
  Cursor c{literal};
  KElem acc = zero();
  uint64_t intmod = model_ == FieldModel::MixedUnramified ? p_pow(N_) : p();
  bool first = true;
  while (!c.done()) {
    long long sign = 1;
    if (c.s[c.i] == '+' || c.s[c.i] == '-') {
      sign = c.s[c.i] == '-' ? -1 : 1;
      ++c.i;
      c.ws();
    } else if (!first) {
      fail(Errc::BadSpec, "expected '+' or '-' in K literal: " + literal);
    }
    first = false;
    if (c.done()) fail(Errc::BadSpec, "dangling sign in K literal: " + literal);
    KElem term = zero();
    if (c.s[c.i] == '(') {
      size_t close = c.s.find(')', c.i);
      if (close == std::string::npos)
        fail(Errc::BadSpec, "unbalanced parenthesis in K literal: " + literal);
      RFElem r = rf_->parse(c.s.substr(c.i + 1, close - c.i - 1));
      c.i = close + 1;
      long long e = 0;
      c.ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        c.ws();
        if (c.s.compare(c.i, 2, "pi") != 0)
          fail(Errc::BadSpec, "expected pi after '*' in K literal: " + literal);
        c.i += 2;
        e = parse_pi_exp(c);
      }
      term = unit_pi_pow(r, e);
    } else if (c.s.compare(c.i, 2, "pi") == 0) {
      c.i += 2;
      term = pi_pow(parse_pi_exp(c));
    } else if (std::isdigit((unsigned char)c.s[c.i])) {
      long long v = parse_uint(c, intmod);
      long long e = 0;
      c.ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        c.ws();
        if (c.s.compare(c.i, 2, "pi") != 0)
          fail(Errc::BadSpec, "expected pi after '*' in K literal: " + literal);
        c.i += 2;
        e = parse_pi_exp(c);
      }
      term = from_int(v).shift(e);
    } else {
      fail(Errc::BadSpec, "unexpected character in K literal: " + literal);
    }
    acc = sign < 0 ? acc.sub(term) : acc.add(term);
  }
  if (first) fail(Errc::BadSpec, "empty K literal");
  return acc;
}

}  // namespace ramify
