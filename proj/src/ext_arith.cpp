#include "ramify/ext_arith.hpp"

#include <algorithm>
#include <cctype>

namespace ramify {

namespace {

// reduction row for pi_L^n: pi^n = sum_j r[j] pi^j with r[j] = (-1)^{n-j+1} c_{n-j}
std::vector<std::optional<KElem>> reduction_row(const EisensteinPoly& f) {
  std::vector<std::optional<KElem>> r(f.n);
  for (long long j = 0; j < f.n; ++j) {
    long long h = f.n - j;
    const auto& ch = f.at(h);
    if (!ch.has_value()) continue;
    r[j] = (f.n - j + 1) % 2 == 0 ? *ch : ch->neg();
  }
  return r;
}

}  // namespace

LVec l_zero(const EisensteinPoly& f) { return LVec(f.n, f.field->zero()); }

LVec l_shift(const EisensteinPoly& f, const LVec& a) {
  LVec out(f.n, f.field->zero());
  auto row = reduction_row(f);
  const KElem& top = a[f.n - 1];
  for (long long j = f.n - 1; j >= 1; --j) out[j] = a[j - 1];
  for (long long j = 0; j < f.n; ++j) {
    if (row[j].has_value()) out[j] = out[j].add(top.mul(*row[j]));
  }
  return out;
}

LVec l_mul(const EisensteinPoly& f, const LVec& a, const LVec& b) {
  if ((long long)a.size() != f.n || (long long)b.size() != f.n)
    fail(Errc::BadSpec, "ring element has the wrong length");
  // schoolbook product, then fold degrees >= n with the relation for pi^n
  std::vector<KElem> prod(2 * f.n - 1, f.field->zero());
  for (long long i = 0; i < f.n; ++i)
    for (long long j = 0; j < f.n; ++j) prod[i + j] = prod[i + j].add(a[i].mul(b[j]));
  auto row = reduction_row(f);
  for (long long t = 2 * f.n - 2; t >= f.n; --t) {
    KElem c = prod[t];
    for (long long j = 0; j < f.n; ++j) {
      if (row[j].has_value()) prod[t - f.n + j] = prod[t - f.n + j].add(c.mul(*row[j]));
    }
  }
  prod.resize(f.n);
  return prod;
}

LVec l_from_expr(const EisensteinPoly& f, const UniformizerExpr& expr) {
  LVec acc = l_zero(f);
  if (expr.terms.empty()) return acc;
  long long max_e = expr.terms.rbegin()->first;
  LVec power(f.n, f.field->zero());
  power[0] = f.field->one();  // pi_L^0
  for (long long e = 0; e <= max_e; ++e) {
    auto it = expr.terms.find(e);
    if (it != expr.terms.end()) {
      for (long long i = 0; i < f.n; ++i) acc[i] = acc[i].add(it->second.mul(power[i]));
    }
    if (e < max_e) power = l_shift(f, power);
  }
  return acc;
}

Valuation l_val(const EisensteinPoly& f, const LVec& a) {
  // v_L(sum a_i pi^i) = min_i (n v_K(a_i) + i); the candidates are distinct
  // mod n, so the minimum is never a tie.
  Valuation out;
  long long best_known = -1;
  long long floor_bound = -1;
  for (long long i = 0; i < f.n; ++i) {
    auto v = a[i].val();
    if (v.known) {
      long long cand = f.n * v.v + i;
      if (best_known < 0 || cand < best_known) best_known = cand;
    } else {
      long long bound = f.n * v.prec + i;
      if (floor_bound < 0 || bound < floor_bound) floor_bound = bound;
    }
  }
  if (best_known >= 0 && (floor_bound < 0 || best_known <= floor_bound)) {
    out.known = true;
    out.v = best_known;
    out.prec = best_known + 1;
    return out;
  }
  out.prec = floor_bound < 0 ? 0 : floor_bound;
  return out;
}

std::vector<LVec> mul_matrix(const EisensteinPoly& f, const LVec& a) {
  std::vector<LVec> cols(f.n);
  cols[0] = a;
  for (long long i = 1; i < f.n; ++i) cols[i] = l_shift(f, cols[i - 1]);
  return cols;  // cols[i] = a * pi_L^i on the power basis
}

std::vector<KElem> charpoly(const LocalFieldPtr& K, const std::vector<LVec>& M) {
  long long n = (long long)M.size();
  if (n == 0) fail(Errc::BadSpec, "empty matrix");
  auto entry = [&](long long r, long long c) -> const KElem& { return M[c][r]; };
  std::vector<KElem> C = {K->one(), entry(0, 0).neg()};
  for (long long r = 2; r <= n; ++r) {
    // q[0] = 1, q[1] = -M[r-1][r-1], q[j] = -(R A^{j-2} S) for the leading
    // (r-1) block A, row R = M[r-1][0..r-2], column S = M[0..r-2][r-1]
    std::vector<KElem> q(r + 1, K->zero());
    q[0] = K->one();
    q[1] = entry(r - 1, r - 1).neg();
    std::vector<KElem> v(r - 1, K->zero());
    for (long long i = 0; i < r - 1; ++i) v[i] = entry(i, r - 1);
    for (long long j = 2; j <= r; ++j) {
      KElem dot = K->zero();
      for (long long i = 0; i < r - 1; ++i) dot = dot.add(entry(r - 1, i).mul(v[i]));
      q[j] = dot.neg();
      if (j < r) {
        std::vector<KElem> w(r - 1, K->zero());
        for (long long i = 0; i < r - 1; ++i)
          for (long long t = 0; t < r - 1; ++t) w[i] = w[i].add(entry(i, t).mul(v[t]));
        v = std::move(w);
      }
    }
    std::vector<KElem> next(r + 1, K->zero());
    for (long long i = 0; i <= r; ++i) {
      KElem s = K->zero();
      for (long long t = 0; t <= std::min(i, r); ++t) {
        long long idx = i - t;
        if (idx < 0 || idx >= (long long)C.size()) continue;
        s = s.add(q[t].mul(C[idx]));
      }
      next[i] = s;
    }
    C = std::move(next);
  }
  return C;
}

KElem norm(const EisensteinPoly& f, const LVec& a) {
  auto cp = charpoly(f.field, mul_matrix(f, a));
  KElem det = cp[f.n];  // det(-M)
  return f.n % 2 == 0 ? det : det.neg();
}

EisensteinPoly minpoly_uniformizer(const EisensteinPoly& f, const UniformizerExpr& expr) {
  LVec alpha = l_from_expr(f, expr);
  auto v = l_val(f, alpha);
  if (!v.known || v.v != 1)
    fail(Errc::NotUniformizer,
         "substitution value has L-valuation " + (v.known ? std::to_string(v.v) : ">= " + std::to_string(v.prec)) +
             ", expected 1");
  auto cp = charpoly(f.field, mul_matrix(f, alpha));
  std::map<long long, KElem> terms;
  for (long long h = 1; h <= f.n; ++h) {
    // our convention: coefficient of X^{n-h} is (-1)^h c_h, so c_h = (-1)^h a_h
    terms.emplace(h, h % 2 == 0 ? cp[h] : cp[h].neg());
  }
  try {
    return eis_validate(f.field, f.n, terms);
  } catch (const Error& e) {
    if (e.code() == Errc::NotEisenstein)
      fail(Errc::NotEisensteinResult,
           std::string("characteristic polynomial failed Eisenstein validation: ") + e.what());
    throw;
  }
}

// ---------------------------------------------------------------------------
// substitution expression literals, e.g. "X + (2*g)*X^3" or "(1)*pi^1 + X"

UniformizerExpr parse_uniformizer_expr(const LocalFieldPtr& K, const std::string& s) {
  UniformizerExpr out;
  size_t i = 0;
  auto ws = [&] {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  };
  auto parse_exp = [&](long long dflt) {
    ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      ws();
      if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
        fail(Errc::BadSpec, "bad exponent in expression: " + s);
      long long e = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        e = e * 10 + (s[i] - '0');
        ++i;
      }
      return e;
    }
    return dflt;
  };
  auto add_term = [&](long long e, const KElem& coef) {
    auto it = out.terms.find(e);
    if (it == out.terms.end())
      out.terms.emplace(e, coef);
    else
      it->second = it->second.add(coef);
  };
  bool first = true;
  while (true) {
    ws();
    if (i >= s.size()) break;
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      ws();
    } else if (!first) {
      fail(Errc::BadSpec, "expected '+' or '-' in expression: " + s);
    }
    first = false;
    if (i >= s.size()) fail(Errc::BadSpec, "dangling sign in expression: " + s);
    // a term is a '*'-separated product of factors: parenthesized values,
    // integers, pi^e, and at most one X^e
    KElem coef = K->one();
    long long xexp = -1;
    while (true) {
      ws();
      if (i >= s.size()) fail(Errc::BadSpec, "truncated term in expression: " + s);
      if (s[i] == '(') {
        size_t depth = 0;
        size_t close = std::string::npos;
        for (size_t j = i; j < s.size(); ++j) {
          if (s[j] == '(') ++depth;
          if (s[j] == ')' && --depth == 0) {
            close = j;
            break;
          }
        }
        if (close == std::string::npos) fail(Errc::BadSpec, "unbalanced parenthesis: " + s);
        std::string inner = s.substr(i + 1, close - i - 1);
        // a K literal when pi appears inside, otherwise a residue literal
        // lifted to its Teichmuller representative
        KElem v = inner.find("pi") != std::string::npos
                      ? K->parse(inner)
                      : K->teich(K->residue()->parse(inner));
        coef = coef.mul(v);
        i = close + 1;
      } else if (s.compare(i, 2, "pi") == 0) {
        i += 2;
        coef = coef.mul(K->pi_pow(parse_exp(1)));
      } else if (s[i] == 'X') {
        ++i;
        if (xexp >= 0) fail(Errc::BadSpec, "repeated X in a term: " + s);
        xexp = parse_exp(1);
      } else if (std::isdigit((unsigned char)s[i])) {
        long long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
          v = v * 10 + (s[i] - '0');
          if (v > (1LL << 40)) fail(Errc::BadSpec, "integer too large in expression: " + s);
          ++i;
        }
        coef = coef.mul(K->from_int(v));
      } else {
        fail(Errc::BadSpec, "unexpected character in expression: " + s);
      }
      ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    add_term(xexp < 0 ? 0 : xexp, sign < 0 ? coef.neg() : coef);
  }
  if (out.terms.empty()) fail(Errc::BadSpec, "empty expression");
  return out;
}

std::string uniformizer_expr_str(const UniformizerExpr& e) {
  std::string out;
  for (const auto& [exp, coef] : e.terms) {
    if (!out.empty()) out += " + ";
    std::string c = "(" + coef.str() + ")";
    if (exp == 0)
      out += c;
    else if (exp == 1)
      out += c + "*X";
    else
      out += c + "*X^" + std::to_string(exp);
  }
  return out;
}

}  // namespace ramify
