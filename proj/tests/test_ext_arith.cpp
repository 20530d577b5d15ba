#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ramify/ext_arith.hpp"

using namespace ramify;

namespace {

LocalFieldPtr q3z8(long long N = 12) {
  return LocalField::create(FieldModel::MixedUnramified, ResidueField::create(3, 2), N);
}
LocalFieldPtr q3(long long N = 12) {
  return LocalField::create(FieldModel::MixedUnramified, ResidueField::create(3, 1), N);
}
LocalFieldPtr f3t(long long N = 12) {
  return LocalField::create(FieldModel::EqualChar, ResidueField::create(3, 1), N);
}

EisensteinPoly sec71(const LocalFieldPtr& K) {
  return eis_validate(K, 9, {{1, K->from_int(-3)}, {9, K->from_int(3)}});
}
EisensteinPoly sec72(const LocalFieldPtr& K) {
  KElem pi = K->pi_pow(1);
  return eis_validate(K, 9, {{2, pi}, {3, pi}, {6, pi}, {9, pi}});
}

KElem random_elem(const LocalFieldPtr& K, std::mt19937_64& rng) {
  KElem acc = K->zero();
  std::uniform_int_distribution<uint64_t> pick(0, K->q() - 1);
  for (long long t = 0; t < K->precision(); ++t) {
    RFElem r = K->residue()->element_at(pick(rng));
    if (!r.is_zero()) acc = acc.add(K->unit_pi_pow(r, t));
  }
  return acc;
}

LVec pi_L(const EisensteinPoly& f) {
  LVec v = l_zero(f);
  v[1] = f.field->one();
  return v;
}

// test-side oracle: dense polynomials over K and the Leibniz expansion of
// det(XI - M), independent of the Berkowitz path
using KPoly = std::vector<KElem>;

KPoly kpoly_mul(const LocalFieldPtr& K, const KPoly& a, const KPoly& b) {
  KPoly out(a.size() + b.size() - 1, K->zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j].add(a[i].mul(b[j]));
  return out;
}

std::vector<KElem> leibniz_charpoly(const LocalFieldPtr& K, const std::vector<LVec>& M) {
  size_t n = M.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  KPoly acc(n + 1, K->zero());
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    KPoly term = {K->one()};
    for (size_t i = 0; i < n; ++i) {
      // row i, column perm[i] of XI - M (matrices are column-major)
      KPoly entry = {M[perm[i]][i].neg(), i == perm[i] ? K->one() : K->zero()};
      term = kpoly_mul(K, term, entry);
    }
    for (size_t i = 0; i < term.size() && i <= n; ++i)
      acc[i] = inversions % 2 == 0 ? acc[i].add(term[i]) : acc[i].sub(term[i]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // repackage to match charpoly(): [1, a_1, ..., a_n] with a_h at X^{n-h}
  std::vector<KElem> out(n + 1, K->zero());
  for (size_t h = 0; h <= n; ++h) out[h] = acc[n - h];
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("ext_arith");

TEST_CASE("multiplication reduces by the defining polynomial") {
  auto K = q3z8();
  EisensteinPoly f = sec71(K);
  // pi^9 = -3 pi^8 + 3
  LVec v = pi_L(f);
  LVec p8 = l_zero(f);
  p8[8] = K->one();
  LVec p9 = l_mul(f, v, p8);
  CHECK(p9[0].eq(K->from_int(3)));
  CHECK(p9[8].eq(K->from_int(-3)));
  for (int i = 1; i < 8; ++i) CHECK(p9[i].is_zero_at_prec());
  // 1 * a = a
  LVec one = l_zero(f);
  one[0] = K->one();
  std::mt19937_64 rng(5);
  LVec a = l_zero(f);
  for (auto& x : a) x = random_elem(K, rng);
  LVec same = l_mul(f, one, a);
  for (int i = 0; i < 9; ++i) CHECK(same[i].eq(a[i]));
}

TEST_CASE("valuations in L") {
  auto K = q3z8();
  EisensteinPoly f = sec71(K);
  auto v1 = l_val(f, pi_L(f));
  CHECK(v1.known);
  CHECK(v1.v == 1);
  LVec c = l_zero(f);
  c[0] = K->from_int(3);
  c[4] = K->one();
  auto v2 = l_val(f, c);  // min(9*1+0, 9*0+4) = 4
  CHECK(v2.known);
  CHECK(v2.v == 4);
  // additivity on random certified pairs
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    LVec a = l_zero(f), b = l_zero(f);
    a[(size_t)(rng() % 9)] = random_elem(K, rng);
    b[(size_t)(rng() % 9)] = random_elem(K, rng);
    auto va = l_val(f, a), vb = l_val(f, b);
    if (!va.known || !vb.known) continue;
    auto vab = l_val(f, l_mul(f, a, b));
    if (vab.known) CHECK(vab.v == va.v + vb.v);
  }
}

TEST_CASE("charpoly of the companion matrix recovers f") {
  for (auto f : {sec71(q3z8()), sec72(f3t())}) {
    auto cp = charpoly(f.field, mul_matrix(f, pi_L(f)));
    REQUIRE((long long)cp.size() == f.n + 1);
    CHECK(cp[0].eq(f.field->one()));
    for (long long h = 1; h <= f.n; ++h) {
      KElem expect = h % 2 == 0 ? f.coeff(h) : f.coeff(h).neg();
      CHECK(cp[h].eq(expect));
    }
  }
}

TEST_CASE("charpoly of a scalar is (X - a)^n") {
  auto K = q3();
  EisensteinPoly f = eis_validate(K, 4, {{4, K->from_int(3)}});
  KElem a = K->from_int(5);
  LVec av = l_zero(f);
  av[0] = a;
  auto cp = charpoly(K, mul_matrix(f, av));
  // oracle: expand (X - a)^4 by repeated polynomial multiplication
  KPoly pow = {K->one()};
  for (int i = 0; i < 4; ++i) pow = kpoly_mul(K, pow, {a.neg(), K->one()});
  for (long long h = 0; h <= 4; ++h) CHECK(cp[h].eq(pow[4 - h]));
}

TEST_CASE("charpoly agrees with the Leibniz determinant oracle") {
  std::mt19937_64 rng(20240812);
  for (const auto& K : {q3(6), q3z8(6), f3t(6)}) {
    for (size_t n : {2, 3, 4}) {
      for (int it = 0; it < 6; ++it) {
        std::vector<LVec> M(n, LVec(n, K->zero()));
        for (size_t c = 0; c < n; ++c)
          for (size_t r = 0; r < n; ++r) M[c][r] = random_elem(K, rng);
        auto fast = charpoly(K, M);
        auto slow = leibniz_charpoly(K, M);
        for (size_t h = 0; h <= n; ++h) CHECK(fast[h].eq(slow[h]));
      }
    }
  }
}

TEST_CASE("minpoly of X is f itself") {
  auto K = q3z8();
  EisensteinPoly f = sec71(K);
  auto expr = parse_uniformizer_expr(K, "X");
  EisensteinPoly g = minpoly_uniformizer(f, expr);
  for (long long h = 1; h <= 9; ++h) CHECK(g.coeff(h).eq(f.coeff(h)));
}

TEST_CASE("minpoly of a scaled uniformizer multiplies c_h by r^h") {
  auto K = f3t();
  EisensteinPoly f = sec72(K);
  RFElem r0 = K->residue()->from_int(2);
  UniformizerExpr expr;
  expr.terms.emplace(1, K->teich(r0));
  EisensteinPoly g = minpoly_uniformizer(f, expr);
  // paper form: X^9 + r0^2 pi X^7 - r0^3 pi X^6 + r0^6 pi X^3 - r0^9 pi
  for (long long h = 1; h <= 9; ++h) {
    KElem expect = K->teich(r0).pow(h).mul(f.coeff(h));
    CHECK(g.coeff(h).eq(expect));
  }
  CHECK(g.nonzero_terms() == 5);

  CHECK_THROWS_AS((void)minpoly_uniformizer(f, parse_uniformizer_expr(K, "X^2")), Error);
  CHECK_THROWS_AS((void)minpoly_uniformizer(f, parse_uniformizer_expr(K, "pi")), Error);
}

TEST_CASE("norms") {
  auto K = q3z8();
  EisensteinPoly f = sec71(K);
  CHECK(norm(f, pi_L(f)).eq(f.coeff(9)));
  LVec one = l_zero(f);
  one[0] = K->one();
  CHECK(norm(f, one).eq(K->one()));
  // norm of a unit reduces to the p^k-th power of its residue
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    LVec u = l_zero(f);
    for (auto& x : u) x = random_elem(K, rng);
    auto v0 = u[0].val();
    if (!v0.known || v0.v != 0) {
      u[0] = u[0].add(K->one());
      if (!u[0].val().known || u[0].val().v != 0) continue;
    }
    KElem nm = norm(f, u);
    CHECK(nm.residue() == u[0].residue().pow(9));
  }
  // multiplicativity on random pairs
  for (int it = 0; it < 100; ++it) {
    LVec a = l_zero(f), b = l_zero(f);
    for (auto& x : a) x = random_elem(K, rng);
    for (auto& x : b) x = random_elem(K, rng);
    CHECK(norm(f, l_mul(f, a, b)).eq(norm(f, a).mul(norm(f, b))));
  }
}

TEST_CASE("stability of l-equivalence under small perturbations") {
  std::mt19937_64 rng(77);
  for (auto f : {sec71(q3z8()), sec72(f3t())}) {
    const auto& K = f.field;
    for (int it = 0; it < 20; ++it) {
      long long ell = 1 + (long long)(rng() % 4);
      RFElem r = K->residue()->element_at(rng() % K->q());
      UniformizerExpr expr;
      expr.terms.emplace(1, K->one());
      expr.terms.emplace(ell + 1, K->teich(r));
      EisensteinPoly g = minpoly_uniformizer(f, expr);
      CHECK(l_equiv(f, g, ell));
    }
  }
}

TEST_CASE("expression literals") {
  auto K = q3z8();
  auto e = parse_uniformizer_expr(K, "X + (2*g)*X^3");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms.at(1).eq(K->one()));
  CHECK(e.terms.at(3).eq(K->teich(K->residue()->parse("2*g"))));
  auto e2 = parse_uniformizer_expr(K, "(1)*pi^1 + X - 2*X^2");
  CHECK(e2.terms.at(0).eq(K->pi_pow(1)));
  CHECK(e2.terms.at(2).eq(K->from_int(-2)));
  auto e3 = parse_uniformizer_expr(K, "((2*g)*pi^2)*X");
  CHECK(e3.terms.at(1).eq(K->unit_pi_pow(K->residue()->parse("2*g"), 2)));
  CHECK_THROWS_AS((void)parse_uniformizer_expr(K, ""), Error);
}

TEST_SUITE_END();
