#include <doctest.h>

#include <set>

#include "ramify/residue_field.hpp"

using namespace ramify;

TEST_SUITE_BEGIN("residue_field");

TEST_CASE("default modulus selection") {
  auto f3 = ResidueField::create(3, 1);
  CHECK(f3->modulus_str() == "g");
  auto f9 = ResidueField::create(3, 2);
  CHECK(f9->modulus_str() == "g^2+1");
  // independent check: g^2+1 has no root mod 3
  for (uint32_t r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);
}

TEST_CASE("explicit modulus accepted when irreducible") {
  // cubic without roots over F_5 is irreducible: exhaustive root check
  for (int r = 0; r < 5; ++r) CHECK((r * r * r + r + 1) % 5 != 0);
  auto f125 = ResidueField::create(5, 3, std::string("g^3+g+1"));
  CHECK(f125->q() == 125);
  CHECK_THROWS_AS((void)ResidueField::create(5, 2, std::string("g^2+1")),
                  Error);  // g^2+1 = (g+2)(g+3) mod 5
  CHECK_THROWS_AS((void)ResidueField::create(4, 1), Error);
}

TEST_CASE("element literals round-trip") {
  auto f9 = ResidueField::create(3, 2);
  RFElem x = f9->parse("2*g + 1");
  CHECK(x.str() == "2*g+1");
  CHECK(f9->parse(x.str()) == x);
  CHECK(f9->parse("g^2") == f9->from_int(-1));  // g^2 = -1 under g^2+1
  CHECK(f9->parse("0").is_zero());
}

TEST_CASE("pk_root inverts Frobenius powers") {
  auto f3 = ResidueField::create(3, 1);
  CHECK(rf_pk_root(f3->from_int(2), 1) == f3->from_int(2));  // 2^3 = 8 = 2 mod 3
  auto f9 = ResidueField::create(3, 2);
  CHECK(rf_pk_root(f9->zero(), 2) == f9->zero());
  CHECK(rf_pk_root(f9->gen(), 2) == f9->gen());  // Frobenius^2 is identity on F_9

  for (auto [p, d] : {std::pair<uint64_t, uint32_t>{2, 3},
                      {3, 2},
                      {5, 2},
                      {3, 4},
                      {2, 6}}) {
    auto F = ResidueField::create(p, d);
    for (long long k = 1; k <= 5; ++k) {
      for (uint64_t i = 0; i < F->q(); ++i) {
        RFElem x = F->element_at(i);
        CHECK(rf_pk_root(x.pow_p_iter(k), k) == x);
      }
    }
  }
}

TEST_CASE("psi map at the Q3(zeta8) parameters") {
  auto f9 = ResidueField::create(3, 2);
  // k=2, A0=1, b0=1: the map is x -> x^9 + omega x
  RFElem omega = f9->parse("g+1");
  for (uint64_t i = 0; i < 9; ++i) {
    RFElem x = f9->element_at(i);
    CHECK(psi_bar_eval(2, 1, 1, omega, x) == x.pow(9) + omega * x);
  }
  // omega = -1: x^9 + (-1)x = x - x = 0 for every x
  RFElem minus1 = f9->from_int(-1);
  for (uint64_t i = 0; i < 9; ++i)
    CHECK(psi_bar_eval(2, 1, 1, minus1, f9->element_at(i)).is_zero());
  CHECK(psi_bar_eval(2, 1, 1, omega, f9->zero()).is_zero());
  CHECK_THROWS_AS((void)psi_bar_eval(2, 1, 1, f9->zero(), f9->one()), Error);
}

TEST_CASE("psi map is additive (exhaustive, small fields)") {
  for (auto [p, d] : {std::pair<uint64_t, uint32_t>{3, 2}, {2, 3}, {5, 1}, {3, 4}}) {
    auto F = ResidueField::create(p, d);
    RFElem omega = F->element_at(F->q() - 1);
    for (uint64_t i = 0; i < F->q(); ++i) {
      for (uint64_t j = i; j < F->q(); ++j) {
        RFElem x = F->element_at(i), y = F->element_at(j);
        CHECK(psi_bar_eval(2, 1, 1, omega, x + y) ==
              psi_bar_eval(2, 1, 1, omega, x) + psi_bar_eval(2, 1, 1, omega, y));
      }
    }
  }
}

TEST_CASE("coset representatives for the section-7.1 parameters") {
  auto f9 = ResidueField::create(3, 2);
  // omega = -1: psi-bar vanishes, every element is its own coset
  auto an = analyze_psi_bar(2, 1, 1, f9->from_int(-1));
  CHECK(an.rank == 0);
  REQUIRE(an.coset_reps.size() == 9);
  for (uint64_t i = 0; i < 9; ++i) CHECK(an.coset_reps[i] == f9->element_at(i));

  // zeta8 = g+1 has order 8; every omega != -1 in <zeta8> gives an onto map
  RFElem z8 = f9->parse("g+1");
  CHECK(z8.pow(4) == f9->from_int(-1));
  RFElem w = z8;
  int onto = 0;
  for (int e = 1; e <= 8; ++e, w = w * z8) {
    if (w == f9->from_int(-1)) continue;
    auto a = analyze_psi_bar(2, 1, 1, w);
    CHECK(a.rank == 2);
    REQUIRE(a.coset_reps.size() == 1);
    CHECK(a.coset_reps[0].is_zero());
    ++onto;
  }
  CHECK(onto == 7);
}

TEST_CASE("coset counts match p^(d - rank)") {
  for (auto [p, d] : {std::pair<uint64_t, uint32_t>{3, 2}, {2, 2}, {2, 4}, {3, 3}}) {
    auto F = ResidueField::create(p, d);
    for (uint64_t wi = 1; wi < F->q(); ++wi) {
      auto an = analyze_psi_bar(2, 1, 1, F->element_at(wi));
      uint64_t expect = 1;
      for (uint32_t i = 0; i < d - (uint32_t)an.rank; ++i) expect *= p;
      CHECK(an.coset_reps.size() == expect);
      // pairwise distinct cosets
      for (size_t i = 0; i < an.coset_reps.size(); ++i)
        for (size_t j = i + 1; j < an.coset_reps.size(); ++j)
          CHECK(!an.in_image(an.coset_reps[i] - an.coset_reps[j]));
      CHECK(an.coset_reps[0].is_zero());
    }
  }
}

TEST_CASE("rescaled kappa coset system matches when psi has a nonzero root") {
  // psi with a nonzero root z satisfies psi(x) = z^{p^k} kappa(x/z) where
  // kappa(x) = x^{p^k} - x, so z^{p^k} U is a rep system for U a kappa one.
  auto F = ResidueField::create(3, 2);
  long long k = 2;
  for (uint64_t wi = 1; wi < F->q(); ++wi) {
    RFElem omega = F->element_at(wi);
    auto an = analyze_psi_bar(k, 1, 1, omega);
    RFElem root = F->zero();
    for (uint64_t i = 1; i < F->q(); ++i) {
      if (psi_bar_eval(k, 1, 1, omega, F->element_at(i)).is_zero()) {
        root = F->element_at(i);
        break;
      }
    }
    if (root.is_zero()) continue;
    // kappa = x^{p^k} - x arises from A0 = 2, b0 = 1, omega = 1
    auto kan = analyze_psi_bar(k, 2, 1, F->one());
    REQUIRE(kan.coset_reps.size() == an.coset_reps.size());
    std::vector<RFElem> scaled;
    RFElem zpk = root.pow_p_iter(k);
    for (const auto& u : kan.coset_reps) scaled.push_back(zpk * u);
    // scaled reps lie in pairwise distinct psi-cosets and cover all cosets
    for (size_t i = 0; i < scaled.size(); ++i)
      for (size_t j = i + 1; j < scaled.size(); ++j)
        CHECK(!an.in_image(scaled[i] - scaled[j]));
    for (const auto& s : scaled) {
      bool matched = false;
      for (const auto& r : an.coset_reps)
        if (an.in_image(s - r)) matched = true;
      CHECK(matched);
    }
  }
}

TEST_CASE("nth power test") {
  auto f9 = ResidueField::create(3, 2);
  CHECK(rf_is_nth_power(f9->one(), 8));
  CHECK(rf_is_nth_power(f9->one(), 123456));
  CHECK(rf_is_nth_power(f9->zero(), 7));
  // g^((9-1)/8) = g != 1
  CHECK(!rf_is_nth_power(f9->gen(), 8));
  // brute-force cross-check over all of F_9 for n in 1..10
  for (uint64_t n = 1; n <= 10; ++n) {
    std::set<uint64_t> powers;
    for (uint64_t i = 0; i < 9; ++i) powers.insert(f9->element_at(i).pow(n).lex_index());
    for (uint64_t i = 0; i < 9; ++i) {
      RFElem a = f9->element_at(i);
      CHECK(rf_is_nth_power(a, n) == (powers.count(a.lex_index()) > 0));
    }
  }
}

TEST_CASE("solve_psi_bar finds preimages") {
  for (auto [p, d] : {std::pair<uint64_t, uint32_t>{3, 2}, {2, 3}}) {
    auto F = ResidueField::create(p, d);
    RFElem omega = F->element_at(1);
    auto an = analyze_psi_bar(3, 2, 1, omega);
    for (uint64_t i = 0; i < F->q(); ++i) {
      RFElem y = psi_bar_eval(3, 2, 1, omega, F->element_at(i));
      RFElem x = solve_psi_bar(an, y);
      CHECK(psi_bar_eval(3, 2, 1, omega, x) == y);
    }
  }
}

TEST_SUITE_END();
