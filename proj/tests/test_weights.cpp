#include <doctest.h>

#include "swu2/rng.hpp"
#include "swu2/weights.hpp"

using namespace swu2;

namespace {
UChar uc(std::vector<Quad> v) { return UChar(std::move(v)); }
}  // namespace

TEST_CASE("weight equality is the (F - 1) X^0 coset relation") {
  PrimeContext c7(7, 1);
  CHECK(weight(c7, uc({{3, 1, 0, 0}})) == weight(c7, uc({{-5, -7, 0, 0}})));
  CHECK(weight(c7, uc({{3, 1, 0, 0}})) == weight(c7, uc({{3, 1, 0, 0}})));
  CHECK(weight(c7, uc({{3, 1, 0, 0}})) != weight(c7, uc({{3, 2, 0, 0}})));
  CHECK_THROWS_AS(weight(c7, uc({{0, 1, 0, 0}})), SpecError);  // pairing -1
}

TEST_CASE("jh factors at f = 1") {
  PrimeContext c7(7, 1);
  DLRepU r{weyl_identity(1), uc({{3, 1, 0, 0}})};
  auto jh = jh_factors(c7, r);
  REQUIRE(jh.size() == 2);
  CHECK(jh_contains(jh, weight(c7, uc({{3, 1, 0, 0}}))));
  CHECK(jh_contains(jh, weight(c7, uc({{8, 4, 0, 0}}))));
  // depth gate
  DLRepU shallow{weyl_identity(1), uc({{0, 0, 0, 0}})};
  CHECK_THROWS_AS(jh_factors(c7, shallow), SpecError);
}

TEST_CASE("the identity-indexed factor of R_1(mu) is F(mu)") {
  for (auto [p, f] : {std::pair<ll, int>{7, 1}, {5, 2}, {7, 3}}) {
    PrimeContext ctx(p, f);
    Rng rng(11 * p + f);
    for (int t = 0; t < 20; ++t) {
      UChar mu = random_deep_uchar(ctx, rng, 1);
      DLRepU r{weyl_identity(f), mu + eta(f)};
      // the w' = 1 factor: chi + per-slot constants absorbed by the lattice
      UChar ch = jh_factor_char(ctx, r, weyl_identity(f));
      CHECK(weight(ctx, ch) == weight(ctx, mu + eta(f)));
    }
  }
}

TEST_CASE("jh cardinality and distinctness on random deep characters") {
  for (auto [p, f] : {std::pair<ll, int>{5, 2}, {7, 2}, {11, 3}}) {
    PrimeContext ctx(p, f);
    Rng rng(97 * p + f);
    for (int t = 0; t < 25; ++t) {
      DLRepU r = random_generic_type(ctx, rng, 1);
      auto jh = jh_factors(ctx, r);
      CHECK(ll(jh.size()) == (1ll << f));
    }
  }
}

TEST_CASE("beta") {
  PrimeContext c7(7, 1);
  DLRepU r{weyl_identity(1), uc({{3, 1, 0, 0}})};
  DLRepU b = beta(c7, r);
  CHECK(b.w == weyl_all_s(1));
  CHECK(b.mu == uc({{2, 2, 5, 0}}));
  // depth bookkeeping: n < <mu, alpha^vee> < p - n is preserved
  CHECK(root_pairing(b.mu, 0) == 7 - root_pairing(r.mu, 0));
  CHECK_THROWS_AS(beta(c7, DLRepU{weyl_identity(1), uc({{0, 1, 0, 0}})}),
                  SpecError);
}

TEST_CASE("beta preserves genericity margins") {
  for (auto [p, f] : {std::pair<ll, int>{7, 2}, {11, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(5 * p + f);
    for (int t = 0; t < 30; ++t) {
      DLRepU r = random_generic_type(ctx, rng, 2);
      DLRepU b = beta(ctx, r);
      CHECK(type_depth(ctx, b) >= 2);
    }
  }
}

TEST_CASE("dl_isomorphic") {
  PrimeContext c7(7, 1);
  DLRepU r{weyl_identity(1), uc({{3, 1, 0, 0}})};
  CHECK(dl_isomorphic(c7, r, r));
  // translate by (F - 1)(0,0,1,0)
  UChar shift = frobenius(c7, uc({{0, 0, 1, 0}})) - uc({{0, 0, 1, 0}});
  DLRepU r2{weyl_identity(1), r.mu + shift};
  CHECK(dl_isomorphic(c7, r, r2));
  DLRepU r3{weyl_identity(1), uc({{4, 1, 0, 0}})};
  CHECK_FALSE(dl_isomorphic(c7, r, r3));
}

TEST_CASE("dl_isomorphic is an equivalence relation on translates") {
  PrimeContext ctx(5, 2);
  Rng rng(42);
  auto translate = [&](const DLRepU& r) {
    WeylElt wp = random_weyl(2, rng);
    std::vector<Quad> raw(2);
    for (int i = 0; i < 2; ++i)
      raw[i] = Quad{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), 0};
    UChar nu = UChar(std::move(raw));
    WeylElt w2 = weyl_mul(weyl_mul(wp, r.w), frobenius_weyl(wp));
    return DLRepU{w2, weyl_act(wp, r.mu) + frobenius(ctx, nu) - weyl_act(w2, nu)};
  };
  for (int t = 0; t < 10; ++t) {
    DLRepU r = random_generic_type(ctx, rng, 1);
    DLRepU r2 = translate(r);
    DLRepU r3 = translate(r2);
    CHECK(dl_isomorphic(ctx, r, r2));
    CHECK(dl_isomorphic(ctx, r2, r));
    CHECK(dl_isomorphic(ctx, r2, r3));
    CHECK(dl_isomorphic(ctx, r, r3));  // transitivity across two moves
  }
}

TEST_CASE("jh is an isomorphism invariant") {
  PrimeContext ctx(7, 2);
  Rng rng(2024);
  int done = 0;
  for (int t = 0; t < 60 && done < 12; ++t) {
    DLRepU r = random_generic_type(ctx, rng, 2);
    WeylElt wp = random_weyl(2, rng);
    std::vector<Quad> raw(2);
    for (int i = 0; i < 2; ++i)
      raw[i] = Quad{rng.uniform(-1, 1), 0, rng.uniform(-1, 1), 0};
    UChar nu = UChar(std::move(raw));
    WeylElt w2 = weyl_mul(weyl_mul(wp, r.w), frobenius_weyl(wp));
    UChar mu2 = weyl_act(wp, r.mu) + frobenius(ctx, nu) - weyl_act(w2, nu);
    DLRepU r2{w2, mu2};
    if (type_depth(ctx, r2) < 1) continue;
    ++done;
    CHECK(jh_factors(ctx, r) == jh_factors(ctx, r2));
  }
  CHECK(done > 0);
}

TEST_CASE("descend_to_u2") {
  PrimeContext c7(7, 1);
  // already descended: fixed point
  DLRepU r0{weyl_all_s(1), uc({{0, 4, 0, 0}})};
  CHECK(descend_to_u2(c7, r0) == r0);
  // c = 6 = 0 mod 6: descendable, and the result is isomorphic
  DLRepU r1{weyl_identity(1), uc({{3, 1, 6, 0}})};
  DLRepU d1 = descend_to_u2(c7, r1);
  CHECK(is_descended(d1.mu));
  CHECK(dl_isomorphic(c7, r1, d1));
  // c = 5 != 0 mod 6: rejected
  DLRepU r2{weyl_all_s(1), uc({{2, 2, 5, 0}})};
  CHECK_THROWS_AS(descend_to_u2(c7, r2), SpecError);
}

TEST_CASE("central characters") {
  PrimeContext c7(7, 1);
  CHECK(central_character(c7, weight(c7, uc({{0, 0, 0, 0}}))) == 0);
  CHECK(central_character(c7, weight(c7, uc({{3, 1, 0, 0}}))) == 4);
  // constant across jh factors of descended types
  for (auto [p, f] : {std::pair<ll, int>{7, 1}, {5, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(7 * p + f);
    for (int t = 0; t < 25; ++t) {
      DLRepU r = random_generic_descended_type(ctx, rng, 1);
      ll cc = central_character(ctx, r);
      for (const auto& w : jh_factors(ctx, r))
        CHECK(central_character(ctx, w) == cc);
    }
  }
}

TEST_CASE("GL side mirrors") {
  PrimeContext c7(7, 1);
  // R'_{(1,1)}((3,1),(-1,-3)): 2^{2f} = 4 distinct factors
  DLRepGL r{weyl_identity(2), GLChar({Pair{3, 1}, Pair{-1, -3}})};
  auto jh = jh_factors_gl(c7, r);
  CHECK(jh.size() == 4);
  // beta_gl keeps margins
  DLRepGL b = beta_gl(c7, r);
  CHECK(type_depth_gl(c7, b) == type_depth_gl(c7, r));
  CHECK(dl_isomorphic_gl(c7, r, r));
}
