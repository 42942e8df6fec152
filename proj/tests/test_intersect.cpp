#include <doctest.h>

#include "swu2/intersect.hpp"
#include "swu2/rng.hpp"

using namespace swu2;

namespace {
UChar uc(std::vector<Quad> v) { return UChar(std::move(v)); }
}  // namespace

TEST_CASE("labels at f = 1") {
  PrimeContext c7(7, 1);
  DLRepU sigma{weyl_identity(1), uc({{3, 1, 1, 0}})};
  auto jh = jh_factors(c7, sigma);
  REQUIRE(jh.size() == 2);
  // the F(mu) factor carries label s, the other label 1
  SerreWeightU f0 = weight(c7, uc({{3, 1, 1, 0}}));
  SerreWeightU f1 = weight(c7, uc({{7, 5, 1, 0}}));
  CHECK(jh_contains(jh, f0));
  CHECK(jh_contains(jh, f1));
  CHECK(label(c7, sigma, f0) == weyl_all_s(1));
  CHECK(label(c7, sigma, f1) == weyl_identity(1));
  CHECK(graph_distance(c7, sigma, f0, f1) == 1);
  CHECK(graph_distance(c7, sigma, f0, f0) == 0);
  // non-factors are rejected
  CHECK_THROWS_AS(label(c7, sigma, weight(c7, uc({{3, 2, 1, 0}}))), SpecError);
}

TEST_CASE("labels biject with W on the factors") {
  for (auto [p, f] : {std::pair<ll, int>{7, 2}, {11, 2}, {5, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(17 * p + f);
    for (int t = 0; t < 15; ++t) {
      DLRepU sigma = random_generic_type(ctx, rng, 1);
      auto jh = jh_factors(ctx, sigma);
      std::vector<WeylElt> labels;
      for (const auto& w : jh) labels.push_back(label(ctx, sigma, w));
      std::sort(labels.begin(), labels.end());
      for (size_t i = 0; i + 1 < labels.size(); ++i)
        CHECK(labels[i] != labels[i + 1]);
      CHECK(ll(labels.size()) == (1ll << f));
    }
  }
}

TEST_CASE("label transforms by z -> z v^{-1} under re-presentation") {
  PrimeContext ctx(7, 2);
  Rng rng(808);
  int done = 0;
  for (int t = 0; t < 80 && done < 12; ++t) {
    DLRepU sigma = random_generic_type(ctx, rng, 2);
    auto jh = jh_factors(ctx, sigma);
    WeylElt v = random_weyl(2, rng);
    DLRepU re = flip_presentation(ctx, sigma, v);
    auto fixed = [&]() -> std::optional<DLRepU> {
      if (type_depth(ctx, re) >= 1) return re;
      return std::nullopt;
    }();
    if (!fixed) continue;
    ++done;
    for (const auto& w : jh) {
      WeylElt z = label(ctx, sigma, w);
      CHECK(label(ctx, *fixed, w) == weyl_mul(z, v));
    }
  }
  CHECK(done > 0);
}

TEST_CASE("graph distance: symmetry and triangle inequality") {
  PrimeContext ctx(11, 3);
  Rng rng(606);
  for (int t = 0; t < 5; ++t) {
    DLRepU sigma = random_generic_type(ctx, rng, 1);
    auto jh = jh_factors(ctx, sigma);
    for (size_t i = 0; i < jh.size(); ++i)
      for (size_t j = 0; j < jh.size(); ++j) {
        int dij = graph_distance(ctx, sigma, jh[i], jh[j]);
        CHECK(dij == graph_distance(ctx, sigma, jh[j], jh[i]));
        if (i == j) CHECK(dij == 0);
        for (size_t k = 0; k < jh.size(); ++k)
          CHECK(dij <= graph_distance(ctx, sigma, jh[i], jh[k]) +
                           graph_distance(ctx, sigma, jh[k], jh[j]));
      }
  }
}

TEST_CASE("intersect_types worked examples at p = 7, f = 1") {
  PrimeContext c7(7, 1);
  DLRepU s1{weyl_identity(1), uc({{3, 1, 1, 0}})};

  // self intersection: wtilde = 1, common = whole JH set
  auto self = intersect_types(c7, s1, s1);
  REQUIRE(self.has_value());
  CHECK(self->wtilde == std::vector<uint8_t>{0});
  CHECK(self->common.size() == 2);
  CHECK(self->common == jh_intersection(jh_factors(c7, s1), jh_factors(c7, s1)));

  // wtilde = (s)
  DLRepU s2{weyl_all_s(1), uc({{3, 1, 1, 0}})};
  auto w1 = intersect_types(c7, s1, s2);
  REQUIRE(w1.has_value());
  CHECK(w1->wtilde == std::vector<uint8_t>{1});
  CHECK(w1->common.size() == 1);
  CHECK(w1->common == jh_intersection(jh_factors(c7, s1), jh_factors(c7, s2)));

  // wtilde = (t_alpha s)
  DLRepU s3{weyl_all_s(1), uc({{4, 0, 1, 0}})};
  auto w2 = intersect_types(c7, s1, s3);
  REQUIRE(w2.has_value());
  CHECK(w2->wtilde == std::vector<uint8_t>{2});
  CHECK(w2->common.size() == 1);
  CHECK(w2->common == jh_intersection(jh_factors(c7, s1), jh_factors(c7, s3)));
  CHECK(w2->common[0] == weight(c7, uc({{3, 1, 1, 0}})));
}

TEST_CASE("intersection cardinality law on constructed pairs") {
  for (auto [p, f] : {std::pair<ll, int>{7, 2}, {11, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(99 * p + f);
    int need = ctx.cap_depth(3);
    for (int t = 0; t < 30; ++t) {
      DLRepU s1 = random_generic_type(ctx, rng, need);
      // build s2 from s1 through a random admissible wtilde
      std::vector<uint8_t> trits(f);
      for (int i = 0; i < f; ++i) trits[i] = uint8_t(rng.uniform(0, 2));
      WeylElt v(f);
      std::vector<Quad> xi(f, Quad{0, 0, 0, 0});
      int ones = 0;
      for (int i = 0; i < f; ++i) {
        if (trits[i] >= 1) v.set(i, true);
        if (trits[i] == 2) xi[i] = Quad{1, -1, 0, 0};
        if (trits[i] == 0) ++ones;
      }
      UChar mu1 = s1.mu - eta(f);
      DLRepU s2{weyl_mul(s1.w, v),
                mu1 + weyl_act(s1.w, UChar(std::move(xi))) + eta(f)};
      if (type_depth(ctx, s2) < need) continue;
      auto wit = intersect_types(ctx, s1, s2);
      REQUIRE(wit.has_value());
      auto brute = jh_intersection(jh_factors(ctx, s1), jh_factors(ctx, s2));
      CHECK(ll(brute.size()) == (1ll << ones));
      CHECK(wit->common == brute);
    }
  }
}

TEST_CASE("emptiness agrees with brute force") {
  PrimeContext ctx(7, 1);
  Rng rng(2468);
  for (int t = 0; t < 40; ++t) {
    DLRepU s1 = random_generic_type(ctx, rng, 2);
    DLRepU s2 = random_generic_type(ctx, rng, 2);
    auto wit = intersect_types(ctx, s1, s2);
    auto brute = jh_intersection(jh_factors(ctx, s1), jh_factors(ctx, s2));
    CHECK(wit.has_value() == !brute.empty());
    if (wit) CHECK(wit->common == brute);
  }
}

TEST_CASE("graph distance agrees across the two containing types") {
  PrimeContext ctx(7, 2);
  Rng rng(1357);
  int done = 0;
  for (int t = 0; t < 200 && done < 10; ++t) {
    DLRepU s1 = random_generic_type(ctx, rng, ctx.cap_depth(3));
    std::vector<Quad> xi(2, Quad{0, 0, 0, 0});
    WeylElt v(2);
    for (int i = 0; i < 2; ++i) {
      int trit = int(rng.uniform(0, 2));
      if (trit >= 1) v.set(i, true);
      if (trit == 2) xi[i] = Quad{1, -1, 0, 0};
    }
    UChar mu1 = s1.mu - eta(2);
    DLRepU s2{weyl_mul(s1.w, v),
              mu1 + weyl_act(s1.w, UChar(std::move(xi))) + eta(2)};
    if (type_depth(ctx, s2) < 1) continue;
    auto common = jh_intersection(jh_factors(ctx, s1), jh_factors(ctx, s2));
    if (common.size() < 2) continue;
    ++done;
    for (size_t i = 0; i < common.size(); ++i)
      for (size_t j = 0; j < common.size(); ++j)
        CHECK(graph_distance(ctx, s1, common[i], common[j]) ==
              graph_distance(ctx, s2, common[i], common[j]));
  }
  CHECK(done > 0);
}

TEST_CASE("epsilon permutes the JH set of a base change, fixing bc images") {
  PrimeContext ctx(7, 1);
  Rng rng(8642);
  for (int t = 0; t < 15; ++t) {
    DLRepU r = random_generic_descended_type(ctx, rng, 1);
    auto e = u_type_exponents(ctx, r);
    if (e[0] == e[1]) continue;
    auto jhgl = jh_factors_gl(ctx, bc_type(ctx, r));
    auto jhu = jh_factors(ctx, r);
    for (const auto& g : jhgl) {
      SerreWeightGL eg = epsilon_weight(ctx, g);
      CHECK(jh_contains_gl(jhgl, eg));
      bool fixed = eg == g;
      auto pre = is_bc_image_weight(ctx, g);
      CHECK(fixed == pre.has_value());
      if (pre) CHECK(jh_contains(jhu, *pre));
    }
  }
}

TEST_CASE("neighbor_type") {
  PrimeContext ctx(11, 2);
  Rng rng(13579);
  int done = 0;
  for (int t = 0; t < 60 && done < 12; ++t) {
    DLRepU sigma = random_generic_type(ctx, rng, ctx.cap_depth(4));
    auto jh = jh_factors(ctx, sigma);
    const SerreWeightU& F = jh[rng.uniform(0, ll(jh.size()) - 1)];
    const SerreWeightU& Fp = jh[rng.uniform(0, ll(jh.size()) - 1)];
    int d = graph_distance(ctx, sigma, F, Fp);
    DLRepU out = neighbor_type(ctx, sigma, F, Fp);
    auto jh2 = jh_factors(ctx, out);
    CHECK(jh_contains(jh2, F));
    CHECK(jh_contains(jh2, Fp));
    auto common = jh_intersection(jh, jh2);
    CHECK(ll(common.size()) == (1ll << d));
    // every other common factor lies strictly closer to F
    for (const auto& c : common)
      if (!(c == Fp)) CHECK((graph_distance(ctx, sigma, F, c) < d || d == 0));
    ++done;
  }
  CHECK(done > 0);
}

TEST_CASE("disjoint_type at p = 7, f = 1") {
  PrimeContext ctx(7, 1);
  Rng rng(11223);
  int done = 0;
  for (int t = 0; t < 200 && done < 15; ++t) {
    DLRepU sigma = random_generic_descended_type(ctx, rng, ctx.cap_depth(2));
    UChar lam = random_deep_descended_uchar(ctx, rng, ctx.cap_depth(3));
    SerreWeightU F = weight(ctx, lam);  // margins keep it p-restricted
    auto jhs = jh_factors(ctx, sigma);
    if (jh_contains(jhs, F)) continue;
    ++done;
    DLRepU out = disjoint_type(ctx, sigma, F, 2);
    auto jho = jh_factors(ctx, out);
    CHECK(jh_contains(jho, F));
    CHECK(jh_intersection(jhs, jho).empty());
  }
  CHECK(done > 0);
}
