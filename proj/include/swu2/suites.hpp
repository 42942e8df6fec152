#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "swu2/intersect.hpp"
#include "swu2/kisin.hpp"
#include "swu2/lparams.hpp"
#include "swu2/rng.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// The acceptance suites. Each criterion runs at the stated scale and returns
// one pass/fail record; stated depth hypotheses are capped at the largest
// depth representable at the given p (see PrimeContext::cap_depth).
// ---------------------------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string detail;

  void fail(const std::string& msg) {
    passed = false;
    if (detail.empty()) detail = msg;
  }
};

namespace suites {

// 1. JH cardinality and distinctness.
inline SuiteResult jh_distinct(uint64_t seed, int trials = 200) {
  SuiteResult res;
  res.name = "jh-distinct";
  for (ll p : {5ll, 7ll, 11ll}) {
    for (int f : {1, 2, 3}) {
      PrimeContext ctx(p, f);
      Rng rng(seed + 1000 * p + f);
      for (int t = 0; t < trials; ++t) {
        DLRepU r = random_generic_type(ctx, rng, 1);
        try {
          auto jh = jh_factors(ctx, r);  // asserts pairwise distinctness
          if (ll(jh.size()) != (1ll << f)) res.fail("wrong cardinality");
        } catch (const SpecError& e) {
          res.fail(std::string("jh failed: ") + e.what());
        }
        ++res.checks;
      }
    }
  }
  return res;
}

// 2. Base-change exchange for weights (exhaustive at p=5, f=1; sampled at
// f in {2, 3}).
inline SuiteResult jh_bc(uint64_t seed, int trials = 500, bool exhaustive = true) {
  SuiteResult res;
  res.name = "jh-bc";
  if (exhaustive) {
    PrimeContext ctx(5, 1);
    std::vector<DLRepU> types;
    for (ll a = 0; a < 24; ++a)
      for (ll t : {2ll, 3ll})
        for (int ws = 0; ws < 2; ++ws)
          types.push_back(DLRepU{weyl_from_mask(1, unsigned(ws)),
                                 UChar(std::vector<Quad>{Quad{a, a - t, 0, 0}})});
    std::vector<SerreWeightU> weights;
    for (ll x = 0; x < 24; ++x)
      for (ll d = 0; d <= 4; ++d) {
        SerreWeightU w = weight(ctx, UChar(std::vector<Quad>{Quad{x, x - d, 0, 0}}));
        if (!std::count(weights.begin(), weights.end(), w)) weights.push_back(w);
      }
    for (const auto& sigma : types) {
      auto jh = jh_factors(ctx, sigma);
      auto jhgl = jh_factors_gl(ctx, bc_type(ctx, sigma));
      for (const auto& F : weights) {
        bool lhs = jh_contains(jh, F);
        bool rhs = jh_contains_gl(jhgl, bc_weight(ctx, F));
        if (lhs != rhs) res.fail("biconditional failed at p=5, f=1");
        ++res.checks;
      }
    }
  }
  for (int f : {2, 3}) {
    PrimeContext ctx(5, f);
    Rng rng(seed + 17 * f);
    for (int t = 0; t < trials; ++t) {
      DLRepU sigma = random_generic_descended_type(ctx, rng, 1);
      auto jh = jh_factors(ctx, sigma);
      auto jhgl = jh_factors_gl(ctx, bc_type(ctx, sigma));
      // half the draws take a factor, half an unrelated weight
      SerreWeightU F = (t % 2 == 0)
                           ? jh[size_t(rng.uniform(0, ll(jh.size()) - 1))]
                           : weight(ctx, random_deep_descended_uchar(ctx, rng, 0));
      bool lhs = jh_contains(jh, F);
      bool rhs = jh_contains_gl(jhgl, bc_weight(ctx, F));
      if (lhs != rhs) res.fail("biconditional failed in sampling");
      ++res.checks;
    }
  }
  return res;
}

// 3. Intersection law: brute-force cardinality equals the witness count,
// and emptiness agrees with witness-search emptiness.
inline SuiteResult intersection_law(uint64_t seed, int trials = 100) {
  SuiteResult res;
  res.name = "intersection";
  for (auto [p, f] : {std::pair<ll, int>{7, 1}, {7, 2}, {11, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(seed + 31 * p + f);
    int need = ctx.cap_depth(3);
    for (int t = 0; t < trials; ++t) {
      DLRepU s1 = random_generic_type(ctx, rng, need);
      DLRepU s2;
      if (t % 2 == 0) {
        // admissible translate: guaranteed nonempty intersection
        std::vector<uint8_t> trits(f);
        WeylElt v(f);
        std::vector<Quad> xi(f, Quad{0, 0, 0, 0});
        for (int i = 0; i < f; ++i) {
          trits[i] = uint8_t(rng.uniform(0, 2));
          if (trits[i] >= 1) v.set(i, true);
          if (trits[i] == 2) xi[i] = Quad{1, -1, 0, 0};
        }
        UChar mu1 = s1.mu - eta(f);
        s2 = DLRepU{weyl_mul(s1.w, v),
                    mu1 + weyl_act(s1.w, UChar(std::move(xi))) + eta(f)};
        if (type_depth(ctx, s2) < 1) {
          --t;
          continue;
        }
      } else {
        s2 = random_generic_type(ctx, rng, need);
      }
      auto wit = intersect_types(ctx, s1, s2);
      auto brute = jh_intersection(jh_factors(ctx, s1), jh_factors(ctx, s2));
      if (wit.has_value() != !brute.empty()) {
        res.fail("witness emptiness disagrees with brute force");
      } else if (wit) {
        int ones = 0;
        for (uint8_t x : wit->wtilde) ones += x == 0 ? 1 : 0;
        if (ll(brute.size()) != (1ll << ones)) res.fail("cardinality law failed");
        if (wit->common != brute) res.fail("witness weights mismatch");
      }
      ++res.checks;
    }
  }
  return res;
}

// 4. Squaring under base change on descended pairs.
inline SuiteResult squaring_law(uint64_t seed, int trials = 100) {
  SuiteResult res;
  res.name = "squaring";
  for (auto [p, f] : {std::pair<ll, int>{7, 1}, {7, 2}, {11, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(seed + 77 * p + f);
    int need = ctx.cap_depth(3);
    for (int t = 0; t < trials; ++t) {
      DLRepU s1 = random_generic_descended_type(ctx, rng, need);
      DLRepU s2;
      if (t % 2 == 0) {
        std::vector<Quad> xi(f, Quad{0, 0, 0, 0});
        WeylElt v(f);
        for (int i = 0; i < f; ++i) {
          int trit = int(rng.uniform(0, 2));
          if (trit >= 1) v.set(i, true);
          if (trit == 2) xi[i] = Quad{1, -1, 0, 0};
        }
        s2 = DLRepU{weyl_mul(s1.w, v), s1.mu + weyl_act(s1.w, UChar(std::move(xi)))};
        if (type_depth(ctx, s2) < 1) {
          --t;
          continue;
        }
      } else {
        s2 = random_generic_descended_type(ctx, rng, need);
      }
      auto eu1 = u_type_exponents(ctx, s1);
      auto eu2 = u_type_exponents(ctx, s2);
      if (eu1[0] == eu1[1] || eu2[0] == eu2[1]) {
        --t;
        continue;  // reducible exponent pattern: base change undefined
      }
      ll u = ll(jh_intersection(jh_factors(ctx, s1), jh_factors(ctx, s2)).size());
      ll g = ll(jh_intersection_gl(jh_factors_gl(ctx, bc_type(ctx, s1)),
                                   jh_factors_gl(ctx, bc_type(ctx, s2)))
                    .size());
      if (g != u * u) res.fail("GL intersection is not the square");
      ++res.checks;
    }
  }
  return res;
}

// 5. Epsilon-fixed iff base-change image, for types and weights.
inline SuiteResult eps_fixed(uint64_t seed, int trials = 500, bool exhaustive = true) {
  SuiteResult res;
  res.name = "eps-fixed";
  if (exhaustive) {
    PrimeContext ctx(5, 1);
    // types: every principal-series datum with exponent pair (a, b)
    for (ll a = 0; a < 24; ++a)
      for (ll b = 0; b < 24; ++b) {
        if (a == b) continue;
        std::vector<Pair> m(2);
        auto da = digits(ctx, a), db = digits(ctx, b);
        for (int i = 0; i < 2; ++i) m[i] = Pair{da[i], db[i]};
        DLRepGL r{weyl_identity(2), GLChar(std::move(m))};
        bool fixed = dl_isomorphic_gl(ctx, epsilon_type(ctx, r), r);
        auto pre = is_bc_image_type(ctx, r);
        if (fixed != pre.has_value()) res.fail("type biconditional failed");
        if (pre && !dl_isomorphic_gl(ctx, bc_type(ctx, *pre), r))
          res.fail("preimage does not base-change back");
        ++res.checks;
      }
    // weights: all GL Serre weight classes
    std::vector<SerreWeightGL> seen;
    for (ll x = 0; x < 24; ++x)
      for (ll z = 0; z < 24; ++z)
        for (ll d1 = 0; d1 <= 4; ++d1)
          for (ll d2 = 0; d2 <= 4; d2 += 2) {
            SerreWeightGL w =
                weight_gl(ctx, GLChar({Pair{x, x - d1}, Pair{z, z - d2}}));
            if (std::count(seen.begin(), seen.end(), w)) continue;
            seen.push_back(w);
            bool fixed = epsilon_weight(ctx, w) == w;
            auto pre = is_bc_image_weight(ctx, w);
            if (fixed != pre.has_value()) res.fail("weight biconditional failed");
            if (pre && !(bc_weight(ctx, *pre) == w))
              res.fail("weight preimage mismatch");
            ++res.checks;
          }
  }
  {
    PrimeContext ctx(5, 2);
    Rng rng(seed + 4242);
    for (int t = 0; t < trials; ++t) {
      if (t % 2 == 0) {
        DLRepU r = random_generic_descended_type(ctx, rng, 1);
        auto e = u_type_exponents(ctx, r);
        if (e[0] == e[1]) {
          --t;
          continue;
        }
        DLRepGL b = bc_type(ctx, r);
        auto pre = is_bc_image_type(ctx, b);
        if (!pre || !dl_isomorphic(ctx, *pre, r)) res.fail("type round trip");
      } else {
        SerreWeightU f = weight(ctx, random_deep_descended_uchar(ctx, rng, 0));
        auto pre = is_bc_image_weight(ctx, bc_weight(ctx, f));
        if (!pre || !(*pre == f)) res.fail("weight round trip");
      }
      ++res.checks;
    }
  }
  return res;
}

// 6. Predicted-weight base-change biconditional.
inline SuiteResult predict_bc(uint64_t seed, int trials = 200, bool exhaustive = true) {
  SuiteResult res;
  res.name = "predict-bc";
  if (exhaustive) {
    PrimeContext ctx(5, 1);
    auto run = [&](const TameLParam& rho) {
      InertialTypeGL tau = inertial_exponents(ctx, rho);
      if (tau.e[0] == tau.e[1]) return;
      if (is_trivial_exponent(ctx, tau.e[0]) ||
          is_trivial_exponent(ctx, tau.e[1]))
        return;
      if (!is_n_generic_lparam(ctx, rho, 1)) return;
      if (!bc_predicted_check(ctx, rho)) res.fail("biconditional failed");
      ++res.checks;
    };
    for (ll r = 0; r < 24; ++r) run(TameLParam::principal_series(ctx, r, 0));
    for (ll k = 0; k < 6; ++k)
      for (ll l = 0; l < 6; ++l)
        if (k != l) run(TameLParam::irreducible(ctx, k, l, 0));
  }
  for (ll p : {5ll, 7ll}) {
    PrimeContext ctx(p, 2);
    Rng rng(seed + 900 + p);
    for (int t = 0; t < trials / 2; ++t) {
      TameLParam rho = random_generic_lparam(ctx, rng, 1);
      if (!bc_predicted_check(ctx, rho)) res.fail("biconditional failed (f=2)");
      ++res.checks;
    }
  }
  return res;
}

// 7. Kisin cells: classify/generic round trip, duality, polarization.
inline SuiteResult kisin_cells(uint64_t seed, int trials = 500) {
  SuiteResult res;
  res.name = "kisin-cells";
  PrimeContext c7(7, 1);
  KisinContext k(c7);
  Rng rng(seed + 7777);
  auto unit = [&]() { return k.field.from_int(rng.uniform(1, k.field.p() - 1)); };
  auto any = [&]() { return k.field.from_int(rng.uniform(0, k.field.p() - 1)); };
  auto coeffs = [&](Cell cell, MatMode mode) {
    CellCoeffs c{any(), any(), any(), any()};
    if (cell == Cell::w) {
      c.c12 = unit();
      c.c21 = unit();
      if (mode == MatMode::deformed) {
        if (rng.coin())
          c.c11 = k.field.zero();
        else
          c.c22 = k.field.zero();
      }
    } else {
      c.c11 = unit();
      c.c22 = unit();
    }
    return c;
  };
  for (Cell cell : {Cell::t, Cell::tp, Cell::w})
    for (MatMode mode : {MatMode::residue, MatMode::deformed})
      for (int t = 0; t < trials; ++t) {
        LaurentMat A = generic_matrix(k, cell, coeffs(cell, mode), mode);
        if (classify_cell(k, A) != cell) res.fail("classify/generic mismatch");
        ++res.checks;
      }
  // duality preserves the cell on arbitrary admissible matrices
  int done = 0;
  while (done < trials) {
    LaurentMat A = lm_zero(k);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d <= 2; ++d)
          A.at(r, c).c[d] = (r == 1 && c == 0 && d == 0)
                                ? k.field.zero()
                                : k.field.from_int(rng.uniform(0, 6));
    if (vp_val(k, lm_det(k, A)) != 1) continue;
    Cell cell;
    try {
      cell = classify_cell(k, A);
    } catch (const SpecError&) {
      continue;
    }
    if (classify_cell(k, dual_transform(k, A)) != cell)
      res.fail("dual transform moved the cell");
    ++done;
    ++res.checks;
  }
  // polarized families have f-periodic shapes
  PrimeContext c72(7, 2);
  KisinContext k2(c72);
  for (int t = 0; t < 200; ++t) {
    int f = 2;
    std::vector<LaurentMat> mats(2 * f, lm_zero(k2));
    Rng rng2(seed + 100 + t);
    auto unit2 = [&]() {
      return k2.field.from_int(rng2.uniform(1, k2.field.p() - 1));
    };
    for (int i = f; i < 2 * f; ++i) {
      Cell cell = Cell(rng2.uniform(0, 2));
      CellCoeffs c{unit2(), unit2(), unit2(), unit2()};
      mats[i] = generic_matrix(k2, cell, c, MatMode::residue);
    }
    for (int i = f; i < 2 * f; ++i) {
      LaurentMat d = dual_transform(k2, mats[i]);
      mats[i - f] =
          i == 2 * f - 1 ? lm_scale(k2, k2.field.neg(k2.field.one()), d) : d;
    }
    if (!polarized_check(k2, mats, f)) res.fail("polarized relation failed");
    for (int i = 0; i < f; ++i)
      if (classify_cell(k2, mats[i]) != classify_cell(k2, mats[i + f]))
        res.fail("shape vector not f-periodic");
    ++res.checks;
  }
  return res;
}

// 8. Breuil-Mezard style consistency plus the worked pair at p = 7.
inline SuiteResult bm_consistency(uint64_t seed, int trials = 100) {
  SuiteResult res;
  res.name = "bm";
  for (auto [p, f] : {std::pair<ll, int>{11, 1}, {11, 2}}) {
    PrimeContext ctx(p, f);
    Rng rng(seed + 5 * p + f);
    int need = ctx.cap_depth(3);
    int done = 0;
    while (done < trials) {
      TameLParam rho = random_generic_lparam(ctx, rng, need);
      InertialTypeGL tau;
      if (done % 2 == 0) {
        // correlated draw: a type sharing weights with W?(rho)
        DLRepU sb = beta_type_descended(ctx, rho);
        std::vector<Quad> xi(f, Quad{0, 0, 0, 0});
        WeylElt v(f);
        for (int i = 0; i < f; ++i) {
          int trit = int(rng.uniform(0, 2));
          if (trit >= 1) v.set(i, true);
          if (trit == 2) xi[i] = Quad{1, -1, 0, 0};
        }
        DLRepU s2{weyl_mul(sb.w, v), sb.mu + weyl_act(sb.w, UChar(std::move(xi)))};
        auto e = u_type_exponents(ctx, s2);
        if (e[0] == e[1]) continue;
        tau = InertialTypeGL(ctx, e[0], e[1]);
      } else {
        tau = random_selfdual_generic_type(ctx, rng, need);
      }
      if (is_trivial_exponent(ctx, tau.e[0]) ||
          is_trivial_exponent(ctx, tau.e[1]))
        continue;
      if (!is_essentially_selfdual(ctx, tau)) continue;
      if (!is_n_generic_type(ctx, tau, need)) continue;
      BMReport rep;
      try {
        rep = breuil_mezard_check(ctx, rho, tau);
      } catch (const SpecError&) {
        continue;
      }
      if (!rep.ok) res.fail("multiplicity identities failed");
      ++done;
      ++res.checks;
    }
  }
  // the worked pair: p = 7, f = 1, witness slot s, counts (1, 1, 1)
  {
    PrimeContext ctx(7, 1);
    Rng rng(seed + 70007);
    bool found = false;
    for (int t = 0; t < 2000 && !found; ++t) {
      TameLParam rho = random_generic_lparam(ctx, rng, ctx.cap_depth(3));
      InertialTypeGL tau = random_selfdual_generic_type(ctx, rng, ctx.cap_depth(3));
      std::optional<ShapeVec> shape;
      try {
        shape = infer_shape(ctx, rho, tau);
      } catch (const SpecError&) {
        continue;
      }
      if (!shape || (*shape)[0] != Cell::tp) continue;
      BMReport rep = breuil_mezard_check(ctx, rho, tau);
      if (!(rep.lhs == 1 && rep.e == 1 && rep.gl_lhs == 1 && rep.ok))
        res.fail("worked p=7 pair does not give (1, 1, 1)");
      found = true;
      ++res.checks;
    }
    if (!found) res.fail("no p=7 pair with witness slot s found");
  }
  return res;
}

// 9. Neighbor and disjoint constructions.
inline SuiteResult neighbor_disjoint(uint64_t seed, int trials = 100,
                                     int radius = 2) {
  SuiteResult res;
  res.name = "neighbor-disjoint";
  // neighbor_type cardinality 2^{d(F, F')} with d <= 2; the construction
  // needs the genuine 4-generic hypothesis, so p = 11 hosts it
  for (auto [p, f] : {std::pair<ll, int>{11, 2}, {11, 3}}) {
    PrimeContext ctx(p, f);
    Rng rng(seed + 13 * p + f);
    int done = 0;
    while (done < trials / 2) {
      DLRepU sigma = random_generic_type(ctx, rng, ctx.cap_depth(4));
      auto jh = jh_factors(ctx, sigma);
      const SerreWeightU& F = jh[size_t(rng.uniform(0, ll(jh.size()) - 1))];
      const SerreWeightU& Fp = jh[size_t(rng.uniform(0, ll(jh.size()) - 1))];
      int d = graph_distance(ctx, sigma, F, Fp);
      if (d > 2) continue;
      DLRepU out;
      try {
        out = neighbor_type(ctx, sigma, F, Fp);
      } catch (const SpecError&) {
        res.fail("neighbor_type failed on admissible input");
        ++done;
        continue;
      }
      auto jh2 = jh_factors(ctx, out);
      auto common = jh_intersection(jh, jh2);
      if (!jh_contains(jh2, F) || !jh_contains(jh2, Fp))
        res.fail("neighbor postcondition: containment");
      if (ll(common.size()) != (1ll << d))
        res.fail("neighbor postcondition: cardinality");
      for (const auto& c : common)
        if (!(c == Fp) && d > 0 && graph_distance(ctx, sigma, F, c) >= d)
          res.fail("neighbor postcondition: strict decrease");
      ++done;
      ++res.checks;
    }
  }
  // disjoint_type: exhaustive at p = 5, f = 1, radius 2
  {
    PrimeContext ctx(5, 1);
    std::vector<DLRepU> types;
    for (ll a = 0; a < 24; ++a)
      for (ll t : {2ll, 3ll})
        for (int ws = 0; ws < 2; ++ws)
          types.push_back(DLRepU{weyl_from_mask(1, unsigned(ws)),
                                 UChar(std::vector<Quad>{Quad{a, a - t, 0, 0}})});
    std::vector<SerreWeightU> weights;
    for (ll x = 0; x < 24; ++x)
      for (ll d : {1ll, 2ll}) {
        SerreWeightU w = weight(ctx, UChar(std::vector<Quad>{Quad{x, x - d, 0, 0}}));
        if (!std::count(weights.begin(), weights.end(), w)) weights.push_back(w);
      }
    for (const auto& sigma : types) {
      auto jhs = jh_factors(ctx, sigma);
      for (const auto& F : weights) {
        if (jh_contains(jhs, F)) continue;
        try {
          DLRepU out = disjoint_type(ctx, sigma, F, radius);
          auto jho = jh_factors(ctx, out);
          if (!jh_contains(jho, F)) res.fail("disjoint: weight not contained");
          if (!jh_intersection(jhs, jho).empty())
            res.fail("disjoint: intersection not empty");
        } catch (const SpecError& e) {
          res.fail(std::string("disjoint search failed: ") + e.what());
        }
        ++res.checks;
      }
    }
  }
  return res;
}

// 10. Global dimension identity for sampled local degree tuples.
inline SuiteResult dims(uint64_t seed, int trials = 20) {
  SuiteResult res;
  res.name = "dims";
  Rng rng(seed + 10);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> fv(size_t(rng.uniform(1, 6)));
    for (auto& v : fv) v = int(rng.uniform(1, 7));
    DimIdentity id = global_dimension_identity(fv);
    if (!id.ok) res.fail("dimension bookkeeping mismatch");
    ++res.checks;
  }
  return res;
}

inline std::vector<SuiteResult> run_all(uint64_t seed) {
  return {
      jh_distinct(seed),     jh_bc(seed),
      intersection_law(seed), squaring_law(seed),
      eps_fixed(seed),       predict_bc(seed),
      kisin_cells(seed),     bm_consistency(seed),
      neighbor_disjoint(seed), dims(seed),
  };
}

inline SuiteResult run_named(const std::string& name, uint64_t seed,
                             int trials, bool exhaustive, int radius = 2) {
  if (name == "jh-distinct") return jh_distinct(seed, trials ? trials : 200);
  if (name == "jh-bc") return jh_bc(seed, trials ? trials : 500, exhaustive);
  if (name == "intersection")
    return intersection_law(seed, trials ? trials : 100);
  if (name == "squaring") return squaring_law(seed, trials ? trials : 100);
  if (name == "eps-fixed") return eps_fixed(seed, trials ? trials : 500, exhaustive);
  if (name == "predict-bc") return predict_bc(seed, trials ? trials : 200, exhaustive);
  if (name == "kisin-cells") return kisin_cells(seed, trials ? trials : 500);
  if (name == "bm") return bm_consistency(seed, trials ? trials : 100);
  if (name == "neighbor-disjoint")
    return neighbor_disjoint(seed, trials ? trials : 100, radius);
  if (name == "dims") return dims(seed, trials ? trials : 20);
  fail(Err::PreconditionViolated, "unknown suite: " + name);
}

}  // namespace suites

}  // namespace swu2
