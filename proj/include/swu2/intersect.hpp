#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "swu2/base_change.hpp"
#include "swu2/weights.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// Labels. For sigma = R_w(chi) with chi - eta 1-deep and F(lambda) a factor
// of the reduction, there is a unique z t_{-p nu} in W~_+ with
//   s . (lambda - p eta) = z t_{-p nu} . (chi - eta + w pi(nu)),
// and z is the label of F with respect to the presentation.
// ---------------------------------------------------------------------------

namespace detail {

/// Image lattice of nu |-> w pi(nu) - p nu on class coordinates; columns are
/// indexed by the unit class characters, so a solution vector is nu itself.
inline const Lattice& w_pi_minus_p_lattice(const PrimeContext& ctx,
                                           const WeylElt& w) {
  std::string key = "wpimp:" + std::to_string(ctx.p) + ":" +
                    std::to_string(ctx.f) + ":";
  for (int i = 0; i < w.size(); ++i) key += w.is_s(i) ? '1' : '0';
  return cached_lattice(key, [&]() {
    int f = ctx.f;
    std::vector<UChar> gens;
    for (int i = 0; i < f; ++i) {
      for (const Quad& unit :
           {Quad{1, 0, 0, 0}, Quad{0, 1, 0, 0}, Quad{0, 0, 1, 0}}) {
        std::vector<Quad> raw(f, Quad{0, 0, 0, 0});
        raw[i] = unit;
        UChar e{std::move(raw)};
        gens.push_back(weyl_act(w, phi_inverse(e)) - ctx.p * e);
      }
    }
    return Lattice(columns_from_uchars(gens));
  });
}

inline std::optional<UChar> solve_w_pi_minus_p(const PrimeContext& ctx,
                                               const WeylElt& w,
                                               const UChar& target) {
  auto sol = lattice_solve(w_pi_minus_p_lattice(ctx, w), to_coords(target));
  if (!sol) return std::nullopt;
  return from_coords(ctx.f, *sol);
}

}  // namespace detail

inline WeylElt label(const PrimeContext& ctx, const DLRepU& sigma,
                     const SerreWeightU& F) {
  require(type_depth(ctx, sigma) >= 1, Err::DepthTooSmall,
          "label: presentation must be 1-deep");
  int f = ctx.f;
  UChar lam = F.rep();
  UChar lhs = weyl_act(weyl_all_s(f), lam - (ctx.p - 1) * eta(f));
  std::optional<WeylElt> found;
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    WeylElt z = weyl_from_mask(f, mask);
    UChar target = weyl_act(z, lhs) - sigma.mu;
    auto nu = detail::solve_w_pi_minus_p(ctx, sigma.w, target);
    if (!nu || !wplus_member(z, *nu)) continue;
    require(!found.has_value(), Err::GenericityViolation,
            "label: multiple solutions");
    found = z;
  }
  require(found.has_value(), Err::NotAFactor,
          "label: weight is not a factor of the reduction");
  return *found;
}

/// Graph distance of two factors: the length of z' z^{-1}.
inline int graph_distance(const PrimeContext& ctx, const DLRepU& sigma,
                          const SerreWeightU& F, const SerreWeightU& Fp) {
  WeylElt z = label(ctx, sigma, F);
  WeylElt zp = label(ctx, sigma, Fp);
  return weyl_length(weyl_mul(z, zp));
}

// ---------------------------------------------------------------------------
// Intersection of Jordan-Hoelder sets of two types.
// ---------------------------------------------------------------------------

struct IntersectionWitness {
  std::vector<uint8_t> wtilde;  // per slot: 0 = 1, 1 = s, 2 = t_alpha s
  DLRepU pair;                  // the re-presentation R_{w2'}(mu2' + eta)
  std::vector<SerreWeightU> common;
};

inline std::vector<SerreWeightU> jh_intersection(
    const std::vector<SerreWeightU>& a, const std::vector<SerreWeightU>& b) {
  std::vector<SerreWeightU> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::optional<IntersectionWitness> intersect_types(
    const PrimeContext& ctx, const DLRepU& s1, const DLRepU& s2) {
  int f = ctx.f;
  // The witness search and the common-weight formula run off the first
  // presentation; the second input only needs to be a generic type.
  require(type_depth(ctx, s1) >= ctx.cap_depth(3), Err::DepthTooSmall,
          "intersect_types: first input not generic enough");
  require(type_depth(ctx, s2) >= 1, Err::DepthTooSmall,
          "intersect_types: second input not generic enough");
  UChar mu1 = s1.mu - eta(f);

  std::optional<IntersectionWitness> best;
  int npow = 1;
  for (int i = 0; i < f; ++i) npow *= 3;
  for (int code = 0; code < npow; ++code) {
    std::vector<uint8_t> trits(f);
    int c = code;
    for (int i = 0; i < f; ++i) {
      trits[i] = uint8_t(c % 3);
      c /= 3;
    }
    WeylElt v(f);
    std::vector<Quad> xi(f, Quad{0, 0, 0, 0});
    for (int i = 0; i < f; ++i) {
      if (trits[i] >= 1) v.set(i, true);
      if (trits[i] == 2) xi[i] = Quad{1, -1, 0, 0};
    }
    WeylElt w2p = weyl_mul(s1.w, v);
    UChar mu2p = mu1 + weyl_act(s1.w, UChar(std::move(xi)));
    DLRepU cand{w2p, mu2p + eta(f)};
    if (!dl_isomorphic(ctx, s2, cand)) continue;
    require(!best.has_value(), Err::GenericityViolation,
            "intersect_types: multiple witnesses");
    IntersectionWitness wit;
    wit.wtilde = trits;
    wit.pair = cand;
    // Common weights: z is pinned on slot i-1 whenever wtilde_i != 1 and
    // free otherwise; nu takes the representative eta_H on s-slots of z.
    std::vector<int> free_slots;
    std::vector<int> pinned(f, -1);  // -1 free, 0 identity, 1 s
    for (int i = 0; i < f; ++i) {
      int j = (i - 1 + f) % f;
      if (trits[i] == 1) pinned[j] = 0;
      if (trits[i] == 2) pinned[j] = 1;
    }
    for (int j = 0; j < f; ++j)
      if (pinned[j] < 0) free_slots.push_back(j);
    for (unsigned m = 0; m < (1u << free_slots.size()); ++m) {
      WeylElt z(f);
      for (int j = 0; j < f; ++j)
        if (pinned[j] == 1) z.set(j, true);
      for (size_t idx = 0; idx < free_slots.size(); ++idx)
        if ((m >> idx) & 1u) z.set(free_slots[idx], true);
      std::vector<Quad> nuq(f, Quad{0, 0, 0, 0});
      for (int j = 0; j < f; ++j)
        if (z.is_s(j)) nuq[j] = Quad{0, 0, 1, 0};
      UChar nu{std::move(nuq)};
      UChar inner = mu1 + weyl_act(s1.w, phi_inverse(nu)) + eta(f) - ctx.p * nu;
      UChar lam = weyl_act(weyl_all_s(f), weyl_act(z, inner)) +
                  (ctx.p - 1) * eta(f);
      wit.common.push_back(SerreWeightU(ctx, lam));
    }
    std::sort(wit.common.begin(), wit.common.end());
    for (size_t i = 0; i + 1 < wit.common.size(); ++i)
      require(wit.common[i] != wit.common[i + 1], Err::GenericityViolation,
              "intersect_types: common weights not distinct");
    best = std::move(wit);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Neighbor types: given two factors of a deep type, a type containing both
// whose other common factors with sigma are strictly closer to F.
// ---------------------------------------------------------------------------

namespace detail {

/// Depth repair using translations only (labels are unchanged by these).
inline std::optional<DLRepU> deepen_translations_only(const PrimeContext& ctx,
                                                      const DLRepU& r, int n) {
  int f = ctx.f;
  const int B = 3;
  std::vector<ll> c(f, -B);
  std::optional<DLRepU> found;
  while (true) {
    bool ok = true;
    for (int i = 0; i < f && ok; ++i) {
      ll ti = root_pairing(r.mu, i) + ctx.p * c[(i + 1) % f] -
              (r.w.is_s(i) ? -1 : 1) * c[i];
      ok = (n < ti) && (ti < ctx.p - n);
    }
    if (ok) {
      DLRepU cand = translate_presentation(ctx, r, c);
      if (!found) found = cand;
    }
    int i = 0;
    while (i < f && ++c[i] > B) {
      c[i] = -B;
      ++i;
    }
    if (i == f) break;
  }
  return found;
}

}  // namespace detail

inline DLRepU neighbor_type(const PrimeContext& ctx, const DLRepU& sigma,
                            const SerreWeightU& F, const SerreWeightU& Fp) {
  int f = ctx.f;
  int need = ctx.cap_depth(4);
  if (need < 2) need = 2;
  require(type_depth(ctx, sigma) >= need, Err::DepthTooSmall,
          "neighbor_type: sigma not generic enough");
  // Re-present so that the label of F becomes the long element.
  WeylElt zf = label(ctx, sigma, F);
  DLRepU pres = sigma;
  if (zf != weyl_all_s(f)) {
    WeylElt v = weyl_mul(weyl_all_s(f), zf);
    DLRepU flipped = flip_presentation(ctx, sigma, v);
    auto fixed = detail::deepen_translations_only(ctx, flipped, 1);
    require(fixed.has_value(), Err::DepthTooSmall,
            "neighbor_type: could not restore depth after re-presentation");
    pres = *fixed;
    require(label(ctx, pres, F) == weyl_all_s(f), Err::ConsistencyFailure,
            "neighbor_type: label normalization failed");
  }
  WeylElt z = label(ctx, pres, Fp);
  DLRepU out{weyl_mul(pres.w, frobenius_weyl(z)),
             pres.mu + weyl_act(pres.w, phi_inverse(alpha_of(z)))};
  if (type_depth(ctx, out) < 1) {
    // presentation repair; postconditions below are class-level facts
    auto deep = deepen_type(ctx, out, 1);
    require(deep.has_value(), Err::DepthTooSmall,
            "neighbor_type: constructed type left the generic range");
    out = *deep;
  }
  auto jh = jh_factors(ctx, out);
  require(jh_contains(jh, F) && jh_contains(jh, Fp), Err::ConsistencyFailure,
          "neighbor_type: postcondition failed");
  return out;
}

// ---------------------------------------------------------------------------
// Disjoint types: a type containing F whose reduction shares no factor with
// sigma.
// ---------------------------------------------------------------------------

/// A standard type containing the weight F: either R_1(lambda) (whose
/// identity-slot factor is F) or R_1(s(lambda - (p-1) eta)) (whose long-slot
/// factor is F), whichever presentation sits in the window.
inline DLRepU containing_type(const PrimeContext& ctx, const SerreWeightU& F) {
  auto rep = descended_rep(ctx, F);
  require(rep.has_value(), Err::NotDescended,
          "containing_type: weight not descended");
  DLRepU direct{weyl_identity(ctx.f), *rep};
  if (type_depth(ctx, direct) >= 1) return direct;
  DLRepU flipped{weyl_identity(ctx.f),
                 weyl_act(weyl_all_s(ctx.f), *rep - (ctx.p - 1) * eta(ctx.f))};
  require(type_depth(ctx, flipped) >= 1, Err::DepthTooSmall,
          "containing_type: weight too shallow");
  return flipped;
}

inline DLRepU disjoint_type(const PrimeContext& ctx, const DLRepU& sigma,
                            const SerreWeightU& F, int radius = 3) {
  int f = ctx.f;
  require(is_descended(sigma.mu), Err::PreconditionViolated,
          "disjoint_type: sigma must be descended");
  require(type_depth(ctx, sigma) >= ctx.cap_depth(2), Err::PreconditionViolated,
          "disjoint_type: sigma not generic enough");
  require(weight_depth(ctx, F) >= ctx.cap_depth(3), Err::PreconditionViolated,
          "disjoint_type: weight not deep enough");
  auto jhs = jh_factors(ctx, sigma);
  require(!jh_contains(jhs, F), Err::PreconditionViolated,
          "disjoint_type: weight already occurs in sigma");

  if (central_character(ctx, sigma) != central_character(ctx, F)) {
    DLRepU out = containing_type(ctx, F);
    auto jh = jh_factors(ctx, out);
    require(jh_contains(jh, F) && jh_intersection(jhs, jh).empty(),
            Err::ConsistencyFailure, "disjoint_type: central-character case");
    return out;
  }

  // Root-lattice translates of sigma, ordered by total displacement.
  std::vector<std::vector<ll>> shifts;
  std::vector<ll> c(f, -radius);
  while (true) {
    bool zero = true;
    for (ll v : c) zero = zero && v == 0;
    if (!zero) shifts.push_back(c);
    int i = 0;
    while (i < f && ++c[i] > radius) {
      c[i] = -radius;
      ++i;
    }
    if (i == f) break;
  }
  std::sort(shifts.begin(), shifts.end(),
            [](const std::vector<ll>& x, const std::vector<ll>& y) {
              ll nx = 0, ny = 0;
              for (ll v : x) nx += v < 0 ? -v : v;
              for (ll v : y) ny += v < 0 ? -v : v;
              if (nx != ny) return nx < ny;
              return x < y;
            });
  for (const auto& sh : shifts) {
    UChar nu = sigma.mu;
    {
      UChar acc = sigma.mu;
      for (int i = 0; i < f; ++i) acc = acc + sh[i] * alpha(f, i);
      nu = acc;
    }
    DLRepU cand{sigma.w, nu};
    if (type_depth(ctx, cand) < 1) continue;
    auto jh = jh_factors(ctx, cand);
    if (jh_contains(jh, F) && jh_intersection(jhs, jh).empty()) return cand;
  }

  // Direct enumeration of types containing F via the factor criterion:
  // chi = z(s(lambda - (p-1) eta)) - (w pi - p)(nu) has F among its factors
  // whenever z t_{-p nu} lies in W~_+.
  auto lam_rep = descended_rep(ctx, F);
  require(lam_rep.has_value(), Err::NotDescended, "disjoint_type: weight");
  UChar lhs = weyl_act(weyl_all_s(f), *lam_rep - (ctx.p - 1) * eta(f));
  std::vector<std::vector<ll>> frees;
  {
    std::vector<ll> g(2 * f, -radius);
    while (true) {
      frees.push_back(g);
      int i = 0;
      while (i < 2 * f && ++g[i] > radius) {
        g[i] = -radius;
        ++i;
      }
      if (i == 2 * f) break;
    }
    std::sort(frees.begin(), frees.end(),
              [](const std::vector<ll>& x, const std::vector<ll>& y) {
                ll nx = 0, ny = 0;
                for (ll v : x) nx += v < 0 ? -v : v;
                for (ll v : y) ny += v < 0 ? -v : v;
                if (nx != ny) return nx < ny;
                return x < y;
              });
  }
  for (unsigned wm = 0; wm < (1u << f); ++wm) {
    WeylElt w = weyl_from_mask(f, wm);
    for (unsigned zm = 0; zm < (1u << f); ++zm) {
      WeylElt z = weyl_from_mask(f, zm);
      for (const auto& g : frees) {
        std::vector<Quad> nuq(f, Quad{0, 0, 0, 0});
        for (int i = 0; i < f; ++i) {
          // eta_H on s-slots plus pairing-zero free directions
          ll a = g[2 * i], b = g[2 * i + 1];
          nuq[i] = Quad{a + b, a, (z.is_s(i) ? 1 : 0) - b, 0};
        }
        UChar nu{std::move(nuq)};
        if (!wplus_member(z, nu)) continue;
        UChar chi =
            weyl_act(z, lhs) -
            (weyl_act(w, phi_inverse(nu)) - ctx.p * nu);
        DLRepU cand{w, chi};
        if (type_depth(ctx, cand) < 1) continue;
        auto jh = jh_factors(ctx, cand);
        if (jh_contains(jh, F) && jh_intersection(jhs, jh).empty())
          return cand;
      }
    }
  }
  fail(Err::SearchExhausted,
       "disjoint_type: no disjoint type within radius " +
           std::to_string(radius));
}

}  // namespace swu2
