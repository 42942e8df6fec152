#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swu2/base_change.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// Tame L-parameters. The two families carry residues (r mod q^2-1,
// s mod q-1) resp. (k, l mod q+1, s mod q-1) plus opaque unramified labels.
// The multiplier residue s is normalized so that s = 0 is the cyclotomic
// case used by every weight-theoretic pipeline.
// ---------------------------------------------------------------------------

struct TameLParam {
  enum class Kind { PrincipalSeries, Irreducible };

  Kind kind = Kind::PrincipalSeries;
  ll r = 0;             // principal series: exponent mod q^2 - 1
  ll k = 0, l = 0;      // irreducible: exponents mod q + 1
  ll s = 0;             // multiplier residue mod q - 1
  std::string lambda = "1";  // opaque unramified labels; never computed with
  std::string nu = "1";

  static TameLParam principal_series(const PrimeContext& ctx, ll r, ll s,
                                     std::string lambda = "1",
                                     std::string nu = "1") {
    TameLParam out;
    out.kind = Kind::PrincipalSeries;
    out.r = ctx.mod_M(r);
    out.s = ctx.mod_q_minus_1(s);
    out.lambda = std::move(lambda);
    out.nu = std::move(nu);
    return out;
  }

  static TameLParam irreducible(const PrimeContext& ctx, ll k, ll l, ll s,
                                std::string lambda = "1") {
    TameLParam out;
    out.kind = Kind::Irreducible;
    out.k = ctx.mod_q_plus_1(k);
    out.l = ctx.mod_q_plus_1(l);
    out.s = ctx.mod_q_minus_1(s);
    out.lambda = std::move(lambda);
    return out;
  }
};

inline bool has_cyclotomic_multiplier(const TameLParam& rho) {
  return rho.s == 0;
}

// ---------------------------------------------------------------------------
// Inertial types of GL_2 over K_2: an unordered pair of omega_{2f}-exponents.
// ---------------------------------------------------------------------------

struct InertialTypeGL {
  std::array<ll, 2> e{0, 0};  // stored sorted

  InertialTypeGL() = default;
  InertialTypeGL(const PrimeContext& ctx, ll a, ll b) {
    a = ctx.mod_M(a);
    b = ctx.mod_M(b);
    e = a <= b ? std::array<ll, 2>{a, b} : std::array<ll, 2>{b, a};
  }

  bool operator==(const InertialTypeGL& o) const { return e == o.e; }
};

/// Exponents of the restriction to inertia of the base change of rho.
inline InertialTypeGL inertial_exponents(const PrimeContext& ctx,
                                         const TameLParam& rho) {
  if (rho.kind == TameLParam::Kind::PrincipalSeries)
    return InertialTypeGL(ctx, rho.r, -ctx.q * rho.r + (ctx.q + 1) * rho.s);
  return InertialTypeGL(ctx, rho.s + (1 - ctx.q) * rho.k,
                        rho.s + (1 - ctx.q) * rho.l);
}

/// (tau')^{phi^{-f}} iso tau'^vee, i.e. {q a, q b} = {-a, -b} mod q^2 - 1.
inline bool is_essentially_selfdual(const PrimeContext& ctx,
                                    const InertialTypeGL& tau) {
  ll qa = ctx.mod_M(ctx.q * tau.e[0]), qb = ctx.mod_M(ctx.q * tau.e[1]);
  ll na = ctx.mod_M(-tau.e[0]), nb = ctx.mod_M(-tau.e[1]);
  return (qa == na && qb == nb) || (qa == nb && qb == na);
}

/// Multiplier-twisted variant satisfied by the galreps families for any s:
/// {q a, q b} = {-a + (q+1)s, -b + (q+1)s}.
inline bool is_twisted_selfdual(const PrimeContext& ctx,
                                const InertialTypeGL& tau, ll s) {
  ll t = ctx.mod_M((ctx.q + 1) * s);
  ll qa = ctx.mod_M(ctx.q * tau.e[0]), qb = ctx.mod_M(ctx.q * tau.e[1]);
  ll na = ctx.mod_M(-tau.e[0] + t), nb = ctx.mod_M(-tau.e[1] + t);
  return (qa == na && qb == nb) || (qa == nb && qb == na);
}

// ---------------------------------------------------------------------------
// Digits, genericity, orientation (the combinatorial data of section-five).
// ---------------------------------------------------------------------------

inline bool is_trivial_exponent(const PrimeContext& ctx, ll e) {
  return ctx.mod_M(e) == 0;
}

/// Base-p digit vector of an exponent, 2f digits in [0, p-1], with the zero
/// residue represented by all zeros (never all p-1).
inline std::vector<ll> digits(const PrimeContext& ctx, ll x) {
  return base_p_digits(ctx, x);
}

/// Digit vectors (a_1, a_2) attached to tau' = omega^{-a1} + omega^{-a2}.
inline std::pair<std::vector<ll>, std::vector<ll>> type_digit_pair(
    const PrimeContext& ctx, const InertialTypeGL& tau) {
  require(!is_trivial_exponent(ctx, tau.e[0]) &&
              !is_trivial_exponent(ctx, tau.e[1]),
          Err::TrivialCharacter, "type has a trivial character summand");
  return {digits(ctx, -tau.e[0]), digits(ctx, -tau.e[1])};
}

inline bool is_n_generic_type(const PrimeContext& ctx,
                              const InertialTypeGL& tau, int n) {
  auto [a1, a2] = type_digit_pair(ctx, tau);
  for (int i = 0; i < 2 * ctx.f; ++i) {
    ll d = a1[i] - a2[i];
    if (d < 0) d = -d;
    if (!(n < d && d < ctx.p - n)) return false;
  }
  return true;
}

/// The orientation of a 2-generic type: w_i with a^{(i)}_{w_i(1)} >= the
/// other shifted sum; unique by genericity.
inline WeylElt orientation(const PrimeContext& ctx, const InertialTypeGL& tau) {
  require(is_n_generic_type(ctx, tau, 2), Err::PreconditionViolated,
          "orientation: type must be 2-generic");
  auto [a1, a2] = type_digit_pair(ctx, tau);
  int n = 2 * ctx.f;
  WeylElt w(n);
  for (int j = 0; j < n; ++j) {
    i128 s1 = 0, s2 = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
      int idx = ((i - j) % n + n) % n;
      s1 += pw * a1[idx];
      s2 += pw * a2[idx];
      pw *= ctx.p;
    }
    require(s1 != s2, Err::GenericityViolation, "orientation: tie");
    w.set(j, s2 > s1);
  }
  return w;
}

/// tau(w, mu) exponent computation on the GL side (the displayed product
/// formula), exposed with the InertialTypeGL wrapper.
inline InertialTypeGL exponents_of_tau(const PrimeContext& ctx,
                                       const WeylElt& w, const GLChar& mu) {
  auto e = gl_type_exponents(ctx, w, mu);
  return InertialTypeGL(ctx, e[0], e[1]);
}

// ---------------------------------------------------------------------------
// The inertial local Langlands data assignment sigma(tau') and sigma'(tau').
// ---------------------------------------------------------------------------

struct SigmaOfType {
  std::optional<DLRepU> rep;        // cases (1) and (2)
  std::optional<ll> char_exponent;  // case (3): a one-dimensional marker
};

inline SigmaOfType sigma_of_type(const PrimeContext& ctx,
                                 const InertialTypeGL& tau) {
  require(is_essentially_selfdual(ctx, tau), Err::NotSelfDual,
          "sigma_of_type: type is not essentially self-dual");
  require(!is_trivial_exponent(ctx, tau.e[0]) &&
              !is_trivial_exponent(ctx, tau.e[1]),
          Err::TrivialCharacter, "sigma_of_type: trivial character summand");
  SigmaOfType out;
  if (tau.e[0] == tau.e[1]) {
    // a == b: the character case, excluded from the generic pipelines
    if (tau.e[0] % (ctx.q - 1) == 0)
      out.char_exponent = ctx.mod_q_plus_1(-(tau.e[0] / (ctx.q - 1)));
    else
      out.char_exponent = tau.e[0];
    return out;
  }
  out.rep = u_type_from_exponents(ctx, tau.e[0], tau.e[1]);
  if (!out.rep) {
    // self-dual but neither PS nor cuspidal shape with distinct data
    fail(Err::DegenerateParameter, "sigma_of_type: degenerate exponent shape");
  }
  return out;
}

struct SigmaPrimeOfType {
  std::optional<DLRepGL> rep;
  std::optional<ll> char_exponent;
};

inline SigmaPrimeOfType sigma_prime_of_type(const PrimeContext& ctx,
                                            const InertialTypeGL& tau) {
  require(!is_trivial_exponent(ctx, tau.e[0]) &&
              !is_trivial_exponent(ctx, tau.e[1]),
          Err::TrivialCharacter, "sigma_prime_of_type: trivial summand");
  SigmaPrimeOfType out;
  if (tau.e[0] == tau.e[1]) {
    out.char_exponent = tau.e[0];
    return out;
  }
  auto da = digits(ctx, tau.e[0]);
  auto db = digits(ctx, tau.e[1]);
  std::vector<Pair> m(2 * ctx.f);
  for (int i = 0; i < 2 * ctx.f; ++i) m[i] = Pair{da[i], db[i]};
  out.rep = DLRepGL{weyl_identity(2 * ctx.f), GLChar(std::move(m))};
  return out;
}

// ---------------------------------------------------------------------------
// From parameters to Deligne-Lusztig data: V_phi(rho) = R_w(mu + eta).
// ---------------------------------------------------------------------------

/// The pair (w, mu) with V_phi(rho) = R_w(mu + eta); mu is descended, and is
/// presented n-deep whenever the parameter admits such a presentation.
struct LParamDL {
  WeylElt w;
  UChar mu;  // descended; the attached type is R_w(mu + eta)
};

namespace detail {

/// Deepens the pair (w, mu) with mu + eta semantics while keeping mu
/// descended: reuses the type-level search on chi = mu + eta, whose c = 1
/// entry pattern is preserved by every move.
inline std::optional<LParamDL> deepen_pair(const PrimeContext& ctx,
                                           const WeylElt& w, const UChar& mu,
                                           int n) {
  DLRepU chi{w, mu + eta(ctx.f)};
  auto deep = deepen_type(ctx, chi, n);
  if (!deep) return std::nullopt;
  UChar mu2 = deep->mu - eta(ctx.f);
  if (!is_descended(mu2)) return std::nullopt;
  return LParamDL{deep->w, mu2};
}

}  // namespace detail

inline LParamDL dl_from_lparam(const PrimeContext& ctx, const TameLParam& rho) {
  require(has_cyclotomic_multiplier(rho), Err::DegenerateParameter,
          "dl_from_lparam: parameter does not have the cyclotomic multiplier");
  InertialTypeGL tau = inertial_exponents(ctx, rho);
  require(tau.e[0] != tau.e[1], Err::DegenerateParameter,
          "dl_from_lparam: exponents coincide");
  WeylElt w;
  UChar mu;
  if (rho.kind == TameLParam::Kind::PrincipalSeries) {
    w = weyl_identity(ctx.f);
    mu = unpack_ps_char(ctx, rho.r);
  } else {
    require(rho.k != rho.l, Err::DegenerateParameter,
            "dl_from_lparam: irreducible parameter needs distinct characters");
    w = cuspidal_weyl(ctx.f);
    mu = unpack_cuspidal_char(ctx, rho.k, rho.l);
  }
  // Internal consistency, stage 1: on the standard digit-unpacked
  // presentation, the packaged exponents reproduce the parameter's inertial
  // exponents exactly.
  InertialTypeGL packed = exponents_of_tau(ctx, double_weyl(w), bc_pack(mu));
  require(packed == tau, Err::ConsistencyFailure,
          "dl_from_lparam: exponent packaging mismatch");
  LParamDL out{w, mu};
  if (auto deep = detail::deepen_pair(ctx, w, mu, 1)) out = *deep;
  // Stage 2: the rho'-inclusive packaging (the invariant form of the
  // parameter data) must agree across the re-presentation.
  GLChar rp = rho_prime(2 * ctx.f);
  InertialTypeGL before =
      exponents_of_tau(ctx, double_weyl(w), bc_pack(mu) + rp);
  InertialTypeGL after =
      exponents_of_tau(ctx, double_weyl(out.w), bc_pack(out.mu) + rp);
  require(before == after, Err::ConsistencyFailure,
          "dl_from_lparam: packaging not stable under re-presentation");
  return out;
}

inline bool is_n_generic_lparam(const PrimeContext& ctx, const TameLParam& rho,
                                int n) {
  LParamDL dl = dl_from_lparam(ctx, rho);
  if (depth(ctx, dl.mu) >= n) return true;
  return detail::deepen_pair(ctx, dl.w, dl.mu, n).has_value();
}

// ---------------------------------------------------------------------------
// Predicted weight sets and their base-change compatibility.
// ---------------------------------------------------------------------------

/// The beta-twist of V_phi(rho), in its in-alcove presentation
/// R_{s w}(s(mu) + (p-1) eta); suitable as jh_factors input.
inline DLRepU beta_type_of_lparam(const PrimeContext& ctx,
                                  const TameLParam& rho) {
  LParamDL dl = dl_from_lparam(ctx, rho);
  require(depth(ctx, dl.mu) >= 1, Err::DepthTooSmall,
          "predicted weights: parameter is not 1-generic");
  WeylElt sbar = weyl_all_s(ctx.f);
  return DLRepU{weyl_mul(sbar, dl.w),
                weyl_act(sbar, dl.mu) + (ctx.p - 1) * eta(ctx.f)};
}

/// The same representation in descended form R_{s w}(s(mu) - sum_{w_i=1}
/// alpha_i), used wherever base change needs c = d = 0 entries.
inline DLRepU beta_type_descended(const PrimeContext& ctx,
                                  const TameLParam& rho) {
  LParamDL dl = dl_from_lparam(ctx, rho);
  require(depth(ctx, dl.mu) >= 1, Err::DepthTooSmall,
          "predicted weights: parameter is not 1-generic");
  WeylElt sbar = weyl_all_s(ctx.f);
  WeylElt w_ones(ctx.f);
  for (int i = 0; i < ctx.f; ++i) w_ones.set(i, !dl.w.is_s(i));
  return DLRepU{weyl_mul(sbar, dl.w),
                weyl_act(sbar, dl.mu) - alpha_of(w_ones)};
}

/// W?(rho) = JH of the beta-twist of the attached type: 2^f descended
/// weights.
inline std::vector<SerreWeightU> predicted_weights(const PrimeContext& ctx,
                                                   const TameLParam& rho) {
  return jh_factors(ctx, beta_type_of_lparam(ctx, rho));
}

/// The GL-side predicted set W?(BC(rho)) computed by the independent GL
/// pipeline: JH of beta' applied to R'_{(w,w)}((mu, -s mu) + rho').
inline std::vector<SerreWeightGL> predicted_weights_bc(const PrimeContext& ctx,
                                                       const TameLParam& rho) {
  LParamDL dl = dl_from_lparam(ctx, rho);
  require(depth(ctx, dl.mu) >= 1, Err::DepthTooSmall,
          "predicted weights: parameter is not 1-generic");
  DLRepGL vphi{double_weyl(dl.w), bc_pack(dl.mu) + rho_prime(2 * ctx.f)};
  return jh_factors_gl(ctx, beta_gl(ctx, vphi));
}

/// F in W?(rho)  iff  BC(F) in W?(BC(rho)), checked in both directions over
/// the two finite predicted sets.
inline bool bc_predicted_check(const PrimeContext& ctx, const TameLParam& rho) {
  auto wu = predicted_weights(ctx, rho);
  auto wgl = predicted_weights_bc(ctx, rho);
  for (const auto& f : wu)
    if (!jh_contains_gl(wgl, bc_weight(ctx, f))) return false;
  for (const auto& g : wgl) {
    auto pre = is_bc_image_weight(ctx, g);
    if (!pre) continue;
    if (!jh_contains(wu, *pre)) return false;
  }
  return true;
}

}  // namespace swu2
