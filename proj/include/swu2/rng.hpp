#pragma once

#include <cstdint>

#include "swu2/base_change.hpp"
#include "swu2/lparams.hpp"

namespace swu2 {

/// SplitMix64: deterministic, seedable, good enough for property sweeps.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  ll uniform(ll lo, ll hi) {
    return lo + ll(next() % uint64_t(hi - lo + 1));
  }

  bool coin() { return next() & 1u; }
};

/// A random character whose alcove margins are all at least n (so mu is
/// n-deep), with entries spread over a small box including nonzero c parts.
inline UChar random_deep_uchar(const PrimeContext& ctx, Rng& rng, int n) {
  std::vector<Quad> raw(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    ll t = rng.uniform(n + 1, ctx.p - n - 1);  // <mu + eta, alpha_i^vee>
    ll a = rng.uniform(-ctx.p, ctx.p);
    ll c = rng.uniform(-2, 2);
    ll b = a + c + 1 - t;  // a - b + c = t - 1
    raw[i] = Quad{a, b, c, 0};
  }
  return UChar(std::move(raw));
}

/// A random descended character with the same margin guarantee.
inline UChar random_deep_descended_uchar(const PrimeContext& ctx, Rng& rng,
                                         int n) {
  std::vector<Quad> raw(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    ll t = rng.uniform(n + 1, ctx.p - n - 1);
    ll a = rng.uniform(-ctx.p, ctx.p);
    raw[i] = Quad{a, a + 1 - t, 0, 0};
  }
  return UChar(std::move(raw));
}

inline WeylElt random_weyl(int len, Rng& rng) {
  WeylElt w(len);
  for (int i = 0; i < len; ++i) w.set(i, rng.coin());
  return w;
}

/// A random n-generic type presentation R_w(mu + eta), mu n-deep.
inline DLRepU random_generic_type(const PrimeContext& ctx, Rng& rng, int n) {
  UChar mu = random_deep_uchar(ctx, rng, n);
  return DLRepU{random_weyl(ctx.f, rng), mu + eta(ctx.f)};
}

/// A random descended type presentation R_w(chi), chi with c = d = 0 and
/// all alcove margins at least n (so the type is n-generic).
inline DLRepU random_generic_descended_type(const PrimeContext& ctx, Rng& rng,
                                            int n) {
  std::vector<Quad> raw(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    ll t = rng.uniform(n + 1, ctx.p - n - 1);  // <chi, alpha_i^vee>
    ll a = rng.uniform(-ctx.p, ctx.p);
    raw[i] = Quad{a, a - t, 0, 0};
  }
  return DLRepU{random_weyl(ctx.f, rng), UChar(std::move(raw))};
}

/// A random cyclotomic parameter that is n-generic; draws until the digit
/// pattern cooperates.
inline TameLParam random_generic_lparam(const PrimeContext& ctx, Rng& rng,
                                        int n) {
  for (int tries = 0; tries < 4096; ++tries) {
    TameLParam rho;
    if (rng.coin()) {
      rho = TameLParam::principal_series(ctx, rng.uniform(0, ctx.M - 1), 0);
    } else {
      ll k = rng.uniform(0, ctx.q);
      ll l = rng.uniform(0, ctx.q);
      if (k == l) continue;
      rho = TameLParam::irreducible(ctx, k, l, 0);
    }
    InertialTypeGL tau = inertial_exponents(ctx, rho);
    if (tau.e[0] == tau.e[1]) continue;
    if (is_trivial_exponent(ctx, tau.e[0]) || is_trivial_exponent(ctx, tau.e[1]))
      continue;
    if (!is_n_generic_lparam(ctx, rho, n)) continue;
    return rho;
  }
  fail(Err::SearchExhausted, "random_generic_lparam: no generic draw");
}

/// A random essentially self-dual n-generic (digitwise) inertial type.
inline InertialTypeGL random_selfdual_generic_type(const PrimeContext& ctx,
                                                   Rng& rng, int n) {
  for (int tries = 0; tries < 8192; ++tries) {
    InertialTypeGL tau;
    if (rng.coin()) {
      ll c = rng.uniform(1, ctx.M - 1);
      tau = InertialTypeGL(ctx, c, -ctx.q * c);
    } else {
      ll a = rng.uniform(0, ctx.q);
      ll b = rng.uniform(0, ctx.q);
      if (a == b) continue;
      tau = InertialTypeGL(ctx, (1 - ctx.q) * a, (1 - ctx.q) * b);
    }
    if (tau.e[0] == tau.e[1]) continue;
    if (is_trivial_exponent(ctx, tau.e[0]) || is_trivial_exponent(ctx, tau.e[1]))
      continue;
    if (!is_essentially_selfdual(ctx, tau)) continue;
    if (!is_n_generic_type(ctx, tau, n)) continue;
    return tau;
  }
  fail(Err::SearchExhausted, "random_selfdual_generic_type: no generic draw");
}

}  // namespace swu2
