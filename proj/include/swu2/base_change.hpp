#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "swu2/weights.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// Packaging between the unitary and GL sides. A descended character
// (c = d = 0 entries) is identified with f integer pairs; its base change
// uses the pair (mu, -s(mu)) over 2f embeddings and the doubled Weyl
// element (w, w).
// ---------------------------------------------------------------------------

inline WeylElt double_weyl(const WeylElt& w) {
  int f = w.size();
  WeylElt out(2 * f);
  for (int i = 0; i < f; ++i) {
    out.set(i, w.is_s(i));
    out.set(f + i, w.is_s(i));
  }
  return out;
}

inline GLChar bc_pack(const UChar& mu) {
  require(is_descended(mu), Err::NotDescended, "bc_pack: character not descended");
  int f = mu.f();
  std::vector<Pair> r(2 * f);
  for (int i = 0; i < f; ++i) {
    r[i] = Pair{mu[i][0], mu[i][1]};
    r[f + i] = Pair{-mu[i][1], -mu[i][0]};  // -s(mu) slotwise
  }
  return GLChar(std::move(r));
}

inline int weyl_parity(const WeylElt& w) { return weyl_length(w) & 1; }

// ---------------------------------------------------------------------------
// Inertial exponents of tame type data. For w' of even total parity the two
// omega_{2f}-exponents of tau(w', mu') are the linear forms
//   e_k = sum_i p^i (w'_1 ... w'_i)(mu'_i)_k  (mod p^{2f} - 1),
// an isomorphism invariant of R'_{w'}(mu').
// ---------------------------------------------------------------------------

inline std::array<ll, 2> gl_type_exponents(const PrimeContext& ctx,
                                           const WeylElt& w, const GLChar& mu) {
  int n = 2 * ctx.f;
  require(w.size() == n && mu.size() == n, Err::LengthMismatch,
          "gl_type_exponents: rank mismatch");
  require(weyl_parity(w) == 0, Err::PreconditionViolated,
          "gl_type_exponents: odd-parity Weyl element");
  i128 e1 = 0, e2 = 0, pw = 1;
  bool cum = false;  // w'_1 ... w'_i as an element of S_2
  for (int i = 0; i < n; ++i) {
    if (i >= 1) cum = cum != w.is_s(i);
    ll x = cum ? mu[i][1] : mu[i][0];
    ll y = cum ? mu[i][0] : mu[i][1];
    e1 += pw * x;
    e2 += pw * y;
    pw *= ctx.p;
  }
  auto red = [&](i128 v) {
    i128 r = v % ctx.M;
    if (r < 0) r += ctx.M;
    return ll(r);
  };
  return {red(e1), red(e2)};
}

/// Exponent pair of a descended unitary type via its base-change packaging.
inline std::array<ll, 2> u_type_exponents(const PrimeContext& ctx,
                                          const DLRepU& r) {
  return gl_type_exponents(ctx, double_weyl(r.w), bc_pack(r.mu));
}

// ---------------------------------------------------------------------------
// Digit unpacking: standard-form types with prescribed exponents.
// ---------------------------------------------------------------------------

inline std::vector<ll> base_p_digits(const PrimeContext& ctx, ll x) {
  ll v = ctx.mod_M(x);
  std::vector<ll> d(2 * ctx.f);
  for (int i = 0; i < 2 * ctx.f; ++i) {
    d[i] = v % ctx.p;
    v /= ctx.p;
  }
  return d;
}

/// Principal-series unpack: R_1(mu) with exponent pair {c, -qc}, where
/// mu has pairs (c_i, -c_{f+i}) from the base-p digits of c.
inline UChar unpack_ps_char(const PrimeContext& ctx, ll c) {
  auto d = base_p_digits(ctx, c);
  std::vector<Quad> r(ctx.f);
  for (int i = 0; i < ctx.f; ++i) r[i] = Quad{d[i], -d[ctx.f + i], 0, 0};
  return UChar(std::move(r));
}

/// f loose base-p digits of a residue in [0, q]; the top slot absorbs any
/// excess so the expansion always exists.
inline std::vector<ll> loose_digits(const PrimeContext& ctx, ll x) {
  std::vector<ll> d(ctx.f, 0);
  ll v = x;
  for (int i = 0; i + 1 < ctx.f; ++i) {
    d[i] = v % ctx.p;
    v /= ctx.p;
  }
  d[ctx.f - 1] = v;
  return d;
}

/// Cuspidal unpack: character mu with sum a_i p^i = khat, sum b_i p^i = lhat
/// mod q + 1, preferring slotwise gaps a_i - b_i inside the open window so
/// that R_{(s,1,...,1)}(mu) is 1-generic whenever possible.
inline UChar unpack_cuspidal_char(const PrimeContext& ctx, ll k, ll l) {
  ll khat = ctx.mod_q_plus_1(k), lhat = ctx.mod_q_plus_1(l);
  ll D = ctx.mod_q_plus_1(khat - lhat);
  int f = ctx.f;
  std::vector<ll> delta(f, 0);
  bool found = false;
  std::vector<ll> cur(f, 2);
  if (ctx.p >= 5) {
    // smallest gap vector (lex order) with sum p^i delta_i = D mod q+1
    while (true) {
      ll s = 0, pw = 1;
      for (int i = 0; i < f; ++i) {
        s += cur[i] * pw;
        pw *= ctx.p;
      }
      if (ctx.mod_q_plus_1(s) == D) {
        delta = cur;
        found = true;
        break;
      }
      int i = 0;
      while (i < f && ++cur[i] > ctx.p - 2) {
        cur[i] = 2;
        ++i;
      }
      if (i == f) break;
    }
  }
  if (!found) delta[0] = D;  // consistent but possibly shallow; callers deepen
  auto a = loose_digits(ctx, khat);
  std::vector<Quad> r(f);
  for (int i = 0; i < f; ++i) r[i] = Quad{a[i], a[i] - delta[i], 0, 0};
  return UChar(std::move(r));
}

inline WeylElt cuspidal_weyl(int f) {
  WeylElt w(f);
  w.set(0, true);
  return w;
}

// ---------------------------------------------------------------------------
// Presentation search: re-present a type within its isomorphism class to
// reach prescribed depth. Moves are the Deligne-Lusztig equivalences by
// (v, nu): per-slot sign flips and translations by (F - w)(nu) with nu
// supported on descended unit characters, so descended inputs stay descended.
// ---------------------------------------------------------------------------

inline DLRepU flip_presentation(const PrimeContext& ctx, const DLRepU& r,
                                const WeylElt& v) {
  WeylElt w2 = weyl_mul(weyl_mul(v, r.w), frobenius_weyl(v));
  (void)ctx;
  return DLRepU{w2, weyl_act(v, r.mu)};
}

inline DLRepU translate_presentation(const PrimeContext& ctx, const DLRepU& r,
                                     const std::vector<ll>& c) {
  int f = ctx.f;
  std::vector<Quad> raw(f, Quad{0, 0, 0, 0});
  for (int i = 0; i < f; ++i) raw[i] = Quad{c[i], 0, 0, 0};
  UChar nu{std::move(raw)};
  return DLRepU{r.w, r.mu + frobenius(ctx, nu) - weyl_act(r.w, nu)};
}

/// Searches flip masks and bounded translations for a presentation of the
/// same isomorphism class whose character is n-deep-in-window
/// (n < <mu, alpha_i^vee> < p - n for all i). Returns nullopt if none is
/// found within the search bounds.
inline std::optional<DLRepU> deepen_type(const PrimeContext& ctx,
                                         const DLRepU& r, int n) {
  int f = ctx.f;
  const int B = 3;
  // candidate translation vectors ordered by L1 norm, then lexicographically
  std::vector<std::vector<ll>> cands;
  std::vector<ll> c(f, -B);
  while (true) {
    cands.push_back(c);
    int i = 0;
    while (i < f && ++c[i] > B) {
      c[i] = -B;
      ++i;
    }
    if (i == f) break;
  }
  std::sort(cands.begin(), cands.end(),
            [](const std::vector<ll>& x, const std::vector<ll>& y) {
              ll nx = 0, ny = 0;
              for (ll v : x) nx += v < 0 ? -v : v;
              for (ll v : y) ny += v < 0 ? -v : v;
              if (nx != ny) return nx < ny;
              return x < y;
            });
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    DLRepU base = flip_presentation(ctx, r, weyl_from_mask(f, mask));
    std::vector<ll> t(f);
    for (int i = 0; i < f; ++i) t[i] = root_pairing(base.mu, i);
    for (const auto& cv : cands) {
      bool ok = true;
      for (int i = 0; i < f && ok; ++i) {
        ll ti = t[i] + ctx.p * cv[(i + 1) % f] -
                (base.w.is_s(i) ? -1 : 1) * cv[i];
        ok = (n < ti) && (ti < ctx.p - n);
      }
      if (!ok) continue;
      return translate_presentation(ctx, base, cv);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Base change of types and weights; the epsilon involution; inverses.
// ---------------------------------------------------------------------------

/// BC(R_w(mu)) = R'_{(w,w)}(mu, -s(mu)) for descended irreducible types.
inline DLRepGL bc_type(const PrimeContext& ctx, const DLRepU& r) {
  require(is_descended(r.mu), Err::NotDescended,
          "bc_type: character not descended");
  auto e = u_type_exponents(ctx, r);
  require(e[0] != e[1], Err::NonIrreducibleType,
          "bc_type: exponent congruence violates irreducibility");
  return DLRepGL{double_weyl(r.w), bc_pack(r.mu)};
}

/// BC(F(mu)) = F'(mu, -s(mu)) for descended weights.
inline SerreWeightGL bc_weight(const PrimeContext& ctx, const SerreWeightU& x) {
  auto rep = descended_rep(ctx, x);
  require(rep.has_value(), Err::NotDescended,
          "bc_weight: weight has no descended representative");
  return weight_gl(ctx, bc_pack(*rep));
}

/// epsilon(R'_{(w,w')}(mu, mu')) = R'_{(w',w)}(-s(mu'), -s(mu)).
inline DLRepGL epsilon_type(const PrimeContext& ctx, const DLRepGL& r) {
  int f = ctx.f;
  require(r.w.size() == 2 * f && r.mu.size() == 2 * f, Err::LengthMismatch,
          "epsilon_type: rank mismatch");
  WeylElt w2(2 * f);
  std::vector<Pair> m(2 * f);
  for (int i = 0; i < f; ++i) {
    w2.set(i, r.w.is_s(f + i));
    w2.set(f + i, r.w.is_s(i));
    m[i] = Pair{-r.mu[f + i][1], -r.mu[f + i][0]};
    m[f + i] = Pair{-r.mu[i][1], -r.mu[i][0]};
  }
  return DLRepGL{w2, GLChar(std::move(m))};
}

/// epsilon(F'(mu, mu')) = F'(-s(mu'), -s(mu)).
inline SerreWeightGL epsilon_weight(const PrimeContext& ctx,
                                    const SerreWeightGL& x) {
  int f = ctx.f;
  GLChar rep = x.rep();
  std::vector<Pair> m(2 * f);
  for (int i = 0; i < f; ++i) {
    m[i] = Pair{-rep[f + i][1], -rep[f + i][0]};
    m[f + i] = Pair{-rep[i][1], -rep[i][0]};
  }
  return weight_gl(ctx, GLChar(std::move(m)));
}

/// Constructive standard-form unitary type with prescribed exponent pair:
/// {c, -qc} gives a principal-series datum, {(1-q)a, (1-q)b} with a != b a
/// cuspidal one. Returns nullopt for degenerate or non-self-dual shapes.
inline std::optional<DLRepU> u_type_from_exponents(const PrimeContext& ctx,
                                                   ll e1, ll e2) {
  e1 = ctx.mod_M(e1);
  e2 = ctx.mod_M(e2);
  if (e1 == e2) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    ll c = pick == 0 ? e1 : e2;
    ll other = pick == 0 ? e2 : e1;
    if (ctx.mod_M(-ctx.q * c) == other) {
      DLRepU cand{weyl_identity(ctx.f), unpack_ps_char(ctx, c)};
      if (auto deep = deepen_type(ctx, cand, 1)) return *deep;
      return cand;
    }
  }
  if (e1 % (ctx.q - 1) == 0 && e2 % (ctx.q - 1) == 0) {
    ll a = ctx.mod_q_plus_1(-(e1 / (ctx.q - 1)));
    ll b = ctx.mod_q_plus_1(-(e2 / (ctx.q - 1)));
    if (a != b) {
      DLRepU cand{cuspidal_weyl(ctx.f), unpack_cuspidal_char(ctx, a, b)};
      if (auto deep = deepen_type(ctx, cand, 1)) return *deep;
      return cand;
    }
  }
  return std::nullopt;
}

/// Inverse of base change on types: the unique preimage when the input is
/// epsilon-fixed and of base-change shape, nullopt otherwise.
inline std::optional<DLRepU> is_bc_image_type(const PrimeContext& ctx,
                                              const DLRepGL& r) {
  if (weyl_parity(r.w) != 0) return std::nullopt;
  if (!dl_isomorphic_gl(ctx, epsilon_type(ctx, r), r)) return std::nullopt;
  auto e = gl_type_exponents(ctx, r.w, r.mu);
  auto cand = u_type_from_exponents(ctx, e[0], e[1]);
  if (!cand) return std::nullopt;
  if (!dl_isomorphic_gl(ctx, bc_type(ctx, *cand), r)) return std::nullopt;
  return cand;
}

/// Inverse of base change on weights, via an exact lattice solve for a
/// representative of the form (nu, -s(nu)).
inline std::optional<SerreWeightU> is_bc_image_weight(const PrimeContext& ctx,
                                                      const SerreWeightGL& x) {
  if (epsilon_weight(ctx, x) != x) return std::nullopt;
  int f = ctx.f;
  const Lattice& solver = cached_lattice(
      "bcw:" + std::to_string(ctx.p) + ":" + std::to_string(ctx.f), [&]() {
        const Lattice& lat = f_minus_1_x0_lattice_gl(ctx);
        int ncols = 2 * f + lat.gens.cols;
        IMat m(4 * f, ncols);
        for (int i = 0; i < f; ++i) {
          for (int k = 0; k < 2; ++k) {
            std::vector<Quad> raw(f, Quad{0, 0, 0, 0});
            raw[i][k] = 1;
            auto v = to_coords_gl(bc_pack(UChar(std::move(raw))));
            for (int rr = 0; rr < 4 * f; ++rr) m.at(rr, 2 * i + k) = v[rr];
          }
        }
        for (int j = 0; j < lat.gens.cols; ++j)
          for (int rr = 0; rr < 4 * f; ++rr)
            m.at(rr, 2 * f + j) = lat.gens.at(rr, j);
        return Lattice(m);
      });
  auto sol = lattice_solve(solver, x.canon());
  if (!sol) return std::nullopt;
  std::vector<Quad> raw(f);
  for (int i = 0; i < f; ++i) raw[i] = Quad{(*sol)[2 * i], (*sol)[2 * i + 1], 0, 0};
  UChar nu{std::move(raw)};
  SerreWeightU w(ctx, nu);
  if (bc_weight(ctx, w) != x) return std::nullopt;
  return w;
}

/// Exponent transport for the one-dimensional and Steinberg cases:
/// BC(psi_0 o det) has U(1)-exponent k mapped to (1 - q) k mod q^2 - 1.
inline ll bc_u1_char(const PrimeContext& ctx, ll k) {
  return ctx.mod_M((1 - ctx.q) * k);
}

}  // namespace swu2
