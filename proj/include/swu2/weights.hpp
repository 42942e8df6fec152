#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "swu2/lattice.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// Serre weights of the unitary group: p-restricted characters modulo
// (F - 1) X^0(T), stored as the canonical coset representative.
// ---------------------------------------------------------------------------

class SerreWeightU {
 public:
  SerreWeightU() = default;
  SerreWeightU(const PrimeContext& ctx, const UChar& mu) : f_(ctx.f) {
    for (int i = 0; i < mu.f(); ++i) {
      ll t = root_pairing(mu, i);
      require(0 <= t && t <= ctx.p - 1, Err::NotPRestricted,
              "SerreWeightU: character is not p-restricted");
    }
    canon_ = lattice_canonical(f_minus_1_x0_lattice(ctx), to_coords(mu));
  }

  int f() const { return f_; }
  const std::vector<ll>& canon() const { return canon_; }
  UChar rep() const { return from_coords(f_, canon_); }

  bool operator==(const SerreWeightU& o) const { return canon_ == o.canon_; }
  bool operator!=(const SerreWeightU& o) const { return !(*this == o); }
  bool operator<(const SerreWeightU& o) const { return canon_ < o.canon_; }

 private:
  int f_ = 0;
  std::vector<ll> canon_;
};

inline SerreWeightU weight(const PrimeContext& ctx, const UChar& mu) {
  return SerreWeightU(ctx, mu);
}

inline bool weights_equal(const SerreWeightU& x, const SerreWeightU& y) {
  return x == y;
}

/// Weight depth: class invariant since (F - 1) X^0 does not move pairings.
inline int weight_depth(const PrimeContext& ctx, const SerreWeightU& w) {
  return depth(ctx, w.rep());
}

/// A representative of the class with c = d = 0 entries, when one exists.
/// Unknowns: a shift inside the class lattice that zeroes the c coordinates.
inline std::optional<UChar> descended_rep(const PrimeContext& ctx,
                                          const SerreWeightU& w) {
  const Lattice& lat = f_minus_1_x0_lattice(ctx);
  // Solve: c-rows of (canon + lat * y) = 0.
  int f = ctx.f;
  const Lattice& crows_lat = cached_lattice(
      "x0crows:" + std::to_string(ctx.p) + ":" + std::to_string(ctx.f), [&]() {
        IMat crows(f, lat.gens.cols);
        for (int i = 0; i < f; ++i)
          for (int j = 0; j < lat.gens.cols; ++j)
            crows.at(i, j) = lat.gens.at(3 * i + 2, j);
        return Lattice(crows);
      });
  std::vector<ll> target(f);
  for (int i = 0; i < f; ++i) target[i] = -w.canon()[3 * i + 2];
  auto y = lattice_solve(crows_lat, target);
  if (!y) return std::nullopt;
  std::vector<ll> coords = w.canon();
  for (int j = 0; j < lat.gens.cols; ++j)
    for (int r = 0; r < lat.gens.rows; ++r)
      coords[r] += ll(lat.gens.at(r, j)) * (*y)[j];
  UChar rep = from_coords(f, coords);
  if (!is_descended(rep)) return std::nullopt;
  return rep;
}

/// Central character exponent mod q + 1 (descended classes only).
inline ll central_character(const PrimeContext& ctx, const SerreWeightU& w) {
  require(descended_rep(ctx, w).has_value(), Err::NotDescended,
          "central_character: weight has no descended representative");
  return ctx.mod_q_plus_1(ab_sum_exponent(ctx, w.rep()));
}

// ---------------------------------------------------------------------------
// Deligne-Lusztig representation data R_w(mu) on the unitary side.
// ---------------------------------------------------------------------------

struct DLRepU {
  WeylElt w;
  UChar mu;  // the character of R_w(mu), stored as given

  bool operator==(const DLRepU& o) const { return w == o.w && mu == o.mu; }
  bool operator<(const DLRepU& o) const {
    if (w != o.w) return w < o.w;
    return mu < o.mu;
  }
};

/// Depth of the type presentation: min over slots of the alcove margins of
/// <mu, alpha_i^vee>; a presentation R_w(nu + eta) with nu n-deep has
/// type_depth n.
inline int type_depth(const PrimeContext& ctx, const DLRepU& r) {
  return depth(ctx, r.mu - eta(r.mu.f()));
}

inline ll central_character(const PrimeContext& ctx, const DLRepU& r) {
  require(is_descended(r.mu), Err::NotDescended,
          "central_character: type is not descended");
  return ctx.mod_q_plus_1(ab_sum_exponent(ctx, r.mu));
}

// JH constants rho_w, eps_w, gamma_w, rho of the decomposition formula.
inline UChar rho_of(const WeylElt& w) {
  std::vector<Quad> r(w.size(), Quad{0, 0, 0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (w.is_s(i)) r[i] = Quad{1, 0, 0, 0};
  return UChar(std::move(r));
}

inline UChar eps_of(const WeylElt& w) {
  std::vector<Quad> r(w.size(), Quad{0, 0, 0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (w.is_s(i)) r[i] = Quad{0, 1, 0, 0};
  return UChar(std::move(r));
}

inline UChar gamma_of(const WeylElt& w) {
  std::vector<Quad> r(w.size(), Quad{0, 0, 0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (!w.is_s(i)) r[i] = Quad{1, 1, 0, 0};
  return UChar(std::move(r));
}

inline UChar rho_full(int f) {
  std::vector<Quad> r(f, Quad{1, 0, 0, 0});
  return UChar(std::move(r));
}

/// The character of the w'-indexed Jordan-Hoelder factor of R_w(mu):
///   p gamma_{w'} + w'(mu - w pi(eps_{s w'})) + p rho_{w'} - pi(rho).
inline UChar jh_factor_char(const PrimeContext& ctx, const DLRepU& r,
                            const WeylElt& wp) {
  int f = ctx.f;
  WeylElt swp = weyl_mul(weyl_all_s(f), wp);
  UChar inner = r.mu - weyl_act(r.w, phi_inverse(eps_of(swp)));
  return ctx.p * gamma_of(wp) + weyl_act(wp, inner) + ctx.p * rho_of(wp) -
         phi_inverse(rho_full(f));
}

/// Jordan-Hoelder factors of the mod-p reduction: 2^f pairwise distinct
/// weight classes, or an error when the depth hypothesis fails.
inline std::vector<SerreWeightU> jh_factors(const PrimeContext& ctx,
                                            const DLRepU& r) {
  require(r.w.size() == ctx.f && r.mu.f() == ctx.f, Err::LengthMismatch,
          "jh_factors: rank mismatch");
  require(type_depth(ctx, r) >= 1, Err::DepthTooSmall,
          "jh_factors: mu - eta must be 1-deep");
  std::vector<SerreWeightU> out;
  for (unsigned mask = 0; mask < (1u << ctx.f); ++mask) {
    WeylElt wp = weyl_from_mask(ctx.f, mask);
    out.push_back(SerreWeightU(ctx, jh_factor_char(ctx, r, wp)));
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i + 1 < out.size(); ++i)
    require(out[i] != out[i + 1], Err::GenericityViolation,
            "jh_factors: factors are not pairwise distinct");
  return out;
}

inline bool jh_contains(const std::vector<SerreWeightU>& jh,
                        const SerreWeightU& w) {
  return std::binary_search(jh.begin(), jh.end(), w);
}

/// beta(R_w(mu)) = R_{s w}(s(mu - eta) + (p - 1) eta), for mu p-restricted.
inline DLRepU beta(const PrimeContext& ctx, const DLRepU& r) {
  int f = ctx.f;
  for (int i = 0; i < f; ++i) {
    ll t = root_pairing(r.mu, i);
    require(0 <= t && t <= ctx.p - 1, Err::NotPRestricted,
            "beta: character is not p-restricted");
  }
  WeylElt sbar = weyl_all_s(f);
  return DLRepU{weyl_mul(sbar, r.w),
                weyl_act(sbar, r.mu - eta(f)) + (ctx.p - 1) * eta(f)};
}

/// Isomorphism test via the Deligne-Lusztig equivalence: enumerate w' and
/// solve the lattice equation (F - w2)(mu') = mu2 - w'(mu1) exactly.
inline bool dl_isomorphic(const PrimeContext& ctx, const DLRepU& r1,
                          const DLRepU& r2) {
  int f = ctx.f;
  require(r1.w.size() == f && r2.w.size() == f, Err::LengthMismatch,
          "dl_isomorphic: rank mismatch");
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    WeylElt wp = weyl_from_mask(f, mask);
    WeylElt conj = weyl_mul(weyl_mul(wp, r1.w), frobenius_weyl(wp));
    if (conj != r2.w) continue;
    UChar delta = r2.mu - weyl_act(wp, r1.mu);
    if (lattice_contains(f_minus_w_lattice(ctx, r2.w), to_coords(delta)))
      return true;
  }
  return false;
}

/// Rewrites a type with trivial central iota-action so that its character
/// has c = d = 0 entries, via R_w(mu) ~ R_w(mu + (F - w) mu').
inline DLRepU descend_to_u2(const PrimeContext& ctx, const DLRepU& r) {
  if (is_descended(r.mu)) return r;
  require(ctx.mod_q_minus_1(c_sum_exponent(ctx, r.mu)) == 0,
          Err::NotCentrallyTrivial,
          "descend_to_u2: central iota-action is nontrivial");
  const Lattice& lat = f_minus_w_lattice(ctx, r.w);
  int f = ctx.f;
  std::string key = "fwcrows:" + std::to_string(ctx.p) + ":" +
                    std::to_string(ctx.f) + ":";
  for (int i = 0; i < r.w.size(); ++i) key += r.w.is_s(i) ? '1' : '0';
  const Lattice& crows_lat = cached_lattice(key, [&]() {
    IMat crows(f, lat.gens.cols);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < lat.gens.cols; ++j)
        crows.at(i, j) = lat.gens.at(3 * i + 2, j);
    return Lattice(crows);
  });
  std::vector<ll> target(f);
  for (int i = 0; i < f; ++i) target[i] = -r.mu[i][2];
  auto y = lattice_solve(crows_lat, target);
  require(y.has_value(), Err::ConsistencyFailure,
          "descend_to_u2: lattice solve failed despite central triviality");
  std::vector<ll> coords = to_coords(r.mu);
  for (int j = 0; j < lat.gens.cols; ++j)
    for (int rr = 0; rr < lat.gens.rows; ++rr)
      coords[rr] += ll(lat.gens.at(rr, j)) * (*y)[j];
  DLRepU out{r.w, from_coords(f, coords)};
  require(is_descended(out.mu), Err::ConsistencyFailure,
          "descend_to_u2: result not descended");
  return out;
}

// ---------------------------------------------------------------------------
// GL side: X*(T') has 2f embeddings with plain integer pairs, no quotient.
// ---------------------------------------------------------------------------

using Pair = std::array<ll, 2>;

class GLChar {
 public:
  GLChar() = default;
  explicit GLChar(int two_f) : e_(two_f, Pair{0, 0}) {}
  explicit GLChar(std::vector<Pair> entries) : e_(std::move(entries)) {}

  int size() const { return int(e_.size()); }
  const Pair& operator[](int i) const { return e_[i]; }
  void set(int i, const Pair& q) { e_[i] = q; }
  const std::vector<Pair>& entries() const { return e_; }

  bool operator==(const GLChar& o) const { return e_ == o.e_; }
  bool operator!=(const GLChar& o) const { return !(*this == o); }
  bool operator<(const GLChar& o) const { return e_ < o.e_; }

 private:
  std::vector<Pair> e_;
};

inline GLChar operator+(const GLChar& x, const GLChar& y) {
  require(x.size() == y.size(), Err::LengthMismatch, "GLChar +");
  std::vector<Pair> r(x.size());
  for (int i = 0; i < x.size(); ++i)
    r[i] = Pair{x[i][0] + y[i][0], x[i][1] + y[i][1]};
  return GLChar(std::move(r));
}

inline GLChar operator-(const GLChar& x, const GLChar& y) {
  require(x.size() == y.size(), Err::LengthMismatch, "GLChar -");
  std::vector<Pair> r(x.size());
  for (int i = 0; i < x.size(); ++i)
    r[i] = Pair{x[i][0] - y[i][0], x[i][1] - y[i][1]};
  return GLChar(std::move(r));
}

inline GLChar operator*(ll c, const GLChar& x) {
  std::vector<Pair> r(x.size());
  for (int i = 0; i < x.size(); ++i) r[i] = Pair{c * x[i][0], c * x[i][1]};
  return GLChar(std::move(r));
}

inline ll root_pairing_gl(const GLChar& x, int i) { return x[i][0] - x[i][1]; }

/// rho' = (1, 0) in every embedding.
inline GLChar rho_prime(int two_f) {
  std::vector<Pair> r(two_f, Pair{1, 0});
  return GLChar(std::move(r));
}

inline GLChar weyl_act_gl(const WeylElt& w, const GLChar& x) {
  require(w.size() == x.size(), Err::LengthMismatch, "weyl_act_gl");
  std::vector<Pair> r(x.entries());
  for (int i = 0; i < x.size(); ++i)
    if (w.is_s(i)) std::swap(r[i][0], r[i][1]);
  return GLChar(std::move(r));
}

/// F' on X*(T'): plain shift left scaled by p.
inline GLChar frobenius_gl(const PrimeContext& ctx, const GLChar& x) {
  int n = x.size();
  std::vector<Pair> r(n);
  for (int i = 0; i < n; ++i)
    r[i] = Pair{ctx.p * x[(i + 1) % n][0], ctx.p * x[(i + 1) % n][1]};
  return GLChar(std::move(r));
}

/// pi' = (F'/p)^{-1}: plain shift right.
inline GLChar phi_inverse_gl(const GLChar& x) {
  int n = x.size();
  std::vector<Pair> r(n);
  for (int i = 0; i < n; ++i) r[i] = x[(i - 1 + n) % n];
  return GLChar(std::move(r));
}

inline int depth_gl(const PrimeContext& ctx, const GLChar& x) {
  ll best = ctx.p;
  for (int i = 0; i < x.size(); ++i) {
    ll t = root_pairing_gl(x, i) + 1;
    ll d = t - 1 < ctx.p - t - 1 ? t - 1 : ctx.p - t - 1;
    if (d < best) best = d;
  }
  return best < -1 ? -1 : int(best);
}

inline std::vector<ll> to_coords_gl(const GLChar& x) {
  std::vector<ll> v(size_t(x.size()) * 2);
  for (int i = 0; i < x.size(); ++i) {
    v[2 * i] = x[i][0];
    v[2 * i + 1] = x[i][1];
  }
  return v;
}

inline GLChar from_coords_gl(int two_f, const std::vector<ll>& v) {
  std::vector<Pair> r(two_f);
  for (int i = 0; i < two_f; ++i) r[i] = Pair{v[2 * i], v[2 * i + 1]};
  return GLChar(std::move(r));
}

inline const Lattice& f_minus_1_x0_lattice_gl(const PrimeContext& ctx) {
  std::string key =
      "x0gl:" + std::to_string(ctx.p) + ":" + std::to_string(ctx.f);
  return cached_lattice(key, [&]() {
    int n = 2 * ctx.f;
    std::vector<GLChar> gens;
    for (int i = 0; i < n; ++i) {
      GLChar e(n);
      e.set(i, Pair{1, 1});
      gens.push_back(frobenius_gl(ctx, e) - e);
    }
    IMat m(2 * n, int(gens.size()));
    for (int j = 0; j < int(gens.size()); ++j) {
      auto v = to_coords_gl(gens[j]);
      for (int r = 0; r < 2 * n; ++r) m.at(r, j) = v[r];
    }
    return Lattice(m);
  });
}

inline const Lattice& f_minus_w_lattice_gl(const PrimeContext& ctx,
                                           const WeylElt& w) {
  std::string key =
      "fwgl:" + std::to_string(ctx.p) + ":" + std::to_string(ctx.f) + ":";
  for (int i = 0; i < w.size(); ++i) key += w.is_s(i) ? '1' : '0';
  return cached_lattice(key, [&]() {
    int n = 2 * ctx.f;
    IMat m(2 * n, 2 * n);
    int col = 0;
    for (int i = 0; i < n; ++i) {
      for (const Pair& unit : {Pair{1, 0}, Pair{0, 1}}) {
        GLChar e(n);
        e.set(i, unit);
        auto v = to_coords_gl(frobenius_gl(ctx, e) - weyl_act_gl(w, e));
        for (int r = 0; r < 2 * n; ++r) m.at(r, col) = v[r];
        ++col;
      }
    }
    return Lattice(m);
  });
}

class SerreWeightGL {
 public:
  SerreWeightGL() = default;
  SerreWeightGL(const PrimeContext& ctx, const GLChar& mu) : n_(2 * ctx.f) {
    for (int i = 0; i < mu.size(); ++i) {
      ll t = root_pairing_gl(mu, i);
      require(0 <= t && t <= ctx.p - 1, Err::NotPRestricted,
              "SerreWeightGL: character is not p-restricted");
    }
    canon_ = lattice_canonical(f_minus_1_x0_lattice_gl(ctx), to_coords_gl(mu));
  }

  int size() const { return n_; }
  const std::vector<ll>& canon() const { return canon_; }
  GLChar rep() const { return from_coords_gl(n_, canon_); }

  bool operator==(const SerreWeightGL& o) const { return canon_ == o.canon_; }
  bool operator!=(const SerreWeightGL& o) const { return !(*this == o); }
  bool operator<(const SerreWeightGL& o) const { return canon_ < o.canon_; }

 private:
  int n_ = 0;
  std::vector<ll> canon_;
};

inline SerreWeightGL weight_gl(const PrimeContext& ctx, const GLChar& mu) {
  return SerreWeightGL(ctx, mu);
}

struct DLRepGL {
  WeylElt w;   // length 2f
  GLChar mu;   // length 2f

  bool operator==(const DLRepGL& o) const { return w == o.w && mu == o.mu; }
};

inline int type_depth_gl(const PrimeContext& ctx, const DLRepGL& r) {
  return depth_gl(ctx, r.mu - rho_prime(2 * ctx.f));
}

inline GLChar rho_of_gl(const WeylElt& w) {
  std::vector<Pair> r(w.size(), Pair{0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (w.is_s(i)) r[i] = Pair{1, 0};
  return GLChar(std::move(r));
}

inline GLChar eps_of_gl(const WeylElt& w) {
  std::vector<Pair> r(w.size(), Pair{0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (w.is_s(i)) r[i] = Pair{0, 1};
  return GLChar(std::move(r));
}

inline GLChar gamma_of_gl(const WeylElt& w) {
  std::vector<Pair> r(w.size(), Pair{0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (!w.is_s(i)) r[i] = Pair{1, 1};
  return GLChar(std::move(r));
}

inline GLChar jh_factor_char_gl(const PrimeContext& ctx, const DLRepGL& r,
                                const WeylElt& wp) {
  int n = 2 * ctx.f;
  WeylElt swp = weyl_mul(weyl_all_s(n), wp);
  GLChar inner = r.mu - weyl_act_gl(r.w, phi_inverse_gl(eps_of_gl(swp)));
  return ctx.p * gamma_of_gl(wp) + weyl_act_gl(wp, inner) +
         ctx.p * rho_of_gl(wp) - rho_prime(n);
}

inline std::vector<SerreWeightGL> jh_factors_gl(const PrimeContext& ctx,
                                                const DLRepGL& r) {
  int n = 2 * ctx.f;
  require(r.w.size() == n && r.mu.size() == n, Err::LengthMismatch,
          "jh_factors_gl: rank mismatch");
  require(type_depth_gl(ctx, r) >= 1, Err::DepthTooSmall,
          "jh_factors_gl: mu - rho' must be 1-deep");
  std::vector<SerreWeightGL> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    WeylElt wp = weyl_from_mask(n, mask);
    out.push_back(SerreWeightGL(ctx, jh_factor_char_gl(ctx, r, wp)));
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i + 1 < out.size(); ++i)
    require(out[i] != out[i + 1], Err::GenericityViolation,
            "jh_factors_gl: factors are not pairwise distinct");
  return out;
}

inline bool jh_contains_gl(const std::vector<SerreWeightGL>& jh,
                           const SerreWeightGL& w) {
  return std::binary_search(jh.begin(), jh.end(), w);
}

inline std::vector<SerreWeightGL> jh_intersection_gl(
    const std::vector<SerreWeightGL>& a, const std::vector<SerreWeightGL>& b) {
  std::vector<SerreWeightGL> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline DLRepGL beta_gl(const PrimeContext& ctx, const DLRepGL& r) {
  int n = 2 * ctx.f;
  for (int i = 0; i < n; ++i) {
    ll t = root_pairing_gl(r.mu, i);
    require(0 <= t && t <= ctx.p - 1, Err::NotPRestricted,
            "beta_gl: character is not p-restricted");
  }
  WeylElt sbar = weyl_all_s(n);
  return DLRepGL{weyl_mul(sbar, r.w),
                 weyl_act_gl(sbar, r.mu - rho_prime(n)) +
                     (ctx.p - 1) * rho_prime(n)};
}

inline bool dl_isomorphic_gl(const PrimeContext& ctx, const DLRepGL& r1,
                             const DLRepGL& r2) {
  int n = 2 * ctx.f;
  require(r1.w.size() == n && r2.w.size() == n, Err::LengthMismatch,
          "dl_isomorphic_gl: rank mismatch");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    WeylElt wp = weyl_from_mask(n, mask);
    WeylElt conj = weyl_mul(weyl_mul(wp, r1.w), frobenius_weyl(wp));
    if (conj != r2.w) continue;
    GLChar delta = r2.mu - weyl_act_gl(wp, r1.mu);
    if (lattice_contains(f_minus_w_lattice_gl(ctx, r2.w), to_coords_gl(delta)))
      return true;
  }
  return false;
}

}  // namespace swu2
