#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "swu2/context.hpp"
#include "swu2/errors.hpp"
#include "swu2/linalg.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// X*(T): one integer quadruple (a, b, c, d) per embedding, modulo the
// per-embedding relation (a,b,c,d) ~ (a+z, b-z, c-z, d+z). The canonical
// representative has d = 0, which makes equality a plain tuple comparison.
// ---------------------------------------------------------------------------

using Quad = std::array<ll, 4>;

class UChar {
 public:
  UChar() = default;
  explicit UChar(int f) : e_(f, Quad{0, 0, 0, 0}) {}
  explicit UChar(std::vector<Quad> raw) : e_(std::move(raw)) { canonicalize(); }

  int f() const { return int(e_.size()); }
  const Quad& operator[](int i) const { return e_[i]; }
  const std::vector<Quad>& entries() const { return e_; }

  /// Writes through raw entries; the canonical form is restored afterwards.
  void set(int i, const Quad& q) {
    e_[i] = q;
    canonicalize();
  }

  bool operator==(const UChar& o) const { return e_ == o.e_; }
  bool operator!=(const UChar& o) const { return !(*this == o); }
  bool operator<(const UChar& o) const { return e_ < o.e_; }

 private:
  void canonicalize() {
    for (auto& q : e_) {
      ll z = -q[3];
      q = Quad{q[0] + z, q[1] - z, q[2] - z, 0};
    }
  }
  std::vector<Quad> e_;
};

inline UChar operator+(const UChar& x, const UChar& y) {
  require(x.f() == y.f(), Err::LengthMismatch, "UChar +: length mismatch");
  std::vector<Quad> r(x.f());
  for (int i = 0; i < x.f(); ++i)
    for (int k = 0; k < 4; ++k) r[i][k] = x[i][k] + y[i][k];
  return UChar(std::move(r));
}

inline UChar operator-(const UChar& x, const UChar& y) {
  require(x.f() == y.f(), Err::LengthMismatch, "UChar -: length mismatch");
  std::vector<Quad> r(x.f());
  for (int i = 0; i < x.f(); ++i)
    for (int k = 0; k < 4; ++k) r[i][k] = x[i][k] - y[i][k];
  return UChar(std::move(r));
}

inline UChar operator*(ll c, const UChar& x) {
  std::vector<Quad> r(x.f());
  for (int i = 0; i < x.f(); ++i)
    for (int k = 0; k < 4; ++k) r[i][k] = c * x[i][k];
  return UChar(std::move(r));
}

inline UChar operator-(const UChar& x) { return -1 * x; }

/// The twisting element eta = (0,0,1,0) in every embedding.
inline UChar eta(int f) {
  std::vector<Quad> r(f, Quad{0, 0, 1, 0});
  return UChar(std::move(r));
}

/// Simple root alpha_i = (1,-1,0,0) in slot i.
inline UChar alpha(int f, int i) {
  std::vector<Quad> r(f, Quad{0, 0, 0, 0});
  r[i] = Quad{1, -1, 0, 0};
  return UChar(std::move(r));
}

// ---------------------------------------------------------------------------
// X_*(T): quadruples (a', b', c', d') with a' - b' = c' - d' per embedding.
// ---------------------------------------------------------------------------

class UCochar {
 public:
  UCochar() = default;
  explicit UCochar(std::vector<Quad> entries) : e_(std::move(entries)) {
    for (const auto& q : e_)
      require(q[0] - q[1] == q[2] - q[3], Err::PreconditionViolated,
              "UCochar: entries must satisfy a' - b' = c' - d'");
  }
  int f() const { return int(e_.size()); }
  const Quad& operator[](int i) const { return e_[i]; }

 private:
  std::vector<Quad> e_;
};

/// Simple coroot alpha_i^vee = (1,-1,1,-1) in slot i.
inline UCochar coroot(int f, int i) {
  std::vector<Quad> r(f, Quad{0, 0, 0, 0});
  r[i] = Quad{1, -1, 1, -1};
  return UCochar(std::move(r));
}

/// Perfect pairing <mu, lam> = sum_i a a' + b b' + c c' + d d'. Well defined
/// on the quotient because the relation vector pairs to zero with any
/// cocharacter.
inline ll pairing(const UChar& mu, const UCochar& lam) {
  require(mu.f() == lam.f(), Err::LengthMismatch, "pairing: length mismatch");
  ll s = 0;
  for (int i = 0; i < mu.f(); ++i)
    for (int k = 0; k < 4; ++k) s += mu[i][k] * lam[i][k];
  return s;
}

/// <mu, alpha_i^vee> for the canonical representative: a - b + c - d.
inline ll root_pairing(const UChar& mu, int i) {
  const Quad& q = mu[i];
  return q[0] - q[1] + q[2] - q[3];
}

// ---------------------------------------------------------------------------
// Weyl group {1, s}^f (or {1, s}^{2f} on the GL side): stored as 0/1 flags.
// ---------------------------------------------------------------------------

class WeylElt {
 public:
  WeylElt() = default;
  explicit WeylElt(int len) : s_(size_t(len < 0 ? 0 : len), 0) {}
  explicit WeylElt(std::vector<uint8_t> flags) : s_(std::move(flags)) {}

  int size() const { return int(s_.size()); }
  bool is_s(int i) const { return s_[i] != 0; }
  void set(int i, bool v) { s_[i] = v ? 1 : 0; }
  const std::vector<uint8_t>& flags() const { return s_; }

  bool operator==(const WeylElt& o) const { return s_ == o.s_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  bool operator<(const WeylElt& o) const { return s_ < o.s_; }

 private:
  std::vector<uint8_t> s_;
};

inline WeylElt weyl_identity(int len) { return WeylElt(len); }

inline WeylElt weyl_all_s(int len) {
  WeylElt w(len);
  for (int i = 0; i < len; ++i) w.set(i, true);
  return w;
}

inline WeylElt weyl_mul(const WeylElt& x, const WeylElt& y) {
  require(x.size() == y.size(), Err::LengthMismatch, "weyl_mul: length");
  WeylElt r(x.size());
  for (int i = 0; i < x.size(); ++i) r.set(i, x.is_s(i) != y.is_s(i));
  return r;
}

/// Frobenius on the Weyl group: cyclic shift right (slot 0 receives the
/// last slot; the Phi_2-twist is trivial on {1, s}).
inline WeylElt frobenius_weyl(const WeylElt& w) {
  int n = w.size();
  WeylElt r(n);
  for (int i = 0; i < n; ++i) r.set(i, w.is_s((i - 1 + n) % n));
  return r;
}

inline int weyl_length(const WeylElt& w) {
  int n = 0;
  for (int i = 0; i < w.size(); ++i) n += w.is_s(i) ? 1 : 0;
  return n;
}

inline WeylElt weyl_from_mask(int len, unsigned mask) {
  WeylElt w(len);
  for (int i = 0; i < len; ++i) w.set(i, (mask >> i) & 1u);
  return w;
}

/// Per-embedding reflection: s(mu) = mu - <mu, alpha^vee> alpha where w_i = s.
inline UChar weyl_act(const WeylElt& w, const UChar& mu) {
  require(w.size() == mu.f(), Err::LengthMismatch, "weyl_act: length mismatch");
  std::vector<Quad> r(mu.entries());
  for (int i = 0; i < mu.f(); ++i) {
    if (!w.is_s(i)) continue;
    ll t = root_pairing(mu, i);
    r[i][0] -= t;
    r[i][1] += t;
  }
  return UChar(std::move(r));
}

/// alpha_w = sum of alpha_i over slots with w_i = s.
inline UChar alpha_of(const WeylElt& w) {
  std::vector<Quad> r(w.size(), Quad{0, 0, 0, 0});
  for (int i = 0; i < w.size(); ++i)
    if (w.is_s(i)) r[i] = Quad{1, -1, 0, 0};
  return UChar(std::move(r));
}

// ---------------------------------------------------------------------------
// Frobenius and its unscaled inverse on X*(T).
// ---------------------------------------------------------------------------

inline Quad twist(const Quad& q) { return Quad{-q[1], -q[0], q[2], q[3]}; }

/// F on X*(T): shift left with the wrapped entry twisted, all scaled by p.
inline UChar frobenius(const PrimeContext& ctx, const UChar& mu) {
  int f = mu.f();
  std::vector<Quad> r(f);
  for (int i = 0; i + 1 < f; ++i)
    for (int k = 0; k < 4; ++k) r[i][k] = ctx.p * mu[i + 1][k];
  Quad t = twist(mu[0]);
  for (int k = 0; k < 4; ++k) r[f - 1][k] = ctx.p * t[k];
  return UChar(std::move(r));
}

/// pi = phi^{-1}: shift right with the wrapped entry twisted (no scaling).
/// F = p * pi^{-1} as operators.
inline UChar phi_inverse(const UChar& mu) {
  int f = mu.f();
  std::vector<Quad> r(f);
  for (int i = 1; i < f; ++i) r[i] = mu[i - 1];
  r[0] = twist(mu[f - 1]);
  return UChar(std::move(r));
}

/// phi itself: shift left with twist on the wrapped entry.
inline UChar phi(const UChar& mu) {
  int f = mu.f();
  std::vector<Quad> r(f);
  for (int i = 0; i + 1 < f; ++i) r[i] = mu[i + 1];
  r[f - 1] = twist(mu[0]);
  return UChar(std::move(r));
}

// ---------------------------------------------------------------------------
// Depth in the fundamental alcove.
// ---------------------------------------------------------------------------

/// Largest n with n < <mu + eta, alpha_i^vee> < p - n for all i; -1 when mu
/// is outside the open alcove.
inline int depth(const PrimeContext& ctx, const UChar& mu) {
  ll best = ctx.p;  // upper bound
  for (int i = 0; i < mu.f(); ++i) {
    ll t = root_pairing(mu, i) + 1;
    ll d = t - 1 < ctx.p - t - 1 ? t - 1 : ctx.p - t - 1;
    if (d < best) best = d;
  }
  return best < -1 ? -1 : int(best);
}

inline bool is_n_deep(const PrimeContext& ctx, const UChar& mu, int n) {
  return depth(ctx, mu) >= n;
}

// ---------------------------------------------------------------------------
// Class coordinates and the lattice (F - 1) X^0(T).
// ---------------------------------------------------------------------------

/// Canonical class coordinates: (a, b, c) per slot, d = 0 dropped.
inline std::vector<ll> to_coords(const UChar& mu) {
  std::vector<ll> v(size_t(mu.f()) * 3);
  for (int i = 0; i < mu.f(); ++i) {
    v[3 * i + 0] = mu[i][0];
    v[3 * i + 1] = mu[i][1];
    v[3 * i + 2] = mu[i][2];
  }
  return v;
}

inline UChar from_coords(int f, const std::vector<ll>& v) {
  std::vector<Quad> r(f);
  for (int i = 0; i < f; ++i) r[i] = Quad{v[3 * i], v[3 * i + 1], v[3 * i + 2], 0};
  return UChar(std::move(r));
}

/// Basis of the pairing-zero sublattice X^0(T) in class coordinates:
/// per slot, (1,0,-1,0) and (0,1,1,0).
inline std::vector<UChar> x0_basis(int f) {
  std::vector<UChar> out;
  for (int i = 0; i < f; ++i) {
    std::vector<Quad> a(f, Quad{0, 0, 0, 0}), b(f, Quad{0, 0, 0, 0});
    a[i] = Quad{1, 0, -1, 0};
    b[i] = Quad{0, 1, 1, 0};
    out.push_back(UChar(std::move(a)));
    out.push_back(UChar(std::move(b)));
  }
  return out;
}

inline IMat columns_from_uchars(const std::vector<UChar>& cols) {
  int n = cols.empty() ? 0 : cols[0].f() * 3;
  IMat m(n, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    auto v = to_coords(cols[j]);
    for (int r = 0; r < n; ++r) m.at(r, j) = v[r];
  }
  return m;
}

/// The lattice (F - 1) X^0(T) in class coordinates.
inline const Lattice& f_minus_1_x0_lattice(const PrimeContext& ctx) {
  std::string key =
      "x0:" + std::to_string(ctx.p) + ":" + std::to_string(ctx.f);
  return cached_lattice(key, [&]() {
    std::vector<UChar> gens;
    for (const auto& b : x0_basis(ctx.f)) gens.push_back(frobenius(ctx, b) - b);
    return Lattice(columns_from_uchars(gens));
  });
}

inline bool in_F_minus_1_X0(const PrimeContext& ctx, const UChar& mu) {
  return lattice_contains(f_minus_1_x0_lattice(ctx), to_coords(mu));
}

/// Image lattice of (F - w) on the full class lattice (used for the
/// Deligne-Lusztig equivalence solve).
inline const Lattice& f_minus_w_lattice(const PrimeContext& ctx,
                                        const WeylElt& w) {
  std::string key =
      "fw:" + std::to_string(ctx.p) + ":" + std::to_string(ctx.f) + ":";
  for (int i = 0; i < w.size(); ++i) key += w.is_s(i) ? '1' : '0';
  return cached_lattice(key, [&]() {
    std::vector<UChar> gens;
    int f = ctx.f;
    for (int i = 0; i < f; ++i) {
      for (const Quad& unit :
           {Quad{1, 0, 0, 0}, Quad{0, 1, 0, 0}, Quad{0, 0, 1, 0}}) {
        std::vector<Quad> raw(f, Quad{0, 0, 0, 0});
        raw[i] = unit;
        UChar e{std::move(raw)};
        gens.push_back(frobenius(ctx, e) - weyl_act(w, e));
      }
    }
    return Lattice(columns_from_uchars(gens));
  });
}

// ---------------------------------------------------------------------------
// Extended affine Weyl group elements t_mu w and the dot action.
// ---------------------------------------------------------------------------

struct AffineElt {
  UChar t;
  WeylElt w;
};

/// (t_mu w)(t_nu v) = t_{mu + w(nu)} (w v).
inline AffineElt affine_mul(const AffineElt& x, const AffineElt& y) {
  return AffineElt{x.t + weyl_act(x.w, y.t), weyl_mul(x.w, y.w)};
}

inline AffineElt affine_inverse(const AffineElt& x) {
  // (t_mu w)^{-1} = t_{-w^{-1}(mu)} w^{-1}, and w is an involution.
  return AffineElt{-weyl_act(x.w, x.t), x.w};
}

/// Dot action centered at -eta: (t_xi w) . mu = scale*xi + w(mu + eta) - eta.
/// With scale = p the translation part is interpreted p-dilated, so that
/// w t_{-p nu} stored as {t: -w(nu), w} acts by w(mu + eta - p nu) - eta.
inline UChar dot_act(const AffineElt& x, const UChar& mu, ll scale) {
  require(scale == 1 || scale == 0 || scale > 0, Err::PreconditionViolated,
          "dot_act: scale");
  int f = mu.f();
  return scale * x.t + weyl_act(x.w, mu + eta(f)) - eta(f);
}

/// Membership test for tilde{W}_+: z t_{-p nu} preserves the base alcove iff
/// <nu_i, alpha^vee> equals 1 exactly on the slots where z_i = s.
inline bool wplus_member(const WeylElt& z, const UChar& nu) {
  require(z.size() == nu.f(), Err::LengthMismatch, "wplus_member: length");
  for (int i = 0; i < nu.f(); ++i) {
    ll want = z.is_s(i) ? 1 : 0;
    if (root_pairing(nu, i) != want) return false;
  }
  return true;
}

/// True when every entry is of the form (a, b, 0, 0) in canonical form,
/// i.e. the center iota(O_K^x) acts trivially through this character.
inline bool is_descended(const UChar& mu) {
  for (int i = 0; i < mu.f(); ++i)
    if (mu[i][2] != 0) return false;
  return true;
}

/// sum_i (a_i + b_i) p^i, the exponent functional behind central characters.
inline ll ab_sum_exponent(const PrimeContext& ctx, const UChar& mu) {
  ll s = 0, pw = 1;
  for (int i = 0; i < mu.f(); ++i) {
    s += (mu[i][0] + mu[i][1]) * pw;
    pw *= ctx.p;
  }
  return s;
}

/// sum_i c_i p^i on canonical representatives (the iota-central exponent).
inline ll c_sum_exponent(const PrimeContext& ctx, const UChar& mu) {
  ll s = 0, pw = 1;
  for (int i = 0; i < mu.f(); ++i) {
    s += mu[i][2] * pw;
    pw *= ctx.p;
  }
  return s;
}

}  // namespace swu2
