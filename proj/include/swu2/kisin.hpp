#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "swu2/intersect.hpp"
#include "swu2/lparams.hpp"

namespace swu2 {

// ---------------------------------------------------------------------------
// Coefficient field F_{p^deg}, deg <= 3 (the no-root irreducibility test is
// valid up to cubics; cell classification only ever needs vanishing
// patterns, so the prime field is the default).
// ---------------------------------------------------------------------------

class GF {
 public:
  using Elem = std::vector<ll>;  // coefficients in [0, p), length = deg

  GF() = default;
  GF(ll p, int deg = 1) : p_(p), deg_(deg) {
    require(deg >= 1 && deg <= 3, Err::PreconditionViolated,
            "GF: supported extension degrees are 1..3");
    if (deg_ > 1) find_irreducible();
  }

  ll p() const { return p_; }
  int deg() const { return deg_; }

  Elem zero() const { return Elem(deg_, 0); }
  Elem one() const {
    Elem e(deg_, 0);
    e[0] = 1;
    return e;
  }
  Elem from_int(ll v) const {
    Elem e(deg_, 0);
    e[0] = PrimeContext::mod(v, p_);
    return e;
  }

  bool is_zero(const Elem& a) const {
    for (ll v : a)
      if (v != 0) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = PrimeContext::mod(a[i] - b[i], p_);
    return r;
  }
  Elem neg(const Elem& a) const { return sub(zero(), a); }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<ll> prod(2 * deg_ - 1, 0);
    for (int i = 0; i < deg_; ++i)
      for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    // reduce modulo the monic irreducible
    for (int d = 2 * deg_ - 2; d >= deg_; --d) {
      ll c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < deg_; ++i)
        prod[d - deg_ + i] = PrimeContext::mod(prod[d - deg_ + i] - c * irred_[i], p_);
    }
    Elem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = prod[i];
    return r;
  }

  Elem inv(const Elem& a) const {
    require(!is_zero(a), Err::ZeroUnit, "GF: inverse of zero");
    // a^(p^deg - 2)
    ll e = 1;
    for (int i = 0; i < deg_; ++i) e *= p_;
    e -= 2;
    Elem base = a, acc = one();
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

 private:
  void find_irreducible() {
    // monic x^deg + sum irred_[i] x^i with no roots in F_p (deg <= 3)
    std::vector<ll> c(deg_, 0);
    while (true) {
      bool has_root = false;
      for (ll x = 0; x < p_ && !has_root; ++x) {
        ll v = 1;
        for (int i = 0; i < deg_; ++i) v = v * x % p_;
        for (int i = 0; i < deg_; ++i) v = (v + c[i] * pow_mod(x, i)) % p_;
        has_root = v == 0;
      }
      if (!has_root) {
        irred_ = c;
        return;
      }
      int i = 0;
      while (i < deg_ && ++c[i] == p_) {
        c[i] = 0;
        ++i;
      }
      require(i < deg_, Err::ConsistencyFailure, "GF: no irreducible found");
    }
  }

  ll pow_mod(ll x, int e) const {
    ll v = 1;
    for (int i = 0; i < e; ++i) v = v * x % p_;
    return v;
  }

  ll p_ = 0;
  int deg_ = 1;
  std::vector<ll> irred_;  // low-degree coefficients of the monic irreducible
};

// ---------------------------------------------------------------------------
// Truncated polynomials in v over the coefficient field.
// ---------------------------------------------------------------------------

struct KisinContext {
  GF field;
  int N = 8;  // truncation degree: coefficients of v^0 .. v^N are tracked

  KisinContext() = default;
  KisinContext(const PrimeContext& ctx, int deg = 1, int trunc = 8)
      : field(ctx.p, deg), N(trunc) {
    require(trunc >= 2, Err::TruncationTooShort,
            "KisinContext: truncation degree must be at least 2");
  }
};

struct VPoly {
  std::vector<GF::Elem> c;  // lowest degree first, length N + 1
};

inline VPoly vp_zero(const KisinContext& k) {
  return VPoly{std::vector<GF::Elem>(k.N + 1, k.field.zero())};
}

inline VPoly vp_const(const KisinContext& k, const GF::Elem& e) {
  VPoly r = vp_zero(k);
  r.c[0] = e;
  return r;
}

inline VPoly vp_monomial(const KisinContext& k, int d, const GF::Elem& e) {
  VPoly r = vp_zero(k);
  require(d <= k.N, Err::TruncationTooShort, "vp_monomial: degree too large");
  r.c[d] = e;
  return r;
}

inline VPoly vp_add(const KisinContext& k, const VPoly& a, const VPoly& b) {
  VPoly r = vp_zero(k);
  for (int i = 0; i <= k.N; ++i) r.c[i] = k.field.add(a.c[i], b.c[i]);
  return r;
}

inline VPoly vp_sub(const KisinContext& k, const VPoly& a, const VPoly& b) {
  VPoly r = vp_zero(k);
  for (int i = 0; i <= k.N; ++i) r.c[i] = k.field.sub(a.c[i], b.c[i]);
  return r;
}

inline VPoly vp_neg(const KisinContext& k, const VPoly& a) {
  return vp_sub(k, vp_zero(k), a);
}

inline VPoly vp_mul(const KisinContext& k, const VPoly& a, const VPoly& b) {
  VPoly r = vp_zero(k);
  for (int i = 0; i <= k.N; ++i) {
    if (k.field.is_zero(a.c[i])) continue;
    for (int j = 0; i + j <= k.N; ++j) {
      if (k.field.is_zero(b.c[j])) continue;
      r.c[i + j] = k.field.add(r.c[i + j], k.field.mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

/// v-adic valuation within the truncation window; -1 when indistinguishable
/// from zero.
inline int vp_val(const KisinContext& k, const VPoly& a) {
  for (int i = 0; i <= k.N; ++i)
    if (!k.field.is_zero(a.c[i])) return i;
  return -1;
}

inline bool vp_equal(const KisinContext& k, const VPoly& a, const VPoly& b) {
  for (int i = 0; i <= k.N; ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

/// Inverse of a unit series, truncated at degree N.
inline VPoly vp_unit_inverse(const KisinContext& k, const VPoly& u) {
  require(!k.field.is_zero(u.c[0]), Err::ZeroUnit,
          "vp_unit_inverse: constant term vanishes");
  VPoly r = vp_zero(k);
  GF::Elem c0inv = k.field.inv(u.c[0]);
  r.c[0] = c0inv;
  for (int i = 1; i <= k.N; ++i) {
    GF::Elem acc = k.field.zero();
    for (int j = 1; j <= i; ++j)
      acc = k.field.add(acc, k.field.mul(u.c[j], r.c[i - j]));
    r.c[i] = k.field.neg(k.field.mul(c0inv, acc));
  }
  return r;
}

// ---------------------------------------------------------------------------
// 2x2 matrices over the truncated series ring, and Iwahori cells.
// ---------------------------------------------------------------------------

struct LaurentMat {
  std::array<VPoly, 4> e;  // row major

  const VPoly& at(int r, int c) const { return e[2 * r + c]; }
  VPoly& at(int r, int c) { return e[2 * r + c]; }
};

inline LaurentMat lm_zero(const KisinContext& k) {
  return LaurentMat{{vp_zero(k), vp_zero(k), vp_zero(k), vp_zero(k)}};
}

inline VPoly lm_det(const KisinContext& k, const LaurentMat& m) {
  return vp_sub(k, vp_mul(k, m.at(0, 0), m.at(1, 1)),
                vp_mul(k, m.at(0, 1), m.at(1, 0)));
}

inline bool lm_equal(const KisinContext& k, const LaurentMat& a,
                     const LaurentMat& b) {
  for (int i = 0; i < 4; ++i)
    if (!vp_equal(k, a.e[i], b.e[i])) return false;
  return true;
}

inline LaurentMat lm_scale(const KisinContext& k, const GF::Elem& c,
                           const LaurentMat& a) {
  LaurentMat r = lm_zero(k);
  for (int i = 0; i < 4; ++i) r.e[i] = vp_mul(k, vp_const(k, c), a.e[i]);
  return r;
}

enum class Cell { t, tp, w };

inline const char* cell_name(Cell c) {
  switch (c) {
    case Cell::t: return "t";
    case Cell::tp: return "tp";
    case Cell::w: return "w";
  }
  return "?";
}

using ShapeVec = std::vector<Cell>;

/// The mu-admissible set for the minuscule cocharacter (1, 0): the three
/// elements t = diag(v, 1), t' = diag(1, v), w = antidiag(1, v).
inline std::vector<std::pair<Cell, LaurentMat>> admissible_set(
    const KisinContext& k) {
  GF::Elem one = k.field.one();
  LaurentMat t = lm_zero(k), tp = lm_zero(k), w = lm_zero(k);
  t.at(0, 0) = vp_monomial(k, 1, one);
  t.at(1, 1) = vp_const(k, one);
  tp.at(0, 0) = vp_const(k, one);
  tp.at(1, 1) = vp_monomial(k, 1, one);
  w.at(0, 1) = vp_const(k, one);
  w.at(1, 0) = vp_monomial(k, 1, one);
  return {{Cell::t, t}, {Cell::tp, tp}, {Cell::w, w}};
}

/// Iwahori cell of an admissible matrix: decided by the vanishing pattern of
/// the reduction mod v, with the height condition val det = 1 forcing
/// exactly one branch.
inline Cell classify_cell(const KisinContext& k, const LaurentMat& A) {
  require(vp_val(k, lm_det(k, A)) == 1, Err::WrongDeterminantValuation,
          "classify_cell: determinant valuation is not 1");
  require(k.field.is_zero(A.at(1, 0).c[0]), Err::NotAdmissible,
          "classify_cell: lower-left entry has a unit constant term");
  if (!k.field.is_zero(A.at(0, 0).c[0])) return Cell::tp;
  if (!k.field.is_zero(A.at(1, 1).c[0])) return Cell::t;
  if (!k.field.is_zero(A.at(0, 1).c[0])) return Cell::w;
  fail(Err::NotAdmissible, "classify_cell: matrix vanishes mod v");
}

enum class MatMode { residue, deformed };

struct CellCoeffs {
  GF::Elem c11, c12, c21, c22;
};

/// The matrix of the stated degree pattern for a cell, in residue or
/// deformed (mod-p specialized) form. Starred coefficients must be units,
/// and the deformed antidiagonal cell must satisfy c11 c22 = 0.
inline LaurentMat generic_matrix(const KisinContext& k, Cell cell,
                                 const CellCoeffs& c, MatMode mode) {
  LaurentMat A = lm_zero(k);
  switch (cell) {
    case Cell::t:
      require(!k.field.is_zero(c.c11) && !k.field.is_zero(c.c22), Err::ZeroUnit,
              "generic_matrix: starred coefficient is zero");
      A.at(0, 0) = vp_monomial(k, 1, c.c11);
      A.at(1, 0) = vp_monomial(k, 1, c.c21);
      A.at(1, 1) = vp_const(k, c.c22);
      break;
    case Cell::tp:
      require(!k.field.is_zero(c.c11) && !k.field.is_zero(c.c22), Err::ZeroUnit,
              "generic_matrix: starred coefficient is zero");
      A.at(0, 0) = vp_const(k, c.c11);
      A.at(0, 1) = vp_const(k, c.c12);
      A.at(1, 1) = vp_monomial(k, 1, c.c22);
      break;
    case Cell::w:
      require(!k.field.is_zero(c.c12) && !k.field.is_zero(c.c21), Err::ZeroUnit,
              "generic_matrix: starred coefficient is zero");
      if (mode == MatMode::deformed) {
        // mod-p form of the Table relation; over the residue field the
        // diagonal deformation coordinates themselves specialize to zero
        require(k.field.is_zero(k.field.mul(c.c11, c.c22)),
                Err::RelationViolated,
                "generic_matrix: deformed relation c11 c22 = 0 violated");
      }
      A.at(0, 1) = vp_const(k, c.c12);
      A.at(1, 0) = vp_monomial(k, 1, c.c21);
      break;
  }
  return A;
}

/// Cartier-dual transform at the residue level: B = u^{-1} s adj(A)^T s
/// where det A = v u. Fixes each Iwahori cell.
inline LaurentMat dual_transform(const KisinContext& k, const LaurentMat& A) {
  VPoly det = lm_det(k, A);
  require(vp_val(k, det) == 1, Err::WrongDeterminantValuation,
          "dual_transform: determinant valuation is not 1");
  VPoly u = vp_zero(k);
  for (int i = 1; i <= k.N; ++i) u.c[i - 1] = det.c[i];
  VPoly uinv = vp_unit_inverse(k, u);
  // s adj(A)^T s = (a, -b; -c, d) for A = (a, b; c, d)
  LaurentMat B = lm_zero(k);
  B.at(0, 0) = vp_mul(k, uinv, A.at(0, 0));
  B.at(0, 1) = vp_mul(k, uinv, vp_neg(k, A.at(0, 1)));
  B.at(1, 0) = vp_mul(k, uinv, vp_neg(k, A.at(1, 0)));
  B.at(1, 1) = vp_mul(k, uinv, A.at(1, 1));
  return B;
}

/// Polarization check for a length-2f family: A^{(i-f)} must equal the dual
/// transform of A^{(i)} with sign -1 exactly at i = f-1 and 2f-1. On success
/// the induced shape vector is f-periodic.
inline bool polarized_check(const KisinContext& k,
                            const std::vector<LaurentMat>& mats, int f) {
  require(int(mats.size()) == 2 * f, Err::LengthMismatch,
          "polarized_check: expected 2f matrices");
  for (int i = 0; i < 2 * f; ++i) {
    LaurentMat expect = dual_transform(k, mats[i]);
    if (i == f - 1 || i == 2 * f - 1)
      expect = lm_scale(k, k.field.neg(k.field.one()), expect);
    if (!lm_equal(k, mats[((i - f) % (2 * f) + 2 * f) % (2 * f)], expect))
      return false;
  }
  for (int i = 0; i < f; ++i)
    require(classify_cell(k, mats[i]) == classify_cell(k, mats[i + f]),
            Err::ConsistencyFailure,
            "polarized_check: shape vector is not f-periodic");
  return true;
}

// ---------------------------------------------------------------------------
// Shapes from parameters via the intersection witness, and deformation-ring
// invariants by shape.
// ---------------------------------------------------------------------------

/// Shape convention: witness slot 1 -> w, s -> t', t_alpha s -> t. Only the
/// count of w-slots feeds the multiplicity identity.
inline std::optional<ShapeVec> infer_shape(const PrimeContext& ctx,
                                           const TameLParam& rho,
                                           const InertialTypeGL& tau) {
  require(has_cyclotomic_multiplier(rho), Err::DegenerateParameter,
          "infer_shape: parameter must have the cyclotomic multiplier");
  require(is_essentially_selfdual(ctx, tau), Err::NotSelfDual,
          "infer_shape: type must be essentially self-dual");
  int need = ctx.cap_depth(3);
  require(is_n_generic_lparam(ctx, rho, need), Err::DepthTooSmall,
          "infer_shape: parameter not generic enough");
  require(is_n_generic_type(ctx, tau, need), Err::DepthTooSmall,
          "infer_shape: type not generic enough");
  auto sig = sigma_of_type(ctx, tau);
  require(sig.rep.has_value(), Err::DegenerateParameter,
          "infer_shape: degenerate type");
  DLRepU beta_rho = beta_type_of_lparam(ctx, rho);
  auto wit = intersect_types(ctx, beta_rho, *sig.rep);
  if (!wit) return std::nullopt;
  ShapeVec shape(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    switch (wit->wtilde[i]) {
      case 0: shape[i] = Cell::w; break;
      case 1: shape[i] = Cell::tp; break;
      default: shape[i] = Cell::t; break;
    }
  }
  return shape;
}

struct RingPresentation {
  ShapeVec factors;
  ll krull_dim = 0;
  ll mod_p_multiplicity = 1;
  bool is_domain = true;
  std::vector<std::string> presentations;
};

inline RingPresentation ring_invariants(const PrimeContext& ctx,
                                        const ShapeVec& shape) {
  RingPresentation out;
  out.factors = shape;
  out.krull_dim = ll(shape.size()) + 5;
  out.is_domain = true;
  out.mod_p_multiplicity = 1;
  for (Cell c : shape) {
    switch (c) {
      case Cell::t:
        out.presentations.push_back("O[[c_{2,1}, x*_{1,1}, x*_{2,2}]]");
        break;
      case Cell::tp:
        out.presentations.push_back("O[[c_{1,2}, x*_{1,1}, x*_{2,2}]]");
        break;
      case Cell::w:
        out.presentations.push_back(
            "O[[x_{1,1}, y_{2,2}, x*_{1,2}, x*_{2,1}]]/(x_{1,1} y_{2,2} + p)");
        out.mod_p_multiplicity *= 2;
        break;
    }
  }
  (void)ctx;
  return out;
}

/// Global dimension bookkeeping: the completed tensor of local rings of
/// absolute dimension f_v + 5 with one auxiliary place of relative
/// dimension 4 has dimension 1 + 4|T| + sum f_v, with |T| = #places + 1.
struct DimIdentity {
  ll lhs = 0, rhs = 0;
  bool ok = false;
};

inline DimIdentity global_dimension_identity(const std::vector<int>& fv) {
  DimIdentity out;
  ll sum = 0;
  for (int v : fv) sum += v;
  out.lhs = 1 + 4;  // base + auxiliary place
  for (int v : fv) out.lhs += v + 4;
  out.rhs = 1 + 4 * ll(fv.size() + 1) + sum;
  out.ok = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// The Breuil-Mezard style consistency report.
// ---------------------------------------------------------------------------

struct BMReport {
  ll lhs = 0;      // |W?(rho) /\ JH(sigma(tau'))|
  ll e = 0;        // 2^{#w in the inferred shape}; 0 when no shape exists
  ll gl_lhs = 0;   // GL-side intersection count (independent pipeline)
  ll gl_e = 0;     // multiplicity of the doubled (polarization-periodic) shape
  bool has_shape = false;
  ShapeVec shape;
  bool ok = false;
};

/// Flip the negative-pairing slots of a GL type into the window; the digit
/// genericity of the underlying inertial type guarantees this suffices.
inline DLRepGL gl_window_presentation(const PrimeContext& ctx,
                                      const DLRepGL& r) {
  int n = 2 * ctx.f;
  WeylElt v(n);
  for (int i = 0; i < n; ++i)
    if (root_pairing_gl(r.mu, i) < 0) v.set(i, true);
  if (weyl_length(v) == 0) return r;
  WeylElt w2 = weyl_mul(weyl_mul(v, r.w), frobenius_weyl(v));
  return DLRepGL{w2, weyl_act_gl(v, r.mu)};
}

inline BMReport breuil_mezard_check(const PrimeContext& ctx,
                                    const TameLParam& rho,
                                    const InertialTypeGL& tau) {
  BMReport rep;
  auto shape = infer_shape(ctx, rho, tau);  // also validates preconditions
  auto sig = sigma_of_type(ctx, tau);
  auto wu = predicted_weights(ctx, rho);
  auto jhu = jh_factors(ctx, *sig.rep);
  rep.lhs = ll(jh_intersection(wu, jhu).size());
  if (shape) {
    rep.has_shape = true;
    rep.shape = *shape;
    rep.e = ring_invariants(ctx, rep.shape).mod_p_multiplicity;
    ShapeVec doubled = rep.shape;
    doubled.insert(doubled.end(), rep.shape.begin(), rep.shape.end());
    rep.gl_e = ring_invariants(ctx, doubled).mod_p_multiplicity;
  } else {
    rep.e = 0;
    rep.gl_e = 0;
  }
  // GL side, fully independent: predicted GL weights against the JH set of
  // sigma'(tau') computed from its own digit data.
  auto sigp = sigma_prime_of_type(ctx, tau);
  require(sigp.rep.has_value(), Err::DegenerateParameter,
          "breuil_mezard_check: degenerate GL type");
  auto wgl = predicted_weights_bc(ctx, rho);
  auto jhgl = jh_factors_gl(ctx, gl_window_presentation(ctx, *sigp.rep));
  rep.gl_lhs = ll(jh_intersection_gl(wgl, jhgl).size());
  rep.ok = rep.lhs == rep.e && rep.gl_lhs == rep.lhs * rep.lhs &&
           rep.gl_e == rep.e * rep.e;
  return rep;
}

}  // namespace swu2
