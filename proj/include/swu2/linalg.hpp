#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swu2/context.hpp"
#include "swu2/errors.hpp"

namespace swu2 {

/// Small dense integer matrices with 128-bit entries, used for exact
/// lattice-membership tests and integer linear solves. Matrices here are
/// tiny (at most ~12 x 12), so there is no attempt at being clever.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<i128> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  i128& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const i128& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

namespace detail {

inline void guard_magnitude(i128 v) {
  i128 bound = i128(1) << 100;
  require(v < bound && v > -bound, Err::PreconditionViolated,
          "integer linear algebra overflow guard tripped");
}

inline void col_axpy(IMat& m, int dst, int src, i128 q) {
  // col_dst -= q * col_src
  for (int r = 0; r < m.rows; ++r) {
    m.at(r, dst) -= q * m.at(r, src);
    guard_magnitude(m.at(r, dst));
  }
}

inline void col_swap(IMat& m, int c1, int c2) {
  if (c1 == c2) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

inline void col_neg(IMat& m, int c) {
  for (int r = 0; r < m.rows; ++r) m.at(r, c) = -m.at(r, c);
}

inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Column-style Hermite form of a generator matrix: H = A * U with U
/// unimodular, H in column echelon with positive pivots. `pivots` lists
/// (row, col) pairs in processing order.
struct Hnf {
  IMat h, u;
  std::vector<std::pair<int, int>> pivots;
};

inline Hnf hnf_columns(const IMat& A) {
  Hnf out;
  out.h = A;
  out.u = IMat::identity(A.cols);
  int pc = 0;
  for (int row = 0; row < A.rows && pc < A.cols; ++row) {
    int nz = -1;
    for (int j = pc; j < A.cols; ++j)
      if (out.h.at(row, j) != 0) {
        nz = j;
        break;
      }
    if (nz < 0) continue;
    detail::col_swap(out.h, pc, nz);
    detail::col_swap(out.u, pc, nz);
    for (int j = pc + 1; j < A.cols; ++j) {
      while (out.h.at(row, j) != 0) {
        i128 q = out.h.at(row, j) / out.h.at(row, pc);
        detail::col_axpy(out.h, j, pc, q);
        detail::col_axpy(out.u, j, pc, q);
        if (out.h.at(row, j) != 0) {
          detail::col_swap(out.h, pc, j);
          detail::col_swap(out.u, pc, j);
        }
      }
    }
    if (out.h.at(row, pc) < 0) {
      detail::col_neg(out.h, pc);
      detail::col_neg(out.u, pc);
    }
    out.pivots.push_back({row, pc});
    ++pc;
  }
  return out;
}

/// A lattice spanned by the columns of `gens`, with its Hermite form cached.
struct Lattice {
  IMat gens;
  Hnf hnf;

  explicit Lattice(IMat g) : gens(std::move(g)), hnf(hnf_columns(gens)) {}

  int dim() const { return gens.rows; }
};

/// Solves gens * x = b over the integers. Returns the coefficient vector if
/// b lies in the lattice, nullopt otherwise.
inline std::optional<std::vector<ll>> lattice_solve(const Lattice& lat,
                                                    const std::vector<ll>& b) {
  const Hnf& hf = lat.hnf;
  require(int(b.size()) == lat.dim(), Err::LengthMismatch,
          "lattice_solve: dimension mismatch");
  std::vector<i128> rem(b.begin(), b.end());
  std::vector<i128> y(hf.h.cols, 0);
  for (auto [row, col] : hf.pivots) {
    i128 piv = hf.h.at(row, col);
    if (rem[row] % piv != 0) return std::nullopt;
    i128 c = rem[row] / piv;
    y[col] = c;
    for (int r = 0; r < hf.h.rows; ++r) rem[r] -= c * hf.h.at(r, col);
  }
  for (int r = 0; r < hf.h.rows; ++r)
    if (rem[r] != 0) return std::nullopt;
  std::vector<ll> x(hf.u.rows, 0);
  for (int r = 0; r < hf.u.rows; ++r) {
    i128 acc = 0;
    for (int c = 0; c < hf.u.cols; ++c) acc += hf.u.at(r, c) * y[c];
    detail::guard_magnitude(acc);
    x[r] = ll(acc);
  }
  return x;
}

inline bool lattice_contains(const Lattice& lat, const std::vector<ll>& b) {
  return lattice_solve(lat, b).has_value();
}

/// The unique canonical representative of b modulo the lattice: reduced
/// against the Hermite pivots top-down with floor division.
inline std::vector<ll> lattice_canonical(const Lattice& lat,
                                         const std::vector<ll>& b) {
  const Hnf& hf = lat.hnf;
  require(int(b.size()) == lat.dim(), Err::LengthMismatch,
          "lattice_canonical: dimension mismatch");
  std::vector<i128> x(b.begin(), b.end());
  for (auto [row, col] : hf.pivots) {
    i128 q = detail::floor_div(x[row], hf.h.at(row, col));
    if (q == 0) continue;
    for (int r = 0; r < hf.h.rows; ++r) x[r] -= q * hf.h.at(r, col);
  }
  std::vector<ll> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    detail::guard_magnitude(x[i]);
    out[i] = ll(x[i]);
  }
  return out;
}

/// Per-thread cache for the handful of fixed lattices each context uses;
/// Hermite forms are recomputed otherwise on every weight canonicalization.
inline const Lattice& cached_lattice(const std::string& key,
                                     const std::function<Lattice()>& build) {
  thread_local std::map<std::string, std::unique_ptr<Lattice>> cache;
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Lattice>(build())).first;
  return *it->second;
}

}  // namespace swu2
