#pragma once

#include <cstdint>
#include <string>

#include "swu2/errors.hpp"

namespace swu2 {

using ll = long long;
using i128 = __int128;

/// Arithmetic context: the pair (p, f) with q = p^f and M = p^{2f} - 1.
/// All residue arithmetic in the library is relative to one of these.
///
/// Coordinates are kept in 64-bit integers with 128-bit intermediates; the
/// constructor rejects (p, f) whose derived moduli would not leave ample
/// headroom, so out-of-range use fails loudly instead of overflowing.
struct PrimeContext {
  ll p = 0;
  int f = 0;
  ll q = 0;  // p^f
  ll M = 0;  // p^{2f} - 1

  PrimeContext() = default;

  PrimeContext(ll p_, int f_) : p(p_), f(f_) {
    require(p >= 3 && is_prime(p), Err::PreconditionViolated,
            "p must be an odd prime >= 3");
    require(f >= 1, Err::PreconditionViolated, "f must be >= 1");
    i128 acc = 1;
    for (int i = 0; i < 2 * f; ++i) {
      acc *= p;
      require(acc < (i128(1) << 56), Err::PreconditionViolated,
              "p^{2f} out of supported range");
      if (i + 1 == f) q = ll(acc);
    }
    M = ll(acc) - 1;
  }

  static bool is_prime(ll n) {
    if (n < 2) return false;
    for (ll d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  /// Residue of v in [0, m).
  static ll mod(ll v, ll m) {
    ll r = v % m;
    return r < 0 ? r + m : r;
  }
  ll mod_M(ll v) const { return mod(v, M); }
  ll mod_q_plus_1(ll v) const { return mod(v, q + 1); }
  ll mod_q_minus_1(ll v) const { return mod(v, q - 1); }

  /// Largest n for which an n-deep character can exist at this p
  /// (the open interval (n, p - n) must contain an integer).
  int max_depth() const { return int((p - 3) / 2); }

  /// Depth requirement actually enforced for an operation whose stated
  /// hypothesis is n: capped at the largest depth representable at p,
  /// never below 1.
  int cap_depth(int n) const {
    int m = max_depth();
    if (m < 1) m = 1;
    return n < m ? (n < 1 ? 1 : n) : m;
  }
};

}  // namespace swu2
