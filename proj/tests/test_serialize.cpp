#include <doctest.h>

#include "swu2/serialize.hpp"

using namespace swu2;

TEST_CASE("round trips through JSON") {
  PrimeContext c7(7, 1);
  UChar mu(std::vector<Quad>{Quad{3, 1, 2, 0}});
  CHECK(uchar_from_json(to_json(mu)) == mu);
  // raw (non-canonical) input parses to the same class
  json raw = json::array({json::array({4, 0, 1, 1})});
  CHECK(uchar_from_json(raw) == mu);

  WeylElt w(std::vector<uint8_t>{1, 0, 1});
  CHECK(weyl_from_json(to_json(w)) == w);

  DLRepU r{weyl_all_s(1), UChar(std::vector<Quad>{Quad{0, 4, 0, 0}})};
  DLRepU r2 = dlrepu_from_json(to_json(r));
  CHECK(r2 == r);

  GLChar g({Pair{3, 1}, Pair{-1, -3}});
  CHECK(glchar_from_json(to_json(g)) == g);

  AffineElt a{mu, weyl_all_s(1)};
  AffineElt a2 = affine_from_json(to_json(a));
  CHECK(a2.t == a.t);
  CHECK(a2.w == a.w);

  TameLParam ps = TameLParam::principal_series(c7, 3, 0, "x", "y");
  TameLParam ps2 = lparam_from_json(c7, to_json(ps));
  CHECK(ps2.kind == ps.kind);
  CHECK(ps2.r == ps.r);
  CHECK(ps2.s == ps.s);
  CHECK(ps2.lambda == "x");
  CHECK(ps2.nu == "y");

  InertialTypeGL tau(c7, 3, 27);
  CHECK(inertial_from_json(c7, to_json(tau)) == tau);

  ShapeVec s{Cell::w, Cell::tp, Cell::t};
  CHECK(shape_from_json(to_json(s)) == s);

  KisinContext k(c7);
  LaurentMat m = admissible_set(k)[2].second;
  LaurentMat m2 = laurent_from_json(k, to_json(k, m));
  CHECK(lm_equal(k, m, m2));
}

TEST_CASE("weight JSON uses the canonical representative") {
  PrimeContext c7(7, 1);
  SerreWeightU w1 = weight(c7, UChar(std::vector<Quad>{Quad{3, 1, 0, 0}}));
  SerreWeightU w2 = weight(c7, UChar(std::vector<Quad>{Quad{-5, -7, 0, 0}}));
  CHECK(to_json(w1) == to_json(w2));
  CHECK(weightu_from_json(c7, to_json(w1)) == w1);
}

TEST_CASE("jh sets serialize sorted") {
  PrimeContext c7(7, 1);
  DLRepU r{weyl_identity(1), UChar(std::vector<Quad>{Quad{3, 1, 0, 0}})};
  auto jh = jh_factors(c7, r);
  json a = weights_to_json(jh);
  CHECK(a.size() == 2);
  CHECK(a.dump() == weights_to_json(jh_factors(c7, r)).dump());
}
