#pragma once

#include <json.hpp>

#include "swu2/kisin.hpp"

namespace swu2 {

using json = nlohmann::json;

// UChar <-> array of 4-element integer arrays (canonical form emitted).
inline json to_json(const UChar& mu) {
  json a = json::array();
  for (int i = 0; i < mu.f(); ++i)
    a.push_back({mu[i][0], mu[i][1], mu[i][2], mu[i][3]});
  return a;
}

inline UChar uchar_from_json(const json& j) {
  std::vector<Quad> raw;
  for (const auto& q : j) {
    require(q.is_array() && q.size() == 4, Err::PreconditionViolated,
            "UChar JSON: expected 4-element arrays");
    raw.push_back(Quad{q[0].get<ll>(), q[1].get<ll>(), q[2].get<ll>(),
                       q[3].get<ll>()});
  }
  return UChar(std::move(raw));
}

// WeylElt <-> array of 0/1.
inline json to_json(const WeylElt& w) {
  json a = json::array();
  for (int i = 0; i < w.size(); ++i) a.push_back(w.is_s(i) ? 1 : 0);
  return a;
}

inline WeylElt weyl_from_json(const json& j) {
  std::vector<uint8_t> flags;
  for (const auto& v : j) flags.push_back(v.get<int>() ? 1 : 0);
  return WeylElt(std::move(flags));
}

inline json to_json(const AffineElt& x) {
  return json{{"t", to_json(x.t)}, {"w", to_json(x.w)}};
}

inline AffineElt affine_from_json(const json& j) {
  return AffineElt{uchar_from_json(j.at("t")), weyl_from_json(j.at("w"))};
}

inline json to_json(const DLRepU& r) {
  return json{{"w", to_json(r.w)}, {"mu", to_json(r.mu)}};
}

inline DLRepU dlrepu_from_json(const json& j) {
  return DLRepU{weyl_from_json(j.at("w")), uchar_from_json(j.at("mu"))};
}

inline json to_json(const SerreWeightU& w) { return to_json(w.rep()); }

inline SerreWeightU weightu_from_json(const PrimeContext& ctx, const json& j) {
  return SerreWeightU(ctx, uchar_from_json(j));
}

inline json to_json(const GLChar& mu) {
  json a = json::array();
  for (int i = 0; i < mu.size(); ++i) a.push_back({mu[i][0], mu[i][1]});
  return a;
}

inline GLChar glchar_from_json(const json& j) {
  std::vector<Pair> raw;
  for (const auto& q : j) {
    require(q.is_array() && q.size() == 2, Err::PreconditionViolated,
            "GLChar JSON: expected 2-element arrays");
    raw.push_back(Pair{q[0].get<ll>(), q[1].get<ll>()});
  }
  return GLChar(std::move(raw));
}

inline json to_json(const DLRepGL& r) {
  return json{{"w", to_json(r.w)}, {"mu", to_json(r.mu)}};
}

inline DLRepGL dlrepgl_from_json(const json& j) {
  return DLRepGL{weyl_from_json(j.at("w")), glchar_from_json(j.at("mu"))};
}

inline json to_json(const SerreWeightGL& w) { return to_json(w.rep()); }

inline json weights_to_json(const std::vector<SerreWeightU>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

inline json weights_to_json(const std::vector<SerreWeightGL>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

// TameLParam: {"kind": "ps"|"irr", "r"/"k","l": int, "s": int,
//              "lambda": string, "nu": string?}
inline json to_json(const TameLParam& rho) {
  json j;
  if (rho.kind == TameLParam::Kind::PrincipalSeries) {
    j["kind"] = "ps";
    j["r"] = rho.r;
    j["nu"] = rho.nu;
  } else {
    j["kind"] = "irr";
    j["k"] = rho.k;
    j["l"] = rho.l;
  }
  j["s"] = rho.s;
  j["lambda"] = rho.lambda;
  return j;
}

inline TameLParam lparam_from_json(const PrimeContext& ctx, const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  ll s = j.value("s", 0ll);
  std::string lambda = j.value("lambda", std::string("1"));
  if (kind == "ps")
    return TameLParam::principal_series(ctx, j.at("r").get<ll>(), s, lambda,
                                        j.value("nu", std::string("1")));
  require(kind == "irr", Err::PreconditionViolated,
          "TameLParam JSON: kind must be \"ps\" or \"irr\"");
  return TameLParam::irreducible(ctx, j.at("k").get<ll>(), j.at("l").get<ll>(),
                                 s, lambda);
}

inline json to_json(const InertialTypeGL& tau) {
  return json{{"exponents", {tau.e[0], tau.e[1]}}};
}

inline InertialTypeGL inertial_from_json(const PrimeContext& ctx,
                                         const json& j) {
  const auto& e = j.at("exponents");
  require(e.is_array() && e.size() == 2, Err::PreconditionViolated,
          "InertialTypeGL JSON: expected two exponents");
  return InertialTypeGL(ctx, e[0].get<ll>(), e[1].get<ll>());
}

inline json to_json(const IntersectionWitness& w) {
  json wt = json::array();
  for (uint8_t t : w.wtilde)
    wt.push_back(t == 0 ? "1" : (t == 1 ? "s" : "ts"));
  return json{{"wtilde", wt},
              {"pair", to_json(w.pair)},
              {"common", weights_to_json(w.common)}};
}

inline json to_json(const ShapeVec& s) {
  json a = json::array();
  for (Cell c : s) a.push_back(cell_name(c));
  return a;
}

inline ShapeVec shape_from_json(const json& j) {
  ShapeVec s;
  for (const auto& v : j) {
    std::string n = v.get<std::string>();
    if (n == "t")
      s.push_back(Cell::t);
    else if (n == "tp")
      s.push_back(Cell::tp);
    else if (n == "w")
      s.push_back(Cell::w);
    else
      fail(Err::PreconditionViolated, "ShapeVec JSON: unknown symbol " + n);
  }
  return s;
}

inline json to_json(const RingPresentation& r) {
  return json{{"factors", to_json(r.factors)},
              {"krull_dim", r.krull_dim},
              {"e", r.mod_p_multiplicity},
              {"domain", r.is_domain},
              {"presentations", r.presentations}};
}

inline json to_json(const BMReport& r) {
  json j{{"lhs", r.lhs},
         {"e", r.e},
         {"gl_lhs", r.gl_lhs},
         {"gl_e", r.gl_e},
         {"ok", r.ok}};
  if (r.has_shape) j["shape"] = to_json(r.shape);
  return j;
}

// LaurentMat: entries as coefficient arrays, lowest degree first; field
// elements are integers for the prime field and arrays otherwise.
inline json to_json(const KisinContext& k, const LaurentMat& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) {
      json ent = json::array();
      for (const auto& coeff : m.at(r, c).c) {
        if (k.field.deg() == 1)
          ent.push_back(coeff[0]);
        else
          ent.push_back(coeff);
      }
      row.push_back(ent);
    }
    rows.push_back(row);
  }
  return json{{"trunc", k.N}, {"entries", rows}};
}

inline LaurentMat laurent_from_json(const KisinContext& k, const json& j) {
  LaurentMat m = lm_zero(k);
  const auto& rows = j.at("entries");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const auto& ent = rows.at(r).at(c);
      for (size_t d = 0; d < ent.size() && int(d) <= k.N; ++d) {
        if (ent[d].is_array()) {
          GF::Elem e = k.field.zero();
          for (size_t i = 0; i < ent[d].size() && int(i) < k.field.deg(); ++i)
            e[i] = PrimeContext::mod(ent[d][i].get<ll>(), k.field.p());
          m.at(r, c).c[d] = e;
        } else {
          m.at(r, c).c[d] = k.field.from_int(ent[d].get<ll>());
        }
      }
    }
  return m;
}

}  // namespace swu2
