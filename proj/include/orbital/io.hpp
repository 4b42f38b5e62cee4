#pragma once

// JSON encodings (schema "orbital/v1") for tableaux, polynomials,
// descriptors and reports, with decoders for the input-side types.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include "orbital/error.hpp"
#include "orbital/generator.hpp"
#include "orbital/hypersurface.hpp"
#include "orbital/poly.hpp"
#include "orbital/rs.hpp"
#include "orbital/tableau.hpp"
#include "orbital/verify.hpp"

namespace orbital::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "orbital/v1";

/// {"schema": "orbital/v1", "kind": kind, ...payload}
inline Json document(const std::string& kind, const Json& payload) {
  Json out{{"schema", kSchema}, {"kind", kind}};
  for (const auto& [k, v] : payload.items()) out[k] = v;
  return out;
}

namespace detail {

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::bad_json, std::string(what) + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw error(errc::bad_json, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::bad_json, e.what());
  }
}

/// Accepts the current schema or a document without a schema field.
inline void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
    throw error(errc::bad_json, "unsupported schema " + j.at("schema").dump());
}

inline Json encode(const Partition& p) { return p.parts(); }

inline Partition decode_partition(const Json& j) {
  return Partition(detail::get_as<std::vector<int>>(j, "partition"));
}

inline Json encode(const TauSet& tau) { return tau.indices(); }

inline TauSet decode_tau(const Json& j, int n) { return TauSet(n, detail::get_as<std::vector<int>>(j, "tau")); }

inline Json encode(const Permutation& w) { return w.images(); }

inline Permutation decode_permutation(const Json& j) {
  return Permutation(detail::get_as<std::vector<int>>(j, "permutation"));
}

inline Json encode(const StandardTableau& t) { return Json{{"n", t.size()}, {"rows", t.rows()}}; }

/// Either {"n": N, "rows": [[...], ...]} or a bare list of rows.
inline StandardTableau decode_tableau(const Json& j) {
  check_schema(j);
  const Json& rows = j.is_array() ? j : detail::field(j, "rows");
  StandardTableau t(detail::get_as<StandardTableau::Rows>(rows, "rows"));
  if (j.is_object() && j.contains("n") && detail::get_as<int>(j.at("n"), "n") != t.size())
    throw error(errc::bad_json, "\"n\" disagrees with the number of boxes");
  return t;
}

inline Json encode(const Chain& c) { return Json::array({c.lo, c.hi}); }

inline Json encode(const WeightVector& w) { return w.coeffs(); }

inline WeightVector decode_weight(const Json& j) { return WeightVector(detail::get_as<std::vector<long>>(j, "weight")); }

/// List of {"coeff": "<decimal>", "exps": {"i,j": e, "t": e}} in printing order.
inline Json encode(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : m.factors()) exps[var_key(v)] = e;
    out.push_back(Json{{"coeff", c.str()}, {"exps", exps}});
  }
  return out;
}

inline VarId decode_var(const std::string& key) {
  if (key == "t") return t_var;
  auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t used_i = 0, used_j = 0;
    int i = std::stoi(key.substr(0, comma), &used_i);
    int j = std::stoi(key.substr(comma + 1), &used_j);
    if (used_i != comma || used_j != key.size() - comma - 1 || i < 1 || j <= i || j > 0xFFFF)
      throw std::invalid_argument(key);
    return x_var(i, j);
  } catch (const std::logic_error&) {
    throw error(errc::bad_json, "bad variable key \"" + key + "\"");
  }
}

inline MultiPoly decode_poly(const Json& j) {
  if (!j.is_array()) throw error(errc::bad_json, "polynomial must be a list of terms");
  MultiPoly p;
  for (const auto& term : j) {
    auto coeff = detail::get_as<std::string>(detail::field(term, "coeff"), "coeff");
    Integer c;
    try {
      c = Integer(coeff);
    } catch (const std::exception&) {
      throw error(errc::bad_json, "bad coefficient \"" + coeff + "\"");
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& [k, e] : detail::field(term, "exps").items()) {
      int ex = detail::get_as<int>(e, "exponent");
      if (ex < 0) throw error(errc::bad_json, "negative exponent");
      factors.emplace_back(decode_var(k), ex);
    }
    p.add_term(Monomial(std::move(factors)), c);
  }
  return p;
}

inline Json encode(const HypersurfaceDescriptor& d) {
  Json cs = Json::array();
  for (const auto& c : chains(d.richardson)) cs.push_back(encode(c));
  return Json{{"n", d.n()},
              {"tau", encode(d.tau())},
              {"tableau", encode(d.tableau)},
              {"richardson", encode(d.richardson)},
              {"dropped_box", d.dropped_box},
              {"source_chain", encode(d.source_chain)},
              {"prev_chain", encode(d.prev_chain)},
              {"sigma", Json::array({d.sigma_lo, d.sigma_hi})},
              {"thickness", d.thickness},
              {"window", Json::array({d.sigma_lo, d.dropped_box})},
              {"chains", cs}};
}

/// Re-derives the descriptor from its tableau and checks every stored field.
inline HypersurfaceDescriptor decode_descriptor(const Json& j) {
  auto d = classify_hypersurface(decode_tableau(detail::field(j, "tableau")));
  if (!d) throw error(errc::bad_json, "tableau is not a hypersurface tableau");
  // Extra keys (generator, char_poly) are allowed; descriptor fields must agree.
  Json mine = encode(*d);
  for (const auto& [k, v] : mine.items())
    if (j.contains(k) && j.at(k) != v) throw error(errc::bad_json, "field \"" + k + "\" is inconsistent");
  return *d;
}

inline Json encode(const GeneratorReport& r) {
  Json ms = Json::array();
  for (const auto& [j, m] : r.m_sequence) ms.push_back(Json{{"j", j}, {"zero", m.is_zero()}, {"poly", encode(m)}});
  return Json{{"window", Json::array({r.window.lo, r.window.hi})},
              {"thickness", r.thickness},
              {"window_shape", encode(r.window_shape)},
              {"l_lambda", r.l_lambda},
              {"determinant", encode(r.determinant)},
              {"m_sequence", ms},
              {"f", encode(r.f)},
              {"f_text", r.f.to_string()},
              {"weight", encode(r.weight)},
              {"weight_text", r.weight.to_string()}};
}

inline Json encode(const CharPoly& cp) {
  Json fs = Json::array();
  for (const auto& w : cp.factors) fs.push_back(encode(w));
  return Json{{"factors", fs}, {"degree", cp.degree()}, {"text", cp.to_string()}};
}

inline Json encode(const ProbeFailure& f) {
  return Json{{"probe", f.probe}, {"seed", f.seed}, {"prime", f.prime}, {"detail", f.detail}};
}

inline Json encode(const VerificationReport& r) {
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back(encode(f));
  return Json{{"id", r.id},
              {"trials", r.trials},
              {"f_vanishes_on_V", r.f_vanishes_on_V},
              {"f_nonzero_on_richardson", r.f_nonzero_on_richardson},
              {"jordan_match", r.jordan_match},
              {"power_rank_ok", r.power_rank_ok},
              {"failures", fs}};
}

inline VerificationReport decode_verification(const Json& j) {
  VerificationReport r;
  r.id = detail::get_as<std::string>(detail::field(j, "id"), "id");
  r.trials = detail::get_as<int>(detail::field(j, "trials"), "trials");
  r.f_vanishes_on_V = detail::get_as<int>(detail::field(j, "f_vanishes_on_V"), "f_vanishes_on_V");
  r.f_nonzero_on_richardson =
      detail::get_as<int>(detail::field(j, "f_nonzero_on_richardson"), "f_nonzero_on_richardson");
  r.jordan_match = detail::get_as<int>(detail::field(j, "jordan_match"), "jordan_match");
  r.power_rank_ok = detail::get_as<int>(detail::field(j, "power_rank_ok"), "power_rank_ok");
  for (const auto& f : detail::field(j, "failures"))
    r.failures.push_back(ProbeFailure{detail::get_as<std::string>(detail::field(f, "probe"), "probe"),
                                      detail::get_as<std::uint64_t>(detail::field(f, "seed"), "seed"),
                                      detail::get_as<std::uint64_t>(detail::field(f, "prime"), "prime"),
                                      detail::get_as<std::string>(detail::field(f, "detail"), "detail")});
  for (int c : {r.f_vanishes_on_V, r.f_nonzero_on_richardson, r.jordan_match, r.power_rank_ok})
    if (c < 0 || c > r.trials) throw error(errc::bad_json, "probe count exceeds trials");
  return r;
}

inline Json encode(const RemarkResult& r) {
  return Json{{"detM_equals_f", r.detM_equals_f}, {"chain_condition", r.chain_condition},
              {"power", r.power},                 {"minor_size", r.minor_size},
              {"sign", r.sign},                   {"f_divides_detM", r.f_divides_detM},
              {"detM", encode(r.detM)}};
}

}  // namespace orbital::json
