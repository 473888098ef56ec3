#include "bpir/pir/serialize.hpp"

namespace bpir::pir {
namespace {

using nlohmann::json;

json elems(const ExtField& f, const std::vector<ExtElem>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(f.format(x));
  return out;
}

json poly(const BasePoly& p) {
  json out = json::array();
  for (auto c : p.coeffs()) out.push_back(c);
  return out;
}

}  // namespace

json params_to_json(const SchemeParams& p) {
  json j;
  j["field"] = p.field.description();
  j["q"] = p.q();
  j["k"] = p.k;
  j["t"] = p.t;
  j["b"] = p.b;
  j["r"] = p.r;
  j["delta"] = p.delta;
  j["s"] = p.s;
  j["m"] = p.m;
  j["omega_alpha"] = elems(p.field, p.omega_alpha);
  j["omega_chi"] = elems(p.field, p.omega_chi);
  j["omega_beta"] = p.omega_beta;
  json mins = json::array();
  for (const auto& f : p.min_polys) mins.push_back(poly(f));
  j["min_polys"] = mins;
  j["u"] = elems(p.field, p.u);
  j["v"] = elems(p.field, p.v);
  j["theta"] = elems(p.field, p.dual_pair.theta);
  j["eta"] = elems(p.field, p.dual_pair.eta);
  json rec = json::array();
  for (const auto& row : p.recovery_polys) {
    json r = json::array();
    for (const auto& h : row) r.push_back(poly(h));
    rec.push_back(r);
  }
  j["recovery_polys"] = rec;
  return j;
}

SchemeParams params_from_json(const json& j) {
  SchemeConfig cfg;
  try {
    cfg.k = j.at("k").get<std::size_t>();
    cfg.t = j.at("t").get<std::size_t>();
    cfg.b = j.at("b").get<std::size_t>();
    cfg.r = j.at("r").get<std::size_t>();
    cfg.m = j.at("m").get<std::size_t>();
    cfg.q = j.at("q").get<std::uint32_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed parameter object: ") + e.what());
  }
  SchemeParams p = setup(cfg);
  const json rebuilt = params_to_json(p);
  for (const auto& [key, value] : rebuilt.items()) {
    if (!j.contains(key)) throw ParseError("parameter object lacks '" + key + "'");
    if (j.at(key) != value) throw ParseError("parameter field '" + key + "' disagrees with the deterministic construction");
  }
  return p;
}

json optimality_to_json(const OptimalityReport& r) {
  return {{"balanced", r.balanced},
          {"rate_optimal", r.rate_optimal},
          {"divisibility", r.divisibility},
          {"lower_bound", r.lower_bound},
          {"file_size_optimal", r.file_size_optimal}};
}

}  // namespace bpir::pir
