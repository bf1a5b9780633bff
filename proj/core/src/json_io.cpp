#include "nilorb/json_io.hpp"

namespace nilorb {

json to_json(const Partition& p) {
  json arr = json::array();
  for (long part : p.parts()) arr.push_back(part);
  return arr;
}

json to_json(const CaseParams& cp) {
  json j{{"id", to_string(cp.id)}};
  auto put = [&](const char* key, const std::optional<long>& v) {
    if (v) j[key] = *v;
  };
  put("z", cp.z);
  put("m", cp.m);
  put("l", cp.l);
  put("s", cp.s);
  put("t", cp.t);
  put("alpha", cp.alpha);
  put("beta", cp.beta);
  put("shift", cp.shift);
  return j;
}

json to_json(const OrbitClass& oc) {
  json cases = json::array();
  for (const auto& cp : oc.provenance) cases.push_back(to_json(cp));
  return json{{"partition", to_json(oc.partition)},
              {"cases", cases},
              {"guaranteed", oc.guaranteed},
              {"field_dependent", oc.field_dependent}};
}

json to_json(const std::vector<OrbitClass>& classes) {
  json arr = json::array();
  for (const auto& oc : classes) arr.push_back(to_json(oc));
  return arr;
}

json to_json(const RecipeInfo& r) {
  json j{{"shape", to_string(r.shape)}, {"z", r.z}};
  if (r.shape == RecipeShape::Case1) j["l"] = r.l;
  if (r.shape == RecipeShape::Case1 || r.shape == RecipeShape::Case1Degenerate ||
      r.shape == RecipeShape::Diagonal)
    j["m"] = r.m;
  if (!r.p_coeffs.empty()) j["p"] = r.p_coeffs;
  if (!r.q_coeffs.empty()) j["q"] = r.q_coeffs;
  return j;
}

json to_json(const VerificationReport& rep) {
  auto set_to_json = [](const std::set<Partition>& s) {
    json arr = json::array();
    for (const auto& p : s) arr.push_back(to_json(p));
    return arr;
  };
  json resolution = json::array();
  for (const auto& [part, ok] : rep.field_dependent_resolution)
    resolution.push_back(json{{"partition", to_json(part)}, {"realized", ok}});
  return json{{"n", rep.n},
              {"p", rep.p},
              {"mode", rep.exhaustive
                           ? json{{"kind", "exhaustive"}}
                           : json{{"kind", "sample"},
                                  {"samples", rep.samples},
                                  {"seed", rep.seed}}},
              {"observed", set_to_json(rep.observed)},
              {"enumerated_guaranteed", set_to_json(rep.enumerated_guaranteed)},
              {"enumerated_field_dependent",
               set_to_json(rep.enumerated_field_dependent)},
              {"extras", set_to_json(rep.extras)},
              {"missing_guaranteed", set_to_json(rep.missing_guaranteed)},
              {"field_dependent_resolution", resolution}};
}

}  // namespace nilorb
