#ifndef NILORB_JSON_IO_HPP
#define NILORB_JSON_IO_HPP

#include <json.hpp>

#include "nilorb/enumerator.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/witness.hpp"

namespace nilorb {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const CaseParams& cp);
json to_json(const OrbitClass& oc);
json to_json(const std::vector<OrbitClass>& classes);
json to_json(const RecipeInfo& r);
json to_json(const VerificationReport& rep);

/// {"n": .., "field": "Q"|"Fp:p", "a": [...], ...}, coefficient strings
/// low degree first.
template <class F>
json element_to_json(const FieldSpec& spec, const CentralizerElement<F>& e) {
  auto render = [&](const TruncPoly<F>& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(e.field().to_string(c));
    return arr;
  };
  return json{{"n", e.n()},
              {"field", spec.to_string()},
              {"a", render(e.mat().a())},
              {"b", render(e.mat().b())},
              {"c", render(e.mat().c())},
              {"d", render(e.mat().d())}};
}

template <class F>
CentralizerElement<F> element_from_json(const F& field, const json& j) {
  long n = j.at("n").get<long>();
  auto read = [&](const char* key) {
    std::vector<typename F::Elem> out;
    for (const auto& s : j.at(key))
      out.push_back(field.parse(s.template get<std::string>()));
    return out;
  };
  return make_element(field, n, read("a"), read("b"), read("c"), read("d"));
}

template <class F>
json witness_to_json(const FieldSpec& spec, const Witness<F>& w) {
  json j = element_to_json(spec, w.element);
  j["recipe"] = to_json(w.recipe);
  j["verified"] = true;
  j["partition"] = to_json(w.partition);
  return j;
}

}  // namespace nilorb

#endif
