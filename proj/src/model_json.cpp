#include "abducer/model_json.hpp"

#include <json.hpp>

#include "abducer/errors.hpp"

namespace abducer {

using nlohmann::json;

PlausibilityModel model_from_json(const std::string& text, bool force) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidModel(std::string("not valid JSON: ") + e.what());
  }

  PlausibilityModel m;
  try {
    for (const auto& jw : j.at("worlds")) {
      World w;
      w.id = jw.at("id").get<std::string>();
      if (jw.contains("atoms"))
        for (const auto& a : jw.at("atoms")) w.atoms.insert(a.get<std::string>());
      m.worlds.push_back(std::move(w));
    }
    if (j.contains("leq"))
      for (const auto& pair : j.at("leq")) {
        if (!pair.is_array() || pair.size() != 2)
          throw InvalidModel("leq entries must be [from, to] pairs");
        m.leq.insert({pair[0].get<std::string>(), pair[1].get<std::string>()});
      }
    if (j.contains("point") && !j.at("point").is_null())
      m.point = j.at("point").get<std::string>();
  } catch (const json::exception& e) {
    throw InvalidModel(std::string("malformed model: ") + e.what());
  }

  if (!force) {
    auto violations = validate(m);
    if (!violations.empty()) {
      std::string msg = "model fails validation:";
      for (const auto& v : violations) {
        msg += " " + v.property + "(";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          msg += (i ? "," : "") + v.witness[i];
        msg += ")";
      }
      throw InvalidModel(msg);
    }
  }
  return m;
}

std::string model_to_json(const PlausibilityModel& m) {
  json j;
  j["worlds"] = json::array();
  for (const World& w : m.worlds) {
    json jw;
    jw["id"] = w.id;
    jw["atoms"] = w.atoms;
    j["worlds"].push_back(jw);
  }
  j["leq"] = json::array();
  for (const auto& [a, b] : m.leq) j["leq"].push_back(json::array({a, b}));
  if (m.point) j["point"] = *m.point;
  return j.dump(2);
}

}  // namespace abducer
