#include "dsop/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dsop/errors.hpp"

namespace dsop {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void allow_keys(const json& obj, const std::string& where, std::set<std::string> keys) {
  if (!obj.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!keys.count(key)) throw ValidationError("unknown key '" + key + "' in " + where);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + " is missing '" + key + "'");
  return *it;
}

Rational rational_field(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw ValidationError(where + "." + key + " must be a string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(where + "." + key + ": " + e.what());
  }
}

ExtReal endpoint(const json& v, const std::string& where) {
  if (!v.is_string()) throw ValidationError(where + " must be a string");
  const auto s = v.get<std::string>();
  if (s == "inf" || s == "+inf") return ExtReal::plus_infinity();
  if (s == "-inf") return ExtReal::minus_infinity();
  return parse_rational(s);
}

std::string endpoint_string(const ExtReal& e) {
  switch (e.kind()) {
    case ExtReal::Kind::minus_infinity: return "-inf";
    case ExtReal::Kind::plus_infinity: return "inf";
    default: return to_string(e.value());
  }
}

}  // namespace

ConfigDoc parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("config syntax error at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  allow_keys(root, "config", {"measure", "masses", "mode"});

  ConfigDoc doc;
  const json& measure = field(root, "measure", "config");
  if (!measure.is_object()) throw ValidationError("measure must be an object");
  const json& type = field(measure, "type", "measure");
  if (type == "laguerre") {
    allow_keys(measure, "measure", {"type", "alpha"});
    doc.measure = LaguerreDoc{rational_field(measure, "alpha", "measure")};
  } else if (type == "moments") {
    allow_keys(measure, "measure", {"type", "values", "hull"});
    MomentsDoc m;
    const json& values = field(measure, "values", "measure");
    if (!values.is_array()) throw ValidationError("measure.values must be an array");
    for (const auto& v : values) {
      if (!v.is_string()) throw ValidationError("measure.values entries must be strings");
      m.values.push_back(parse_rational(v.get<std::string>()));
    }
    const json& hull = field(measure, "hull", "measure");
    if (!hull.is_array() || hull.size() != 2) throw ValidationError("measure.hull must be a pair");
    m.lo = endpoint(hull[0], "measure.hull[0]");
    m.hi = endpoint(hull[1], "measure.hull[1]");
    doc.measure = std::move(m);
  } else {
    throw ValidationError("measure.type must be \"laguerre\" or \"moments\"");
  }

  if (root.contains("masses")) {
    const json& masses = root["masses"];
    if (!masses.is_array()) throw ValidationError("masses must be an array");
    for (std::size_t i = 0; i < masses.size(); ++i) {
      const std::string where = "masses[" + std::to_string(i) + "]";
      allow_keys(masses[i], where, {"c", "order", "lambda"});
      const json& order = field(masses[i], "order", where);
      if (!order.is_number_integer() || order.get<long long>() < 0)
        throw ValidationError(where + ".order must be a nonnegative integer");
      MassTerm m{rational_field(masses[i], "c", where), order.get<std::size_t>(),
                 rational_field(masses[i], "lambda", where)};
      if (m.lambda < 0) throw ValidationError("lambda must be nonnegative");
      doc.masses.push_back(std::move(m));
    }
  }

  if (root.contains("mode")) {
    const json& mode = root["mode"];
    if (mode == "exact")
      doc.mode = Mode::exact;
    else if (mode == "float")
      doc.mode = Mode::floating;
    else
      throw ValidationError("mode must be \"exact\" or \"float\"");
  }
  return doc;
}

ConfigDoc load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ConfigDoc& doc) {
  nlohmann::ordered_json root;
  if (const auto* l = std::get_if<LaguerreDoc>(&doc.measure)) {
    root["measure"] = {{"type", "laguerre"}, {"alpha", to_string(l->alpha)}};
  } else {
    const auto& m = std::get<MomentsDoc>(doc.measure);
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : m.values) values.push_back(to_string(v));
    root["measure"] = {{"type", "moments"},
                       {"values", values},
                       {"hull", nlohmann::ordered_json::array({endpoint_string(m.lo), endpoint_string(m.hi)})}};
  }
  auto masses = nlohmann::ordered_json::array();
  for (const auto& m : doc.masses)
    masses.push_back({{"c", to_string(m.c)}, {"order", m.order}, {"lambda", to_string(m.lambda)}});
  root["masses"] = masses;
  root["mode"] = doc.mode == Mode::exact ? "exact" : "float";
  return root.dump(2) + "\n";
}

SobolevSpec to_spec(const ConfigDoc& doc) {
  try {
    if (const auto* l = std::get_if<LaguerreDoc>(&doc.measure)) {
      if (l->alpha <= -1) throw ValidationError("alpha must be greater than -1");
      if (doc.mode == Mode::exact) {
        if (l->alpha.get_den() != 1 || l->alpha < 0)
          throw ValidationError("exact mode needs an integer alpha >= 0");
        return SobolevSpec(LaguerreParam::exact(l->alpha.get_num().get_si()), doc.masses);
      }
      return SobolevSpec(LaguerreParam::floating(to_double(l->alpha)), doc.masses);
    }
    const auto& m = std::get<MomentsDoc>(doc.measure);
    if (!(m.lo <= m.hi)) throw ValidationError("measure.hull must satisfy lo <= hi");
    return SobolevSpec(MomentMeasure{m.values, ExtInterval::closed(m.lo, m.hi)}, doc.masses);
  } catch (const PreconditionError& e) {
    throw ValidationError(e.what());
  }
}

}  // namespace dsop
