#include "relgit/model.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace relgit {

using nlohmann::json;

namespace {

constexpr const char* kProblemFormat = "relgit-problem/1";

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Integer json_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    Rat q = parse_rat(j.get<std::string>());
    if (denominator(q) != 1) throw InputError(where + ": weight entries must be integers");
    return numerator(q);
  }
  throw InputError(where + ": weight entries must be integers");
}

WeightVector json_weight(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": weight must be an array");
  if (j.size() != rank)
    throw InputError(where + ": rank mismatch, weight has " + std::to_string(j.size()) +
                     " entries but torus_rank is " + std::to_string(rank));
  std::vector<Integer> entries;
  for (const auto& e : j) entries.push_back(json_integer(e, where));
  return WeightVector(std::move(entries));
}

std::vector<Variable> json_variables(const json& doc, const char* key, std::size_t rank) {
  std::vector<Variable> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) throw InputError(std::string("'") + key + "' must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    std::string name;
    json weight;
    if (item.is_object() && item.contains("name") && item.contains("weight")) {
      name = item.at("name").get<std::string>();
      weight = item.at("weight");
    } else if (item.is_array() && item.size() == 2 && item[0].is_string()) {
      name = item[0].get<std::string>();
      weight = item[1];
    } else {
      throw InputError(where + ": expected {\"name\": ..., \"weight\": [...]}");
    }
    out.push_back({name, json_weight(weight, rank, where + " '" + name + "'")});
  }
  return out;
}

json weight_json(const WeightVector& w) {
  json arr = json::array();
  for (const auto& e : w) {
    if (e >= std::numeric_limits<long long>::min() && e <= std::numeric_limits<long long>::max())
      arr.push_back(static_cast<long long>(e));
    else
      arr.push_back(e.str());
  }
  return arr;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

void GitProblem::validate() const {
  if (torus_rank == 0) throw InputError("torus_rank must be positive");
  if (fiber_vars.empty()) throw InputError("at least one fiber variable is required");
  std::set<std::string> names;
  for (std::size_t k = 0; k < variable_count(); ++k) {
    const auto& v = variable(k);
    if (!is_identifier(v.name)) throw InputError("bad variable name '" + v.name + "'");
    if (!names.insert(v.name).second) throw InputError("duplicate variable name '" + v.name + "'");
    if (v.weight.size() != torus_rank)
      throw InputError("rank mismatch for variable '" + v.name + "'");
  }
  if (linearization_shift.size() != torus_rank) throw InputError("rank mismatch for shift");
  for (const auto& f : ideal)
    for (const auto& t : f.terms())
      for (const auto& [name, e] : t.exponents)
        if (!names.count(name))
          throw InputError("ideal generator uses undeclared variable '" + name + "'");
}

GitProblem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("problem file syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file must contain a JSON object");

  try {
    if (doc.contains("format") && doc.at("format").get<std::string>() != kProblemFormat)
      throw InputError("unsupported problem format '" + doc.at("format").get<std::string>() + "'");
    if (doc.contains("group")) {
      std::string g = doc.at("group").get<std::string>();
      if (g != "torus")
        throw InputError("group '" + g + "' is not supported: only split tori G_m^r are handled");
    }
    if (!doc.contains("torus_rank") || !doc.at("torus_rank").is_number_integer() ||
        doc.at("torus_rank").get<long long>() <= 0)
      throw InputError("'torus_rank' must be a positive integer");

    GitProblem p;
    p.torus_rank = doc.at("torus_rank").get<std::size_t>();
    p.base_vars = json_variables(doc, "base", p.torus_rank);
    p.fiber_vars = json_variables(doc, "fiber", p.torus_rank);
    p.linearization_shift = doc.contains("shift")
                                ? json_weight(doc.at("shift"), p.torus_rank, "shift")
                                : WeightVector(p.torus_rank);
    if (doc.contains("ideal")) {
      for (const auto& g : doc.at("ideal")) p.ideal.push_back(Polynomial::parse(g.get<std::string>()));
    }
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file structure error: ") + e.what());
  }
}

std::string serialize_problem(const GitProblem& problem) {
  json doc;
  doc["format"] = kProblemFormat;
  doc["group"] = "torus";
  doc["torus_rank"] = problem.torus_rank;
  auto vars = [](const std::vector<Variable>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back({{"name", v.name}, {"weight", weight_json(v.weight)}});
    return arr;
  };
  doc["base"] = vars(problem.base_vars);
  doc["fiber"] = vars(problem.fiber_vars);
  doc["shift"] = weight_json(problem.linearization_shift);
  json ideal = json::array();
  for (const auto& f : problem.ideal) ideal.push_back(f.to_string());
  doc["ideal"] = ideal;
  return doc.dump(2) + "\n";
}

GitProblem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

void validate_point(const GitProblem& problem, const PointSample& p) {
  for (const auto& v : problem.base_vars)
    if (!p.base_values.count(v.name)) throw InputError("point is missing base variable '" + v.name + "'");
  for (const auto& v : problem.fiber_vars)
    if (!p.fiber_values.count(v.name)) throw InputError("point is missing fiber variable '" + v.name + "'");
  if (p.base_values.size() != problem.base_vars.size() ||
      p.fiber_values.size() != problem.fiber_vars.size())
    throw InputError("point assigns undeclared variables");
}

namespace {

PointSample assign(const GitProblem& problem, const std::vector<std::pair<std::string, Rat>>& kv) {
  PointSample p;
  for (const auto& [name, value] : kv) {
    bool found = false;
    for (const auto& v : problem.base_vars)
      if (v.name == name) {
        found = true;
        if (!p.base_values.emplace(name, value).second)
          throw InputError("variable '" + name + "' assigned twice");
      }
    for (const auto& v : problem.fiber_vars)
      if (v.name == name) {
        found = true;
        if (!p.fiber_values.emplace(name, value).second)
          throw InputError("variable '" + name + "' assigned twice");
      }
    if (!found) throw InputError("unknown variable '" + name + "' in point");
  }
  validate_point(problem, p);
  return p;
}

}  // namespace

PointSample parse_point(const GitProblem& problem, std::string_view text) {
  std::vector<std::pair<std::string, Rat>> kv;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InputError("bad point assignment '" + std::string(item) + "': expected name=value");
    std::string name(item.substr(0, eq));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    kv.emplace_back(name, parse_rat(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return assign(problem, kv);
}

PointSample parse_point_json(const GitProblem& problem, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("point file syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("point file must contain a JSON object");
  std::vector<std::pair<std::string, Rat>> kv;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    Rat value = it.value().is_string() ? parse_rat(it.value().get<std::string>())
              : it.value().is_number_integer() ? Rat(it.value().get<long long>())
              : throw InputError("point value for '" + it.key() + "' must be an integer or \"p/q\"");
    kv.emplace_back(it.key(), value);
  }
  return assign(problem, kv);
}

std::string point_to_string(const GitProblem& problem, const PointSample& p) {
  std::string out;
  for (std::size_t k = 0; k < problem.variable_count(); ++k) {
    const auto& name = problem.variable(k).name;
    const auto& values = problem.is_fiber(k) ? p.fiber_values : p.base_values;
    if (!out.empty()) out += ',';
    out += name + "=" + to_string(values.at(name));
  }
  return out;
}

bool check_on_ideal(const GitProblem& problem, const PointSample& p) {
  if (problem.ideal.empty()) return true;
  std::map<std::string, Rat> values = p.base_values;
  values.insert(p.fiber_values.begin(), p.fiber_values.end());
  for (const auto& f : problem.ideal)
    if (f.evaluate(values) != 0) return false;
  return true;
}

SupportPattern support(const PointSample& p) {
  SupportPattern s;
  for (const auto& [name, v] : p.base_values)
    if (v != 0) s.base_support.insert(name);
  for (const auto& [name, v] : p.fiber_values)
    if (v != 0) s.fiber_support.insert(name);
  if (s.fiber_support.empty()) throw ZeroSectionError();
  return s;
}

PointSample representative_point(const GitProblem& problem, const SupportPattern& pattern) {
  PointSample p;
  for (const auto& v : problem.base_vars) p.base_values[v.name] = pattern.base_support.count(v.name) ? 1 : 0;
  for (const auto& v : problem.fiber_vars) p.fiber_values[v.name] = pattern.fiber_support.count(v.name) ? 1 : 0;
  return p;
}

std::string pattern_to_string(const SupportPattern& pattern) {
  auto set = [](const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& n : s) out += (out.size() > 1 ? "," : "") + n;
    return out + "}";
  };
  return "base " + set(pattern.base_support) + " fiber " + set(pattern.fiber_support);
}

}  // namespace relgit
