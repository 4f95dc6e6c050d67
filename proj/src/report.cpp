#include "vform/report.hpp"

#include <sstream>

#include "json.hpp"

namespace vf::report {

using nlohmann::json;

LevelEntry level_entry(const LevelRecord& r) {
  LevelEntry e;
  e.level = to_string(r.level);
  e.dim = r.dim;
  e.det = to_string(r.det);
  e.verdict = to_string(r.psd.verdict);
  e.radical_dim = r.psd.radical_dim;
  if (r.psd.verdict == Definiteness::Indefinite) {
    for (const Q& x : r.psd.witness) e.witness.push_back(to_string(x));
    e.witness_value = to_string(r.psd.witness_value);
  }
  return e;
}

static void to_json(json& j, const LevelEntry& e) {
  j = json{{"level", e.level}, {"dim", e.dim}, {"det", e.det}, {"verdict", e.verdict}, {"radical_dim", e.radical_dim}};
  if (!e.witness.empty()) {
    j["witness"] = e.witness;
    j["witness_value"] = e.witness_value;
  }
  if (!e.basis.empty()) j["basis"] = e.basis;
}

static void from_json(const json& j, LevelEntry& e) {
  j.at("level").get_to(e.level);
  j.at("dim").get_to(e.dim);
  j.at("det").get_to(e.det);
  j.at("verdict").get_to(e.verdict);
  j.at("radical_dim").get_to(e.radical_dim);
  if (j.contains("witness")) j.at("witness").get_to(e.witness);
  if (j.contains("witness_value")) j.at("witness_value").get_to(e.witness_value);
  if (j.contains("basis")) j.at("basis").get_to(e.basis);
}

static void to_json(json& j, const IdentityEntry& e) {
  j = json{{"name", e.name},   {"anchor", e.anchor},     {"window", e.window},
           {"pairs", e.pairs}, {"failures", e.failures}, {"pass", e.pass}};
}

static void from_json(const json& j, IdentityEntry& e) {
  j.at("name").get_to(e.name);
  j.at("anchor").get_to(e.anchor);
  j.at("window").get_to(e.window);
  j.at("pairs").get_to(e.pairs);
  j.at("failures").get_to(e.failures);
  j.at("pass").get_to(e.pass);
}

std::string to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["levels"] = r.levels;
  j["identities"] = r.identities;
  j["outputs"] = r.outputs;
  j["verdict"] = r.verdict;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2);
}

Report from_json(const std::string& s) {
  json j = json::parse(s);
  Report r;
  j.at("command").get_to(r.command);
  j.at("params").get_to(r.params);
  j.at("levels").get_to(r.levels);
  j.at("identities").get_to(r.identities);
  j.at("outputs").get_to(r.outputs);
  j.at("verdict").get_to(r.verdict);
  j.at("wall_time_ms").get_to(r.wall_time_ms);
  return r;
}

static std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + v[i];
  return out;
}

std::string to_csv(const Report& r) {
  std::ostringstream o;
  o << "kind,name,dim,det,verdict,radical_dim,witness,witness_value\n";
  for (const auto& l : r.levels)
    o << "level," << l.level << ',' << l.dim << ',' << l.det << ',' << l.verdict << ',' << l.radical_dim << ','
      << join(l.witness, ' ') << ',' << l.witness_value << '\n';
  for (const auto& i : r.identities)
    o << "identity," << i.name << ",,," << (i.pass ? "Pass" : "Fail") << ",,," << '\n';
  for (const auto& [k, v] : r.outputs) o << "output," << k << ",,," << v << ",,,\n";
  o << "overall," << r.command << ",,," << r.verdict << ",,,\n";
  return o.str();
}

std::string to_text(const Report& r) {
  std::ostringstream o;
  o << r.command;
  for (const auto& [k, v] : r.params) o << ' ' << k << '=' << v;
  o << '\n';
  for (const auto& l : r.levels) {
    o << "  level " << l.level << ": dim " << l.dim << ", det " << l.det << ", " << l.verdict;
    if (l.radical_dim) o << ", radical " << l.radical_dim;
    if (!l.witness.empty()) o << ", witness (" << join(l.witness, ' ') << ") norm " << l.witness_value;
    o << '\n';
  }
  for (const auto& i : r.identities)
    o << "  " << (i.pass ? "PASS " : "FAIL ") << i.name << " [" << i.window << "] " << i.pairs - i.failures << '/'
      << i.pairs << '\n';
  for (const auto& [k, v] : r.outputs) o << "  " << k << " = " << v << '\n';
  o << "verdict: " << r.verdict << " (" << r.wall_time_ms << " ms)\n";
  return o.str();
}

}  // namespace vf::report
