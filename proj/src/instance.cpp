#include "cfgflow/instance.hpp"

#include "cfgflow/two_step_flow.hpp"

#include <json.hpp>

#include <set>

namespace cfgflow {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::ValidationError, message, path);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) invalid(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path + "/" + key, "missing field");
  return *it;
}

Coalition read_coalition(const json& j, int n, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected a list of agents");
  Coalition c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& a = j[k];
    if (!a.is_number_integer()) invalid(path + "/" + std::to_string(k), "agent must be an integer");
    const int i = a.get<int>();
    if (i < 1 || i > n)
      throw Error(ErrorKind::UnknownAgent, "agent " + std::to_string(i) + " is outside 1.." + std::to_string(n),
                  path + "/" + std::to_string(k));
    c = c | Coalition::singleton(i);
  }
  return c;
}

Rational read_worth(const json& j, const std::string& path) {
  if (!j.is_string()) invalid(path, "worth must be a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), path);
  }
}

json coalition_json(Coalition c) { return json(c.agents()); }

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  Instance inst;
  const json& n = field(doc, "n", "");
  if (!n.is_number_integer() || n.get<int>() < 1 || n.get<int>() > kMaxAgents)
    invalid("/n", "n must be an integer in 1.." + std::to_string(kMaxAgents));
  inst.n = n.get<int>();

  const json& blocks = field(doc, "blocks", "");
  if (!blocks.is_array() || blocks.empty()) invalid("/blocks", "expected a non-empty list of blocks");
  if (blocks.size() > kMaxComponents)
    invalid("/blocks", "at most " + std::to_string(kMaxComponents) + " blocks are supported");
  Coalition covered;
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    const std::string path = "/blocks/" + std::to_string(q);
    const Coalition ground = read_coalition(field(blocks[q], "ground", path), inst.n, path + "/ground");
    const json& feasible = field(blocks[q], "feasible", path);
    if (!feasible.is_array()) invalid(path + "/feasible", "expected a list of coalitions");
    std::vector<Coalition> family;
    for (std::size_t k = 0; k < feasible.size(); ++k)
      family.push_back(read_coalition(feasible[k], inst.n, path + "/feasible/" + std::to_string(k)));
    try {
      inst.blocks.push_back(validate_set_system(ground, family));
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), path);
    }
    covered = covered | ground;
  }
  if (covered != Coalition::first(inst.n))
    throw Error(ErrorKind::CoverageViolation, "blocks cover " + to_string(covered) + ", not 1.." + std::to_string(inst.n),
                "/blocks");

  if (auto it = doc.find("game"); it != doc.end()) {
    if (!it->is_array()) invalid("/game", "expected a list of entries");
    std::set<Profile> seen;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string path = "/game/" + std::to_string(k);
      const json& entry = (*it)[k];
      const json& profile = field(entry, "profile", path);
      if (!profile.is_array() || profile.size() != inst.blocks.size())
        invalid(path + "/profile", "profile must have one coalition per block");
      GameEntry e;
      for (std::size_t q = 0; q < profile.size(); ++q) {
        const std::string ppath = path + "/profile/" + std::to_string(q);
        const Coalition c = read_coalition(profile[q], inst.n, ppath);
        if (!inst.blocks[q].contains(c))
          throw Error(ErrorKind::InfeasibleCoalition, to_string(c) + " is not feasible in block " + std::to_string(q + 1),
                      ppath);
        e.profile.push_back(c);
      }
      e.worth = read_worth(field(entry, "worth", path), path + "/worth");
      if (union_map(e.profile).empty() && e.worth != 0) invalid(path + "/worth", "worth of the empty profile must be 0");
      if (!seen.insert(e.profile).second) invalid(path + "/profile", "duplicate profile");
      inst.game.push_back(std::move(e));
    }
  }

  if (auto it = doc.find("coalition_game"); it != doc.end()) {
    if (!it->is_array()) invalid("/coalition_game", "expected a list of entries");
    std::set<Coalition> seen;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string path = "/coalition_game/" + std::to_string(k);
      CoalitionEntry e;
      e.coalition = read_coalition(field((*it)[k], "coalition", path), inst.n, path + "/coalition");
      e.worth = read_worth(field((*it)[k], "worth", path), path + "/worth");
      if (e.coalition.empty() && e.worth != 0) invalid(path + "/worth", "worth of the empty coalition must be 0");
      if (!seen.insert(e.coalition).second) invalid(path + "/coalition", "duplicate coalition");
      inst.coalition_game.push_back(e);
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["n"] = inst.n;
  doc["blocks"] = json::array();
  for (const SetSystem& s : inst.blocks) {
    json fam = json::array();
    for (Coalition c : s.members()) fam.push_back(coalition_json(c));
    doc["blocks"].push_back({{"ground", coalition_json(s.ground())}, {"feasible", fam}});
  }
  if (!inst.game.empty()) {
    doc["game"] = json::array();
    for (const GameEntry& e : inst.game) {
      json prof = json::array();
      for (Coalition c : e.profile) prof.push_back(coalition_json(c));
      doc["game"].push_back({{"profile", prof}, {"worth", to_string(e.worth)}});
    }
  }
  if (!inst.coalition_game.empty()) {
    doc["coalition_game"] = json::array();
    for (const CoalitionEntry& e : inst.coalition_game)
      doc["coalition_game"].push_back({{"coalition", coalition_json(e.coalition)}, {"worth", to_string(e.worth)}});
  }
  return doc.dump(2) + "\n";
}

ProductDigraph build_instance_product(const Instance& inst, std::size_t size_cap) {
  return build_product(inst.blocks, Coalition::first(inst.n), size_cap);
}

Game resolve_game(const ProductDigraph& pd, const Instance& inst) {
  Game g(static_cast<Eigen::Index>(pd.vertex_count()));
  std::vector<bool> set(pd.vertex_count(), false);
  g[0] = 0;
  set[0] = true;
  for (std::size_t k = 0; k < inst.game.size(); ++k) {
    auto v = pd.vertex_of(inst.game[k].profile);
    if (!v) invalid("/game/" + std::to_string(k) + "/profile", "profile is not a vertex of the product digraph");
    g[static_cast<Eigen::Index>(*v)] = inst.game[k].worth;
    set[*v] = true;
  }
  for (std::size_t v = 0; v < pd.vertex_count(); ++v)
    if (!set[v]) throw Error(ErrorKind::MissingWorth, "no worth for profile " + profile_string(pd, v), "/game");
  return g;
}

CoalitionGame coalition_worths(const Instance& inst) {
  CoalitionGame v0;
  for (const CoalitionEntry& e : inst.coalition_game) v0.emplace(e.coalition, e.worth);
  return v0;
}

}  // namespace cfgflow
