#include "cli.hpp"

#include "cfgflow/dot.hpp"
#include "cfgflow/instance.hpp"
#include "cfgflow/two_step_flow.hpp"
#include "cfgflow/values.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cfgflow {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kViolation = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ValidationError, "cannot read " + path, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t size_cap() {
  const char* env = std::getenv("CFGFLOW_SIZE_CAP");
  if (!env || !*env) return kDefaultSizeCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (*end != '\0' || cap == 0) throw Error(ErrorKind::InvalidArgument, "CFGFLOW_SIZE_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

json rational_json(const Rational& r) { return to_string(r); }

json exact_and_decimal(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", to_decimal(r)}}; }

json profile_json(const ProductDigraph& pd, std::size_t v) {
  json p = json::array();
  for (std::size_t q = 0; q < pd.factor_count(); ++q) p.push_back(pd.part(v, q).agents());
  return p;
}

json payoff_json(const Payoff& pay, Coalition agents) {
  json out = json::object();
  for (int i : agents.agents()) out[std::to_string(i)] = exact_and_decimal(pay[i - 1]);
  return out;
}

json flow_table(const ProductDigraph& pd, const Flow& f) {
  json rows = json::array();
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Edge& e = pd.dag().edge(id);
    rows.push_back({{"tail", profile_json(pd, e.tail)},
                    {"head", profile_json(pd, e.head)},
                    {"factor", pd.edge_info(id).factor + 1},
                    {"movers", pd.edge_info(id).movers.agents()},
                    {"flow", rational_json(f[static_cast<Eigen::Index>(id)])}});
  }
  return rows;
}

Profile read_profile(const json& j, const ProductDigraph& pd, const std::string& path) {
  if (!j.is_array() || j.size() != pd.factor_count())
    throw Error(ErrorKind::ValidationError, "profile must have one coalition per block", path);
  Profile p;
  for (std::size_t q = 0; q < j.size(); ++q) {
    if (!j[q].is_array()) throw Error(ErrorKind::ValidationError, "expected a list of agents", path);
    std::vector<int> agents;
    for (const json& a : j[q]) {
      if (!a.is_number_integer()) throw Error(ErrorKind::ValidationError, "agent must be an integer", path);
      agents.push_back(a.get<int>());
    }
    p.push_back(Coalition::of(agents));
  }
  return p;
}

// {"edges": [{"tail": profile, "head": profile, "flow": "p/q"}]}; unlisted edges carry 0.
Flow read_flow(const std::string& path, const ProductDigraph& pd) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what(), path);
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw Error(ErrorKind::ValidationError, "flow file needs an \"edges\" list", "/edges");
  Flow f = zeros<Rational>(static_cast<Eigen::Index>(pd.edge_count()));
  for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
    const json& row = doc["edges"][k];
    const std::string p = "/edges/" + std::to_string(k);
    if (!row.is_object() || !row.contains("tail") || !row.contains("head") || !row.contains("flow") ||
        !row["flow"].is_string())
      throw Error(ErrorKind::ValidationError, "edge entry needs tail, head and a string flow", p);
    auto tail = pd.vertex_of(read_profile(row["tail"], pd, p + "/tail"));
    auto head = pd.vertex_of(read_profile(row["head"], pd, p + "/head"));
    std::optional<std::size_t> id;
    if (tail && head) id = pd.dag().find_edge(*tail, *head);
    if (!id) throw Error(ErrorKind::ValidationError, "not an edge of the product digraph", p);
    f[static_cast<Eigen::Index>(*id)] = parse_rational(row["flow"].get<std::string>());
  }
  return f;
}

struct Loaded {
  Instance inst;
  ProductDigraph pd;
};

Loaded load(const std::string& path) {
  Loaded l{parse_instance(read_file(path)), {}};
  l.pd = build_instance_product(l.inst, size_cap());
  return l;
}

Game instance_game(const Loaded& l) {
  if (l.inst.game.empty() && !l.inst.coalition_game.empty()) return lift_game(l.pd, coalition_worths(l.inst));
  return resolve_game(l.pd, l.inst);
}

// Flow used by a command: a file, or the one behind a built-in method.
Flow method_flow(const ProductDigraph& pd, const std::string& method, const std::string& flow_path) {
  if (!flow_path.empty()) return read_flow(flow_path, pd);
  if (method == "az") return az_flow(pd);
  if (method == "two-step") return shapley_two_step_flow(pd);
  throw Error(ErrorKind::InvalidArgument, "method " + method + " needs --flow <file>");
}

json build_report(const Loaded& l) {
  const ProductDigraph& pd = l.pd;
  std::size_t relevant_profiles = 0;
  for (std::size_t v = 0; v < pd.vertex_count(); ++v) relevant_profiles += pd.is_relevant(v) ? 1 : 0;
  json factors = json::array();
  for (std::size_t q = 0; q < pd.factor_count(); ++q) {
    const CoveringDigraph& f = pd.factor(q);
    const Classification c = classify(f.system());
    json members = json::array();
    for (Coalition m : f.system().members()) members.push_back(m.agents());
    factors.push_back({{"ground", f.system().ground().agents()},
                       {"feasible", members},
                       {"edges", f.dag().edge_count()},
                       {"maximal_paths", count_paths(f.dag()).total_maximal.str()},
                       {"regular", c.is_regular},
                       {"convex_geometry", c.is_convex_geometry},
                       {"augmenting", c.is_augmenting}});
  }
  json agents = json::array();
  for (int i : pd.agents().agents()) {
    const Subdigraph sub = agent_subdigraph(pd, i);
    agents.push_back({{"agent", i}, {"edges", sub.edges.size()}, {"components", components(pd, sub).size()}});
  }
  return {{"command", "build"},
          {"vertices", pd.vertex_count()},
          {"edges", pd.edge_count()},
          {"relevant_profiles", relevant_profiles},
          {"relevant_edges", relevant_edges(pd).size()},
          {"factors", factors},
          {"agents", agents}};
}

json value_report(const Loaded& l, const std::string& method, const std::string& flow_path) {
  const Game g = instance_game(l);
  Payoff pay;
  Flow f;
  if (method == "az") {
    pay = az_value(l.pd, g);
    f = az_flow(l.pd);
  } else if (method == "two-step") {
    std::vector<Flow> factors;
    for (std::size_t q = 0; q < l.pd.factor_count(); ++q) factors.push_back(uniform_path_flow(l.pd.factor(q).dag()));
    pay = two_step_value(l.pd, g, shapley_hypercube_flow(l.pd.factor_count()), factors);
    f = compose_two_step_flow(l.pd, shapley_hypercube_flow(l.pd.factor_count()), factors);
  } else {
    f = method_flow(l.pd, method, flow_path);
    pay = flow_method_value(l.pd, g, f);
  }
  return {{"command", "value"},
          {"method", method},
          {"payoff", payoff_json(pay, l.pd.agents())},
          {"total", exact_and_decimal(pay.sum())},
          {"worth_of_configuration", exact_and_decimal(g[static_cast<Eigen::Index>(l.pd.vertex_count() - 1)])},
          {"flow", flow_table(l.pd, f)}};
}

json axiom_json(const AxiomCheck& c, const ProductDigraph& pd) {
  json out = {{"holds", c.holds}};
  if (c.witness) out["witness"] = edge_string(pd, *c.witness);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

json check_report(const Loaded& l, const std::string& axioms, const std::string& method, const std::string& flow_path,
                  bool& violated) {
  const ProductDigraph& pd = l.pd;
  const Flow f = method_flow(pd, method, flow_path);
  json results = json::object();
  auto record = [&](const std::string& name, json r) {
    violated = violated || !r["holds"].get<bool>();
    results[name] = std::move(r);
  };
  std::optional<ValueAudit> audit;
  auto value_audit = [&]() -> const ValueAudit& {
    if (!audit) {
      std::mt19937_64 rng(20240601);
      auto sample = audit_sample(pd, rng, 20);
      audit = audit_value(pd, [&](const Game& g) { return flow_method_value(pd, g, f); }, sample);
    }
    return *audit;
  };
  for (const std::string& a : split_list(axioms)) {
    if (a == "unitary") {
      const auto c = check_flow(pd.dag(), f);
      json r = {{"holds", c.is_unitary}, {"value", to_string(c.value)}};
      if (!c.violations.empty()) r["witness"] = profile_string(pd, c.violations.front());
      record(a, r);
    } else if (a == "null-flow") {
      record(a, axiom_json(check_null_flow_nonrelevant(pd, f), pd));
    } else if (a == "proportionality") {
      record(a, axiom_json(check_flow_proportionality(pd, f), pd));
    } else if (a == "intracoalitional-anonymity") {
      record(a, axiom_json(check_intracoalitional_anonymity(pd, f), pd));
    } else if (a == "coalitional-anonymity") {
      record(a, axiom_json(check_coalitional_anonymity(pd, f), pd));
    } else if (a == "efficiency" || a == "null-agent" || a == "linearity") {
      require_unitary(pd.dag(), f, "flow");
      const ValueAudit& r = value_audit();
      const bool holds = a == "efficiency" ? r.efficiency : a == "null-agent" ? r.null_agent : r.linearity;
      record(a, {{"holds", holds}, {"witnesses", r.witnesses}});
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown axiom '" + a + "'", "--axioms");
    }
  }
  return {{"command", "check"}, {"method", flow_path.empty() ? method : "flow-file"}, {"axioms", results}};
}

json reduce_report(const Loaded& l, const std::string& method, const std::string& flow_path, bool& violated) {
  const ProductDigraph& pd = l.pd;
  const ReachableSystem rs = reachable_system(pd);
  const ConditionCheck cond = check_reduction_condition(pd);
  const CoveringDigraph cover = covering_digraph(rs.coalitions);
  json coalitions = json::array();
  for (Coalition c : rs.coalitions.members()) coalitions.push_back(c.agents());
  json star = json::array(), extra = json::array(), missing = json::array();
  for (std::size_t id = 0; id < rs.star.edge_count(); ++id) {
    const Edge& e = rs.star.edge(id);
    json pair = {rs.coalitions.member(e.tail).agents(), rs.coalitions.member(e.head).agents()};
    star.push_back({{"tail", pair[0]}, {"head", pair[1]}, {"witness", edge_string(pd, rs.witness[id])}});
    if (!cover.dag().find_edge(e.tail, e.head)) extra.push_back(pair);
  }
  for (const Edge& e : cover.dag().edges())
    if (!rs.star.find_edge(e.tail, e.head))
      missing.push_back({rs.coalitions.member(e.tail).agents(), rs.coalitions.member(e.head).agents()});

  json out = {{"command", "reduce"},
              {"reachable_count", rs.coalitions.size()},
              {"reachable", coalitions},
              {"star_edges", star},
              {"star_not_covering", extra},
              {"covering_not_star", missing},
              {"condition", cond.holds}};
  if (cond.counterexample) out["counterexample"] = edge_string(pd, *cond.counterexample);
  if (!cond.holds) {
    violated = true;
    return out;
  }
  if (!l.inst.coalition_game.empty()) {
    std::string m = method;
    if (flow_path.empty() && m == "az") {
      for (std::size_t q = 0; q < pd.factor_count(); ++q)
        if (!pd.factor(q).system().is_power_set()) m = "two-step";
    }
    const InducedValue iv = induced_value(pd, method_flow(pd, m, flow_path), coalition_worths(l.inst));
    json sf = json::array();
    for (std::size_t id = 0; id < rs.star.edge_count(); ++id) {
      const Edge& e = rs.star.edge(id);
      sf.push_back({{"tail", rs.coalitions.member(e.tail).agents()},
                    {"head", rs.coalitions.member(e.head).agents()},
                    {"flow", rational_json(iv.star_flow[static_cast<Eigen::Index>(id)])}});
    }
    out["induced"] = {{"method", flow_path.empty() ? m : "flow-file"},
                      {"payoff", payoff_json(iv.pay, pd.agents())},
                      {"star_flow", sf}};
  }
  return out;
}

std::string dot_report(const Loaded& l, const std::string& digraph, std::size_t factor, bool with_flow,
                       const std::string& method, const std::string& flow_path) {
  const ProductDigraph& pd = l.pd;
  if (digraph == "hypercube") {
    const ProductDigraph cube = hypercube(pd.factor_count());
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < cube.vertex_count(); ++v)
      labels.push_back("R" + to_string(IndexSet(static_cast<std::uint32_t>(v))));
    std::optional<RationalVector> f;
    if (with_flow) f = shapley_hypercube_flow(pd.factor_count());
    return export_dot(cube.dag(), labels, f, "hypercube");
  }
  if (digraph == "factor") {
    if (factor < 1 || factor > pd.factor_count())
      throw Error(ErrorKind::InvalidArgument, "--factor must lie in 1.." + std::to_string(pd.factor_count()), "--factor");
    const CoveringDigraph& fd = pd.factor(factor - 1);
    std::vector<std::string> labels;
    for (Coalition c : fd.system().members()) labels.push_back(to_string(c));
    std::optional<RationalVector> f;
    if (with_flow) f = uniform_path_flow(fd.dag());
    return export_dot(fd.dag(), labels, f, "factor" + std::to_string(factor));
  }
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < pd.vertex_count(); ++v) labels.push_back(profile_string(pd, v));
  std::optional<RationalVector> f;
  if (with_flow) f = method_flow(pd, method, flow_path);
  return export_dot(pd.dag(), labels, f, "product");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrorKind::ValidationError, "cannot write " + out_path, out_path);
  file << text;
}

int exit_code(ErrorKind kind) {
  return kind == ErrorKind::AxiomViolated || kind == ErrorKind::ConditionViolated ? kViolation : kInvalid;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flow methods for games with generalized coalition configurations", "cfgflow"};
  app.require_subcommand(1);

  std::string instance, out_path, method = "two-step", flow_path, axioms, digraph = "product";
  std::size_t factor = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", instance, "instance JSON file")->required();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto* build = app.add_subcommand("build", "digraph statistics");
  add_common(build);

  auto* value = app.add_subcommand("value", "payoff vector and its flow");
  add_common(value);
  value->add_option("--method", method, "az, two-step or flow-file")
      ->check(CLI::IsMember({"az", "two-step", "flow-file"}));
  value->add_option("--flow", flow_path, "flow JSON file for --method flow-file");

  auto* check = app.add_subcommand("check", "axiom audit of a flow");
  add_common(check);
  check->add_option("--axioms", axioms,
                    "comma list of unitary, null-flow, proportionality, intracoalitional-anonymity, "
                    "coalitional-anonymity, efficiency, null-agent, linearity")
      ->required();
  check->add_option("--method", method, "az or two-step")->check(CLI::IsMember({"az", "two-step"}));
  check->add_option("--flow", flow_path, "flow JSON file");

  auto* reduce = app.add_subcommand("reduce", "reachable coalitions and induced value");
  add_common(reduce);
  reduce->add_option("--method", method, "az or two-step")->check(CLI::IsMember({"az", "two-step"}));
  reduce->add_option("--flow", flow_path, "flow JSON file");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  add_common(dot);
  dot->add_option("--digraph", digraph, "product, hypercube or factor")
      ->check(CLI::IsMember({"product", "hypercube", "factor"}));
  dot->add_option("--factor", factor, "factor index (1-based) for --digraph factor");
  dot->add_option("--method", method, "az or two-step")->check(CLI::IsMember({"az", "two-step"}));
  auto* dot_flow = dot->add_option("--flow", flow_path, "label edges with a flow; optional flow file")->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump() << "\n";
    return kInvalid;
  }

  try {
    const Loaded l = load(instance);
    bool violated = false;
    std::string text;
    if (*build) {
      text = build_report(l).dump(2) + "\n";
    } else if (*value) {
      if (method == "flow-file" && flow_path.empty())
        throw Error(ErrorKind::InvalidArgument, "--method flow-file needs --flow <file>", "--flow");
      text = value_report(l, method, flow_path).dump(2) + "\n";
    } else if (*check) {
      text = check_report(l, axioms, method, flow_path, violated).dump(2) + "\n";
    } else if (*reduce) {
      text = reduce_report(l, method, flow_path, violated).dump(2) + "\n";
    } else {
      text = dot_report(l, digraph, factor, dot_flow->count() > 0, method, flow_path);
    }
    emit(text, out_path, out);
    return violated ? kViolation : kOk;
  } catch (const Error& e) {
    json obj = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!e.path().empty()) obj["path"] = e.path();
    err << json{{"error", obj}}.dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << json{{"error", {{"kind", "InternalError"}, {"message", e.what()}}}}.dump() << "\n";
    return kInternal;
  }
}

}  // namespace cfgflow
