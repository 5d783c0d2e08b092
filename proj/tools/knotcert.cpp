#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "knotcert/castle.hpp"
#include "knotcert/certify.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/seifert_graph.hpp"
#include "knotcert/skein.hpp"
#include "knotcert/template.hpp"

using namespace kc;
using nlohmann::json;

namespace {

struct RunConfig {
  std::optional<std::string> braid;
  std::string template_path, placement_path;
  std::string strategy = "descending";
  std::uint64_t seed = 0;
  std::string format;
  std::vector<std::string> checks;
  std::string oracle;
  std::string what = "seifert-graph";
};

struct Input {
  std::string label;
  Template t;
  BraidPlacement pi;
  Diagram d;
  BoxIndex box;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

Input load(const RunConfig& cfg) {
  Input in;
  bool have_t = !cfg.template_path.empty() || !cfg.placement_path.empty();
  if (cfg.braid.has_value() == have_t) throw InputError("give exactly one of --braid or --template/--placement");
  if (cfg.braid) {
    in.label = "braid:" + *cfg.braid;
    std::tie(in.t, in.pi) = alexander_closure(BraidWord::parse(*cfg.braid));
  } else {
    if (cfg.template_path.empty() || cfg.placement_path.empty())
      throw InputError("--template and --placement go together");
    in.label = "template:" + cfg.template_path + " placement:" + cfg.placement_path;
    in.t = template_from_json(read_json(cfg.template_path));
    in.pi = placement_from_json(read_json(cfg.placement_path), in.t);
  }
  auto errs = validate(in.t, in.pi);
  if (!errs.empty()) {
    std::string msg = "invalid template:";
    for (auto& e : errs) msg += " " + e + ";";
    throw InputError(msg);
  }
  std::tie(in.d, in.box) = build_diagram(in.t, in.pi);
  return in;
}

Laurent2 compute(const RunConfig& cfg, const Input& in) {
  const auto& s = cfg.strategy;
  if (s == "special-x") return special_homfly(in.t, in.pi, Flavor::X);
  if (s == "special-y") return special_homfly(in.t, in.pi, Flavor::Y);
  TreeOptions o;
  o.seed = cfg.seed;
  o.strategy = s == "x" ? Strategy::x_coherent : s == "y" ? Strategy::y_coherent : Strategy::descending;
  if (s == "descending" && cfg.seed == 0) return homfly(in.d);
  return skein_sum(in.d, o);
}

json checks_json(const RunConfig& cfg, const Input& in) {
  json j = json::object();
  for (const auto& c : cfg.checks) {
    if (c == "knitted") {
      j[c] = is_knitted(in.t);
    } else if (c == "homogeneous") {
      j[c] = is_homogeneous(in.d);
    } else {
      j[c] = classify(in.d, std::make_pair(in.t, in.pi)).locally_twisted;
    }
  }
  return j;
}

// returns false when the oracle disagrees
bool oracle_report(const RunConfig& cfg, const Input& in, const Laurent2& p, json& out) {
  if (cfg.oracle.empty()) return true;
  Laurent1 v = jones_oracle(in.d);
  Laurent1 sub = homfly_to_jones(p);
  out["jones"] = {{"bracket", v.str()}, {"from_homfly", sub.str()}, {"agree", v == sub}};
  return v == sub;
}

void print_extras(const json& extras) {
  if (extras.contains("checks"))
    for (auto& [k, v] : extras["checks"].items()) std::cout << "check " << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  if (extras.contains("jones"))
    std::cout << "jones: " << extras["jones"]["bracket"].get<std::string>()
              << (extras["jones"]["agree"].get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
}

int cmd_homfly(const RunConfig& cfg) {
  Input in = load(cfg);
  Laurent2 p = compute(cfg, in);
  json extras = json::object();
  if (!cfg.checks.empty()) extras["checks"] = checks_json(cfg, in);
  bool ok = oracle_report(cfg, in, p, extras);
  if (cfg.format == "json") {
    json j = {{"input", in.label}, {"strategy", cfg.strategy}, {"polynomial", {{"text", p.str()}, {"terms", p.to_json()}}}};
    j.update(extras);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
    print_extras(extras);
  }
  return ok ? 0 : 4;
}

int cmd_certify(const RunConfig& cfg) {
  Input in = load(cfg);
  Laurent2 p = compute(cfg, in);
  auto r = mfw_report(in.d, p);
  auto tp = std::make_optional(std::make_pair(in.t, in.pi));
  Certificate c = certify(in.d, r, tp);
  std::optional<Theorem2Check> th2;
  if (is_knitted(in.t)) th2 = verify_theorem2(in.t, in.pi);
  json j = certificate_json(in.label, in.d, r, c, th2);
  if (!cfg.checks.empty()) j["checks"] = checks_json(cfg, in);
  bool ok = oracle_report(cfg, in, p, j);
  if (cfg.format == "text") {
    std::cout << "polynomial: " << p.str() << "\n";
    std::cout << "s=" << r.s << " writhe=" << r.writhe << " crossings=" << r.crossing_count << " e=" << r.e
              << " E=" << r.E << " M=" << r.M << "\n";
    std::cout << "optimal: " << (c.optimal ? "yes" : "no") << " (" << c.optimal_reason << ")\n";
    std::cout << "minimal: " << (c.minimal ? "yes" : "no") << " (" << c.minimal_reason << ")\n";
    if (c.braid_index) std::cout << "braid index: " << *c.braid_index << "\n";
    if (c.crossing_number) std::cout << "crossing number: " << *c.crossing_number << "\n";
    std::cout << "verdict: " << (c.issued() ? "certified" : "inconclusive") << "\n";
    print_extras(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
  if (!ok) return 4;
  return c.issued() ? 0 : 3;
}

int cmd_export(const RunConfig& cfg) {
  Input in = load(cfg);
  if (cfg.what == "seifert-graph") {
    std::cout << seifert_graph_dot(seifert_graph(in.d));
  } else if (cfg.what == "castle") {
    auto pr = find_appropriate_pair(in.d, in.box.outside);
    Castle k = build_castle(in.d, pr.circle, pr.edge);
    std::cout << castle_dot(k, find_traps(k));
  } else {
    ResolutionTree t;
    if (cfg.strategy == "special-x" || cfg.strategy == "special-y") {
      t = build_special_tree(in.t, in.pi, cfg.strategy == "special-x" ? Flavor::X : Flavor::Y).tree;
    } else {
      TreeOptions o;
      o.seed = cfg.seed;
      o.leaf_cap = 1u << 16;
      o.strategy = cfg.strategy == "x"   ? Strategy::x_coherent
                   : cfg.strategy == "y" ? Strategy::y_coherent
                                         : Strategy::descending;
      t = build_tree(in.d, o);
    }
    std::cout << tree_dot(t);
  }
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, const std::string& default_format) {
  cfg.format = default_format;
  sub->add_option("--braid", cfg.braid, "braid word, e.g. \"1 -2 1\"");
  sub->add_option("--template", cfg.template_path, "template JSON file");
  sub->add_option("--placement", cfg.placement_path, "placement JSON file");
  sub->add_option("--strategy", cfg.strategy)
      ->check(CLI::IsMember({"descending", "x", "y", "special-x", "special-y"}));
  sub->add_option("--seed", cfg.seed, "base-point seed (0 = smallest edge first)");
  sub->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_option("--check", cfg.checks)->check(CLI::IsMember({"locally-twisted", "homogeneous", "knitted"}));
  sub->add_option("--oracle", cfg.oracle)->check(CLI::IsMember({"jones"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcert: HOMFLY-PT polynomials and minimality certificates"};
  app.require_subcommand(1);
  RunConfig hc, cc, ec;
  auto* h = app.add_subcommand("homfly", "print the HOMFLY-PT polynomial");
  add_common(h, hc, "text");
  auto* c = app.add_subcommand("certify", "optimality / minimality certificate");
  add_common(c, cc, "json");
  auto* e = app.add_subcommand("export", "DOT export");
  add_common(e, ec, "dot");
  e->add_option("what", ec.what, "seifert-graph | castle | resolution-tree")
      ->check(CLI::IsMember({"seifert-graph", "castle", "resolution-tree"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (h->parsed()) return cmd_homfly(hc);
    if (c->parsed()) return cmd_certify(cc);
    return cmd_export(ec);
  } catch (const InputError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 4;
  }
}
