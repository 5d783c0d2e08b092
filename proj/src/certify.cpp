#include "knotcert/certify.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"
#include "knotcert/seifert_graph.hpp"

namespace kc {

MfwReport mfw_report(const Diagram& d) { return mfw_report(d, homfly(d)); }

MfwReport mfw_report(const Diagram& d, const Laurent2& p) {
  if (d.empty()) throw InputError("empty diagram");
  MfwReport r;
  r.polynomial = p;
  auto st = diagram_stats(d);
  r.s = st.s;
  r.writhe = st.writhe;
  r.crossing_count = st.crossing_count;
  r.e = p.min_a(), r.E = p.max_a(), r.m = p.min_z(), r.M = p.max_z();
  int lo = -r.writhe - (r.s - 1), hi = -r.writhe + (r.s - 1);
  if (r.e < lo || r.E > hi) throw InvariantError("a-degree bound violated");
  if (r.M > r.crossing_count - r.s + 1) throw InvariantError("z-degree bound violated");
  r.eq2_lower_sharp = r.e == lo;
  r.eq2_upper_sharp = r.E == hi;
  r.mfw_sharp = (r.E - r.e) / 2 + 1 == r.s;
  r.eq5_sharp = r.M == r.crossing_count - r.s + 1;
  if (r.mfw_sharp != (r.eq2_lower_sharp && r.eq2_upper_sharp)) throw InvariantError("sharpness flags disagree");
  return r;
}

Certificate certify(const Diagram& d, const std::optional<std::pair<Template, BraidPlacement>>& tp) {
  return certify(d, mfw_report(d), tp);
}

Certificate certify(const Diagram& d, const MfwReport& r, const std::optional<std::pair<Template, BraidPlacement>>& tp) {
  Certificate c;
  auto k = classify(d, tp);
  int breadth = (r.E - r.e) / 2 + 1;
  if (r.mfw_sharp) {
    c.optimal = true;
    c.braid_index = r.s;
    c.optimal_reason = "a-breadth/2 + 1 = " + std::to_string(breadth) + " equals the Seifert circle count";
    c.criteria.push_back("mfw-sharp");
  } else {
    c.optimal_reason = "a-breadth/2 + 1 = " + std::to_string(breadth) + " < s = " + std::to_string(r.s);
  }
  if (c.optimal && k.homogeneous) {
    c.minimal = true;
    c.crossing_number = r.crossing_count;
    c.minimal_reason = "homogeneous optimal diagram";
    c.criteria.push_back("homogeneous+optimal");
    if (k.lth) c.criteria.push_back("locally-twisted-homogeneous");
  } else if (!k.homogeneous) {
    c.minimal_reason = "not homogeneous";
  } else {
    c.minimal_reason = "not optimal";
  }
  c.reasons = {c.optimal_reason, c.minimal_reason};
  return c;
}

Theorem2Check verify_theorem2(const Template& t, const BraidPlacement& pi) {
  if (!is_knitted(t)) throw InputError("template is not knitted");
  auto errs = validate(t, pi);
  if (!errs.empty()) throw InputError("template: " + errs[0]);
  Theorem2Check out;
  out.minus_applies = out.plus_applies = true;
  for (int a = 0; a < static_cast<int>(t.arcs.size()); ++a) {
    auto it = pi.find(a);
    BraidWord w = it == pi.end() ? BraidWord({}, t.arc_size(a)) : it->second;
    if (!locally_twisted_check(w, TwistMode::minus).ok) out.minus_applies = false;
    if (!locally_twisted_check(w, TwistMode::plus).ok) out.plus_applies = false;
  }
  Diagram d = build_diagram(t, pi).first;
  auto r = mfw_report(d);
  out.E = r.E, out.e = r.e;
  out.upper_target = -r.writhe + r.s - 1;
  out.lower_target = -r.writhe - r.s + 1;
  out.upper_sharp = r.E == out.upper_target;
  out.lower_sharp = r.e == out.lower_target;
  if (!out.minus_applies && !out.plus_applies)
    out.verdict = "not applicable";
  else if ((!out.minus_applies || out.upper_sharp) && (!out.plus_applies || out.lower_sharp))
    out.verdict = "confirmed";
  else
    out.verdict = "refuted";
  return out;
}

LeafSpectrum leaf_spectrum(const ResolutionTree& t, const Diagram& d) {
  LeafSpectrum sp;
  const int s = seifert_smooth(d).size();
  const int w = d.writhe();
  for (int c = 0; c < d.num_crossings(); ++c) sp.positive_crossings += d.sign(c) > 0;
  const int E = homfly(d).max_a();
  for (std::size_t i = 0; i < t.leaves.size(); ++i) {
    const auto& L = t.leaves[i];
    LeafRow r;
    r.leaf = static_cast<int>(i);
    r.omega = L.omega, r.gamma = L.gamma, r.t = L.t, r.t_minus = L.t_minus, r.t_plus = L.t_plus;
    r.slack6 = (-w + s - 1) - (L.omega - w + L.gamma - 1);
    r.tight6 = r.slack6 == 0;
    r.top_degree_contributor = r.tight6 && E == -w + s - 1;
    r.sign = (L.t_minus & 1) ? -1 : 1;
    r.self_crossings = L.self_crossings;
    if (r.slack6 < 0) sp.inequality6_holds = false;
    if (r.t_plus == sp.positive_crossings) sp.all_positive_smoothed_leaf = true;
    if (r.tight6) sp.max_tight_t = std::max(sp.max_tight_t, r.t);
    sp.rows.push_back(r);
  }
  int sign = 0;
  for (const auto& r : sp.rows) {
    if (!r.tight6 || r.t != sp.max_tight_t) continue;
    if (sign == 0) sign = r.sign;
    if (r.sign != sign) sp.max_t_signs_agree = false;
  }
  return sp;
}

nlohmann::json certificate_json(const std::string& input, const Diagram& d, const MfwReport& r, const Certificate& c,
                                const std::optional<Theorem2Check>& th2) {
  using nlohmann::json;
  auto st = diagram_stats(d);
  auto k = classify(d);
  json j;
  j["input"] = input;
  j["stats"] = {{"crossings", st.crossing_count},
                {"seifert_circles", st.s},
                {"writhe", st.writhe},
                {"components", st.component_count}};
  j["polynomial"] = {{"text", r.polynomial.str()}, {"terms", r.polynomial.to_json()}};
  j["e"] = r.e, j["E"] = r.E, j["m"] = r.m, j["M"] = r.M;
  j["flags"] = {{"eq2_lower_sharp", r.eq2_lower_sharp},
                {"eq2_upper_sharp", r.eq2_upper_sharp},
                {"mfw_sharp", r.mfw_sharp},
                {"eq5_sharp", r.eq5_sharp},
                {"homogeneous", k.homogeneous},
                {"positive", k.positive},
                {"negative", k.negative},
                {"alternating", k.alternating}};
  json v;
  v["optimal"] = c.optimal;
  v["minimal"] = c.minimal;
  v["braid_index"] = c.braid_index ? json(*c.braid_index) : json(nullptr);
  v["crossing_number"] = c.crossing_number ? json(*c.crossing_number) : json(nullptr);
  v["verdict"] = c.issued() ? "certified" : "inconclusive";
  if (th2) {
    v["locally_twisted"] = {{"minus", th2->minus_applies},
                            {"plus", th2->plus_applies},
                            {"upper_sharp", th2->upper_sharp},
                            {"lower_sharp", th2->lower_sharp},
                            {"verdict", th2->verdict}};
  }
  j["verdicts"] = v;
  j["reasons"] = c.reasons;
  j["criteria"] = c.criteria;
  return j;
}

}  // namespace kc
