#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/skein.hpp"
#include "knotcert/template.hpp"

namespace kc {

struct MfwReport {
  Laurent2 polynomial;
  int e = 0, E = 0, m = 0, M = 0;
  int s = 0, writhe = 0, crossing_count = 0;
  bool eq2_lower_sharp = false;
  bool eq2_upper_sharp = false;
  bool mfw_sharp = false;
  bool eq5_sharp = false;
};

// throws InvariantError when a degree bound fails
MfwReport mfw_report(const Diagram& d);
MfwReport mfw_report(const Diagram& d, const Laurent2& p);

struct Certificate {
  bool optimal = false;
  bool minimal = false;
  std::optional<int> braid_index;
  std::optional<int> crossing_number;
  std::string optimal_reason;
  std::string minimal_reason;
  std::vector<std::string> reasons;
  std::vector<std::string> criteria;
  bool issued() const { return optimal || minimal; }
};

Certificate certify(const Diagram& d, const std::optional<std::pair<Template, BraidPlacement>>& tp = std::nullopt);
Certificate certify(const Diagram& d, const MfwReport& r,
                    const std::optional<std::pair<Template, BraidPlacement>>& tp = std::nullopt);

struct Theorem2Check {
  bool minus_applies = false, plus_applies = false;
  bool upper_sharp = false, lower_sharp = false;
  int E = 0, e = 0, upper_target = 0, lower_target = 0;
  std::string verdict;  // confirmed | refuted | not applicable
};

Theorem2Check verify_theorem2(const Template& t, const BraidPlacement& pi);

struct LeafRow {
  int leaf = 0;
  int omega = 0, gamma = 0, t = 0, t_minus = 0, t_plus = 0;
  int slack6 = 0;  // (-ω(D)+s-1) - (ω(U)-ω(D)+γ(U)-1)
  bool tight6 = false;
  bool top_degree_contributor = false;
  int sign = 1;  // (-1)^{t⁻}
  int self_crossings = 0;
};

struct LeafSpectrum {
  std::vector<LeafRow> rows;
  bool inequality6_holds = true;
  int positive_crossings = 0;
  bool all_positive_smoothed_leaf = false;
  int max_tight_t = -1;
  bool max_t_signs_agree = true;
};

LeafSpectrum leaf_spectrum(const ResolutionTree& t, const Diagram& d);

nlohmann::json certificate_json(const std::string& input, const Diagram& d, const MfwReport& r, const Certificate& c,
                                const std::optional<Theorem2Check>& th2 = std::nullopt);

}  // namespace kc
