#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtcalc/invariant.hpp"

namespace rtcalc {

struct SuiteResult {
  std::string name;
  double max_residual = 0;
  double tol = 0;
  bool passed = true;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  uint64_t seed = 7;
  int samples = 20;          // random draws per property where not fixed below
  int relation_draws = 50;   // random alphas for the relation check
  int ambi_tangles = 100;    // random (2,2)-tangles per color
  Tolerances tol{};
};

// Each suite works at a single r.
SuiteResult suite_qarith(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_relations(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_coproduct_power(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_simplicity(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_braiding_inverse(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_braiding_linearity(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_hexagons(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_balancing(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_snake(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_pivotal(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_ribbon_scalar(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_twist_oracle(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_s_prime(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_trefoil(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_cut_independence(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_ambidextrous(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_two_sided(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_eta_ratio(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_qdim(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_multiplicity_free(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_connect_sum(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_alexander_matrix(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_alexander_links(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_figure8(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_cutting(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_markov(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_rotate(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_framing(const GlobalParams& p, const VerifyOptions& o);
SuiteResult suite_round_trip(const GlobalParams& p, const VerifyOptions& o);

/// Every suite at one r, in a fixed order.
std::vector<SuiteResult> run_all(const GlobalParams& p, const VerifyOptions& o);

}  // namespace rtcalc
