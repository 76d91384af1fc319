// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rtcalc/verify.hpp"

using namespace rtcalc;

namespace {

using Suite = SuiteResult (*)(const GlobalParams&, const VerifyOptions&);

struct Criterion {
  int id;
  std::string title;
  std::vector<Suite> suites;
  std::vector<int> rs;
  double time_limit = 0;  // seconds, 0 for none
};

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int r = a; r <= b; ++r) v.push_back(r);
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "algebra relations on Verma modules", {suite_relations}, {2, 3, 5, 8}, 5},
      {2, "braiding inverse", {suite_braiding_inverse}, range(2, 5)},
      {3,
       "hexagons, balancing, snakes, pivotal structure, ribbon scalar",
       {suite_hexagons, suite_balancing, suite_snake, suite_pivotal, suite_ribbon_scalar},
       range(2, 5),
       60},
      {4, "twist scalar on Verma modules", {suite_twist_oracle}, range(2, 8)},
      {5, "S' closed form", {suite_s_prime}, {2, 3, 4, 5}},
      {6, "open trefoil at r=2, alpha=2", {suite_trefoil}, {2}},
      {7, "cut independence", {suite_cut_independence}, {2, 3}},
      {8, "ambidexterity of left and right closures", {suite_ambidextrous}, {2, 3}},
      {9, "eta rescaling", {suite_eta_ratio}, {2, 3}},
      {10, "quantum dimensions", {suite_qdim}, range(2, 5)},
      {11, "multiplicity-free decomposition", {suite_multiplicity_free}, range(2, 5)},
      {12, "connected sum", {suite_connect_sum}, {2}},
      {13, "Alexander skein relation", {suite_alexander_matrix, suite_alexander_links}, {2}},
      {14, "figure-eight knot", {suite_figure8}, {2, 3}},
  };

  VerifyOptions opts;
  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    double worst = 0;
    std::vector<std::string> notes;
    auto t0 = std::chrono::steady_clock::now();
    for (int r : c.rs) {
      GlobalParams p(r);
      for (Suite s : c.suites) {
        SuiteResult res;
        try {
          res = s(p, opts);
        } catch (const std::exception& e) {
          res.passed = false;
          res.detail = e.what();
        }
        ok = ok && res.passed;
        if (res.tol > 0) worst = std::max(worst, res.max_residual / res.tol);
        if (!res.detail.empty()) notes.push_back("r=" + std::to_string(r) + " " + res.name + ": " + res.detail);
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing;
    if (c.time_limit > 0) {
      if (secs >= c.time_limit) ok = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, " [%.2f s, limit %.0f s]", secs, c.time_limit);
      timing = buf;
    }
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.2e", worst);
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " (worst residual/tol " << ratio << ")"
              << timing << "\n";
    for (const auto& n : notes) std::cout << "     " << n << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
