// Acceptance driver: one PASS/FAIL line per criterion. A criterion passes when
// every check in it holds exactly and it finishes inside its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "geocrystal/charts.hpp"
#include "geocrystal/commands.hpp"
#include "geocrystal/slgroup.hpp"

using namespace geocrystal;

namespace {

constexpr std::uint64_t kSeed = cli::kDefaultSeed;

struct Outcome {
  int checks = 0;
  std::vector<std::string> failures;

  void add(const sl::IdentityReport& r) {
    ++checks;
    if (!r.holds) failures.push_back(r.identity + ": " + r.witness.value_or("no witness"));
  }
  void add(const cli::VerifyReport& r) {
    ++checks;
    if (!r.holds) failures.push_back(r.check + ": " + r.counterexample.dump());
  }
  template <class Range>
  void add_all(const Range& rs) {
    for (const auto& r : rs) add(r);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "Verma relations, group and A-chart, n=2,3", 60,
       [](Outcome& o) {
         for (int n = 2; n <= 3; ++n) {
           o.add_all(sl::verify_verma_all(n));
           o.add_all(charts::verify_verma_A_all(n));
         }
       }},
      {2, "unit action and gamma equivariance, n<=3", 10,
       [](Outcome& o) {
         for (int n = 1; n <= 3; ++n)
           for (int i = 1; i <= n; ++i) {
             o.add(sl::verify_unit_action(i, n));
             o.add(sl::verify_gamma_equivariance(i, n));
           }
       }},
      {3, "closed forms of f_i and varphi_i, n<=4", 30,
       [](Outcome& o) {
         for (int n = 1; n <= 4; ++n) o.add(charts::verify_f_varphi_closed(n));
       }},
      {4, "a-chart e-action equals the Gauss decomposition, n<=3", 60,
       [](Outcome& o) {
         for (int n = 1; n <= 3; ++n)
           for (int i = 1; i <= n; ++i) o.add(charts::verify_a_chart_action(i, n));
       }},
      {5, "positive structure with 100 positive points, n<=4", 10,
       [](Outcome& o) {
         for (int n = 1; n <= 4; ++n) o.add(charts::verify_positivity(n, 100, kSeed + n));
       }},
      {6, "B# crystal axioms and freeness, 1000 elements, n<=5", 10,
       [](Outcome& o) {
         for (int n = 1; n <= 5; ++n) o.add_all(cli::check_sharp_axioms(n, 1000, kSeed + n));
       }},
      {7, "tensor rule oracle, 500 cases, n<=4", 30,
       [](Outcome& o) {
         for (int n = 1; n <= 4; ++n) o.add(cli::check_tableau_oracle(n, 500, kSeed + n));
       }},
      {8, "tropical e-action equals the B# action, n=1,2,3", 120,
       [](Outcome& o) {
         for (int n = 1; n <= 3; ++n) o.add(cli::check_ud_main(n, kSeed + n));
       }},
      {9, "tropicalization agrees with the degree oracle, n=1,2,3", 60,
       [](Outcome& o) {
         for (int n = 1; n <= 3; ++n) o.add(cli::check_ud_soundness(n, kSeed + n));
       }},
      {10, "Weyl group action, 1000 elements, n<=4", 10,
       [](Outcome& o) {
         for (int n = 1; n <= 4; ++n) o.add(cli::check_weyl(n, 1000, kSeed + n));
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = o.failures.empty() && in_budget && o.checks > 0;
    failed += pass ? 0 : 1;

    char line[256];
    std::snprintf(line, sizeof line, "%s [%2d] %s: %d checks, %.2f s (budget %.0f s)", pass ? "PASS" : "FAIL", c.id,
                  c.title.c_str(), o.checks, secs, c.budget_s);
    std::cout << line << "\n";
    for (const auto& f : o.failures) std::cout << "       " << f << "\n";
    if (!in_budget) std::cout << "       over the time budget\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
