#pragma once

// Seeded property suites. Each returns case and failure counts plus the
// largest deviation seen; the acceptance binary and `torusquant verify` share them.

#include <cstdint>
#include <string>
#include <vector>

namespace tq::verify {

struct Options {
  std::uint64_t seed = 20240611;
  double tolerance = 1e-9;
  double oracle_tolerance = 1e-12;
  bool details = false;  // per-case lines where a suite has something to say
};

struct Report {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  double max_error = 0;
  std::string first_failure;
  std::vector<std::string> details;

  bool passed() const { return cases > 0 && failures == 0; }
};

Report unitarity(const Options& opt, int cases = 200);
Report triple(const Options& opt, int cases = 100);
Report corrected(const Options& opt, int cases = 100);
Report oracle(const Options& opt);
Report gauss(const Options& opt, int cases = 100);
Report tau_axioms(const Options& opt, int cases = 200);
Report mu_coboundary(const Options& opt, int cases = 100);
Report heisenberg(const Options& opt);
Report sp_mp(const Options& opt);
Report counting(const Options& opt);

/// Suite names in acceptance order: unitarity, triple, corrected, oracle,
/// gauss, tau, mu, heisenberg, spmp, counting.
const std::vector<std::string>& suite_names();
/// Throws Error(ParseError) for an unknown name.
Report run(const std::string& name, const Options& opt);

}  // namespace tq::verify
