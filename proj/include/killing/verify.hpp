#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace killing {

/// One line of a verification run.
struct Check {
  std::string suite;
  std::string name;
  std::size_t n = 0;
  std::optional<unsigned> p;
  std::optional<std::size_t> m;
  std::optional<unsigned> q_max;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

/// Suite names accepted by run_suites, in canonical order, without "all".
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

struct VerifyRequest {
  std::vector<std::string> suites;  // "all" expands to every suite
  std::vector<std::size_t> ns;
  std::vector<unsigned> ps;
  std::vector<std::size_t> ms;  // empty: every m in 0..n
  unsigned q_max = 4;
};

/// Runs every selected check on up to `jobs` threads; the output order is
/// fixed by the request.
std::vector<Check> run_suites(const VerifyRequest& request, int jobs = 1);

// Individual checks.
Check check_sym_ccr(std::size_t n, unsigned p);
Check check_hermite_ccr(std::size_t n, unsigned q);
Check check_ladder_adjoints(std::size_t n, unsigned p, unsigned q_max);
Check check_eigen_identity(std::size_t n, unsigned p, unsigned q);
Check check_injectivity(std::size_t n, unsigned p, unsigned q);
Check check_closed_form(std::size_t n);

}  // namespace killing
