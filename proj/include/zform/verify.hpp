#pragma once
// Certification suite: a fixed catalog of commutation and straightening
// identities, each checked by exact coefficient comparison of truncated
// series, plus divided-power integrality sweeps over the lattice bases.
// Everything is exact rational arithmetic; the tolerance of every check is
// identically zero and is reported as such.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zform/discharge.hpp"

namespace zform {

// One catalog entry: a two-sided identity in the completed enveloping
// algebra, possibly quantified over a finite list of instances (index
// choices, probe generators).  Builders receive (order, instance) and must
// be pure: no shared mutable state, so entries can run concurrently.
struct IdentityEntry {
  std::string tag;
  AlgebraId algebra;
  std::string formula;  // human-readable statement of what is certified
  int default_order = 8;
  double cost_weight = 1.0;  // relative weight for the cost-ceiling estimate
  std::vector<std::string> instances;
  std::function<UEASeries(int, int)> lhs;
  std::function<UEASeries(int, int)> rhs;
};

// The full, deterministic catalog in fixed order.
const std::vector<IdentityEntry>& catalog();
// Lookup by tag; throws std::invalid_argument for unknown tags.
const IdentityEntry& find_entry(const std::string& tag);

struct FirstDiff {
  int deg_u = 0;
  int deg_v = 0;
  std::string lhs;
  std::string rhs;
  std::string instance;
};

struct Report {
  std::string tag;
  std::string formula;
  std::string algebra;
  int order = 0;
  bool pass = false;
  std::optional<FirstDiff> first_diff;
  double elapsed_ms = 0.0;
  // Exact arithmetic: comparisons are equality on rationals.  The field
  // exists so report consumers can see the contract explicitly.
  Rat tolerance = Rat(0);
};

struct VerifyOptions {
  std::optional<int> order;        // overrides the entry default when set
  double ceiling_ms = 600000.0;    // refuse orders estimated beyond this
};

// Thrown instead of silently truncating when the estimated cost of a
// requested order exceeds the configured ceiling.
struct CostCeilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Crude upper-bound cost model used only for the refusal decision.
double estimate_cost_ms(const IdentityEntry& e, int order);

Report verify_entry(const IdentityEntry& e, int order);
Report verify(const std::string& tag, const VerifyOptions& opts = {});

// Run the given tags (or the whole catalog).  All cost estimates are checked
// up front; a ceiling violation throws before any entry runs.  With
// `parallel` set the entries are distributed over OpenMP threads; the report
// list is positionally identical to the serial run.
std::vector<Report> run_catalog(const std::vector<std::string>& tags,
                                const VerifyOptions& opts = {},
                                bool parallel = false);
std::vector<Report> run_all(const VerifyOptions& opts = {},
                            bool parallel = false);

std::string report_to_json(const Report& r, bool with_timing = true);
std::string reports_to_json(const std::vector<Report>& rs,
                            bool with_timing = true);
std::string reports_to_table(const std::vector<Report>& rs,
                             bool with_timing = true);

// ---------------------------------------------------------------------------
// Integrality sweeps

struct SweepFailure {
  int r = 0, s = 0, k = 0, l = 0;
  bool long_minus = false;  // the minus factor came from the long family
  std::string element;      // rendered product that failed
  std::string monomial;     // offending basis monomial
  std::string coefficient;  // its non-integer coordinate
};

struct SweepReport {
  std::string algebra;
  int r_lo = 0, r_hi = 0, s_lo = 0, s_hi = 0, k_max = 0, l_max = 0;
  long checked = 0;
  bool pass = false;
  std::optional<SweepFailure> failure;
  double elapsed_ms = 0.0;
};

// Straightens (x_r+)^(k) (x_s-)^(l) for all indices in the ranges (and
// additionally (x_r+)^(k) (X_{2s+1}-)^(l) on the twisted algebra) and asserts
// that every product lies in the lattice spanned by the integral basis.
// Stops at the first failure and reports its coordinates.
SweepReport integrality_sweep(const AlgebraId& alg, int r_lo, int r_hi,
                              int s_lo, int s_hi, int k_max, int l_max,
                              ImagFamily fam = ImagFamily::ByAlgebra);

std::string sweep_to_json(const SweepReport& r, bool with_timing = true);

}  // namespace zform
