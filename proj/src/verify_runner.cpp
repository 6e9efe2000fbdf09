#include <chrono>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "zform/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zform {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json report_json(const Report& r, bool with_timing) {
  json j;
  j["tag"] = r.tag;
  j["formula"] = r.formula;
  j["algebra"] = r.algebra;
  j["order"] = r.order;
  j["pass"] = r.pass;
  j["tolerance"] = render_rat(r.tolerance);
  if (r.first_diff) {
    j["first_diff"] = {{"deg_u", r.first_diff->deg_u},
                       {"deg_v", r.first_diff->deg_v},
                       {"lhs", r.first_diff->lhs},
                       {"rhs", r.first_diff->rhs},
                       {"instance", r.first_diff->instance}};
  } else {
    j["first_diff"] = nullptr;
  }
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::vector<const IdentityEntry*> resolve(const std::vector<std::string>& tags) {
  std::vector<const IdentityEntry*> out;
  out.reserve(tags.size());
  for (const auto& t : tags) out.push_back(&find_entry(t));
  return out;
}

std::vector<Report> run_entries(const std::vector<const IdentityEntry*>& entries,
                                const VerifyOptions& opts, bool parallel) {
  // Refuse over-budget requests up front, before any entry runs.
  for (const IdentityEntry* e : entries) {
    int order = opts.order.value_or(e->default_order);
    double est = estimate_cost_ms(*e, order);
    if (est > opts.ceiling_ms)
      throw CostCeilingError(fmt::format(
          "{} at order {} estimated at {:.0f} ms, over the {:.0f} ms ceiling",
          e->tag, order, est, opts.ceiling_ms));
  }

  std::vector<Report> reports(entries.size());
  auto run_one = [&](std::size_t i) {
    int order = opts.order.value_or(entries[i]->default_order);
    try {
      reports[i] = verify_entry(*entries[i], order);
    } catch (const std::exception& ex) {
      // A builder failure must not tear down a parallel region; surface it
      // as a failed report instead.
      Report r;
      r.tag = entries[i]->tag;
      r.formula = entries[i]->formula;
      r.algebra = entries[i]->algebra.name();
      r.order = order;
      r.pass = false;
      r.first_diff = FirstDiff{0, 0, "", "", fmt::format("exception: {}", ex.what())};
      reports[i] = r;
    }
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(entries.size()); ++i)
      run_one(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
#endif
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
  }
  return reports;
}

}  // namespace

double estimate_cost_ms(const IdentityEntry& e, int order) {
  double n = static_cast<double>(order) + 1.0;
  return e.cost_weight * std::pow(n, 6) / 1e4;
}

Report verify_entry(const IdentityEntry& e, int order) {
  Report r;
  r.tag = e.tag;
  r.formula = e.formula;
  r.algebra = e.algebra.name();
  r.order = order;
  r.pass = true;
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < e.instances.size(); ++i) {
    UEASeries lhs = e.lhs(order, static_cast<int>(i));
    UEASeries rhs = e.rhs(order, static_cast<int>(i));
    auto diff = first_difference(lhs, rhs);
    if (diff) {
      r.pass = false;
      r.first_diff = FirstDiff{diff->deg_u, diff->deg_v, render_uea(diff->lhs),
                               render_uea(diff->rhs), e.instances[i]};
      break;
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

Report verify(const std::string& tag, const VerifyOptions& opts) {
  const IdentityEntry& e = find_entry(tag);
  int order = opts.order.value_or(e.default_order);
  double est = estimate_cost_ms(e, order);
  if (est > opts.ceiling_ms)
    throw CostCeilingError(fmt::format(
        "{} at order {} estimated at {:.0f} ms, over the {:.0f} ms ceiling",
        tag, order, est, opts.ceiling_ms));
  return verify_entry(e, order);
}

std::vector<Report> run_catalog(const std::vector<std::string>& tags,
                                const VerifyOptions& opts, bool parallel) {
  return run_entries(resolve(tags), opts, parallel);
}

std::vector<Report> run_all(const VerifyOptions& opts, bool parallel) {
  std::vector<const IdentityEntry*> entries;
  for (const auto& e : catalog()) entries.push_back(&e);
  return run_entries(entries, opts, parallel);
}

std::string report_to_json(const Report& r, bool with_timing) {
  return report_json(r, with_timing).dump(2);
}

std::string reports_to_json(const std::vector<Report>& rs, bool with_timing) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_json(r, with_timing));
  return arr.dump(2);
}

std::string reports_to_table(const std::vector<Report>& rs, bool with_timing) {
  std::string out;
  out += fmt::format("{:<14} {:<14} {:>5}  {:<6}", "tag", "algebra", "order",
                     "result");
  if (with_timing) out += fmt::format("  {:>10}", "time");
  out += "\n";
  for (const auto& r : rs) {
    out += fmt::format("{:<14} {:<14} {:>5}  {:<6}", r.tag, r.algebra, r.order,
                       r.pass ? "pass" : "FAIL");
    if (with_timing) out += fmt::format("  {:>8.1f}ms", r.elapsed_ms);
    out += "\n";
    if (r.first_diff)
      out += fmt::format(
          "    first difference at u^{} v^{} [{}]:\n      lhs = {}\n      rhs = {}\n",
          r.first_diff->deg_u, r.first_diff->deg_v, r.first_diff->instance,
          r.first_diff->lhs, r.first_diff->rhs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integrality sweeps

SweepReport integrality_sweep(const AlgebraId& alg, int r_lo, int r_hi,
                              int s_lo, int s_hi, int k_max, int l_max,
                              ImagFamily fam) {
  SweepReport rep;
  rep.algebra = alg.name();
  rep.r_lo = r_lo;
  rep.r_hi = r_hi;
  rep.s_lo = s_lo;
  rep.s_hi = s_hi;
  rep.k_max = k_max;
  rep.l_max = l_max;
  rep.pass = true;
  auto t0 = Clock::now();

  bool twisted = alg.kind == AlgKind::A2_2;
  for (int r = r_lo; r <= r_hi && rep.pass; ++r)
    for (int s = s_lo; s <= s_hi && rep.pass; ++s)
      for (int k = 1; k <= k_max && rep.pass; ++k)
        for (int l = 1; l <= l_max && rep.pass; ++l) {
          // Short-by-short product, then (on the twisted algebra) the
          // short-by-long product against the odd lowering family.
          int cases = twisted ? 2 : 1;
          for (int c = 0; c < cases && rep.pass; ++c) {
            Generator plus = make_gen(alg, GenKind::XP, r);
            Generator minus = c == 0 ? make_gen(alg, GenKind::XM, s)
                                     : make_gen(alg, GenKind::XXM, 2 * s + 1);
            UEAElement prod = divided_power(plus, k) * divided_power(minus, l);
            ZFormCheck chk = is_in_Z_form(prod, ZBasis::Drinfeld, fam);
            ++rep.checked;
            if (!chk.integral) {
              rep.pass = false;
              SweepFailure f;
              f.r = r;
              f.s = s;
              f.k = k;
              f.l = l;
              f.long_minus = c == 1;
              f.element = fmt::format(
                  "(x+[{}])^({}) * ({}[{}])^({})", r, k,
                  c == 0 ? "x-" : "X-", c == 0 ? s : 2 * s + 1, l);
              f.monomial = render_zmonomial(alg, chk.witness->first,
                                            ZBasis::Drinfeld);
              f.coefficient = render_rat(chk.witness->second);
              rep.failure = f;
            }
          }
        }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::string sweep_to_json(const SweepReport& r, bool with_timing) {
  json j;
  j["algebra"] = r.algebra;
  j["r_range"] = {r.r_lo, r.r_hi};
  j["s_range"] = {r.s_lo, r.s_hi};
  j["k_max"] = r.k_max;
  j["l_max"] = r.l_max;
  j["checked"] = r.checked;
  j["pass"] = r.pass;
  if (r.failure) {
    j["failure"] = {{"r", r.failure->r},
                    {"s", r.failure->s},
                    {"k", r.failure->k},
                    {"l", r.failure->l},
                    {"long_minus", r.failure->long_minus},
                    {"element", r.failure->element},
                    {"monomial", r.failure->monomial},
                    {"coefficient", r.failure->coefficient}};
  } else {
    j["failure"] = nullptr;
  }
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

}  // namespace zform
