#include "report.hpp"

#include <sstream>

namespace nonex {

namespace {

std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

void check_line(std::ostringstream& out, const std::string& name,
                const CheckResult& r, const std::string& unit) {
  out << name << " = " << pass_fail(r.pass) << " (" << r.checked << " " << unit
      << ")\n";
  if (!r.pass) out << name << "_witness = " << r.witness << "\n";
}

}  // namespace

std::string render_eval(const Rat& value) {
  std::ostringstream out;
  out << "value = " << rational_str(value) << "\n";
  out << "decimal = " << decimal_str(value) << "\n";
  return out.str();
}

std::string render_diff(const std::vector<Rat>& point,
                        const std::vector<Rat>& permuted_point, const Rat& value,
                        const Rat& permuted_value) {
  Rat diff = value - permuted_value;
  if (diff < 0) diff = -diff;
  std::ostringstream out;
  out << "point = " << csv_str(point) << "\n";
  out << "permuted_point = " << csv_str(permuted_point) << "\n";
  out << "value = " << rational_str(value) << "\n";
  out << "permuted_value = " << rational_str(permuted_value) << "\n";
  out << "difference = " << rational_str(diff) << "\n";
  return out.str();
}

std::string render_search(const SearchReport& r) {
  std::ostringstream out;
  out << "best_point = " << csv_str(r.best_point) << "\n";
  out << "best_perm = " << perm_str(r.best_perm) << "\n";
  out << "best_value = " << rational_str(r.best_value) << "\n";
  out << "certified_upper = " << rational_str(r.certified_upper) << "\n";
  out << "gap = " << rational_str(r.gap) << "\n";
  out << "evaluations = " << r.evaluations << "\n";
  if (r.float_mode) out << "mode = float\n";
  return out.str();
}

std::string render_mu(const MuReport& r) {
  std::ostringstream out;
  out << "mu = " << rational_str(r.mu) << "\n";
  out << "mu_certified_upper = " << rational_str(r.mu_certified_upper) << "\n";
  out << "exhaustive = " << (r.exhaustive ? "true" : "false") << "\n";
  if (!r.exhaustive) out << "mu_is_lower_bound = true\n";
  out << "perms_scanned = " << r.perms_scanned << "\n";
  out << render_search(r.inner);
  return out.str();
}

std::string render_bound(const BoundReport& r, const Perm* pi) {
  std::ostringstream out;
  out << "dim = " << r.dim << "\n";
  if (pi) out << "perm = " << perm_str(*pi) << "\n";
  if (r.transposition_bound)
    out << "transposition_bound = " << rational_str(*r.transposition_bound) << "\n";
  out << "min_spread_bound = " << rational_str(r.min_spread_bound) << "\n";
  out << "half_spread_bound = " << rational_str(r.half_spread_bound) << "\n";
  out << "frechet_gap = " << rational_str(r.frechet_gap) << "\n";
  out << "sharp_bound = " << rational_str(r.sharp_bound) << "\n";
  out << "combined = " << rational_str(r.combined) << "\n";
  return out.str();
}

std::string render_axioms(const AxiomReport& r, const std::string& description) {
  std::ostringstream out;
  out << "copula = " << description << "\n";
  out << "claims_copula = " << (r.claims_copula ? "true" : "false") << "\n";
  out << "seed = " << r.seed << "\n";
  check_line(out, "grounded", r.grounded, "points");
  check_line(out, "uniform_margins", r.uniform_margins, "points");
  check_line(out, "d_increasing", r.d_increasing, "boxes");
  check_line(out, "lipschitz", r.lipschitz, "pairs");
  out << "points_checked = " << r.points_checked << "\n";
  out << "boxes_checked = " << r.boxes_checked << "\n";
  out << "result = " << pass_fail(r.all_pass()) << "\n";
  return out.str();
}

std::string render_validation(const ShuffleStructure& s, const ValidationReport& r) {
  std::ostringstream out;
  out << "dim = " << s.dim << "\n";
  out << "cells = " << s.cells.size() << "\n";
  bool any_min = false, any_ind = false;
  Rat total = 0;
  for (const ShuffleCell& c : s.cells) {
    (c.base == BaseTag::Min ? any_min : any_ind) = true;
    total += c.mass();
  }
  out << "base = "
      << (any_min && any_ind ? "mixed" : (any_ind ? "independence" : "min"))
      << "\n";
  out << "total_mass = " << rational_str(total) << "\n";
  auto cond = [&](const std::string& name, bool ok, const std::string& witness) {
    out << name << " = " << pass_fail(ok) << "\n";
    if (!ok) out << name << "_witness = " << witness << "\n";
  };
  cond("finite", r.finite_ok, r.finite_witness);
  cond("overlap", r.overlap_ok, r.overlap_witness);
  cond("hypercube", r.hypercube_ok, r.hypercube_witness);
  cond("partition", r.partition_ok, r.partition_witness);
  out << "result = " << (r.ok() ? "valid" : "invalid") << "\n";
  return out.str();
}

std::string render_manifold(const std::vector<ManifoldPoint>& pts) {
  std::ostringstream out;
  for (const ManifoldPoint& p : pts) {
    out << "u = " << csv_str(p.u);
    if (p.delta) out << "  delta = " << csv_str(p.delta->values);
    out << "\n";
  }
  return out.str();
}

std::string render_surface(const Copula& c, const Perm& pi, int m) {
  if (c.dim() != 2 || pi.dim() != 2)
    throw UnsupportedDimError("surface export is for dimension 2 only");
  if (m < 1) throw StepError("grid step must be 1/m with integer m >= 1");
  std::ostringstream out;
  std::vector<Rat> u(2);
  for (int g1 = 0; g1 <= m; ++g1)
    for (int g2 = 0; g2 <= m; ++g2) {
      Rat a(g1, m), b(g2, m);
      a.canonicalize();
      b.canonicalize();
      u[0] = a;
      u[1] = b;
      Rat v = c.eval(u);
      std::vector<Rat> up = ::nonex::apply(pi, u);
      Rat vp = c.eval(up);
      Rat diff = v - vp;
      if (diff < 0) diff = -diff;
      out << table_str(a) << "," << table_str(b) << "," << table_str(v) << ","
          << table_str(vp) << "," << table_str(diff) << "\n";
    }
  return out.str();
}

}  // namespace nonex
