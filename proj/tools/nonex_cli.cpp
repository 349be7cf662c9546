// Command-line front end; a thin client of the shared-library C API.
//
// Exit codes: 0 ok/pass, 1 check failed, 2 parse error, 3 dimension error,
// 4 bad grid step, 5 unsupported dimension.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nonex.h"

namespace {

struct CopulaOpts {
  std::string kind = "cstar";
  int dim = 2;
  std::string file;
  std::string delta;
  std::string base;
};

void add_copula_opts(CLI::App* cmd, CopulaOpts& o) {
  cmd->add_option("--copula", o.kind,
                  "builtin family: mdim, w, independence, cstar, or manifold "
                  "(the attaining family, needs --delta for even dim > 2)")
      ->capture_default_str();
  cmd->add_option("--dim", o.dim, "dimension d >= 2")->capture_default_str();
  cmd->add_option("--file", o.file,
                  "shuffle structure file (overrides --copula)");
  cmd->add_option("--delta", o.delta,
                  "comma-separated delta parameters for --copula manifold");
  cmd->add_option("--base", o.base,
                  "cell base for --copula manifold: min or independence");
}

int report_error(nonex_status st, char* err) {
  if (err) {
    std::cerr << "error: " << err << "\n";
    nonex_string_free(err);
  } else {
    std::cerr << "error: operation failed with status " << st << "\n";
  }
  return static_cast<int>(st);
}

// Builds the term described by the options; on failure prints and returns
// the status as exit code, else 0 with *out set.
int build_copula(const CopulaOpts& o, nonex_copula** out) {
  char* err = nullptr;
  nonex_status st;
  if (!o.file.empty()) {
    st = nonex_copula_from_file(o.file.c_str(), out, &err);
  } else if (o.kind == "manifold") {
    st = nonex_copula_manifold(o.dim, o.delta.empty() ? nullptr : o.delta.c_str(),
                               o.base.empty() ? nullptr : o.base.c_str(), out,
                               &err);
  } else {
    st = nonex_copula_builtin(o.kind.c_str(), o.dim, out, &err);
  }
  if (st != NONEX_OK) return report_error(st, err);
  return 0;
}

// Optionally wraps *c in a permuted view (eval/verify treat --perm as a
// relabeling of the term's arguments).
int wrap_view(nonex_copula** c, const std::string& perm_text) {
  if (perm_text.empty()) return 0;
  char* err = nullptr;
  nonex_perm* pi = nullptr;
  nonex_status st =
      nonex_perm_parse(perm_text.c_str(), nonex_copula_dim(*c), &pi, &err);
  if (st != NONEX_OK) return report_error(st, err);
  nonex_copula* wrapped = nullptr;
  st = nonex_copula_permuted(*c, pi, &wrapped, &err);
  nonex_perm_free(pi);
  if (st != NONEX_OK) return report_error(st, err);
  nonex_copula_free(*c);
  *c = wrapped;
  return 0;
}

// --seed wins; otherwise NONEX_SEED (must be a plain unsigned integer);
// otherwise 0.
int resolve_seed(bool seed_given, unsigned long long& seed) {
  if (seed_given) return 0;
  const char* env = std::getenv("NONEX_SEED");
  if (!env) {
    seed = 0;
    return 0;
  }
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') {
    std::cerr << "error: NONEX_SEED is not an unsigned integer: '" << env
              << "'\n";
    return 2;
  }
  seed = v;
  return 0;
}

int print_report(nonex_status st, char* report, char* err) {
  if (report) {
    std::cout << report;
    nonex_string_free(report);
  }
  if (st == NONEX_OK || (st == NONEX_CHECK_FAILED && report))
    return static_cast<int>(st);
  return report_error(st, err);
}

struct CopulaGuard {
  nonex_copula* c = nullptr;
  ~CopulaGuard() { nonex_copula_free(c); }
};

struct PermGuard {
  nonex_perm* p = nullptr;
  ~PermGuard() { nonex_perm_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for non-exchangeability of copulas: evaluation, "
      "validity checks, certified difference search, and the normalized "
      "measure."};
  app.require_subcommand(1);

  // eval
  CopulaOpts eval_c;
  std::string eval_point, eval_perm;
  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a term at a point");
  add_copula_opts(cmd_eval, eval_c);
  cmd_eval->add_option("--perm", eval_perm, "evaluate the permuted view");
  cmd_eval->add_option("--point", eval_point, "comma-separated coordinates")
      ->required();

  // diff
  CopulaOpts diff_c;
  std::string diff_point, diff_perm = "reverse";
  CLI::App* cmd_diff = app.add_subcommand(
      "diff", "evaluate both orientations and their absolute difference");
  add_copula_opts(cmd_diff, diff_c);
  cmd_diff->add_option("--perm", diff_perm, "permutation: id, reverse, or images")
      ->capture_default_str();
  cmd_diff->add_option("--point", diff_point, "comma-separated coordinates")
      ->required();

  // search
  CopulaOpts search_c;
  std::string search_perm = "reverse", search_step;
  int search_threads = 1;
  bool search_float = false;
  CLI::App* cmd_search = app.add_subcommand(
      "search", "certified grid maximization of |C(u) - C(u_pi)|");
  add_copula_opts(cmd_search, search_c);
  cmd_search
      ->add_option("--perm", search_perm, "permutation: id, reverse, or images")
      ->capture_default_str();
  cmd_search->add_option("--step", search_step, "grid step 1/m, (d+1) | m")
      ->required();
  cmd_search->add_option("--threads", search_threads, "worker count")
      ->capture_default_str();
  cmd_search->add_flag("--float", search_float,
                       "double-precision scan (exploration only)");

  // mu
  CopulaOpts mu_c;
  std::string mu_step;
  long long mu_budget = 40320;
  unsigned long long mu_seed = 0;
  int mu_threads = 1;
  bool mu_float = false;
  CLI::App* cmd_mu = app.add_subcommand(
      "mu", "normalized non-exchangeability measure (max over permutations)");
  add_copula_opts(cmd_mu, mu_c);
  cmd_mu->add_option("--step", mu_step, "grid step 1/m, (d+1) | m")->required();
  cmd_mu->add_option("--perm-budget", mu_budget,
                     "exhaustive when d! <= budget, else lower-bound mode")
      ->capture_default_str();
  CLI::Option* mu_seed_opt =
      cmd_mu->add_option("--seed", mu_seed, "seed for lower-bound mode");
  cmd_mu->add_option("--threads", mu_threads, "worker count")
      ->capture_default_str();
  cmd_mu->add_flag("--float", mu_float,
                   "double-precision scan (exploration only)");

  // verify
  CopulaOpts verify_c;
  std::string verify_perm;
  long long verify_samples = 10000, verify_boxes = 10000;
  unsigned long long verify_seed = 0;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "copula axiom checks with witnesses");
  add_copula_opts(cmd_verify, verify_c);
  cmd_verify->add_option("--perm", verify_perm, "verify the permuted view");
  cmd_verify->add_option("--samples", verify_samples, "points per check")
      ->capture_default_str();
  cmd_verify->add_option("--boxes", verify_boxes, "random boxes")
      ->capture_default_str();
  CLI::Option* verify_seed_opt =
      cmd_verify->add_option("--seed", verify_seed, "sampling seed");

  // manifold
  int manifold_dim = 2, manifold_samples = 5;
  unsigned long long manifold_seed = 0;
  CLI::App* cmd_manifold = app.add_subcommand(
      "manifold", "list points where the sharp bound is attained");
  cmd_manifold->add_option("--dim", manifold_dim, "dimension d >= 2")
      ->capture_default_str();
  cmd_manifold
      ->add_option("--samples", manifold_samples, "points to sample (even dim)")
      ->capture_default_str();
  CLI::Option* manifold_seed_opt =
      cmd_manifold->add_option("--seed", manifold_seed, "sampling seed");

  // bound
  std::string bound_point, bound_perm;
  CLI::App* cmd_bound = app.add_subcommand(
      "bound", "pointwise upper bounds on |C(u) - C(u_pi)| for any copula");
  cmd_bound->add_option("--point", bound_point, "comma-separated coordinates")
      ->required();
  cmd_bound->add_option("--perm", bound_perm,
                        "permutation (omit for the permutation-free bound)");

  // surface
  CopulaOpts surface_c;
  std::string surface_perm = "reverse", surface_step, surface_out;
  CLI::App* cmd_surface = app.add_subcommand(
      "surface", "2-d difference surface as CSV rows u1,u2,C,C_pi,diff");
  add_copula_opts(cmd_surface, surface_c);
  cmd_surface
      ->add_option("--perm", surface_perm, "permutation: id, reverse, or images")
      ->capture_default_str();
  cmd_surface->add_option("--step", surface_step, "grid step 1/m")->required();
  cmd_surface->add_option("--out", surface_out, "output file (default stdout)");

  // validate
  std::string validate_file;
  CLI::App* cmd_validate = app.add_subcommand(
      "validate", "check a shuffle structure file against the four conditions");
  cmd_validate->add_option("--file", validate_file, "structure file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  char* report = nullptr;
  char* err = nullptr;

  if (*cmd_eval) {
    CopulaGuard c;
    if (int rc = build_copula(eval_c, &c.c)) return rc;
    if (int rc = wrap_view(&c.c, eval_perm)) return rc;
    nonex_status st = nonex_eval(c.c, eval_point.c_str(), &report, &err);
    return print_report(st, report, err);
  }

  if (*cmd_diff) {
    CopulaGuard c;
    PermGuard pi;
    if (int rc = build_copula(diff_c, &c.c)) return rc;
    nonex_status st =
        nonex_perm_parse(diff_perm.c_str(), nonex_copula_dim(c.c), &pi.p, &err);
    if (st != NONEX_OK) return report_error(st, err);
    st = nonex_diff(c.c, pi.p, diff_point.c_str(), &report, &err);
    return print_report(st, report, err);
  }

  if (*cmd_search) {
    CopulaGuard c;
    PermGuard pi;
    if (int rc = build_copula(search_c, &c.c)) return rc;
    nonex_status st = nonex_perm_parse(search_perm.c_str(),
                                       nonex_copula_dim(c.c), &pi.p, &err);
    if (st != NONEX_OK) return report_error(st, err);
    st = nonex_search(c.c, pi.p, search_step.c_str(), search_threads,
                      search_float ? 1 : 0, &report, &err);
    return print_report(st, report, err);
  }

  if (*cmd_mu) {
    CopulaGuard c;
    if (int rc = build_copula(mu_c, &c.c)) return rc;
    if (int rc = resolve_seed(mu_seed_opt->count() > 0, mu_seed)) return rc;
    nonex_status st = nonex_mu(c.c, mu_step.c_str(), mu_budget, mu_seed,
                               mu_threads, mu_float ? 1 : 0, &report, &err);
    return print_report(st, report, err);
  }

  if (*cmd_verify) {
    CopulaGuard c;
    if (int rc = build_copula(verify_c, &c.c)) return rc;
    if (int rc = wrap_view(&c.c, verify_perm)) return rc;
    if (int rc = resolve_seed(verify_seed_opt->count() > 0, verify_seed))
      return rc;
    nonex_status st = nonex_verify(c.c, verify_samples, verify_boxes,
                                   verify_seed, &report, &err);
    return print_report(st, report, err);
  }

  if (*cmd_manifold) {
    if (int rc = resolve_seed(manifold_seed_opt->count() > 0, manifold_seed))
      return rc;
    nonex_status st =
        nonex_manifold(manifold_dim, manifold_samples, manifold_seed, &report, &err);
    return print_report(st, report, err);
  }

  if (*cmd_bound) {
    nonex_status st =
        nonex_bound(bound_point.c_str(),
                    bound_perm.empty() ? nullptr : bound_perm.c_str(), &report,
                    &err);
    return print_report(st, report, err);
  }

  if (*cmd_surface) {
    CopulaGuard c;
    PermGuard pi;
    if (int rc = build_copula(surface_c, &c.c)) return rc;
    nonex_status st = nonex_perm_parse(surface_perm.c_str(),
                                       nonex_copula_dim(c.c), &pi.p, &err);
    if (st != NONEX_OK) return report_error(st, err);
    st = nonex_surface(c.c, pi.p, surface_step.c_str(), &report, &err);
    if (st == NONEX_OK && !surface_out.empty()) {
      std::ofstream out(surface_out);
      if (!out) {
        std::cerr << "error: cannot write " << surface_out << "\n";
        nonex_string_free(report);
        return 2;
      }
      out << report;
      nonex_string_free(report);
      return 0;
    }
    return print_report(st, report, err);
  }

  if (*cmd_validate) {
    nonex_status st = nonex_validate_file(validate_file.c_str(), &report, &err);
    return print_report(st, report, err);
  }

  return 2;
}
