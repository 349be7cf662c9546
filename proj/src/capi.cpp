#include "nonex.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "axioms.hpp"
#include "bounds.hpp"
#include "copula.hpp"
#include "perm.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "search.hpp"
#include "shuffle.hpp"

struct nonex_copula {
  nonex::CopulaPtr ptr;
};

struct nonex_perm {
  nonex::Perm pi;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

// Runs fn, translating exceptions to status codes and *err.
template <class Fn>
nonex_status guarded(char** err, Fn&& fn) {
  try {
    return fn();
  } catch (const nonex::ParseError& e) {
    set_err(err, e.what());
    return NONEX_PARSE_ERROR;
  } catch (const nonex::DimError& e) {
    set_err(err, e.what());
    return NONEX_DIM_ERROR;
  } catch (const nonex::StepError& e) {
    set_err(err, e.what());
    return NONEX_STEP_ERROR;
  } catch (const nonex::UnsupportedDimError& e) {
    set_err(err, e.what());
    return NONEX_UNSUPPORTED_DIM;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return NONEX_PARSE_ERROR;
  }
}

// Grid step "1/m" (any exact equivalent accepted) -> m.
int parse_step(const char* step) {
  if (!step) throw nonex::StepError("missing grid step");
  nonex::Rat h = nonex::parse_rational(step);
  if (h <= 0 || h.get_num() != 1)
    throw nonex::StepError("grid step must be 1/m with integer m >= 1, got " +
                           std::string(step));
  if (!h.get_den().fits_sint_p())
    throw nonex::StepError("grid step denominator too large");
  return static_cast<int>(h.get_den().get_si());
}

const nonex::Copula& deref(const nonex_copula* c) {
  if (!c || !c->ptr) throw nonex::ParseError("null copula handle");
  return *c->ptr;
}

const nonex::Perm& deref(const nonex_perm* p) {
  if (!p) throw nonex::ParseError("null permutation handle");
  return p->pi;
}

}  // namespace

extern "C" {

const char* nonex_version(void) { return "1.0.0"; }

void nonex_string_free(char* s) { std::free(s); }

nonex_status nonex_copula_builtin(const char* kind, int dim, nonex_copula** out,
                                  char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!out) throw nonex::ParseError("null output handle");
    std::string k = kind ? kind : "";
    nonex::CopulaPtr c;
    if (k == "mdim")
      c = nonex::frechet_upper(dim);
    else if (k == "w")
      c = nonex::frechet_lower(dim);
    else if (k == "independence")
      c = nonex::independence(dim);
    else if (k == "cstar")
      c = nonex::c_star_closed_form(dim);
    else
      throw nonex::ParseError(
          "unknown builtin '" + k +
          "' (expected mdim, w, independence, or cstar)");
    *out = new nonex_copula{std::move(c)};
    return NONEX_OK;
  });
}

nonex_status nonex_copula_manifold(int dim, const char* delta_csv,
                                   const char* base, nonex_copula** out,
                                   char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!out) throw nonex::ParseError("null output handle");
    std::vector<nonex::Rat> values;
    if (delta_csv && *delta_csv) values = nonex::parse_rational_csv(delta_csv);
    nonex::DeltaVector dv = nonex::DeltaVector::checked(dim, std::move(values));
    nonex::BaseTag tag =
        base && *base ? nonex::parse_base(base) : nonex::BaseTag::Min;
    *out = new nonex_copula{
        nonex::shuffle_copula(nonex::manifold_shuffle_structure(dv, tag))};
    return NONEX_OK;
  });
}

nonex_status nonex_copula_from_file(const char* path, nonex_copula** out,
                                    char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!out) throw nonex::ParseError("null output handle");
    if (!path) throw nonex::ParseError("null path");
    *out = new nonex_copula{nonex::shuffle_copula(nonex::read_shuffle_file(path))};
    return NONEX_OK;
  });
}

nonex_status nonex_copula_permuted(const nonex_copula* c, const nonex_perm* pi,
                                   nonex_copula** out, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!out) throw nonex::ParseError("null output handle");
    deref(c);
    *out = new nonex_copula{nonex::permuted_view(c->ptr, deref(pi))};
    return NONEX_OK;
  });
}

int nonex_copula_dim(const nonex_copula* c) {
  return c && c->ptr ? c->ptr->dim() : 0;
}

nonex_status nonex_copula_describe(const nonex_copula* c, char** out) {
  return guarded(nullptr, [&]() -> nonex_status {
    if (!out) throw nonex::ParseError("null output handle");
    *out = dup_string(deref(c).describe());
    return NONEX_OK;
  });
}

void nonex_copula_free(nonex_copula* c) { delete c; }

nonex_status nonex_perm_parse(const char* text, int dim, nonex_perm** out,
                              char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!out) throw nonex::ParseError("null output handle");
    if (!text) throw nonex::ParseError("null permutation text");
    *out = new nonex_perm{nonex::parse_perm(text, dim)};
    return NONEX_OK;
  });
}

void nonex_perm_free(nonex_perm* p) { delete p; }

nonex_status nonex_eval(const nonex_copula* c, const char* point_csv,
                        char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    if (!point_csv) throw nonex::ParseError("null point");
    nonex::UnitPoint u = nonex::UnitPoint::parse(point_csv);
    nonex::Rat v = nonex::evaluate(deref(c), u);
    *report = dup_string(nonex::render_eval(v));
    return NONEX_OK;
  });
}

nonex_status nonex_diff(const nonex_copula* c, const nonex_perm* pi,
                        const char* point_csv, char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    if (!point_csv) throw nonex::ParseError("null point");
    nonex::UnitPoint u = nonex::UnitPoint::parse(point_csv);
    std::vector<nonex::Rat> up = nonex::apply(deref(pi), u.span());
    nonex::Rat v = deref(c).eval(u.span());
    nonex::Rat vp = deref(c).eval(up);
    *report = dup_string(nonex::render_diff(u.coords(), up, v, vp));
    return NONEX_OK;
  });
}

nonex_status nonex_search(const nonex_copula* c, const nonex_perm* pi,
                          const char* step, int threads, int float_mode,
                          char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    nonex::SearchReport r = nonex::max_difference(
        deref(c), deref(pi), parse_step(step), threads, float_mode != 0);
    *report = dup_string(nonex::render_search(r));
    return NONEX_OK;
  });
}

nonex_status nonex_mu(const nonex_copula* c, const char* step,
                      long long perm_budget, unsigned long long seed,
                      int threads, int float_mode, char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    nonex::MuReport r = nonex::mu_measure(deref(c), parse_step(step), perm_budget,
                                          seed, threads, float_mode != 0);
    *report = dup_string(nonex::render_mu(r));
    return NONEX_OK;
  });
}

nonex_status nonex_verify(const nonex_copula* c, long long samples,
                          long long boxes, unsigned long long seed,
                          char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    const nonex::Copula& cop = deref(c);
    nonex::AxiomReport r = nonex::verify_axioms(cop, samples, boxes, seed);
    *report = dup_string(nonex::render_axioms(r, cop.describe()));
    return r.all_pass() ? NONEX_OK : NONEX_CHECK_FAILED;
  });
}

nonex_status nonex_manifold(int dim, int count, unsigned long long seed,
                            char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    *report = dup_string(
        nonex::render_manifold(nonex::sample_manifold(dim, count, seed)));
    return NONEX_OK;
  });
}

nonex_status nonex_bound(const char* point_csv, const char* perm_text,
                         char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    if (!point_csv) throw nonex::ParseError("null point");
    nonex::UnitPoint u = nonex::UnitPoint::parse(point_csv);
    if (perm_text && *perm_text) {
      nonex::Perm pi = nonex::parse_perm(perm_text, u.dim());
      nonex::BoundReport r = nonex::pointwise_bound(u, pi);
      *report = dup_string(nonex::render_bound(r, &pi));
    } else {
      nonex::BoundReport r = nonex::pointwise_bound(u);
      *report = dup_string(nonex::render_bound(r, nullptr));
    }
    return NONEX_OK;
  });
}

nonex_status nonex_surface(const nonex_copula* c, const nonex_perm* pi,
                           const char* step, char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    *report = dup_string(
        nonex::render_surface(deref(c), deref(pi), parse_step(step)));
    return NONEX_OK;
  });
}

nonex_status nonex_validate_file(const char* path, char** report, char** err) {
  return guarded(err, [&]() -> nonex_status {
    if (!report) throw nonex::ParseError("null report handle");
    if (!path) throw nonex::ParseError("null path");
    nonex::ShuffleStructure s = nonex::read_shuffle_file(path);
    nonex::ValidationReport r = nonex::validate(s);
    *report = dup_string(nonex::render_validation(s, r));
    return r.ok() ? NONEX_OK : NONEX_CHECK_FAILED;
  });
}

}  // extern "C"
