// Line-oriented "key = value" renderings of the library's report types, a
// stable machine-parseable surface shared by the C API and the CLI.
#pragma once

#include <string>

#include "axioms.hpp"
#include "bounds.hpp"
#include "copula.hpp"
#include "search.hpp"
#include "shuffle.hpp"

namespace nonex {

std::string render_eval(const Rat& value);

std::string render_diff(const std::vector<Rat>& point,
                        const std::vector<Rat>& permuted_point, const Rat& value,
                        const Rat& permuted_value);

std::string render_search(const SearchReport& r);

std::string render_mu(const MuReport& r);

// pi null for the permutation-free report.
std::string render_bound(const BoundReport& r, const Perm* pi);

std::string render_axioms(const AxiomReport& r, const std::string& description);

std::string render_validation(const ShuffleStructure& s, const ValidationReport& r);

std::string render_manifold(const std::vector<ManifoldPoint>& pts);

// CSV rows u1,u2,C(u),C(u_pi),diff over the 2-d grid with step 1/m, row
// order lexicographic, no header; cells as exact decimals when terminating,
// rationals otherwise.
std::string render_surface(const Copula& c, const Perm& pi, int m);

}  // namespace nonex
