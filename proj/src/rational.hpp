// Exact rational scalars and their text forms. Canonical output is "p/q"
// (reduced, or plain "p" for integers); decimal output is exact when the
// denominator is of the form 2^a*5^b and a 12-digit approximation otherwise.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace nonex {

using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedDimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "3/5", "-2", and (unless strict) decimal forms like "0.6", which
// convert exactly. strict mode is for structure files, where decimals are
// rejected by design.
Rat parse_rational(const std::string& text, bool strict = false);
std::vector<Rat> parse_rational_csv(const std::string& text, bool strict = false);

std::string rational_str(const Rat& q);
std::string csv_str(const std::vector<Rat>& v);

// True iff q has a terminating decimal expansion.
bool decimal_terminates(const Rat& q);
// Exact decimal when terminating, otherwise 12 significant digits.
std::string decimal_str(const Rat& q);
// Table cells: exact decimal when terminating, canonical rational otherwise.
std::string table_str(const Rat& q);

}  // namespace nonex
