#include "rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace nonex {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text, bool strict) {
  std::string s = text;
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty rational");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) throw ParseError("bare sign is not a rational: '" + text + "'");

  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational: '" + text + "'");
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    value = Rat(mpz_class(num, 10), d);
    value.canonicalize();
  } else if (dot != std::string::npos) {
    if (strict)
      throw ParseError("decimal forms are not allowed here: '" + text + "'");
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("malformed decimal: '" + text + "'");
    mpz_class scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class digits = mpz_class(ip, 10) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp, 10));
    value = Rat(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational: '" + text + "'");
    value = Rat(mpz_class(s, 10));
  }
  if (neg) value = -value;
  return value;
}

std::vector<Rat> parse_rational_csv(const std::string& text, bool strict) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item, strict));
  if (out.empty()) throw ParseError("empty list: '" + text + "'");
  return out;
}

std::string rational_str(const Rat& q) { return q.get_str(); }

std::string csv_str(const std::vector<Rat>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += rational_str(v[i]);
  }
  return out;
}

bool decimal_terminates(const Rat& q) {
  mpz_class den = q.get_den();
  for (int p : {2, 5})
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) den /= p;
  return den == 1;
}

std::string decimal_str(const Rat& q) {
  if (!decimal_terminates(q)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
    return buf;
  }
  mpz_class num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  unsigned long k = 0;
  mpz_class d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++k; }
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
  if (fives > k) k = fives;
  mpz_class pow10 = 1;
  for (unsigned long i = 0; i < k; ++i) pow10 *= 10;
  mpz_class scaled = num * pow10 / den;  // exact by construction
  std::string digits = scaled.get_str();
  std::string out;
  if (k == 0) {
    out = digits;
  } else {
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

std::string table_str(const Rat& q) {
  return decimal_terminates(q) ? decimal_str(q) : rational_str(q);
}

}  // namespace nonex
