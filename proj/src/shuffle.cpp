#include "shuffle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "copula.hpp"

namespace nonex {

std::string base_str(BaseTag b) {
  return b == BaseTag::Min ? "min" : "independence";
}

BaseTag parse_base(const std::string& text) {
  if (text == "min") return BaseTag::Min;
  if (text == "independence") return BaseTag::Independence;
  throw ParseError("unknown base tag: '" + text + "'");
}

std::string ValidationReport::first_failure() const {
  if (!finite_ok) return finite_witness;
  if (!overlap_ok) return overlap_witness;
  if (!hypercube_ok) return hypercube_witness;
  if (!partition_ok) return partition_witness;
  return "";
}

ValidationReport validate(const ShuffleStructure& s) {
  ValidationReport r;

  r.finite_ok = true;
  if (s.dim < 2) {
    r.finite_ok = false;
    r.finite_witness = "dimension " + std::to_string(s.dim) + " below 2";
  } else if (s.cells.empty()) {
    r.finite_ok = false;
    r.finite_witness = "no cells";
  } else {
    for (size_t i = 0; i < s.cells.size() && r.finite_ok; ++i) {
      const ShuffleCell& c = s.cells[i];
      if (static_cast<int>(c.lo.size()) != s.dim ||
          static_cast<int>(c.hi.size()) != s.dim) {
        r.finite_ok = false;
        r.finite_witness = "cell " + std::to_string(i + 1) + " has wrong arity";
        break;
      }
      for (int k = 0; k < s.dim; ++k) {
        if (c.lo[k] < 0 || c.hi[k] > 1 || c.lo[k] > c.hi[k]) {
          r.finite_ok = false;
          r.finite_witness = "cell " + std::to_string(i + 1) + " axis " +
                             std::to_string(k + 1) + " interval [" +
                             rational_str(c.lo[k]) + "," + rational_str(c.hi[k]) +
                             "] not inside [0,1]";
          break;
        }
      }
    }
  }
  if (!r.finite_ok) {  // remaining checks assume well-formed cells
    r.overlap_witness = r.hypercube_witness = r.partition_witness =
        "not checked (cells malformed)";
    return r;
  }

  r.overlap_ok = true;
  for (int k = 0; k < s.dim && r.overlap_ok; ++k) {
    for (size_t a = 0; a + 1 < s.cells.size() && r.overlap_ok; ++a) {
      for (size_t b = a + 1; b < s.cells.size(); ++b) {
        Rat left = std::max(s.cells[a].lo[k], s.cells[b].lo[k]);
        Rat right = std::min(s.cells[a].hi[k], s.cells[b].hi[k]);
        if (right > left) {
          r.overlap_ok = false;
          r.overlap_witness = "axis " + std::to_string(k + 1) + ", cells " +
                              std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                              " overlap on [" + rational_str(left) + "," +
                              rational_str(right) + "]";
          break;
        }
      }
    }
  }

  r.hypercube_ok = true;
  for (size_t i = 0; i < s.cells.size() && r.hypercube_ok; ++i) {
    Rat len = s.cells[i].hi[0] - s.cells[i].lo[0];
    for (int k = 1; k < s.dim; ++k) {
      Rat lk = s.cells[i].hi[k] - s.cells[i].lo[k];
      if (lk != len) {
        r.hypercube_ok = false;
        r.hypercube_witness = "cell " + std::to_string(i + 1) + " axis " +
                              std::to_string(k + 1) + " length " + rational_str(lk) +
                              " differs from axis 1 length " + rational_str(len);
        break;
      }
    }
  }

  r.partition_ok = true;
  for (int k = 0; k < s.dim; ++k) {
    Rat total = 0;
    for (const ShuffleCell& c : s.cells) total += c.hi[k] - c.lo[k];
    if (total != 1) {
      r.partition_ok = false;
      r.partition_witness = "axis " + std::to_string(k + 1) + " lengths sum to " +
                            rational_str(total);
      break;
    }
  }
  return r;
}

Rat evaluate_shuffle(const ShuffleStructure& s, std::span<const Rat> u) {
  Rat total = 0;
  for (const ShuffleCell& c : s.cells) {
    Rat mass = c.mass();
    if (mass == 0) continue;
    if (c.base == BaseTag::Min) {
      Rat m = mass;
      for (int k = 0; k < s.dim; ++k) {
        Rat t = u[k] - c.lo[k];
        if (t <= 0) { m = 0; break; }
        if (t < m) m = t;
      }
      total += m;
    } else {
      Rat p = mass;
      for (int k = 0; k < s.dim; ++k) {
        Rat t = u[k] - c.lo[k];
        if (t <= 0) { p = 0; break; }
        if (t < mass) p *= t / mass;
      }
      total += p;
    }
  }
  return total;
}

double evaluate_shuffle_f(const ShuffleStructure& s, std::span<const double> u) {
  double total = 0;
  for (const ShuffleCell& c : s.cells) {
    double mass = c.mass().get_d();
    if (mass == 0) continue;
    if (c.base == BaseTag::Min) {
      double m = mass;
      for (int k = 0; k < s.dim; ++k) {
        double t = u[k] - c.lo[k].get_d();
        if (t <= 0) { m = 0; break; }
        if (t < m) m = t;
      }
      total += m;
    } else {
      double p = mass;
      for (int k = 0; k < s.dim; ++k) {
        double t = u[k] - c.lo[k].get_d();
        if (t <= 0) { p = 0; break; }
        if (t < mass) p *= t / mass;
      }
      total += p;
    }
  }
  return total;
}

DeltaVector DeltaVector::checked(int d, std::vector<Rat> values) {
  if (d < 2 || d % 2 != 0)
    throw UnsupportedDimError("the attaining family needs even dimension >= 2");
  int n = d / 2;
  if (d == 2 && values.empty()) values.push_back(Rat(0));
  if (static_cast<int>(values.size()) != n)
    throw ParseError("delta needs " + std::to_string(n) + " entries for dimension " +
                     std::to_string(d));
  Rat cap(1, d + 1);
  Rat sum = 0;
  for (size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0 || values[j] > cap)
      throw ParseError("delta_" + std::to_string(j + 1) + " = " +
                       rational_str(values[j]) + " outside [0,1/" +
                       std::to_string(d + 1) + "]");
    if (j > 0 && values[j] < values[j - 1])
      throw ParseError("delta entries must be sorted ascending");
    sum += values[j];
  }
  Rat want(n - 1, d + 1);
  want.canonicalize();
  if (sum != want)
    throw ParseError("delta entries sum to " + rational_str(sum) + ", expected " +
                     rational_str(want));
  return DeltaVector{d, std::move(values)};
}

ShuffleStructure extremal_shuffle_structure(int d) {
  if (d < 2) throw DimError("dimension must be >= 2");
  std::vector<Rat> us = u_star(d);
  std::vector<Rat> w(static_cast<size_t>(d) + 1);  // 1-based
  for (int i = 1; i <= d; ++i) w[i] = 1 - us[static_cast<size_t>(i - 1)];
  auto wsum = [&](int a, int b) {  // inclusive
    Rat s = 0;
    for (int i = a; i <= b; ++i) s += w[i];
    return s;
  };
  ShuffleStructure s;
  s.dim = d;
  for (int j = 1; j <= d; ++j) {
    ShuffleCell c;
    c.lo.resize(static_cast<size_t>(d));
    c.hi.resize(static_cast<size_t>(d));
    for (int k = 1; k <= d; ++k) {
      Rat lo, hi;
      if (j < k) {
        lo = 1 - wsum(j, k);
        hi = 1 - wsum(j + 1, k);
      } else if (j == k) {
        lo = 1 - w[k];
        hi = 1;
      } else {
        lo = wsum(k + 1, j - 1);
        hi = wsum(k + 1, j);
      }
      c.lo[static_cast<size_t>(k - 1)] = lo;
      c.hi[static_cast<size_t>(k - 1)] = hi;
    }
    s.cells.push_back(std::move(c));
  }
  return s;
}

ShuffleStructure manifold_shuffle_structure(const DeltaVector& delta, BaseTag base) {
  int d = delta.dim;
  int n = d / 2;
  Rat unit(1, d + 1);
  std::vector<Rat> e(static_cast<size_t>(n) + 1), f(static_cast<size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    e[j] = unit + delta.values[static_cast<size_t>(j - 1)];
    f[j] = unit - delta.values[static_cast<size_t>(j - 1)];
  }
  auto E = [&](int m) { Rat s = 0; for (int j = 1; j <= m; ++j) s += e[j]; return s; };
  auto F = [&](int m) { Rat s = 0; for (int j = 1; j <= m; ++j) s += f[j]; return s; };
  auto dl = [&](int j) { return delta.values[static_cast<size_t>(j - 1)]; };
  auto frac = [&](int num) { Rat q(num, d + 1); q.canonicalize(); return q; };

  ShuffleStructure s;
  s.dim = d;
  for (int i = 1; i <= 3 * n - 1; ++i) {
    std::vector<Rat> lo(static_cast<size_t>(d) + 1), hi(static_cast<size_t>(d) + 1);
    if (i <= n - 1) {
      // block of cells aligned with the low coordinates of u(delta)
      for (int k = 1; k <= n - i; ++k) { lo[k] = E(i - 1); hi[k] = E(i); }
      for (int k = n + 1; k <= 2 * n; ++k) { lo[k] = E(i - 1); hi[k] = E(i); }
      lo[n - i + 1] = frac(d - 1);
      hi[n - i + 1] = frac(d) + dl(i);
      for (int k = n - i + 2; k <= n; ++k) {
        int x = n + 1 - k;
        lo[k] = E(i - 1) - e[x];
        hi[k] = E(i) - e[x];
      }
    } else if (i <= 2 * n - 2) {
      int q = i - n;
      lo[1] = frac(d - 2) - dl(n) + F(q);
      hi[1] = frac(d - 2) - dl(n) + F(q + 1);
      for (int k = 2; k <= 2 * n - i - 1; ++k) {
        int x = n + 1 - k;
        lo[k] = frac(d - 3) - dl(n) - dl(x) + F(q);
        hi[k] = frac(d - 3) - dl(n) - dl(x) + F(q + 1);
      }
      lo[2 * n - i] = frac(d) + dl(q + 1);
      hi[2 * n - i] = 1;
      for (int k = 2 * n - i + 1; k <= n; ++k) {
        lo[k] = frac(d - 4) - dl(n) + F(q);
        hi[k] = frac(d - 4) - dl(n) + F(q + 1);
      }
      for (int k = n + 1; k <= 2 * n; ++k) {
        lo[k] = frac(d) - dl(n) + F(q);
        hi[k] = frac(d) - dl(n) + F(q + 1);
      }
    } else if (i <= 3 * n - 2) {
      int r = i - 2 * n + 1;
      lo[1] = frac(d - 2) + F(r);
      hi[1] = frac(d - 2) + F(r + 1);
      for (int k = 2; k <= n; ++k) {
        lo[k] = frac(d - 4) + F(r);
        hi[k] = frac(d - 4) + F(r + 1);
      }
      for (int k = n + 1; k <= 2 * n; ++k) {
        if (k == i - n + 2) continue;
        int x = k - n;
        Rat s1 = F(r) - (x <= r ? f[x] : Rat(0));
        Rat s2 = F(r + 1) - (x <= r + 1 ? f[x] : Rat(0));
        lo[k] = frac(d) + s1;
        hi[k] = frac(d) + s2;
      }
      lo[i - n + 2] = frac(d) + dl(r + 1);
      hi[i - n + 2] = 1;
    } else {
      lo[1] = frac(d - 1);
      hi[1] = 1;
      for (int k = 2; k <= n; ++k) {
        lo[k] = frac(d - 3);
        hi[k] = frac(d - 1);
      }
      for (int k = n + 1; k <= 2 * n; ++k) {
        lo[k] = frac(d - 2) - dl(n);
        hi[k] = frac(d) - dl(n);
      }
    }
    ShuffleCell c;
    c.base = base;
    c.lo.assign(lo.begin() + 1, lo.end());
    c.hi.assign(hi.begin() + 1, hi.end());
    if (c.mass() > 0) s.cells.push_back(std::move(c));
  }
  return s;
}

std::vector<Rat> manifold_point(const DeltaVector& delta) {
  int d = delta.dim;
  int n = d / 2;
  std::vector<Rat> u;
  Rat low(d - 1, d + 1);
  low.canonicalize();
  Rat high(d, d + 1);
  high.canonicalize();
  for (int j = 0; j < n; ++j) u.push_back(low);
  for (int j = 0; j < n; ++j) u.push_back(high + delta.values[static_cast<size_t>(j)]);
  return u;
}

std::string shuffle_to_json(const ShuffleStructure& s) {
  nlohmann::json j;
  j["dim"] = s.dim;
  j["cells"] = nlohmann::json::array();
  for (const ShuffleCell& c : s.cells) {
    nlohmann::json cell;
    cell["base"] = base_str(c.base);
    cell["intervals"] = nlohmann::json::array();
    for (int k = 0; k < s.dim; ++k)
      cell["intervals"].push_back({rational_str(c.lo[k]), rational_str(c.hi[k])});
    j["cells"].push_back(std::move(cell));
  }
  return j.dump(2) + "\n";
}

ShuffleStructure shuffle_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed structure file: ") + e.what());
  }
  try {
    ShuffleStructure s;
    s.dim = j.at("dim").get<int>();
    if (s.dim < 2) throw DimError("structure dimension must be >= 2");
    for (const auto& cell : j.at("cells")) {
      ShuffleCell c;
      c.base = parse_base(cell.at("base").get<std::string>());
      const auto& ivs = cell.at("intervals");
      if (static_cast<int>(ivs.size()) != s.dim)
        throw ParseError("cell has " + std::to_string(ivs.size()) +
                         " intervals, expected " + std::to_string(s.dim));
      for (const auto& iv : ivs) {
        if (iv.size() != 2) throw ParseError("interval needs two endpoints");
        c.lo.push_back(parse_rational(iv.at(0).get<std::string>(), /*strict=*/true));
        c.hi.push_back(parse_rational(iv.at(1).get<std::string>(), /*strict=*/true));
      }
      s.cells.push_back(std::move(c));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed structure file: ") + e.what());
  }
}

ShuffleStructure read_shuffle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return shuffle_from_json(buf.str());
}

void write_shuffle_file(const ShuffleStructure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << shuffle_to_json(s);
}

}  // namespace nonex
