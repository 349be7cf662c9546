#include "copula.hpp"

#include <algorithm>
#include <set>

namespace nonex {

Copula::Copula(int d) : dim_(d) {
  if (d < 2) throw DimError("dimension must be >= 2, got " + std::to_string(d));
}

Rat Copula::eval(std::span<const Rat> u) const {
  if (static_cast<int>(u.size()) != dim_)
    throw DimError("point has " + std::to_string(u.size()) +
                   " coordinates but the copula has dimension " + std::to_string(dim_));
  return do_eval(u);
}

double Copula::eval_f(std::span<const double> u) const {
  if (static_cast<int>(u.size()) != dim_)
    throw DimError("point has " + std::to_string(u.size()) +
                   " coordinates but the copula has dimension " + std::to_string(dim_));
  return do_eval_f(u);
}

namespace {

class FrechetUpper final : public Copula {
 public:
  explicit FrechetUpper(int d) : Copula(d) {}
  std::string describe() const override { return "M_" + std::to_string(dim()); }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    Rat m = u[0];
    for (size_t k = 1; k < u.size(); ++k)
      if (u[k] < m) m = u[k];
    return m;
  }
  double do_eval_f(std::span<const double> u) const override {
    return *std::min_element(u.begin(), u.end());
  }
};

class FrechetLower final : public Copula {
 public:
  explicit FrechetLower(int d) : Copula(d) {}
  bool claims_copula() const override { return dim() <= 2; }
  std::string describe() const override { return "W_" + std::to_string(dim()); }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    Rat s = 0;
    for (const Rat& x : u) s += x;
    s -= dim() - 1;
    return s > 0 ? s : Rat(0);
  }
  double do_eval_f(std::span<const double> u) const override {
    double s = 0;
    for (double x : u) s += x;
    s -= dim() - 1;
    return s > 0 ? s : 0.0;
  }
};

class Independence final : public Copula {
 public:
  explicit Independence(int d) : Copula(d) {}
  std::string describe() const override { return "Pi_" + std::to_string(dim()); }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    Rat p = 1;
    for (const Rat& x : u) p *= x;
    return p;
  }
  double do_eval_f(std::span<const double> u) const override {
    double p = 1;
    for (double x : u) p *= x;
    return p;
  }
};

// Sum over the d cyclic windows j of the clipped minimum of u_{(j+k) mod d}
// minus a threshold built from prefix sums of the slack weights 1 - u*_i.
class CStar final : public Copula {
 public:
  explicit CStar(int d) : Copula(d) {
    std::vector<Rat> us = u_star(d);
    thresholds_.resize(static_cast<size_t>(d));
    thresholds_f_.resize(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
      thresholds_[j].resize(static_cast<size_t>(d));
      thresholds_f_[j].resize(static_cast<size_t>(d));
      Rat s = 0;
      for (int k = 0; k < d; ++k) {
        s += 1 - us[static_cast<size_t>((j + k) % d)];
        thresholds_[j][k] = 1 - s;
        thresholds_f_[j][k] = thresholds_[j][k].get_d();
      }
    }
  }
  std::string describe() const override { return "Cstar_" + std::to_string(dim()); }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    int d = dim();
    Rat total = 0;
    for (int j = 0; j < d; ++j) {
      Rat m = u[static_cast<size_t>(j)] - thresholds_[j][0];
      for (int k = 1; k < d; ++k) {
        Rat t = u[static_cast<size_t>((j + k) % d)] - thresholds_[j][k];
        if (t < m) m = t;
      }
      if (m > 0) total += m;
    }
    return total;
  }
  double do_eval_f(std::span<const double> u) const override {
    int d = dim();
    double total = 0;
    for (int j = 0; j < d; ++j) {
      double m = u[static_cast<size_t>(j)] - thresholds_f_[j][0];
      for (int k = 1; k < d; ++k) {
        double t = u[static_cast<size_t>((j + k) % d)] - thresholds_f_[j][k];
        if (t < m) m = t;
      }
      if (m > 0) total += m;
    }
    return total;
  }

 private:
  std::vector<std::vector<Rat>> thresholds_;
  std::vector<std::vector<double>> thresholds_f_;
};

class ShuffleCopula final : public Copula {
 public:
  explicit ShuffleCopula(ShuffleStructure s) : Copula(s.dim), s_(std::move(s)) {}
  std::string describe() const override {
    return "shuffle[dim=" + std::to_string(dim()) +
           ",cells=" + std::to_string(s_.cells.size()) + "]";
  }
  const ShuffleStructure& structure() const { return s_; }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    return evaluate_shuffle(s_, u);
  }
  double do_eval_f(std::span<const double> u) const override {
    return evaluate_shuffle_f(s_, u);
  }

 private:
  ShuffleStructure s_;
};

class PermutedView final : public Copula {
 public:
  PermutedView(CopulaPtr inner, Perm pi)
      : Copula(inner->dim()), inner_(std::move(inner)), pi_(std::move(pi)) {
    if (pi_.dim() != dim())
      throw DimError("permutation dimension " + std::to_string(pi_.dim()) +
                     " does not match term dimension " + std::to_string(dim()));
    for (int k = 1; k <= dim(); ++k)
      source_.push_back(static_cast<size_t>(pi_(k) - 1));
  }
  std::string describe() const override {
    return inner_->describe() + "[pi=" + perm_str(pi_) + "]";
  }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    std::vector<Rat> v(u.size());
    for (size_t k = 0; k < u.size(); ++k) v[k] = u[source_[k]];
    return inner_->eval(v);
  }
  double do_eval_f(std::span<const double> u) const override {
    std::vector<double> v(u.size());
    for (size_t k = 0; k < u.size(); ++k) v[k] = u[source_[k]];
    return inner_->eval_f(v);
  }

 private:
  CopulaPtr inner_;
  Perm pi_;
  std::vector<size_t> source_;
};

class Margin final : public Copula {
 public:
  Margin(CopulaPtr inner, std::vector<int> kept)
      : Copula(static_cast<int>(kept.size())), inner_(std::move(inner)),
        kept_(std::move(kept)) {
    std::set<int> seen;
    for (int a : kept_) {
      if (a < 1 || a > inner_->dim())
        throw DimError("kept axis " + std::to_string(a) + " outside 1.." +
                       std::to_string(inner_->dim()));
      if (!seen.insert(a).second)
        throw ParseError("kept axis " + std::to_string(a) + " repeated");
    }
  }
  std::string describe() const override {
    std::string ix;
    for (size_t i = 0; i < kept_.size(); ++i)
      ix += (i ? "," : "") + std::to_string(kept_[i]);
    return "margin[" + ix + "] of " + inner_->describe();
  }

 protected:
  Rat do_eval(std::span<const Rat> u) const override {
    std::vector<Rat> full(static_cast<size_t>(inner_->dim()), Rat(1));
    for (size_t i = 0; i < kept_.size(); ++i)
      full[static_cast<size_t>(kept_[i] - 1)] = u[i];
    return inner_->eval(full);
  }
  double do_eval_f(std::span<const double> u) const override {
    std::vector<double> full(static_cast<size_t>(inner_->dim()), 1.0);
    for (size_t i = 0; i < kept_.size(); ++i)
      full[static_cast<size_t>(kept_[i] - 1)] = u[i];
    return inner_->eval_f(full);
  }

 private:
  CopulaPtr inner_;
  std::vector<int> kept_;
};

}  // namespace

CopulaPtr frechet_upper(int d) { return std::make_shared<FrechetUpper>(d); }
CopulaPtr frechet_lower(int d) { return std::make_shared<FrechetLower>(d); }
CopulaPtr independence(int d) { return std::make_shared<Independence>(d); }
CopulaPtr c_star_closed_form(int d) { return std::make_shared<CStar>(d); }

CopulaPtr shuffle_copula(ShuffleStructure s) {
  ValidationReport r = validate(s);
  if (!r.ok()) throw ParseError("invalid shuffle structure: " + r.first_failure());
  return std::make_shared<ShuffleCopula>(std::move(s));
}

CopulaPtr permuted_view(CopulaPtr inner, Perm pi) {
  return std::make_shared<PermutedView>(std::move(inner), std::move(pi));
}

CopulaPtr margin(CopulaPtr inner, const std::vector<int>& kept_axes) {
  if (kept_axes.size() < 2)
    throw DimError("a margin needs at least 2 kept axes");
  return std::make_shared<Margin>(std::move(inner), kept_axes);
}

std::vector<Rat> u_star(int d) {
  if (d < 2) throw DimError("dimension must be >= 2, got " + std::to_string(d));
  std::vector<Rat> out;
  for (int j = 1; j <= d; ++j) {
    if (2 * j <= d + 1) {
      Rat v(d - 1, d + 1);
      v.canonicalize();
      out.push_back(v);
    } else if (d % 2 == 0 && j == d / 2 + 1) {
      Rat v(d, d + 1);
      v.canonicalize();
      out.push_back(v);
    } else {
      out.push_back(Rat(1));
    }
  }
  return out;
}

Rat evaluate(const Copula& c, const UnitPoint& u) { return c.eval(u.span()); }

Rat box_volume(const Copula& c, const HyperBox& b) {
  int d = static_cast<int>(b.lo.size());
  if (d != c.dim())
    throw DimError("box dimension " + std::to_string(d) +
                   " does not match term dimension " + std::to_string(c.dim()));
  for (int k = 0; k < d; ++k)
    if (b.lo[k] == b.hi[k]) return Rat(0);  // paired corners cancel exactly
  std::vector<Rat> corner(static_cast<size_t>(d));
  Rat vol = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    int lowers = 0;
    for (int k = 0; k < d; ++k) {
      if (mask & (1u << k)) {
        corner[k] = b.hi[k];
      } else {
        corner[k] = b.lo[k];
        ++lowers;
      }
    }
    if (lowers % 2 == 0)
      vol += c.eval(corner);
    else
      vol -= c.eval(corner);
  }
  return vol;
}

}  // namespace nonex
