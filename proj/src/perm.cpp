#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nonex {

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (i == j) throw ParseError("transposition needs two distinct indices");
  if (i > j) std::swap(i, j);
  if (i < 1) throw ParseError("transposition index below 1");
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  int d = static_cast<int>(images_.size());
  if (d < 2) throw DimError("permutations need dimension >= 2");
  std::vector<bool> seen(static_cast<size_t>(d), false);
  for (int v : images_) {
    if (v < 1 || v > d || seen[static_cast<size_t>(v - 1)])
      throw ParseError("images are not a bijection of {1,...," + std::to_string(d) + "}");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int d) {
  std::vector<int> im(static_cast<size_t>(d));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::reversal(int d) {
  std::vector<int> im(static_cast<size_t>(d));
  for (int k = 1; k <= d; ++k) im[static_cast<size_t>(k - 1)] = d - k + 1;
  return Perm(std::move(im));
}

Perm Perm::transposition(int d, const Transposition& t) {
  if (t.j > d) throw DimError("transposition index exceeds dimension");
  Perm p = identity(d);
  std::vector<int> im = p.images();
  std::swap(im[static_cast<size_t>(t.i - 1)], im[static_cast<size_t>(t.j - 1)]);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int k = 1; k <= dim(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

std::vector<Rat> apply(const Perm& pi, std::span<const Rat> u) {
  if (static_cast<int>(u.size()) != pi.dim())
    throw DimError("permutation/point dimension mismatch");
  std::vector<Rat> v(u.size());
  for (int k = 1; k <= pi.dim(); ++k)
    v[static_cast<size_t>(k - 1)] = u[static_cast<size_t>(pi(k) - 1)];
  return v;
}

UnitPoint apply(const Perm& pi, const UnitPoint& u) {
  return UnitPoint(apply(pi, u.span()));
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.dim() != t.dim()) throw DimError("permutation dimension mismatch");
  std::vector<int> im(static_cast<size_t>(s.dim()));
  for (int k = 1; k <= s.dim(); ++k) im[static_cast<size_t>(k - 1)] = s(t(k));
  return Perm(std::move(im));
}

Perm inverse(const Perm& pi) {
  std::vector<int> im(static_cast<size_t>(pi.dim()));
  for (int k = 1; k <= pi.dim(); ++k) im[static_cast<size_t>(pi(k) - 1)] = k;
  return Perm(std::move(im));
}

std::vector<Transposition> decompose(const Perm& pi) {
  int d = pi.dim();
  std::vector<int> cur = Perm::identity(d).images();
  std::vector<Transposition> out;
  for (int k = d; k >= 2; --k) {
    int m = 0;
    for (int j = 1; j <= k; ++j)
      if (cur[static_cast<size_t>(j - 1)] == pi(k)) { m = j; break; }
    if (m != k) {
      out.emplace_back(m, k);
      std::swap(cur[static_cast<size_t>(m - 1)], cur[static_cast<size_t>(k - 1)]);
    }
  }
  return out;
}

std::vector<int> nonfixed_indices(const Perm& pi) {
  std::vector<int> out;
  for (int k = 1; k <= pi.dim(); ++k)
    if (pi(k) != k) out.push_back(k);
  return out;
}

std::vector<Perm> all_permutations(int d) {
  std::vector<int> im(static_cast<size_t>(d));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Perm parse_perm(const std::string& text, int dim) {
  if (text == "id") return Perm::identity(dim);
  if (text == "reverse") return Perm::reversal(dim);
  std::vector<int> im;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed permutation image: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw ParseError("malformed permutation image: '" + item + "'");
    im.push_back(v);
  }
  if (static_cast<int>(im.size()) != dim)
    throw DimError("permutation has " + std::to_string(im.size()) +
                   " images, expected " + std::to_string(dim));
  return Perm(std::move(im));
}

std::string perm_str(const Perm& pi) {
  std::string out;
  for (int k = 1; k <= pi.dim(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(pi(k));
  }
  return out;
}

}  // namespace nonex
