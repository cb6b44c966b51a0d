#pragma once

// Test-only reference computations. Nothing here calls into the library's
// polynomial, matrix or invariant code: polynomials are plain maps, group
// elements are nested vectors, and linear algebra is textbook elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, long long>;  // coefficients kept in [1, p)
using Mat = std::vector<std::vector<long long>>;

inline long long md(long long a, long long p) { return ((a % p) + p) % p; }

inline long long inv(long long a, long long p) {
  for (long long b = 1; b < p; ++b) {
    if (md(a * b, p) == 1) return b;
  }
  return 0;
}

inline void add_to(Poly& f, const Exps& e, long long c, long long p) {
  long long& slot = f[e];
  slot = md(slot + c, p);
  if (slot == 0) f.erase(e);
}

inline Poly mul(const Poly& f, const Poly& g, long long p) {
  Poly out;
  for (const auto& [a, ca] : f) {
    for (const auto& [b, cb] : g) {
      Exps e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      add_to(out, e, ca * cb, p);
    }
  }
  return out;
}

inline Poly one(std::size_t n) { return Poly{{Exps(n, 0), 1}}; }

/// Replaces x_i by sum_j m[i][j] x_j, one term at a time by repeated multiplication.
inline Poly substitute(const Poly& f, const Mat& m, long long p) {
  const std::size_t n = m.size();
  Poly out;
  for (const auto& [e, c] : f) {
    Poly t = one(n);
    for (std::size_t i = 0; i < n; ++i) {
      Poly li;
      for (std::size_t j = 0; j < n; ++j) {
        if (md(m[i][j], p) == 0) continue;
        Exps x(n, 0);
        x[j] = 1;
        li[x] = md(m[i][j], p);
      }
      for (int k = 0; k < e[i]; ++k) t = mul(t, li, p);
    }
    for (const auto& [te, tc] : t) add_to(out, te, tc * c, p);
  }
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b, long long p) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = md(c[i][j] + a[i][k] * b[k][j], p);
  return c;
}

inline Mat mat_inv(Mat a, long long p) {
  const std::size_t n = a.size();
  Mat r(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    std::swap(r[piv], r[c]);
    const long long s = inv(a[c][c], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = md(a[c][j] * s, p);
      r[c][j] = md(r[c][j] * s, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const long long f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = md(a[i][j] - f * a[c][j], p);
        r[i][j] = md(r[i][j] - f * r[c][j], p);
      }
    }
  }
  return r;
}

/// All products of the generators (closure by brute force).
inline std::vector<Mat> group_closure(const std::vector<Mat>& gens, long long p) {
  const std::size_t n = gens.front().size();
  Mat id(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        Mat b = mat_mul(a, g, p);
        if (seen.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::size_t rank(Mat a, long long p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && md(a[piv][c], p) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const long long s = inv(md(a[r][c], p), p);
    for (auto& x : a[r]) x = md(x * s, p);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const long long f = md(a[i][c], p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = md(a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return r;
}

/// Exponent vectors of degree d in n variables (any order).
inline std::vector<Exps> monomials(std::size_t n, int d) {
  std::vector<Exps> out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// True iff some invariant of degree d is nonzero at v, decided by
/// rank([A; e_v]) > rank(A) where A stacks (rho(g) - I) over ALL group
/// elements and e_v is the evaluation functional.
inline bool separates_in_degree(const std::vector<Mat>& group, const std::vector<long long>& v, int d, long long p) {
  const std::size_t n = v.size();
  const auto basis = monomials(n, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Mat a;
  for (const auto& g : group) {
    const Mat ginv = mat_inv(g, p);
    Mat block(basis.size(), std::vector<long long>(basis.size(), 0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Poly image = substitute(Poly{{basis[j], 1}}, ginv, p);
      for (const auto& [e, c] : image) block[index.at(e)][j] = c;
      block[j][j] = md(block[j][j] - 1, p);
    }
    for (auto& row : block) a.push_back(std::move(row));
  }
  std::vector<long long> ev(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    long long val = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < basis[j][i]; ++k) val = md(val * v[i], p);
    ev[j] = val;
  }
  const std::size_t r = rank(a, p);
  a.push_back(ev);
  return rank(a, p) > r;
}

/// Least d <= bound with a separating invariant of degree d; 0 if none.
inline int epsilon(const std::vector<Mat>& gens, const std::vector<long long>& v, int bound, long long p) {
  const auto group = group_closure(gens, p);
  for (int d = 1; d <= bound; ++d) {
    if (separates_in_degree(group, v, d, p)) return d;
  }
  return 0;
}

/// C(a, b) mod p through exact big-integer factorials.
inline unsigned binomial_mod(unsigned a, unsigned b, unsigned p) {
  using boost::multiprecision::cpp_int;
  if (b > a) return 0;
  cpp_int num = 1, den = 1;
  for (unsigned i = 2; i <= a; ++i) num *= i;
  for (unsigned i = 2; i <= b; ++i) den *= i;
  for (unsigned i = 2; i <= a - b; ++i) den *= i;
  return static_cast<unsigned>(cpp_int(num / den) % p);
}

/// Matrices of the Z_p x Z_p example, in the h_1..h_m, e_1..e_m basis.
inline std::vector<Mat> example_generators(int m, long long lambda) {
  Mat g1(2 * m, std::vector<long long>(2 * m, 0)), g2 = g1;
  for (int i = 0; i < 2 * m; ++i) g1[i][i] = g2[i][i] = 1;
  for (int j = 0; j < m; ++j) {
    g1[m + j][j] = 1;
    g2[m + j][j] = lambda;
    if (j > 0) g2[m + j][j - 1] = 1;
  }
  return {g1, g2};
}

}  // namespace oracle
