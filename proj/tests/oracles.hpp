#pragma once

// Brute-force reference computations. Nothing here calls the library's
// enumeration, linear algebra or Hall-number code; only the plain data types
// are shared.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "ringelhall/quiver.hpp"
#include "ringelhall/scalar.hpp"

namespace oracle {

using ringelhall::DimVec;
using ringelhall::FpMatrix;
using ringelhall::Quiver;
using ringelhall::Rep;
using ringelhall::Scalar;

inline std::uint64_t seed() {
  const char* s = std::getenv("RINGELHALL_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20240611ULL;
}

inline FpMatrix times(const FpMatrix& x, const FpMatrix& y, std::uint64_t p) {
  FpMatrix z(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < x.cols(); ++k) s += static_cast<std::uint64_t>(x(i, k)) * y(k, j);
      z(i, j) = static_cast<std::uint32_t>(s % p);
    }
  return z;
}

inline std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

inline int gauss_rank(FpMatrix m, std::uint64_t p) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) piv = i;
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const std::uint64_t inv = power_mod(m(r, c), p - 2, p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !m(i, c)) continue;
      const std::uint64_t f = m(i, c) * inv % p;
      for (int j = 0; j < m.cols(); ++j) m(i, j) = static_cast<std::uint32_t>((m(i, j) + p * p - f * m(r, j)) % p);
    }
    ++r;
  }
  return r;
}

/// Calls f on every tuple of matrices with the given shapes (rows, cols).
inline void for_each_tuple(const std::vector<std::pair<int, int>>& shapes, std::uint64_t q,
                           const std::function<void(const std::vector<FpMatrix>&)>& f) {
  std::vector<FpMatrix> t;
  for (auto [r, c] : shapes) t.emplace_back(r, c);
  std::vector<std::uint32_t*> cells;
  for (auto& m : t)
    for (auto& x : m.data()) cells.push_back(&x);
  while (true) {
    f(t);
    std::size_t k = 0;
    while (k < cells.size() && ++*cells[k] == q) *cells[k++] = 0;
    if (k == cells.size()) return;
  }
}

inline std::vector<std::pair<int, int>> arrow_shapes(const Quiver& quiver, const DimVec& d) {
  std::vector<std::pair<int, int>> s;
  for (const auto& a : quiver.arrows()) s.push_back({d[static_cast<std::size_t>(a.target)], d[static_cast<std::size_t>(a.source)]});
  return s;
}

/// Nilpotent iff every path of length sum(dim) acts as zero.
inline bool nilpotent_by_paths(const Quiver& quiver, const Rep& m, std::uint64_t q) {
  int n = 0;
  for (int x : m.dim) n += x;
  if (n == 0) return true;
  const auto& arrows = quiver.arrows();
  std::function<bool(int, int, const FpMatrix*)> extend = [&](int len, int at, const FpMatrix* acc) -> bool {
    if (len == n) return acc->is_zero();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (at >= 0 && arrows[a].source != at) continue;
      FpMatrix next = acc ? times(m.maps[a], *acc, q) : m.maps[a];
      if (next.is_zero()) continue;
      if (!extend(len + 1, arrows[a].target, &next)) return false;
    }
    return true;
  };
  return extend(0, -1, nullptr);
}

/// Every nilpotent representation of dimension d.
inline std::vector<Rep> all_nilpotent(const Quiver& quiver, const DimVec& d, std::uint64_t q) {
  std::vector<Rep> out;
  for_each_tuple(arrow_shapes(quiver, d), q, [&](const std::vector<FpMatrix>& maps) {
    Rep r{d, maps};
    if (nilpotent_by_paths(quiver, r, q)) out.push_back(r);
  });
  return out;
}

inline bool intertwines(const Quiver& quiver, const Rep& m, const Rep& n, const std::vector<FpMatrix>& f, std::uint64_t q) {
  for (std::size_t a = 0; a < quiver.arrows().size(); ++a) {
    const auto s = static_cast<std::size_t>(quiver.arrows()[a].source);
    const auto t = static_cast<std::size_t>(quiver.arrows()[a].target);
    if (!(times(n.maps[a], f[s], q) == times(f[t], m.maps[a], q))) return false;
  }
  return true;
}

inline std::vector<std::pair<int, int>> vertex_shapes(const DimVec& from, const DimVec& to) {
  std::vector<std::pair<int, int>> s;
  for (std::size_t i = 0; i < from.size(); ++i) s.push_back({to[i], from[i]});
  return s;
}

/// |Aut(M)| by testing every tuple of square matrices.
inline std::uint64_t aut(const Quiver& quiver, const Rep& m, std::uint64_t q) {
  std::uint64_t count = 0;
  for_each_tuple(vertex_shapes(m.dim, m.dim), q, [&](const std::vector<FpMatrix>& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (gauss_rank(g[i], q) != g[i].rows()) return;
    if (intertwines(quiver, m, m, g, q)) ++count;
  });
  return count;
}

inline bool isomorphic(const Quiver& quiver, const Rep& m, const Rep& n, std::uint64_t q) {
  if (m.dim != n.dim) return false;
  bool found = false;
  for_each_tuple(vertex_shapes(m.dim, n.dim), q, [&](const std::vector<FpMatrix>& g) {
    if (found) return;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (gauss_rank(g[i], q) != g[i].rows()) return;
    if (intertwines(quiver, m, n, g, q)) found = true;
  });
  return found;
}

inline mpz_class gl_order(const DimVec& d, std::uint64_t q) {
  mpz_class g = 1;
  for (int n : d) {
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
    mpz_class qi = 1;
    for (int i = 0; i < n; ++i) {
      g *= qn - qi;
      qi *= q;
    }
  }
  return g;
}

/// Number of orbits, by Burnside: sum over nilpotent M of |Aut M| / |G|.
inline mpz_class class_count(const Quiver& quiver, const DimVec& d, std::uint64_t q) {
  mpz_class total = 0;
  for (const Rep& m : all_nilpotent(quiver, d, q)) total += aut(quiver, m, q);
  return total / gl_order(d, q);
}

/// dim Ext^1(M, N): cocycles modulo the image of the coboundary map
/// (f_i) -> (N_a f_s - f_t M_a), computed as a rank over F_q.
inline int ext_by_coboundary(const Quiver& quiver, const Rep& m, const Rep& n, std::uint64_t q) {
  const auto& arrows = quiver.arrows();
  int z = 0;
  std::vector<int> offset;
  for (const auto& a : arrows) {
    offset.push_back(z);
    z += n.dim[static_cast<std::size_t>(a.target)] * m.dim[static_cast<std::size_t>(a.source)];
  }
  int c = 0;
  for (std::size_t i = 0; i < m.dim.size(); ++i) c += n.dim[i] * m.dim[i];
  FpMatrix delta(z, c);
  int col = 0;
  for (std::size_t i = 0; i < m.dim.size(); ++i)
    for (int r = 0; r < n.dim[i]; ++r)
      for (int s = 0; s < m.dim[i]; ++s, ++col) {
        std::vector<FpMatrix> f;
        for (std::size_t j = 0; j < m.dim.size(); ++j) f.emplace_back(n.dim[j], m.dim[j]);
        f[i](r, s) = 1;
        for (std::size_t a = 0; a < arrows.size(); ++a) {
          const auto sv = static_cast<std::size_t>(arrows[a].source), tv = static_cast<std::size_t>(arrows[a].target);
          FpMatrix x = times(n.maps[a], f[sv], q), y = times(f[tv], m.maps[a], q);
          for (int u = 0; u < x.rows(); ++u)
            for (int w = 0; w < x.cols(); ++w)
              delta(offset[a] + u * x.cols() + w, col) = static_cast<std::uint32_t>((x(u, w) + q - y(u, w)) % q);
        }
      }
  return z - gauss_rank(delta, q);
}

/// g^gamma_{alpha beta} from extension counting: every cocycle z gives
/// 0 -> beta -> E_z -> alpha -> 0, and
///   g = #{z : E_z ~ gamma} |Aut gamma| / (|Aut alpha| |Aut beta| q^{sum_i a_i b_i}).
inline mpz_class hall_by_extensions(const Quiver& quiver, const Rep& alpha, const Rep& beta, const Rep& gamma,
                                    std::uint64_t q) {
  const auto& arrows = quiver.arrows();
  if (ringelhall::operator+(alpha.dim, beta.dim) != gamma.dim) return 0;
  std::vector<std::pair<int, int>> shapes;
  for (const auto& a : arrows)
    shapes.push_back({beta.dim[static_cast<std::size_t>(a.target)], alpha.dim[static_cast<std::size_t>(a.source)]});
  mpz_class hits = 0;
  for_each_tuple(shapes, q, [&](const std::vector<FpMatrix>& z) {
    Rep e{gamma.dim, {}};
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto s = static_cast<std::size_t>(arrows[a].source), t = static_cast<std::size_t>(arrows[a].target);
      FpMatrix m(beta.dim[t] + alpha.dim[t], beta.dim[s] + alpha.dim[s]);
      for (int r = 0; r < beta.dim[t]; ++r)
        for (int c = 0; c < beta.dim[s]; ++c) m(r, c) = beta.maps[a](r, c);
      for (int r = 0; r < beta.dim[t]; ++r)
        for (int c = 0; c < alpha.dim[s]; ++c) m(r, beta.dim[s] + c) = z[a](r, c);
      for (int r = 0; r < alpha.dim[t]; ++r)
        for (int c = 0; c < alpha.dim[s]; ++c) m(beta.dim[t] + r, beta.dim[s] + c) = alpha.maps[a](r, c);
      e.maps.push_back(m);
    }
    if (isomorphic(quiver, e, gamma, q)) ++hits;
  });
  int ab = 0;
  for (std::size_t i = 0; i < alpha.dim.size(); ++i) ab += alpha.dim[i] * beta.dim[i];
  mpz_class qab;
  mpz_ui_pow_ui(qab.get_mpz_t(), q, static_cast<unsigned long>(ab));
  mpz_class num = hits * aut(quiver, gamma, q);
  mpz_class den = aut(quiver, alpha, q) * aut(quiver, beta, q) * qab;
  if (num % den != 0) std::abort();
  return num / den;
}

/// Quantum binomial by the Pascal rule [m,n] = v_i^{-n} [m-1,n] + v_i^{m-n} [m-1,n-1].
inline Scalar q_binom(long m, long n, long eps, std::uint64_t q) {
  if (n < 0 || n > m) return Scalar();
  if (n == 0 || n == m) return Scalar(1);
  return ringelhall::v_pow(-n * eps, q) * q_binom(m - 1, n, eps, q) +
         ringelhall::v_pow((m - n) * eps, q) * q_binom(m - 1, n - 1, eps, q);
}

/// Partition numbers p(0..n) by the recurrence over the largest part.
inline std::vector<long> partitions(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  return p;
}

}  // namespace oracle
