#include "ringelhall/quiver.hpp"

#include <numeric>
#include <sstream>

#include "ringelhall/errors.hpp"

namespace ringelhall {

IntVec operator+(const IntVec& x, const IntVec& y) {
  IntVec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

IntVec operator-(const IntVec& x, const IntVec& y) {
  IntVec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

IntVec operator-(const IntVec& x) {
  IntVec r(x);
  for (auto& c : r) c = -c;
  return r;
}

IntVec operator*(int s, const IntVec& x) {
  IntVec r(x);
  for (auto& c : r) c *= s;
  return r;
}

bool leq(const IntVec& x, const IntVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool is_zero(const IntVec& x) {
  for (int c : x)
    if (c != 0) return false;
  return true;
}

int height(const IntVec& x) { return std::accumulate(x.begin(), x.end(), 0); }

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec r(n, 0);
  r[i] = 1;
  return r;
}

std::string to_string(const IntVec& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ')';
  return os.str();
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 1) throw DomainError("quiver needs at least one vertex");
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
      throw DomainError("arrow endpoint out of range");
  }
}

int Quiver::euler_form(const IntVec& a, const IntVec& b) const {
  int r = 0;
  for (int i = 0; i < n_; ++i) r += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
  for (const Arrow& arr : arrows_)
    r -= a[static_cast<std::size_t>(arr.source)] * b[static_cast<std::size_t>(arr.target)];
  return r;
}

int Quiver::symmetric_euler(const IntVec& a, const IntVec& b) const { return euler_form(a, b) + euler_form(b, a); }

// ---------------------------------------------------------------------------
// F_p linear algebra

FpMatrix FpMatrix::identity(int n) {
  FpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

FpMatrix mul(const FpMatrix& x, const FpMatrix& y, std::uint64_t p) {
  if (x.cols() != y.rows()) throw DomainError("matrix shape mismatch in product");
  FpMatrix r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      std::uint64_t a = x(i, k);
      if (!a) continue;
      for (int j = 0; j < y.cols(); ++j) r(i, j) = static_cast<std::uint32_t>((r(i, j) + a * y(k, j)) % p);
    }
  return r;
}

FpMatrix add(const FpMatrix& x, const FpMatrix& y, std::uint64_t p) {
  FpMatrix r = x;
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = static_cast<std::uint32_t>((r.data()[i] + y.data()[i]) % p);
  return r;
}

FpMatrix sub(const FpMatrix& x, const FpMatrix& y, std::uint64_t p) {
  FpMatrix r = x;
  for (std::size_t i = 0; i < r.data().size(); ++i)
    r.data()[i] = static_cast<std::uint32_t>((r.data()[i] + p - y.data()[i]) % p);
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
      b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (pow_mod(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<int> rref(FpMatrix& m, std::uint64_t p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    std::uint64_t inv = inv_mod(m(row, col), p);
    for (int c = 0; c < m.cols(); ++c) m(row, c) = static_cast<std::uint32_t>((m(row, c) * inv) % p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || !m(r, col)) continue;
      std::uint64_t f = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) = static_cast<std::uint32_t>((m(r, c) + (p - f) * m(row, c)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(FpMatrix m, std::uint64_t p) { return static_cast<int>(rref(m, p).size()); }

std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m, std::uint64_t p) {
  auto pivots = rref(m, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<std::uint32_t> x(static_cast<std::size_t>(m.cols()), 0);
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] = static_cast<std::uint32_t>((p - m(static_cast<int>(r), free)) % p);
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Representations

Rep zero_rep(const Quiver& quiver, const DimVec& dim) {
  Rep r{dim, {}};
  for (const Arrow& a : quiver.arrows())
    r.maps.emplace_back(dim[static_cast<std::size_t>(a.target)], dim[static_cast<std::size_t>(a.source)]);
  return r;
}

Rep simple_rep(const Quiver& quiver, int vertex) {
  return zero_rep(quiver, unit_vector(static_cast<std::size_t>(quiver.vertex_count()), static_cast<std::size_t>(vertex)));
}

Rep direct_sum(const Quiver& quiver, const Rep& x, const Rep& y) {
  Rep r = zero_rep(quiver, x.dim + y.dim);
  for (std::size_t k = 0; k < quiver.arrows().size(); ++k) {
    const Arrow& a = quiver.arrows()[k];
    int xr = x.dim[static_cast<std::size_t>(a.target)], xc = x.dim[static_cast<std::size_t>(a.source)];
    for (int i = 0; i < x.maps[k].rows(); ++i)
      for (int j = 0; j < x.maps[k].cols(); ++j) r.maps[k](i, j) = x.maps[k](i, j);
    for (int i = 0; i < y.maps[k].rows(); ++i)
      for (int j = 0; j < y.maps[k].cols(); ++j) r.maps[k](xr + i, xc + j) = y.maps[k](i, j);
  }
  return r;
}

void check_shape(const Quiver& quiver, const Rep& m) {
  if (m.dim.size() != static_cast<std::size_t>(quiver.vertex_count()) || m.maps.size() != quiver.arrows().size())
    throw DomainError("representation does not match quiver");
  for (int d : m.dim)
    if (d < 0) throw DomainError("negative dimension");
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const Arrow& a = quiver.arrows()[k];
    if (m.maps[k].rows() != m.dim[static_cast<std::size_t>(a.target)] ||
        m.maps[k].cols() != m.dim[static_cast<std::size_t>(a.source)])
      throw DomainError("arrow matrix has wrong shape");
  }
}

bool is_nilpotent(const Quiver& quiver, const GroundField& field, const Rep& m) {
  check_shape(quiver, m);
  const auto p = field.q();
  const auto n = static_cast<std::size_t>(quiver.vertex_count());
  // W[i]: spanning vectors (as columns) of the current subspace at vertex i.
  std::vector<FpMatrix> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = FpMatrix::identity(m.dim[i]);
  int total = height(m.dim);
  for (;;) {
    if (total == 0) return true;
    std::vector<std::vector<std::vector<std::uint32_t>>> cols(n);
    for (std::size_t k = 0; k < quiver.arrows().size(); ++k) {
      const Arrow& a = quiver.arrows()[k];
      auto s = static_cast<std::size_t>(a.source), t = static_cast<std::size_t>(a.target);
      if (w[s].cols() == 0 || m.dim[t] == 0) continue;
      FpMatrix img = mul(m.maps[k], w[s], p);
      for (int c = 0; c < img.cols(); ++c) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(img.rows()));
        for (int r = 0; r < img.rows(); ++r) v[static_cast<std::size_t>(r)] = img(r, c);
        cols[t].push_back(std::move(v));
      }
    }
    int next_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // Independent columns via row reduction of the transpose.
      FpMatrix tr(static_cast<int>(cols[i].size()), m.dim[i]);
      for (std::size_t c = 0; c < cols[i].size(); ++c)
        for (int r = 0; r < m.dim[i]; ++r) tr(static_cast<int>(c), r) = cols[i][c][static_cast<std::size_t>(r)];
      auto piv = rref(tr, p);
      FpMatrix basis(m.dim[i], static_cast<int>(piv.size()));
      for (std::size_t c = 0; c < piv.size(); ++c)
        for (int r = 0; r < m.dim[i]; ++r) basis(r, static_cast<int>(c)) = tr(static_cast<int>(c), r);
      w[i] = std::move(basis);
      next_total += static_cast<int>(piv.size());
    }
    if (next_total == total) return false;
    total = next_total;
  }
}

namespace {

// Linear system whose kernel is Hom(M, N); unknowns are the blocks f_i
// (dim N_i x dim M_i, row-major) concatenated in vertex order.
FpMatrix intertwiner_system(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n,
                            std::vector<int>& offsets) {
  check_shape(quiver, m);
  check_shape(quiver, n);
  const auto p = field.q();
  const auto nv = static_cast<std::size_t>(quiver.vertex_count());
  offsets.assign(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) offsets[i + 1] = offsets[i] + n.dim[i] * m.dim[i];
  int eqs = 0;
  for (const Arrow& a : quiver.arrows())
    eqs += n.dim[static_cast<std::size_t>(a.target)] * m.dim[static_cast<std::size_t>(a.source)];
  FpMatrix sys(eqs, offsets[nv]);
  int row = 0;
  for (std::size_t k = 0; k < quiver.arrows().size(); ++k) {
    const Arrow& a = quiver.arrows()[k];
    auto s = static_cast<std::size_t>(a.source), t = static_cast<std::size_t>(a.target);
    const FpMatrix& na = n.maps[k];
    const FpMatrix& ma = m.maps[k];
    for (int r = 0; r < n.dim[t]; ++r)
      for (int c = 0; c < m.dim[s]; ++c, ++row) {
        // (N_a f_s)(r,c) = sum_j N_a(r,j) f_s(j,c)
        for (int j = 0; j < n.dim[s]; ++j) {
          int var = offsets[s] + j * m.dim[s] + c;
          sys(row, var) = static_cast<std::uint32_t>((sys(row, var) + na(r, j)) % p);
        }
        // (f_t M_a)(r,c) = sum_j f_t(r,j) M_a(j,c)
        for (int j = 0; j < m.dim[t]; ++j) {
          int var = offsets[t] + r * m.dim[t] + j;
          sys(row, var) = static_cast<std::uint32_t>((sys(row, var) + p - ma(j, c)) % p);
        }
      }
  }
  return sys;
}

GradedMap unpack(const std::vector<std::uint32_t>& x, const Rep& m, const Rep& n, const std::vector<int>& offsets) {
  GradedMap f;
  for (std::size_t i = 0; i < m.dim.size(); ++i) {
    FpMatrix b(n.dim[i], m.dim[i]);
    for (int r = 0; r < n.dim[i]; ++r)
      for (int c = 0; c < m.dim[i]; ++c)
        b(r, c) = x[static_cast<std::size_t>(offsets[i] + r * m.dim[i] + c)];
    f.push_back(std::move(b));
  }
  return f;
}

// Calls visit(f) for every element of End(M), given as the flat coordinate
// vector. Stops early when visit returns false.
template <class Visit>
void for_each_endomorphism(const Quiver& quiver, const GroundField& field, const Rep& m, std::uint64_t max_states,
                           Visit&& visit) {
  std::vector<int> offsets;
  FpMatrix sys = intertwiner_system(quiver, field, m, m, offsets);
  auto basis = nullspace(sys, field.q());
  const auto p = field.q();
  long double states = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) states *= static_cast<long double>(p);
  if (states > static_cast<long double>(max_states))
    throw ResourceError("End(M) of dimension " + std::to_string(basis.size()) + " for dim " + to_string(m.dim) +
                        " exceeds max_states");
  std::vector<std::uint32_t> digits(basis.size(), 0);
  std::vector<std::uint32_t> x(static_cast<std::size_t>(sys.cols()), 0);
  for (;;) {
    if (!visit(unpack(x, m, m, offsets))) return;
    // odometer increment, updating x incrementally
    std::size_t k = 0;
    for (; k < digits.size(); ++k) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = static_cast<std::uint32_t>((x[j] + basis[k][j]) % p);
      if (++digits[k] < p) break;
      digits[k] = 0;  // wrapped: x has gained p * basis[k] == 0
    }
    if (k == digits.size()) return;
  }
}

}  // namespace

std::vector<GradedMap> hom_basis(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n) {
  std::vector<int> offsets;
  FpMatrix sys = intertwiner_system(quiver, field, m, n, offsets);
  std::vector<GradedMap> out;
  for (const auto& x : nullspace(sys, field.q())) out.push_back(unpack(x, m, n, offsets));
  return out;
}

int hom_dim(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n) {
  std::vector<int> offsets;
  FpMatrix sys = intertwiner_system(quiver, field, m, n, offsets);
  return sys.cols() - rank(sys, field.q());
}

int ext_dim(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n) {
  int e = hom_dim(quiver, field, m, n) - quiver.euler_form(m.dim, n.dim);
  if (e < 0) throw InternalError("negative Ext dimension between " + to_string(m.dim) + " and " + to_string(n.dim));
  return e;
}

mpz_class aut_count(const Quiver& quiver, const GroundField& field, const Rep& m, std::uint64_t max_states) {
  mpz_class count = 0;
  const auto p = field.q();
  for_each_endomorphism(quiver, field, m, max_states, [&](const GradedMap& f) {
    for (const auto& b : f)
      if (rank(b, p) != b.rows()) return true;
    ++count;
    return true;
  });
  return count;
}

bool is_indecomposable(const Quiver& quiver, const GroundField& field, const Rep& m, std::uint64_t max_states) {
  if (height(m.dim) == 0) return false;
  const auto p = field.q();
  bool found = false;
  for_each_endomorphism(quiver, field, m, max_states, [&](const GradedMap& f) {
    bool zero = true, identity = true;
    for (const auto& b : f) {
      if (!b.is_zero()) zero = false;
      if (!(b == FpMatrix::identity(b.rows()))) identity = false;
    }
    if (zero || identity) return true;
    for (const auto& b : f)
      if (!(mul(b, b, p) == b)) return true;
    found = true;
    return false;
  });
  return !found;
}

mpz_class group_order(const DimVec& dim, std::uint64_t q) {
  mpz_class order = 1;
  mpz_class qq(static_cast<unsigned long>(q));
  for (int d : dim) {
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_class qi = 1;
    for (int i = 0; i < d; ++i) {
      order *= qd - qi;
      qi *= qq;
    }
  }
  return order;
}

}  // namespace ringelhall
