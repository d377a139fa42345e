#include "ringelhall/sv_extension.hpp"

#include <algorithm>

#include "ringelhall/errors.hpp"

namespace ringelhall {

std::vector<std::size_t> row_reduce(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<std::vector<Scalar>> kernel(ScalarMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(cols);
    x[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Scalar> coordinates(const HallAlgebra& h, const DimVec& theta, const AlgElt& x) {
  auto ids = h.table().classes_of_dim(theta);
  std::vector<Scalar> out(ids.size());
  for (const auto& [s, c] : x) {
    if (s.minus != 0 || !is_zero(s.torus) || !(h.table().dim(s.plus) == theta))
      throw DomainError("element is not a K-free positive element of degree " + to_string(theta));
    auto it = std::lower_bound(ids.begin(), ids.end(), s.plus);
    out[static_cast<std::size_t>(it - ids.begin())] = c;
  }
  return out;
}

AlgElt from_coordinates(const HallAlgebra& h, const DimVec& theta, const std::vector<Scalar>& c) {
  auto ids = h.table().classes_of_dim(theta);
  AlgElt out;
  for (std::size_t k = 0; k < ids.size(); ++k) out.add(h.sym(0, {}, ids[k]), c[k]);
  return out;
}

namespace {

void check_theta(const HallAlgebra& h, const DimVec& theta) {
  const ClassTable& t = h.table();
  if (theta.size() != static_cast<std::size_t>(t.vertex_count())) throw DomainError("degree has wrong length");
  if (!t.region().contains(theta)) throw DomainError("degree " + to_string(theta) + " lies outside the class table region");
  if (height(theta) <= 1) throw DomainError("degree " + to_string(theta) + " is zero or simple");
}

}  // namespace

GradedSubspace xi_space(const HallAlgebra& h, const DimVec& theta) {
  check_theta(h, theta);
  const ClassTable& t = h.table();
  ScalarMatrix rows;
  for (const DimVec& mu : t.dims()) {
    if (is_zero(mu) || mu == theta || !leq(mu, theta)) continue;
    DimVec nu = theta - mu;
    for (ClassId x : t.classes_of_dim(mu))
      for (ClassId y : t.classes_of_dim(nu)) rows.push_back(coordinates(h, theta, h.mult_plus(h.plus(x), h.plus(y))));
  }
  row_reduce(rows);
  GradedSubspace out{theta, {}};
  for (const auto& r : rows) out.basis.push_back(from_coordinates(h, theta, r));
  return out;
}

GradedSubspace l_space(const HallAlgebra& h, const DimVec& theta) {
  GradedSubspace xi = xi_space(h, theta);
  auto ids = h.table().classes_of_dim(theta);
  // Gram rows psi(xi_r, u_c) = coefficient of u_c in xi_r divided by a_c.
  ScalarMatrix gram;
  for (const AlgElt& x : xi.basis) {
    std::vector<Scalar> row = coordinates(h, theta, x);
    for (std::size_t c = 0; c < ids.size(); ++c) row[c] /= h.aut(ids[c]);
    gram.push_back(std::move(row));
  }
  GradedSubspace out{theta, {}};
  for (const auto& k : kernel(gram, ids.size())) out.basis.push_back(from_coordinates(h, theta, k));
  if (out.dim() + xi.dim() != ids.size()) throw InternalError("rank-nullity fails for L_" + to_string(theta));
  return out;
}

bool check_primitive(const HallAlgebra& h, const AlgElt& x, const DimVec& theta) {
  for (const auto& [s, c] : x)
    if (!(h.degree(s) == theta)) throw DomainError("element is not homogeneous of degree " + to_string(theta));
  TensorElt expected;
  const BasisSym unit = h.sym(0, {}, 0);
  const BasisSym k_theta = h.sym(0, theta, 0);
  for (const auto& [s, c] : x) {
    expected.add({s, unit}, c);
    expected.add({k_theta, s}, c);
  }
  return h.comult(x) == expected;
}

DimVec ExtendedDatum::varpi(std::size_t index) const {
  const std::size_t n = original.size();
  if (index < n) return unit_vector(n, index);
  return new_indices.at(index - n).theta;
}

AlgElt ExtendedDatum::generator(const HallAlgebra& h, std::size_t index) const {
  const std::size_t n = original.size();
  if (index < n) return h.plus(h.table().simple(static_cast<int>(index)));
  return new_indices.at(index - n).x;
}

ExtendedDatum extend_datum(const HallAlgebra& h, const DimVec& bound) {
  const ClassTable& t = h.table();
  if (bound.size() != static_cast<std::size_t>(t.vertex_count())) throw DomainError("bound has wrong length");
  ExtendedDatum d;
  d.original = cartan_from_datum(datum_from_table(t));
  for (const DimVec& theta : t.dims()) {
    if (height(theta) <= 1 || !leq(theta, bound)) continue;
    GradedSubspace l = l_space(h, theta);
    const std::size_t classes = t.classes_of_dim(theta).size();
    d.degrees.push_back({theta, classes, classes - l.dim(), l.dim()});
    for (std::size_t p = 0; p < l.dim(); ++p) d.new_indices.push_back({theta, static_cast<int>(p + 1), l.basis[p]});
  }
  const std::size_t m = d.original.size() + d.new_indices.size();
  d.form.form.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) d.form.form[i][j] = d.original.datum.pair(d.varpi(i), d.varpi(j));
  if (validate_extended_form(d).empty()) d.cartan = cartan_from_datum(d.form);
  return d;
}

std::vector<FormViolation> validate_extended_form(const ExtendedDatum& d) {
  std::vector<FormViolation> out;
  const std::size_t n = d.original.size();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      const int ij = d.form(i, j), ii = d.form(i, i);
      if (i != j && ij > 0) out.push_back({i, j, "off-diagonal entry is positive"});
      if (i == j && i >= n && ij > 0) out.push_back({i, j, "new index has positive square"});
      if (ii > 0 && (2 * ij) % ii != 0) out.push_back({i, j, "2(i,j)'/(i,i)' is not an integer"});
    }
  return out;
}

}  // namespace ringelhall
