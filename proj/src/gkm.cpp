#include "ringelhall/gkm.hpp"

#include <algorithm>
#include <deque>

#include "ringelhall/errors.hpp"

namespace ringelhall {

int BorcherdsDatum::pair(const IntVec& a, const IntVec& b) const {
  int s = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) s += a[i] * form[i][j] * b[j];
  return s;
}

void BorcherdsDatum::validate() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (form[i].size() != size()) throw InternalError("form matrix is not square");
    for (std::size_t j = 0; j < size(); ++j) {
      if (form[i][j] != form[j][i]) throw InternalError("form is not symmetric");
      if (i != j && form[i][j] > 0) throw InternalError("form has a positive off-diagonal entry");
      if (form[i][i] > 0 && (2 * form[i][j]) % form[i][i] != 0)
        throw InternalError("2(i,j)/(i,i) is not an integer for a real index");
    }
  }
}

BorcherdsDatum datum_from_quiver(const Quiver& quiver) {
  const auto n = static_cast<std::size_t>(quiver.vertex_count());
  BorcherdsDatum d;
  d.form.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.form[i][j] = quiver.symmetric_euler(unit_vector(n, i), unit_vector(n, j));
  d.validate();
  return d;
}

BorcherdsDatum datum_from_table(const ClassTable& table) { return datum_from_quiver(table.quiver()); }

CartanMatrix cartan_from_datum(const BorcherdsDatum& d) {
  d.validate();
  CartanMatrix c;
  c.datum = d;
  const std::size_t n = d.size();
  c.c.assign(n, std::vector<int>(n, 0));
  c.eps.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const int ii = d(i, i);
    if (ii > 0) {
      if (ii % 2 != 0) throw DomainError("odd diagonal entry (i,i) gives a non-integral symmetrizer");
      c.eps[i] = ii / 2;
    }
    for (std::size_t j = 0; j < n; ++j) c.c[i][j] = ii > 0 ? 2 * d(i, j) / ii : d(i, j);
  }
  return c;
}

std::vector<std::size_t> CartanMatrix::real_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (is_real(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> CartanMatrix::imaginary_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (!is_real(i)) out.push_back(i);
  return out;
}

IntVec reflect(const CartanMatrix& c, std::size_t i, const IntVec& mu) {
  if (i >= c.size()) throw DomainError("reflection index out of range");
  if (!c.is_real(i)) throw DomainError("reflection along an imaginary simple root");
  int s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += mu[j] * c.c[i][j];
  IntVec out = mu;
  out[i] -= s;
  return out;
}

bool root_order(const IntVec& a, const IntVec& b) {
  int ha = height(a), hb = height(b);
  return ha != hb ? ha < hb : a < b;
}

namespace {

bool is_positive_vector(const IntVec& mu) {
  bool nonzero = false;
  for (int x : mu) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

bool connected_support(const CartanMatrix& c, const IntVec& mu) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != 0) supp.push_back(i);
  if (supp.empty()) return false;
  std::vector<bool> seen(mu.size(), false);
  std::deque<std::size_t> queue{supp.front()};
  seen[supp.front()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : supp)
      if (!seen[j] && c.datum(i, j) != 0) {
        seen[j] = true;
        ++reached;
        queue.push_back(j);
      }
  }
  return reached == supp.size();
}

bool is_imaginary_multiple(const CartanMatrix& c, const IntVec& mu) {
  for (std::size_t i : c.imaginary_indices()) {
    if (mu[i] < 2) continue;
    bool only_i = true;
    for (std::size_t j = 0; j < mu.size(); ++j)
      if (j != i && mu[j] != 0) only_i = false;
    if (only_i) return true;
  }
  return false;
}

std::vector<IntVec> vectors_up_to_height(std::size_t n, int height) {
  std::vector<IntVec> out;
  IntVec cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (!is_zero(cur)) out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
    cur[i] = 0;
  };
  rec(rec, 0, height);
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

}  // namespace

std::vector<IntVec> fundamental_region(const CartanMatrix& c, int height) {
  std::vector<IntVec> out;
  const std::size_t n = c.size();
  for (const IntVec& mu : vectors_up_to_height(n, height)) {
    if (!connected_support(c, mu) || is_imaginary_multiple(c, mu)) continue;
    bool ok = true;
    for (std::size_t i : c.real_indices())
      if (c.datum.pair(mu, unit_vector(n, i)) > 0) ok = false;
    if (ok) out.push_back(mu);
  }
  return out;
}

std::vector<IntVec> weyl_orbit(const CartanMatrix& c, const std::vector<IntVec>& seeds, int height) {
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (const IntVec& s : seeds)
    if (is_positive_vector(s) && ringelhall::height(s) <= height && seen.insert(s).second) queue.push_back(s);
  const auto real = c.real_indices();
  while (!queue.empty()) {
    IntVec mu = queue.front();
    queue.pop_front();
    for (std::size_t i : real) {
      IntVec r = reflect(c, i, mu);
      if (!is_positive_vector(r) || ringelhall::height(r) > height) continue;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

std::vector<IntVec> imaginary_multiples(const CartanMatrix& c, int height) {
  std::vector<IntVec> out;
  for (std::size_t i : c.imaginary_indices())
    for (int s = 2; s <= height; ++s) out.push_back(s * unit_vector(c.size(), i));
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

std::vector<Root> positive_roots(const CartanMatrix& c, int height) {
  std::vector<IntVec> simples;
  for (std::size_t i : c.real_indices()) simples.push_back(unit_vector(c.size(), i));
  std::vector<Root> out;
  for (const IntVec& r : weyl_orbit(c, simples, height)) out.push_back({r, RootKind::real, true});
  for (const IntVec& r : weyl_orbit(c, fundamental_region(c, height), height)) out.push_back({r, RootKind::imaginary, true});
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return root_order(a.vec, b.vec); });
  return out;
}

std::vector<Root> negative_roots(const std::vector<Root>& positive) {
  std::vector<Root> out;
  for (const Root& r : positive) out.push_back({-r.vec, r.kind, false});
  return out;
}

}  // namespace ringelhall
