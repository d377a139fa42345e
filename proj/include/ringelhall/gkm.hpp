#pragma once

// Borcherds data, Borcherds-Cartan matrices, simple reflections and
// height-bounded enumeration of positive roots.

#include <set>
#include <vector>

#include "ringelhall/class_table.hpp"
#include "ringelhall/quiver.hpp"

namespace ringelhall {

/// Index set 0..n-1 with a symmetric integer form.
struct BorcherdsDatum {
  std::vector<std::vector<int>> form;

  std::size_t size() const { return form.size(); }
  int operator()(std::size_t i, std::size_t j) const { return form[i][j]; }
  int pair(const IntVec& a, const IntVec& b) const;
  /// Throws InternalError naming the violated axiom.
  void validate() const;
  bool is_real(std::size_t i) const { return form[i][i] > 0; }
};

struct CartanMatrix {
  std::vector<std::vector<int>> c;
  std::vector<int> eps;  ///< symmetrizers; eps_i c_ij = eps_j c_ji
  BorcherdsDatum datum;

  std::size_t size() const { return c.size(); }
  bool is_real(std::size_t i) const { return c[i][i] == 2; }
  std::vector<std::size_t> real_indices() const;
  std::vector<std::size_t> imaginary_indices() const;
};

enum class RootKind { real, imaginary };

struct Root {
  IntVec vec;
  RootKind kind;
  bool positive = true;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Symmetric Euler form of the quiver underlying the table.
BorcherdsDatum datum_from_table(const ClassTable& table);
BorcherdsDatum datum_from_quiver(const Quiver& quiver);
CartanMatrix cartan_from_datum(const BorcherdsDatum& d);

/// r_i(mu) = mu - (sum_j mu_j c_ij) i; DomainError for imaginary i.
IntVec reflect(const CartanMatrix& c, std::size_t i, const IntVec& mu);

/// Nonzero mu in N^I of height <= height with connected support, (mu, i) <= 0
/// for every real i, and not a multiple s*i (s >= 2) of an imaginary simple.
std::vector<IntVec> fundamental_region(const CartanMatrix& c, int height);

/// Closure of seeds under simple reflections, staying in N^I \ {0} and within
/// the height bound. Sorted by height, then lexicographically.
std::vector<IntVec> weyl_orbit(const CartanMatrix& c, const std::vector<IntVec>& seeds, int height);

/// Real roots W(I^re) and imaginary roots W(F), positive and of height <= height.
std::vector<Root> positive_roots(const CartanMatrix& c, int height);

/// s * i for imaginary simple i, s >= 2, height <= height.
std::vector<IntVec> imaginary_multiples(const CartanMatrix& c, int height);

/// Negative of every root.
std::vector<Root> negative_roots(const std::vector<Root>& positive);

/// Height order, then lexicographic; the ordering used for every printed root list.
bool root_order(const IntVec& a, const IntVec& b);

}  // namespace ringelhall
