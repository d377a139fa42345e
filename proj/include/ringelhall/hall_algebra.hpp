#pragma once

// Positive and negative Ringel-Hall algebras, the pairings phi and psi, the
// involution omega, and the reduced Drinfeld double, truncated to the region
// of a ClassTable.
//
// Every element lives in the double and is written in the triangular normal
// form u_beta^- K_mu u_alpha^+. Pure-positive symbols (beta = 0) are the basis
// K_mu u_alpha^+ of the positive algebra; pure-negative symbols (alpha = 0) are
// u_beta^- K_mu, which differ from K_mu u_beta^- by v^{(mu, beta)}.

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "ringelhall/class_table.hpp"
#include "ringelhall/scalar.hpp"

namespace ringelhall {

struct BasisSym {
  ClassId minus = 0;
  IntVec torus;
  ClassId plus = 0;
  friend auto operator<=>(const BasisSym&, const BasisSym&) = default;
};

/// Finitely supported linear combination; zero coefficients are never stored.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;

  LinComb() = default;
  LinComb(const Key& k, const Scalar& c) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
  friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
  friend LinComb operator*(const Scalar& s, LinComb x) { return x *= s; }
  friend LinComb operator-(LinComb x) { return x *= Scalar(-1); }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

using AlgElt = LinComb<BasisSym>;
using TensorElt = LinComb<std::pair<BasisSym, BasisSym>>;
using Tensor3 = LinComb<std::tuple<BasisSym, BasisSym, BasisSym>>;

std::string to_string(const BasisSym& s);
std::string to_string(const AlgElt& x);
std::string to_string(const TensorElt& x);
std::string to_string(const Tensor3& x);

enum class AntipodeFormula { printed, axiom };

class HallAlgebra {
 public:
  explicit HallAlgebra(const ClassTable& table);
  HallAlgebra(const HallAlgebra&) = delete;
  HallAlgebra& operator=(const HallAlgebra&) = delete;

  const ClassTable& table() const { return table_; }
  std::uint64_t q() const { return table_.q(); }
  Scalar v(long n) const { return v_pow(n, q()); }
  /// Symmetric Euler form on dimension vectors / torus weights.
  int form(const IntVec& a, const IntVec& b) const { return table_.quiver().symmetric_euler(a, b); }
  int euler(const IntVec& a, const IntVec& b) const { return table_.quiver().euler_form(a, b); }
  Scalar aut(ClassId id) const { return Scalar(mpq_class(table_.aut(id))); }

  // Basis elements.
  IntVec zero_weight() const { return IntVec(static_cast<std::size_t>(table_.vertex_count()), 0); }
  BasisSym sym(ClassId minus, IntVec torus, ClassId plus) const;
  AlgElt one() const;
  AlgElt k(const IntVec& mu) const;
  /// K_mu u_alpha^+
  AlgElt plus(ClassId alpha, const IntVec& mu = {}) const;
  /// u_beta^- K_nu
  AlgElt minus(ClassId beta, const IntVec& nu = {}) const;

  /// deg = dim alpha - dim beta
  IntVec degree(const BasisSym& s) const;
  bool is_pure_plus(const AlgElt& x) const;
  bool is_pure_minus(const AlgElt& x) const;

  /// Product in the positive algebra; DomainError on non-positive input,
  /// TruncationError when a product degree leaves the region.
  AlgElt mult_plus(const AlgElt& x, const AlgElt& y) const;
  AlgElt mult_minus(const AlgElt& x, const AlgElt& y) const;
  /// Product in the double, result in minus-torus-plus normal form.
  AlgElt mult(const AlgElt& x, const AlgElt& y) const;
  AlgElt mult(const BasisSym& x, const BasisSym& y) const;

  TensorElt comult_plus(const AlgElt& x) const;
  TensorElt comult_minus(const AlgElt& x) const;
  /// Coproduct of the double (an algebra map built from the two halves).
  TensorElt comult(const AlgElt& x) const;
  Scalar counit(const AlgElt& x) const;

  AlgElt antipode_plus(const AlgElt& x, AntipodeFormula f = AntipodeFormula::axiom) const;
  AlgElt antipode_minus(const AlgElt& x, AntipodeFormula f = AntipodeFormula::axiom) const;
  /// Antipode of the double (anti-multiplicative extension).
  AlgElt antipode(const AlgElt& x, AntipodeFormula f = AntipodeFormula::axiom) const;

  AlgElt omega(const AlgElt& x) const;

  /// phi(x, y) for pure-positive x and pure-negative y.
  Scalar pairing_phi(const AlgElt& x, const AlgElt& y) const;
  /// psi(x, y) = phi(x, omega(y)) for pure-positive x, y.
  Scalar pairing_psi(const AlgElt& x, const AlgElt& y) const;

  // Tensor helpers.
  TensorElt tensor_mult(const TensorElt& x, const TensorElt& y) const;
  Tensor3 comult_left(const TensorElt& x) const;   // (Delta (x) id)
  Tensor3 comult_right(const TensorElt& x) const;  // (id (x) Delta)
  TensorElt flip(const TensorElt& x) const;
  /// m o (S (x) id) and m o (id (x) S).
  AlgElt mult_antipode_left(const TensorElt& x, AntipodeFormula f = AntipodeFormula::axiom) const;
  AlgElt mult_antipode_right(const TensorElt& x, AntipodeFormula f = AntipodeFormula::axiom) const;

 private:
  Scalar phi_basis(const BasisSym& x, const BasisSym& y) const;
  AlgElt hall_plus(ClassId a, ClassId b) const;   // u_a^+ u_b^+
  AlgElt hall_minus(ClassId a, ClassId b) const;  // u_a^- u_b^-
  TensorElt comult_sym(const BasisSym& s) const;
  const TensorElt& comult_u_plus(ClassId gamma) const;
  const TensorElt& comult_u_minus(ClassId gamma) const;
  const AlgElt& antipode_u_plus(ClassId gamma, AntipodeFormula f) const;
  const AlgElt& antipode_u_minus(ClassId gamma, AntipodeFormula f) const;
  AlgElt printed_word_plus(ClassId delta) const;
  AlgElt printed_word_minus(ClassId delta) const;
  /// u_alpha^+ u_beta^- rewritten in normal form.
  const AlgElt& straighten(ClassId alpha, ClassId beta) const;

  const ClassTable& table_;

  std::vector<Scalar> inv_aut_;
  mutable std::recursive_mutex cache_mutex_;
  mutable std::map<ClassId, TensorElt> comult_plus_cache_, comult_minus_cache_;
  mutable std::map<std::pair<ClassId, AntipodeFormula>, AlgElt> antipode_plus_cache_, antipode_minus_cache_;
  mutable std::map<ClassId, AlgElt> word_plus_cache_, word_minus_cache_;
  mutable std::map<std::pair<ClassId, ClassId>, AlgElt> straighten_cache_;
};

}  // namespace ringelhall
