#pragma once

// Isomorphism classes of nilpotent representations up to a dimension bound,
// with automorphism counts, Hall numbers and indecomposability flags.
//
// Canonical form. A representation is flattened by concatenating its arrow
// matrices in arrow order, each row-major, into a digit string over
// {0,...,q-1}; its code is that string read as a base-q integer (first digit
// most significant). The canonical representative of an orbit is the one with
// the smallest code, i.e. the lexicographically least flattening.
//
// Enumeration. Every nilpotent representation has a composition series; in a
// basis adapted to it all arrow maps are strictly "upper triangular" with
// respect to the global basis order. Candidates are therefore generated from
// every vertex word with multiplicities dim and every strictly triangular
// filling, and each new candidate's orbit under prod_i GL(dim_i, F_q) is closed
// breadth-first using transvections and diagonal scalings as generators.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "ringelhall/quiver.hpp"

namespace ringelhall {

using ClassId = int;

/// Downward-closed set of dimension vectors: 0 <= d <= bound, and
/// height(d) <= max_height when given.
struct Region {
  DimVec bound;
  std::optional<int> max_height;

  bool contains(const IntVec& d) const;
  /// All members, ordered by height then lexicographically.
  std::vector<DimVec> dims() const;
};

struct Limits {
  std::uint64_t max_states = 10'000'000;
  std::uint64_t max_classes = 1'000'000;
  friend bool operator==(const Limits&, const Limits&) = default;
};

struct RepClass {
  ClassId id = 0;
  DimVec dim;
  Rep rep;  ///< canonical representative
  std::uint64_t code = 0;
  std::uint64_t orbit_size = 0;
};

/// All orbits of nilpotent representations of one dimension vector.
struct OrbitCatalog {
  DimVec dim;
  std::vector<RepClass> classes;  ///< sorted by code; ids are local indices
  std::unordered_map<std::uint64_t, int> class_of_code;
  std::uint64_t states = 0;  ///< candidates examined plus orbit members stored
};

std::uint64_t encode_rep(const Rep& m, std::uint64_t q);
Rep decode_rep(const Quiver& quiver, const DimVec& dim, std::uint64_t code, std::uint64_t q);

/// The budget counts every field-element tuple the enumerator touches.
OrbitCatalog enumerate_orbits(const Quiver& quiver, const GroundField& field, const DimVec& dim, const Limits& limits);
std::vector<RepClass> enumerate_classes(const Quiver& quiver, const GroundField& field, const DimVec& dim,
                                        const Limits& limits);

struct HallProduct {
  ClassId gamma;
  std::uint64_t count;
};

struct HallSplit {
  ClassId quotient;  ///< alpha
  ClassId sub;       ///< beta
  std::uint64_t count;
};

class ClassTable {
 public:
  ClassTable(Quiver quiver, GroundField field, Region region, Limits limits = {});
  ClassTable(const ClassTable&) = delete;
  ClassTable& operator=(const ClassTable&) = delete;

  const Quiver& quiver() const { return quiver_; }
  const GroundField& field() const { return field_; }
  std::uint64_t q() const { return field_.q(); }
  const Region& region() const { return region_; }
  const Limits& limits() const { return limits_; }
  int vertex_count() const { return quiver_.vertex_count(); }

  std::size_t size() const { return classes_.size(); }
  const RepClass& cls(ClassId id) const { return classes_.at(static_cast<std::size_t>(id)); }
  const DimVec& dim(ClassId id) const { return cls(id).dim; }
  const std::vector<RepClass>& classes() const { return classes_; }
  std::span<const ClassId> classes_of_dim(const DimVec& d) const;
  std::vector<DimVec> dims() const { return region_.dims(); }

  static constexpr ClassId zero() { return 0; }
  ClassId simple(int vertex) const { return simples_.at(static_cast<std::size_t>(vertex)); }
  bool is_simple(ClassId id) const;

  /// Class of an arbitrary nilpotent representation inside the region.
  ClassId classify(const Rep& m) const;

  const mpz_class& aut(ClassId id) const { return aut_.at(static_cast<std::size_t>(id)); }
  bool indecomposable(ClassId id) const { return indecomposable_.at(static_cast<std::size_t>(id)); }
  int hom(ClassId a, ClassId b) const;
  int ext(ClassId a, ClassId b) const { return hom(a, b) - euler(a, b); }
  int euler(ClassId a, ClassId b) const { return quiver_.euler_form(dim(a), dim(b)); }

  /// g^gamma_{alpha beta}: subobjects X of M_gamma with X ~ M_beta, M_gamma/X ~ M_alpha.
  std::uint64_t hall(ClassId alpha, ClassId beta, ClassId gamma) const;
  /// All gamma with g^gamma_{alpha beta} != 0. TruncationError if dim alpha +
  /// dim beta leaves the region.
  std::span<const HallProduct> products(ClassId alpha, ClassId beta) const;
  /// All (alpha, beta) with g^gamma_{alpha beta} != 0.
  std::span<const HallSplit> splittings(ClassId gamma) const { return splittings_.at(static_cast<std::size_t>(gamma)); }
  /// Number of filtrations M_gamma = X_0 > X_1 > ... > X_m = 0 with X_{k-1}/X_k ~ parts[k-1].
  std::uint64_t hall_multi(ClassId gamma, std::span<const ClassId> parts) const;

  std::uint64_t total_states() const { return total_states_; }

 private:
  void compute_hall_numbers();
  void compute_indecomposables();

  Quiver quiver_;
  GroundField field_;
  Region region_;
  Limits limits_;
  std::vector<RepClass> classes_;
  std::map<DimVec, std::vector<ClassId>> by_dim_;
  std::map<DimVec, std::unordered_map<std::uint64_t, ClassId>> code_index_;
  std::vector<ClassId> simples_;
  std::vector<mpz_class> aut_;
  std::vector<bool> indecomposable_;
  std::map<std::pair<ClassId, ClassId>, std::vector<HallProduct>> products_;
  std::vector<std::vector<HallSplit>> splittings_;
  std::uint64_t total_states_ = 0;

  mutable std::mutex hom_mutex_;
  mutable std::map<std::pair<ClassId, ClassId>, int> hom_cache_;
};

}  // namespace ringelhall
