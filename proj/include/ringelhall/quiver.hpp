#pragma once

// Nilpotent representations of a finite quiver over a prime field F_p.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ringelhall/scalar.hpp"

namespace ringelhall {

/// Integer vector indexed by vertices: dimension vectors and torus weights.
using IntVec = std::vector<int>;
using DimVec = IntVec;

IntVec operator+(const IntVec& x, const IntVec& y);
IntVec operator-(const IntVec& x, const IntVec& y);
IntVec operator-(const IntVec& x);
IntVec operator*(int s, const IntVec& x);
bool leq(const IntVec& x, const IntVec& y);  // componentwise
bool is_zero(const IntVec& x);
int height(const IntVec& x);
IntVec unit_vector(std::size_t n, std::size_t i);
std::string to_string(const IntVec& x);  // "(1,0,2)"

struct Arrow {
  int source;
  int target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// <a,b> = sum_i a_i b_i - sum_{arrows s->t} a_s b_t
  int euler_form(const IntVec& a, const IntVec& b) const;
  /// (a,b) = <a,b> + <b,a>
  int symmetric_euler(const IntVec& a, const IntVec& b) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

  static Quiver a2() { return Quiver(2, {{0, 1}}); }
  static Quiver jordan() { return Quiver(1, {{0, 0}}); }
  static Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

/// Dense matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  static FpMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::uint32_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<std::uint32_t>& data() const { return data_; }
  std::vector<std::uint32_t>& data() { return data_; }

  bool is_zero() const;
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> data_;
};

FpMatrix mul(const FpMatrix& x, const FpMatrix& y, std::uint64_t p);
FpMatrix add(const FpMatrix& x, const FpMatrix& y, std::uint64_t p);
FpMatrix sub(const FpMatrix& x, const FpMatrix& y, std::uint64_t p);
int rank(FpMatrix m, std::uint64_t p);
/// Basis of {x : m x = 0} as columns.
std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t primitive_root(std::uint64_t p);

/// Concrete representation: one dim[t] x dim[s] matrix per arrow s -> t.
struct Rep {
  DimVec dim;
  std::vector<FpMatrix> maps;
  friend bool operator==(const Rep&, const Rep&) = default;
};

Rep zero_rep(const Quiver& quiver, const DimVec& dim);
Rep simple_rep(const Quiver& quiver, int vertex);
Rep direct_sum(const Quiver& quiver, const Rep& x, const Rep& y);
/// Throws DomainError when matrix shapes do not match the quiver.
void check_shape(const Quiver& quiver, const Rep& m);

/// The arrow ideal acts nilpotently: iterating W <- sum_a M_a(W) from the
/// whole space reaches zero.
bool is_nilpotent(const Quiver& quiver, const GroundField& field, const Rep& m);

/// A graded linear map: one dim_N[i] x dim_M[i] block per vertex.
using GradedMap = std::vector<FpMatrix>;

/// Basis of Hom(M, N): solutions of N_a f_s = f_t M_a.
std::vector<GradedMap> hom_basis(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n);
int hom_dim(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n);
/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>; extensions 0 -> N -> E -> M -> 0.
int ext_dim(const Quiver& quiver, const GroundField& field, const Rep& m, const Rep& n);

/// |Aut(M)| by enumerating End(M); ResourceError if q^dim End exceeds max_states.
mpz_class aut_count(const Quiver& quiver, const GroundField& field, const Rep& m, std::uint64_t max_states);

/// End(M) has no idempotents besides 0 and 1 (M != 0). Enumerates End(M).
bool is_indecomposable(const Quiver& quiver, const GroundField& field, const Rep& m, std::uint64_t max_states);

/// |GL(d, q)| for every vertex, multiplied.
mpz_class group_order(const DimVec& dim, std::uint64_t q);

}  // namespace ringelhall
