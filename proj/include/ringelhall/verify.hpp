#pragma once

// Executable identity suites. Each suite checks one family of identities per
// entry, over every in-bound instance, and records the first counterexample.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ringelhall/class_table.hpp"
#include "ringelhall/gkm.hpp"
#include "ringelhall/hall_algebra.hpp"

namespace ringelhall {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  /// Instance count on pass, counterexample with both sides on failure,
  /// reason (with the bound it would need) when skipped.
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  std::string overall() const { return passed() ? "pass" : "fail"; }
};

/// One report holding every check of the parts, names prefixed by suite.
CheckReport combine_reports(const std::string& suite, const std::vector<CheckReport>& parts);

/// Torus weights used when sampling K_mu: 0 and +-e_i.
std::vector<IntVec> torus_samples(int vertex_count);

CheckReport suite_hopf(const HallAlgebra& h);
CheckReport suite_pairing(const HallAlgebra& h);
CheckReport suite_composition(const HallAlgebra& h);
CheckReport suite_sv(const HallAlgebra& h, const DimVec& bound);
CheckReport suite_kac(const ClassTable& table, int height);
CheckReport suite_character(const ClassTable& table, const DimVec& bound);

/// I(alpha, q): number of indecomposable classes per dimension vector (zero entries omitted).
std::map<DimVec, int> indecomposable_counts(const ClassTable& table);

/// Coefficients of prod_alpha (1 - e(alpha))^{-I(alpha)} on the region (within bound).
std::map<DimVec, mpz_class> character_product(const ClassTable& table, const std::map<DimVec, int>& counts,
                                              const DimVec& bound);

/// Recovers I(alpha) from per-degree class counts by peeling the product factor by factor.
std::map<DimVec, mpz_class> invert_character(const ClassTable& table, const DimVec& bound);

/// The F_i image in the double: -v_i u_i^- for real i, (v^2 - 1)/(v_i^-1 - v_i) u_i^- otherwise.
Scalar composition_constant(const HallAlgebra& h, const CartanMatrix& c, std::size_t i);

}  // namespace ringelhall
