#include "ringelhall/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "ringelhall/errors.hpp"
#include "ringelhall/sv_extension.hpp"

namespace ringelhall {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

bool CheckReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

CheckReport combine_reports(const std::string& suite, const std::vector<CheckReport>& parts) {
  CheckReport out{suite, {}};
  for (const auto& p : parts)
    for (const auto& c : p.checks) out.checks.push_back({p.suite + "/" + c.name, c.status, c.detail});
  return out;
}

std::vector<IntVec> torus_samples(int vertex_count) {
  const auto n = static_cast<std::size_t>(vertex_count);
  std::vector<IntVec> out{IntVec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i) out.push_back(-unit_vector(n, i));
  return out;
}

namespace {

/// Accumulates one identity family: counts instances, keeps the first failure.
class Family {
 public:
  explicit Family(std::string name) : name_(std::move(name)) {}

  template <class W>
  void record(bool ok, W&& witness) {
    ++count_;
    if (!ok && !failure_) failure_ = witness();
  }
  void skip(const std::string& what) { skipped_.push_back(what); }

  void emit(CheckReport& r) const {
    if (failure_) {
      r.checks.push_back({name_, CheckStatus::fail, *failure_});
    } else if (count_ > 0 || skipped_.empty()) {
      r.checks.push_back({name_, CheckStatus::pass, std::to_string(count_) + " instances"});
    }
    if (!skipped_.empty()) {
      std::string d = std::to_string(skipped_.size()) + " instances need degrees outside the region:";
      for (const auto& s : skipped_) d += " " + s;
      r.checks.push_back({name_, CheckStatus::skipped, d});
    }
  }

 private:
  std::string name_;
  std::size_t count_ = 0;
  std::optional<std::string> failure_;
  std::vector<std::string> skipped_;
};

std::string sides(const std::string& what, const std::string& lhs, const std::string& rhs) {
  return what + ": lhs = " + lhs + "; rhs = " + rhs;
}

std::vector<BasisSym> basis_plus(const HallAlgebra& h, const std::vector<IntVec>& torus) {
  std::vector<BasisSym> out;
  for (const auto& c : h.table().classes())
    for (const auto& mu : torus) out.push_back(h.sym(0, mu, c.id));
  return out;
}

std::vector<BasisSym> basis_minus(const HallAlgebra& h, const std::vector<IntVec>& torus) {
  std::vector<BasisSym> out;
  for (const auto& c : h.table().classes())
    for (const auto& mu : torus) out.push_back(h.sym(c.id, mu, 0));
  return out;
}

AlgElt elt(const BasisSym& s) { return AlgElt(s, Scalar(1)); }

AlgElt counit_left(const HallAlgebra& h, const TensorElt& t) {
  AlgElt out;
  for (const auto& [k, c] : t) out.add(k.second, c * h.counit(elt(k.first)));
  return out;
}

AlgElt counit_right(const HallAlgebra& h, const TensorElt& t) {
  AlgElt out;
  for (const auto& [k, c] : t) out.add(k.first, c * h.counit(elt(k.second)));
  return out;
}

TensorElt omega_tensor(const HallAlgebra& h, const TensorElt& t) {
  TensorElt out;
  for (const auto& [k, c] : t) {
    AlgElt l = h.omega(elt(k.first)), r = h.omega(elt(k.second));
    for (const auto& [ls, lc] : l)
      for (const auto& [rs, rc] : r) out.add({ls, rs}, c * lc * rc);
  }
  return out;
}

/// sum phi(x1, y1) phi(x2, y2) over the tensor terms of x and y.
Scalar phi_tensor(const HallAlgebra& h, const TensorElt& x, const TensorElt& y) {
  Scalar out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      if (kx.first.plus != ky.first.minus || kx.second.plus != ky.second.minus) continue;
      out += cx * cy * h.pairing_phi(elt(kx.first), elt(ky.first)) * h.pairing_phi(elt(kx.second), elt(ky.second));
    }
  return out;
}

bool in_region(const HallAlgebra& h, const IntVec& d) { return h.table().region().contains(d); }

std::string sign_name(const std::string& family, char sign) { return family + "[" + sign + "]"; }

AlgElt power(const HallAlgebra& h, const AlgElt& x, int n) {
  AlgElt out = h.one();
  for (int k = 0; k < n; ++k) out = h.mult(out, x);
  return out;
}

/// sum_p (-1)^p [n choose p]_{v^eps} a^p b a^{n-p}
AlgElt serre_sum(const HallAlgebra& h, const AlgElt& a, const AlgElt& b, int n, int eps) {
  AlgElt out;
  for (int p = 0; p <= n; ++p) {
    AlgElt t = h.mult(h.mult(power(h, a, p), b), power(h, a, n - p));
    t *= q_binom(n, p, eps, h.q()) * Scalar(p % 2 == 0 ? 1 : -1);
    out += t;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport suite_hopf(const HallAlgebra& h) {
  CheckReport r{"hopf", {}};
  const ClassTable& t = h.table();
  const auto torus = torus_samples(t.vertex_count());
  const IntVec zero = h.zero_weight();

  for (char sign : {'+', '-'}) {
    const auto basis = sign == '+' ? basis_plus(h, torus) : basis_minus(h, torus);
    const auto kfree = sign == '+' ? basis_plus(h, {zero}) : basis_minus(h, {zero});
    Family coassoc(sign_name("coassociativity", sign)), counit(sign_name("counit", sign)),
        anti_l(sign_name("antipode-left", sign)), anti_r(sign_name("antipode-right", sign)),
        printed(sign_name("antipode-printed", sign)), unit(sign_name("unit", sign)),
        green(sign_name("green", sign)), assoc(sign_name("associativity", sign));
    for (const auto& s : basis) {
      const AlgElt x = elt(s);
      const TensorElt d = h.comult(x);
      Tensor3 l = h.comult_left(d), rr = h.comult_right(d);
      coassoc.record(l == rr, [&] { return sides("x = " + to_string(s), to_string(l), to_string(rr)); });
      AlgElt cl = counit_left(h, d), cr = counit_right(h, d);
      counit.record(cl == x && cr == x, [&] { return sides("x = " + to_string(s), to_string(cl), to_string(cr)); });
      const AlgElt e = h.counit(x) * h.one();
      AlgElt al = h.mult_antipode_left(d), ar = h.mult_antipode_right(d);
      anti_l.record(al == e, [&] { return sides("x = " + to_string(s), to_string(al), to_string(e)); });
      anti_r.record(ar == e, [&] { return sides("x = " + to_string(s), to_string(ar), to_string(e)); });
      AlgElt sp = h.antipode(x, AntipodeFormula::printed), sa = h.antipode(x, AntipodeFormula::axiom);
      printed.record(sp == sa, [&] { return sides("x = " + to_string(s), to_string(sp), to_string(sa)); });
      AlgElt u1 = h.mult(h.one(), x), u2 = h.mult(x, h.one());
      unit.record(u1 == x && u2 == x, [&] { return sides("x = " + to_string(s), to_string(u1), to_string(u2)); });
    }
    for (const auto& s : basis)
      for (const auto& s2 : kfree) {
        if (!in_region(h, (t.dim(s.plus) + t.dim(s.minus)) + (t.dim(s2.plus) + t.dim(s2.minus)))) continue;
        const AlgElt x = elt(s), y = elt(s2);
        TensorElt lhs = h.comult(h.mult(x, y));
        TensorElt rhs = h.tensor_mult(h.comult(x), h.comult(y));
        green.record(lhs == rhs, [&] {
          return sides("x = " + to_string(s) + ", y = " + to_string(s2), to_string(lhs), to_string(rhs));
        });
      }
    for (const auto& a : kfree)
      for (const auto& b : kfree) {
        IntVec dab = (t.dim(a.plus) + t.dim(a.minus)) + (t.dim(b.plus) + t.dim(b.minus));
        if (!in_region(h, dab)) continue;
        for (const auto& c : kfree) {
          if (!in_region(h, dab + (t.dim(c.plus) + t.dim(c.minus)))) continue;
          AlgElt lhs = h.mult(h.mult(elt(a), elt(b)), elt(c));
          AlgElt rhs = h.mult(elt(a), h.mult(elt(b), elt(c)));
          assoc.record(lhs == rhs, [&] {
            return sides("(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")", to_string(lhs),
                         to_string(rhs));
          });
        }
      }
    for (const Family* f : {&coassoc, &green, &counit, &anti_l, &anti_r, &printed, &unit, &assoc}) f->emit(r);
  }

  // The double: coproduct is multiplicative across the two halves.
  Family green_d("green[double]");
  const auto plus0 = basis_plus(h, {zero}), minus0 = basis_minus(h, {zero});
  for (const auto& a : plus0)
    for (const auto& b : minus0)
      for (bool plus_first : {true, false}) {
        const AlgElt x = elt(plus_first ? a : b), y = elt(plus_first ? b : a);
        TensorElt lhs = h.comult(h.mult(x, y));
        TensorElt rhs = h.tensor_mult(h.comult(x), h.comult(y));
        green_d.record(lhs == rhs, [&] { return sides("x = " + to_string(x) + ", y = " + to_string(y), to_string(lhs), to_string(rhs)); });
      }
  green_d.emit(r);
  return r;
}

// ---------------------------------------------------------------------------

CheckReport suite_pairing(const HallAlgebra& h) {
  CheckReport r{"pairing", {}};
  const ClassTable& t = h.table();
  const auto torus = torus_samples(t.vertex_count());
  const IntVec zero = h.zero_weight();
  const auto pb = basis_plus(h, torus), nb = basis_minus(h, torus);
  const AlgElt one = h.one();

  Family unit_l("phi-unit-left"), unit_r("phi-unit-right"), coprod("phi-coproduct"), prod("phi-product"),
      anti("phi-antipode");
  for (const auto& a : pb) {
    Scalar lhs = h.pairing_phi(elt(a), one), rhs = h.counit(elt(a));
    unit_l.record(lhs == rhs, [&] { return sides("a = " + to_string(a), lhs.to_string(), rhs.to_string()); });
  }
  for (const auto& b : nb) {
    Scalar lhs = h.pairing_phi(one, elt(b)), rhs = h.counit(elt(b));
    unit_r.record(lhs == rhs, [&] { return sides("b = " + to_string(b), lhs.to_string(), rhs.to_string()); });
  }
  // phi(a, b b') = phi(Delta a, b (x) b'),  phi(a a', b) = phi(a (x) a', Delta^op b)
  for (const auto& a : pb) {
    const TensorElt da = h.comult(elt(a));
    const IntVec& dim_a = t.dim(a.plus);
    for (const auto& b : nb)
      for (const auto& b2 : nb) {
        if (!(t.dim(b.minus) + t.dim(b2.minus) == dim_a)) continue;
        Scalar lhs = h.pairing_phi(elt(a), h.mult(elt(b), elt(b2)));
        Scalar rhs = phi_tensor(h, da, TensorElt({b, b2}, Scalar(1)));
        coprod.record(lhs == rhs, [&] {
          return sides("a = " + to_string(a) + ", b = " + to_string(b) + ", b' = " + to_string(b2), lhs.to_string(),
                       rhs.to_string());
        });
      }
  }
  for (const auto& b : nb) {
    const TensorElt dbop = h.flip(h.comult(elt(b)));
    const IntVec& dim_b = t.dim(b.minus);
    for (const auto& a : pb)
      for (const auto& a2 : pb) {
        if (!(t.dim(a.plus) + t.dim(a2.plus) == dim_b)) continue;
        Scalar lhs = h.pairing_phi(h.mult(elt(a), elt(a2)), elt(b));
        Scalar rhs = phi_tensor(h, TensorElt({a, a2}, Scalar(1)), dbop);
        prod.record(lhs == rhs, [&] {
          return sides("a = " + to_string(a) + ", a' = " + to_string(a2) + ", b = " + to_string(b), lhs.to_string(),
                       rhs.to_string());
        });
      }
  }
  for (const auto& a : pb)
    for (const auto& b : nb) {
      if (!(t.dim(a.plus) == t.dim(b.minus))) continue;
      Scalar lhs = h.pairing_phi(h.antipode(elt(a)), h.antipode(elt(b)));
      Scalar rhs = h.pairing_phi(elt(a), elt(b));
      anti.record(lhs == rhs, [&] {
        return sides("a = " + to_string(a) + ", b = " + to_string(b), lhs.to_string(), rhs.to_string());
      });
    }
  for (const Family* f : {&unit_l, &unit_r, &coprod, &prod, &anti}) f->emit(r);

  Family sym("psi-symmetric"), diag("psi-diagonal");
  for (const auto& x : t.classes())
    for (ClassId y : t.classes_of_dim(x.dim)) {
      Scalar a = h.pairing_psi(h.plus(x.id), h.plus(y)), b = h.pairing_psi(h.plus(y), h.plus(x.id));
      sym.record(a == b, [&] {
        return sides("classes " + std::to_string(x.id) + ", " + std::to_string(y), a.to_string(), b.to_string());
      });
      Scalar expect = x.id == y ? h.aut(y).inverse() : Scalar();
      bool ok = a == expect && (x.id != y || is_positive(a));
      diag.record(ok, [&] {
        return sides("classes " + std::to_string(x.id) + ", " + std::to_string(y), a.to_string(), expect.to_string());
      });
    }
  sym.emit(r);
  diag.emit(r);

  Family invol("omega-involution"), coalg("omega-coproduct"), pair("omega-pairing"), anti_w("omega-antipode");
  std::vector<BasisSym> both = pb;
  both.insert(both.end(), nb.begin(), nb.end());
  for (const auto& s : both) {
    const AlgElt x = elt(s);
    AlgElt ww = h.omega(h.omega(x));
    invol.record(ww == x, [&] { return sides("x = " + to_string(s), to_string(ww), to_string(x)); });
    TensorElt lhs = h.comult(h.omega(x)), rhs = omega_tensor(h, h.flip(h.comult(x)));
    coalg.record(lhs == rhs, [&] { return sides("x = " + to_string(s), to_string(lhs), to_string(rhs)); });
    AlgElt back = h.antipode(h.omega(h.antipode(h.omega(x))));
    anti_w.record(back == x, [&] { return sides("x = " + to_string(s), to_string(back), to_string(x)); });
  }
  for (const auto& a : pb)
    for (const auto& b : nb) {
      if (!(t.dim(a.plus) == t.dim(b.minus))) continue;
      Scalar lhs = h.pairing_phi(elt(a), elt(b));
      Scalar rhs = h.pairing_phi(h.omega(elt(b)), h.omega(elt(a)));
      pair.record(lhs == rhs, [&] {
        return sides("x = " + to_string(a) + ", y = " + to_string(b), lhs.to_string(), rhs.to_string());
      });
    }
  for (const Family* f : {&invol, &coalg, &pair, &anti_w}) f->emit(r);
  (void)zero;
  return r;
}

// ---------------------------------------------------------------------------

Scalar composition_constant(const HallAlgebra& h, const CartanMatrix& c, std::size_t i) {
  const Scalar vi = h.v(c.eps[i]);
  if (c.is_real(i)) return -vi;
  const ClassId s = h.table().simple(static_cast<int>(i));
  const int end_dim = h.table().hom(s, s);
  return (h.v(2 * end_dim) - Scalar(1)) / (vi.inverse() - vi);
}

CheckReport suite_composition(const HallAlgebra& h) {
  CheckReport r{"composition", {}};
  const ClassTable& t = h.table();
  const auto n = static_cast<std::size_t>(t.vertex_count());
  const CartanMatrix c = cartan_from_datum(datum_from_table(t));
  const auto torus = torus_samples(t.vertex_count());
  std::vector<AlgElt> e, f;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(h.plus(t.simple(static_cast<int>(i))));
    f.push_back(composition_constant(h, c, i) * h.minus(t.simple(static_cast<int>(i))));
  }

  Family rel1("relation-i"), rel2e("relation-ii[E]"), rel2f("relation-ii[F]"), rel3("relation-iii"),
      comm("commutator-simple"), serre_e("relation-iv[E]"), serre_f("relation-iv[F]"), rel5e("relation-v[E]"),
      rel5f("relation-v[F]");
  rel1.record(h.k(h.zero_weight()) == h.one(), [&] { return std::string("K_0 != 1"); });
  for (const auto& mu : torus)
    for (const auto& nu : torus) {
      AlgElt lhs = h.mult(h.k(mu), h.k(nu)), rhs = h.k(mu + nu);
      rel1.record(lhs == rhs, [&] { return sides("K" + to_string(mu) + " K" + to_string(nu), to_string(lhs), to_string(rhs)); });
    }
  for (const auto& mu : torus)
    for (std::size_t i = 0; i < n; ++i) {
      const IntVec ei = unit_vector(n, i);
      AlgElt lhs = h.mult(h.k(mu), e[i]), rhs = h.v(h.form(mu, ei)) * h.mult(e[i], h.k(mu));
      rel2e.record(lhs == rhs, [&] { return sides("mu = " + to_string(mu) + ", i = " + std::to_string(i + 1), to_string(lhs), to_string(rhs)); });
      lhs = h.mult(h.k(mu), f[i]);
      rhs = h.v(-h.form(mu, ei)) * h.mult(f[i], h.k(mu));
      rel2f.record(lhs == rhs, [&] { return sides("mu = " + to_string(mu) + ", i = " + std::to_string(i + 1), to_string(lhs), to_string(rhs)); });
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const IntVec ei = unit_vector(n, i);
      const std::string where = "i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
      AlgElt lhs = h.mult(e[i], f[j]) - h.mult(f[j], e[i]);
      AlgElt rhs;
      if (i == j) {
        const Scalar vi = h.v(c.eps[i]);
        rhs = (vi - vi.inverse()).inverse() * (h.k(ei) - h.k(-ei));
      }
      rel3.record(lhs == rhs, [&] { return sides(where, to_string(lhs), to_string(rhs)); });

      const AlgElt ui = h.plus(t.simple(static_cast<int>(i))), uj = h.minus(t.simple(static_cast<int>(j)));
      AlgElt cl = h.mult(ui, uj) - h.mult(uj, ui);
      AlgElt cr = (-h.pairing_phi(ui, uj)) * (h.k(ei) - h.k(-ei));
      comm.record(cl == cr, [&] { return sides(where, to_string(cl), to_string(cr)); });
    }
  for (std::size_t i : c.real_indices())
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = 1 - c.c[i][j];
      const IntVec deg = m * unit_vector(n, i) + unit_vector(n, j);
      const std::string where = "i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
      if (!in_region(h, deg)) {
        serre_e.skip(to_string(deg));
        serre_f.skip(to_string(deg));
        continue;
      }
      AlgElt se = serre_sum(h, e[i], e[j], m, c.eps[i]);
      serre_e.record(se.is_zero(), [&] { return sides(where, to_string(se), "0"); });
      AlgElt sf = serre_sum(h, f[i], f[j], m, c.eps[i]);
      serre_f.record(sf.is_zero(), [&] { return sides(where, to_string(sf), "0"); });
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.c[i][j] != 0) continue;
      const IntVec deg = unit_vector(n, i) + unit_vector(n, j);
      if (!in_region(h, deg)) {
        rel5e.skip(to_string(deg));
        rel5f.skip(to_string(deg));
        continue;
      }
      const std::string where = "i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
      AlgElt a = h.mult(e[i], e[j]), b = h.mult(e[j], e[i]);
      rel5e.record(a == b, [&] { return sides(where, to_string(a), to_string(b)); });
      a = h.mult(f[i], f[j]);
      b = h.mult(f[j], f[i]);
      rel5f.record(a == b, [&] { return sides(where, to_string(a), to_string(b)); });
    }
  for (const Family* fam : {&rel1, &rel2e, &rel2f, &rel3, &comm, &serre_e, &serre_f, &rel5e, &rel5f}) fam->emit(r);
  return r;
}

// ---------------------------------------------------------------------------

CheckReport suite_sv(const HallAlgebra& h, const DimVec& bound) {
  CheckReport r{"sv", {}};
  const ClassTable& t = h.table();
  const auto n = static_cast<std::size_t>(t.vertex_count());
  const ExtendedDatum d = extend_datum(h, bound);

  Family dims("l-dimension"), orth("l-orthogonal"), prim("primitive"), comm("commutator-l");
  for (const auto& deg : d.degrees) {
    GradedSubspace xi = xi_space(h, deg.theta);
    GradedSubspace l = l_space(h, deg.theta);
    dims.record(xi.dim() + l.dim() == deg.classes && l.dim() == deg.l_dim, [&] {
      return "theta = " + to_string(deg.theta) + ": dim Xi = " + std::to_string(xi.dim()) + ", dim L = " +
             std::to_string(l.dim()) + ", classes = " + std::to_string(deg.classes);
    });
    for (const AlgElt& x : l.basis)
      for (const AlgElt& y : xi.basis) {
        Scalar p = h.pairing_psi(x, y);
        orth.record(p.is_zero(), [&] { return sides("theta = " + to_string(deg.theta) + ", x = " + to_string(x), p.to_string(), "0"); });
      }
  }
  const IntVec zero = h.zero_weight();
  for (const auto& j : d.new_indices) {
    prim.record(check_primitive(h, j.x, j.theta), [&] {
      return sides("x = " + to_string(j.x), to_string(h.comult(j.x)), "x (x) 1 + K" + to_string(j.theta) + " (x) x");
    });
    for (const auto& j2 : d.new_indices) {
      if (!(j2.theta == j.theta)) continue;
      const AlgElt y = h.omega(j2.x);
      AlgElt lhs = h.mult(j.x, y) - h.mult(y, j.x);
      AlgElt rhs = (-h.pairing_phi(j.x, y)) * (h.k(j.theta) - h.k(-j.theta));
      comm.record(lhs == rhs, [&] {
        return sides("theta = " + to_string(j.theta) + ", p = " + std::to_string(j.p) + ", p' = " + std::to_string(j2.p),
                     to_string(lhs), to_string(rhs));
      });
    }
  }
  for (const Family* f : {&dims, &orth, &prim, &comm}) f->emit(r);

  Family offdiag("extended-form-offdiagonal"), newdiag("extended-form-imaginary"), integral("extended-form-integrality");
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      const int ij = d.form(i, j), ii = d.form(i, i);
      const std::string where = "(i, j) = (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      if (i != j) offdiag.record(ij <= 0, [&] { return where + ": (i,j)' = " + std::to_string(ij); });
      if (i == j && i >= n) newdiag.record(ij <= 0, [&] { return where + ": (j,j)' = " + std::to_string(ij); });
      if (ii > 0) integral.record((2 * ij) % ii == 0, [&] { return where + ": 2(i,j)'/(i,i)' = " + std::to_string(2 * ij) + "/" + std::to_string(ii); });
    }
  for (const Family* f : {&offdiag, &newdiag, &integral}) f->emit(r);

  Family serre_x("serre-new[x]"), serre_y("serre-new[y]"), comm_x("commuting-new[x]"), comm_y("commuting-new[y]"),
      varpi("varpi-reflection");
  if (!d.cartan) {
    r.checks.push_back({"extended-cartan", CheckStatus::fail, "enlarged form violates an axiom; no Cartan matrix"});
  } else {
    const CartanMatrix& cc = *d.cartan;
    for (std::size_t i : d.original.real_indices())
      for (std::size_t j = n; j < d.size(); ++j) {
        const int m = 1 - cc.c[i][j];
        const IntVec deg = m * unit_vector(n, i) + d.varpi(j);
        if (!in_region(h, deg)) {
          serre_x.skip(to_string(deg));
          serre_y.skip(to_string(deg));
          continue;
        }
        const AlgElt xi = d.generator(h, i), xj = d.generator(h, j);
        const std::string where = "i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
        AlgElt sx = serre_sum(h, xi, xj, m, cc.eps[i]);
        serre_x.record(sx.is_zero(), [&] { return sides(where, to_string(sx), "0"); });
        AlgElt sy = serre_sum(h, h.omega(xi), h.omega(xj), m, cc.eps[i]);
        serre_y.record(sy.is_zero(), [&] { return sides(where, to_string(sy), "0"); });
      }
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = std::max(i + 1, n); j < d.size(); ++j) {
        if (cc.c[i][j] != 0) continue;
        const IntVec deg = d.varpi(i) + d.varpi(j);
        if (!in_region(h, deg)) {
          comm_x.skip(to_string(deg));
          comm_y.skip(to_string(deg));
          continue;
        }
        const AlgElt xi = d.generator(h, i), xj = d.generator(h, j);
        const std::string where = "i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
        AlgElt a = h.mult(xi, xj), b = h.mult(xj, xi);
        comm_x.record(a == b, [&] { return sides(where, to_string(a), to_string(b)); });
        const AlgElt yi = h.omega(xi), yj = h.omega(xj);
        a = h.mult(yi, yj);
        b = h.mult(yj, yi);
        comm_y.record(a == b, [&] { return sides(where, to_string(a), to_string(b)); });
      }
    for (std::size_t i : d.original.real_indices())
      for (std::size_t j = 0; j < d.size(); ++j) {
        IntVec lhs = d.varpi(j) - cc.c[i][j] * unit_vector(n, i);
        IntVec rhs = reflect(d.original, i, d.varpi(j));
        varpi.record(lhs == rhs, [&] {
          return sides("i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1), to_string(lhs), to_string(rhs));
        });
      }
  }
  for (const Family* f : {&serre_x, &serre_y, &comm_x, &comm_y, &varpi}) f->emit(r);

  Family region("fundamental-region");
  int max_h = 0;
  for (const auto& deg : d.degrees) max_h = std::max(max_h, height(deg.theta));
  const auto fund = fundamental_region(d.original, max_h);
  const auto mult = imaginary_multiples(d.original, max_h);
  for (const auto& deg : d.degrees) {
    if (deg.l_dim == 0) continue;
    bool ok = std::find(fund.begin(), fund.end(), deg.theta) != fund.end() ||
              std::find(mult.begin(), mult.end(), deg.theta) != mult.end();
    region.record(ok, [&] { return "theta = " + to_string(deg.theta) + " has dim L = " + std::to_string(deg.l_dim); });
  }
  region.emit(r);
  return r;
}

// ---------------------------------------------------------------------------

std::map<DimVec, int> indecomposable_counts(const ClassTable& table) {
  std::map<DimVec, int> out;
  for (const auto& c : table.classes())
    if (table.indecomposable(c.id)) ++out[c.dim];
  return out;
}

namespace {

// prod_{t<k} (i + t) / k!, the coefficient of x^k in (1 - x)^{-i}.
mpz_class series_binom(long i, long k) {
  mpz_class num = 1, den = 1;
  for (long s = 0; s < k; ++s) {
    num *= i + s;
    den *= s + 1;
  }
  return num / den;
}

std::vector<DimVec> degrees_within(const ClassTable& table, const DimVec& bound) {
  std::vector<DimVec> out;
  for (const auto& d : table.dims())
    if (leq(d, bound)) out.push_back(d);
  return out;
}

void multiply_factor(std::map<DimVec, mpz_class>& series, const std::vector<DimVec>& degs, const DimVec& alpha,
                     long exponent) {
  std::map<DimVec, mpz_class> next;
  for (const auto& mu : degs) {
    mpz_class c = 0;
    DimVec rest = mu;
    for (long k = 0; leq(IntVec(rest.size(), 0), rest); ++k) {
      auto it = series.find(rest);
      if (it != series.end()) c += series_binom(exponent, k) * it->second;
      rest = rest - alpha;
    }
    if (c != 0) next[mu] = c;
  }
  series = std::move(next);
}

}  // namespace

std::map<DimVec, mpz_class> character_product(const ClassTable& table, const std::map<DimVec, int>& counts,
                                              const DimVec& bound) {
  const auto degs = degrees_within(table, bound);
  std::map<DimVec, mpz_class> series{{IntVec(bound.size(), 0), 1}};
  for (const auto& [alpha, i] : counts)
    if (i != 0 && leq(alpha, bound)) multiply_factor(series, degs, alpha, i);
  return series;
}

std::map<DimVec, mpz_class> invert_character(const ClassTable& table, const DimVec& bound) {
  const auto degs = degrees_within(table, bound);
  std::map<DimVec, mpz_class> series{{IntVec(bound.size(), 0), 1}};
  std::map<DimVec, mpz_class> out;
  for (const auto& mu : degs) {
    if (is_zero(mu)) continue;
    auto it = series.find(mu);
    mpz_class have = it == series.end() ? mpz_class(0) : it->second;
    mpz_class i = mpz_class(static_cast<unsigned long>(table.classes_of_dim(mu).size())) - have;
    if (i != 0) {
      out[mu] = i;
      multiply_factor(series, degs, mu, i.get_si());
    }
  }
  return out;
}

CheckReport suite_kac(const ClassTable& table, int h) {
  CheckReport r{"kac", {}};
  const auto n = static_cast<std::size_t>(table.vertex_count());
  // every dimension vector of height <= h must be in the region
  for (std::size_t i = 0; i < n; ++i) {
    IntVec corner = h * unit_vector(n, i);
    if (!table.region().contains(corner)) {
      r.checks.push_back({"coverage", CheckStatus::skipped,
                          "requires every dimension vector of height <= " + std::to_string(h) + ", e.g. " +
                              to_string(corner) + ", inside the region"});
      return r;
    }
  }
  const CartanMatrix c = cartan_from_datum(datum_from_table(table));
  const auto counts = indecomposable_counts(table);

  std::set<IntVec> phi;
  for (const auto& [d, k] : counts)
    if (height(d) <= h) phi.insert(d);
  std::set<IntVec> predicted;
  std::set<IntVec> real;
  for (const Root& root : positive_roots(c, h)) {
    predicted.insert(root.vec);
    if (root.kind == RootKind::real) real.insert(root.vec);
  }
  for (const IntVec& v : weyl_orbit(c, imaginary_multiples(c, h), h)) predicted.insert(v);

  auto list = [&](const std::set<IntVec>& s) {
    std::vector<IntVec> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), root_order);
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + to_string(v[k]);
    return out + "}";
  };
  if (phi == predicted) {
    std::string detail = "Phi+ = {";
    std::vector<IntVec> v(phi.begin(), phi.end());
    std::sort(v.begin(), v.end(), root_order);
    for (std::size_t k = 0; k < v.size(); ++k)
      detail += (k ? ", " : "") + to_string(v[k]) + ":" + std::to_string(counts.at(v[k]));
    r.checks.push_back({"root-set", CheckStatus::pass, detail + "}"});
  } else {
    r.checks.push_back({"root-set", CheckStatus::fail, sides("indecomposable dimension vectors vs roots", list(phi), list(predicted))});
  }

  Family unique("real-root-unique");
  for (const IntVec& a : real) {
    auto it = counts.find(a);
    int k = it == counts.end() ? 0 : it->second;
    unique.record(k == 1, [&] { return to_string(a) + " has " + std::to_string(k) + " indecomposable classes"; });
  }
  unique.emit(r);

  Family scan("indecomposable-scan");
  std::size_t too_big = 0;
  for (const auto& cls : table.classes()) {
    if (cls.id == ClassTable::zero() || height(cls.dim) > h) continue;
    try {
      bool ind = is_indecomposable(table.quiver(), table.field(), cls.rep, table.limits().max_states);
      scan.record(ind == table.indecomposable(cls.id), [&] {
        return sides("class " + std::to_string(cls.id) + " " + to_string(cls.dim), ind ? "idempotent scan: indecomposable" : "idempotent scan: decomposable",
                     table.indecomposable(cls.id) ? "direct sums: indecomposable" : "direct sums: decomposable");
      });
    } catch (const ResourceError&) {
      ++too_big;
    }
  }
  scan.emit(r);
  if (too_big)
    r.checks.push_back({"indecomposable-scan", CheckStatus::skipped,
                        std::to_string(too_big) + " classes have endomorphism rings beyond max_states"});
  return r;
}

CheckReport suite_character(const ClassTable& table, const DimVec& bound) {
  CheckReport r{"character", {}};
  const auto counts = indecomposable_counts(table);
  const auto series = character_product(table, counts, bound);
  Family coeff("character-product");
  std::string listing;
  for (const auto& mu : degrees_within(table, bound)) {
    auto it = series.find(mu);
    mpz_class have = it == series.end() ? mpz_class(0) : it->second;
    const auto want = table.classes_of_dim(mu).size();
    coeff.record(have == mpz_class(static_cast<unsigned long>(want)), [&] {
      return sides("mu = " + to_string(mu), have.get_str(), std::to_string(want) + " classes");
    });
    listing += (listing.empty() ? "" : ", ") + to_string(mu) + ":" + have.get_str();
  }
  CheckReport tmp{"", {}};
  coeff.emit(tmp);
  if (tmp.checks.front().status == CheckStatus::pass) tmp.checks.front().detail += "; coefficients " + listing;
  r.checks.push_back(tmp.checks.front());

  Family inv("product-inversion");
  const auto recovered = invert_character(table, bound);
  std::set<DimVec> keys;
  for (const auto& [d, k] : recovered) keys.insert(d);
  for (const auto& [d, k] : counts)
    if (leq(d, bound)) keys.insert(d);
  for (const auto& d : keys) {
    auto a = recovered.find(d);
    auto b = counts.find(d);
    mpz_class x = a == recovered.end() ? mpz_class(0) : a->second;
    mpz_class y = b == counts.end() ? mpz_class(0) : mpz_class(b->second);
    inv.record(x == y, [&] { return sides("I" + to_string(d), x.get_str() + " (from class counts)", y.get_str() + " (from scan)"); });
  }
  inv.emit(r);
  return r;
}

}  // namespace ringelhall
