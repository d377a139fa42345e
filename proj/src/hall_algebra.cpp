#include "ringelhall/hall_algebra.hpp"

#include "ringelhall/errors.hpp"

namespace ringelhall {

std::string to_string(const BasisSym& s) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += "*";
    out += part;
  };
  if (s.minus != 0) append("u-[" + std::to_string(s.minus) + "]");
  if (!is_zero(s.torus)) append("K" + to_string(s.torus));
  if (s.plus != 0) append("u+[" + std::to_string(s.plus) + "]");
  return out.empty() ? "1" : out;
}

namespace {

template <class Key, class F>
std::string join_terms(const LinComb<Key>& x, F key_str) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + key_str(k);
  }
  return out;
}

}  // namespace

std::string to_string(const AlgElt& x) {
  return join_terms(x, [](const BasisSym& s) { return to_string(s); });
}

std::string to_string(const TensorElt& x) {
  return join_terms(x, [](const auto& k) { return to_string(k.first) + "#" + to_string(k.second); });
}

std::string to_string(const Tensor3& x) {
  return join_terms(x, [](const auto& k) {
    return to_string(std::get<0>(k)) + "#" + to_string(std::get<1>(k)) + "#" + to_string(std::get<2>(k));
  });
}

HallAlgebra::HallAlgebra(const ClassTable& table) : table_(table) {
  inv_aut_.reserve(table.size());
  for (const auto& c : table.classes()) inv_aut_.push_back(aut(c.id).inverse());
}

BasisSym HallAlgebra::sym(ClassId minus, IntVec torus, ClassId plus) const {
  if (torus.empty()) torus = zero_weight();
  if (torus.size() != static_cast<std::size_t>(table_.vertex_count()))
    throw DomainError("torus weight has wrong length");
  return BasisSym{minus, std::move(torus), plus};
}

AlgElt HallAlgebra::one() const { return AlgElt(sym(0, {}, 0), Scalar(1)); }
AlgElt HallAlgebra::k(const IntVec& mu) const { return AlgElt(sym(0, mu, 0), Scalar(1)); }
AlgElt HallAlgebra::plus(ClassId alpha, const IntVec& mu) const { return AlgElt(sym(0, mu, alpha), Scalar(1)); }
AlgElt HallAlgebra::minus(ClassId beta, const IntVec& nu) const { return AlgElt(sym(beta, nu, 0), Scalar(1)); }

IntVec HallAlgebra::degree(const BasisSym& s) const { return table_.dim(s.plus) - table_.dim(s.minus); }

bool HallAlgebra::is_pure_plus(const AlgElt& x) const {
  for (const auto& [s, c] : x)
    if (s.minus != 0) return false;
  return true;
}

bool HallAlgebra::is_pure_minus(const AlgElt& x) const {
  for (const auto& [s, c] : x)
    if (s.plus != 0) return false;
  return true;
}

AlgElt HallAlgebra::hall_plus(ClassId a, ClassId b) const {
  if (a == 0) return plus(b);
  if (b == 0) return plus(a);
  AlgElt out;
  Scalar twist = v(euler(table_.dim(a), table_.dim(b)));
  for (const auto& p : table_.products(a, b)) out.add(sym(0, {}, p.gamma), twist * Scalar(static_cast<long>(p.count)));
  return out;
}

AlgElt HallAlgebra::hall_minus(ClassId a, ClassId b) const {
  if (a == 0) return minus(b);
  if (b == 0) return minus(a);
  AlgElt out;
  Scalar twist = v(euler(table_.dim(a), table_.dim(b)));
  for (const auto& p : table_.products(a, b)) out.add(sym(p.gamma, {}, 0), twist * Scalar(static_cast<long>(p.count)));
  return out;
}

AlgElt HallAlgebra::mult(const BasisSym& x, const BasisSym& y) const {
  AlgElt out;
  const AlgElt& middle = straighten(x.plus, y.minus);
  for (const auto& [s, c] : middle) {
    const IntVec& delta = table_.dim(s.minus);
    const IntVec& eps = table_.dim(s.plus);
    Scalar coef = c * v(-form(x.torus, delta) - form(y.torus, eps));
    AlgElt left = hall_minus(x.minus, s.minus);
    AlgElt right = hall_plus(s.plus, y.plus);
    IntVec torus = x.torus + s.torus + y.torus;
    for (const auto& [l, cl] : left)
      for (const auto& [r, cr] : right) out.add(BasisSym{l.minus, torus, r.plus}, coef * cl * cr);
  }
  return out;
}

AlgElt HallAlgebra::mult(const AlgElt& x, const AlgElt& y) const {
  AlgElt out;
  for (const auto& [s, c] : x)
    for (const auto& [t, d] : y) {
      AlgElt p = mult(s, t);
      p *= c * d;
      out += p;
    }
  return out;
}

AlgElt HallAlgebra::mult_plus(const AlgElt& x, const AlgElt& y) const {
  if (!is_pure_plus(x) || !is_pure_plus(y)) throw DomainError("mult_plus expects positive elements");
  return mult(x, y);
}

AlgElt HallAlgebra::mult_minus(const AlgElt& x, const AlgElt& y) const {
  if (!is_pure_minus(x) || !is_pure_minus(y)) throw DomainError("mult_minus expects negative elements");
  return mult(x, y);
}

const TensorElt& HallAlgebra::comult_u_plus(ClassId gamma) const {
  std::lock_guard lock(cache_mutex_);
  auto it = comult_plus_cache_.find(gamma);
  if (it != comult_plus_cache_.end()) return it->second;
  // Delta(u_gamma) = sum v^<a,b> (a_a a_b / a_g) g^gamma_ab u_a K_b (x) u_b, and u_a K_b = v^{-(a,b)} K_b u_a
  TensorElt out;
  for (const auto& s : table_.splittings(gamma)) {
    const IntVec& da = table_.dim(s.quotient);
    const IntVec& db = table_.dim(s.sub);
    Scalar c = v(euler(da, db) - form(da, db)) * aut(s.quotient) * aut(s.sub) / aut(gamma) *
               Scalar(static_cast<long>(s.count));
    out.add({sym(0, db, s.quotient), sym(0, {}, s.sub)}, c);
  }
  return comult_plus_cache_.emplace(gamma, std::move(out)).first->second;
}

const TensorElt& HallAlgebra::comult_u_minus(ClassId gamma) const {
  std::lock_guard lock(cache_mutex_);
  auto it = comult_minus_cache_.find(gamma);
  if (it != comult_minus_cache_.end()) return it->second;
  // Delta(u_gamma^-) = sum v^<b,a> (a_a a_b / a_g) g^gamma_ba u_a^- (x) u_b^- K_{-a}
  TensorElt out;
  for (const auto& s : table_.splittings(gamma)) {
    ClassId b = s.quotient, a = s.sub;
    const IntVec& da = table_.dim(a);
    const IntVec& db = table_.dim(b);
    Scalar c = v(euler(db, da)) * aut(a) * aut(b) / aut(gamma) * Scalar(static_cast<long>(s.count));
    out.add({sym(a, {}, 0), sym(b, -da, 0)}, c);
  }
  return comult_minus_cache_.emplace(gamma, std::move(out)).first->second;
}

TensorElt HallAlgebra::comult_sym(const BasisSym& s) const {
  // Delta(u_b^- K_mu u_a^+) = Delta(u_b^-) (K_mu (x) K_mu) Delta(u_a^+); no straightening is needed.
  TensorElt out;
  const TensorElt& dm = comult_u_minus(s.minus);
  const TensorElt& dp = comult_u_plus(s.plus);
  for (const auto& [m, cm] : dm)
    for (const auto& [p, cp] : dp) {
      BasisSym left{m.first.minus, m.first.torus + s.torus + p.first.torus, p.first.plus};
      BasisSym right{m.second.minus, m.second.torus + s.torus + p.second.torus, p.second.plus};
      out.add({std::move(left), std::move(right)}, cm * cp);
    }
  return out;
}

TensorElt HallAlgebra::comult(const AlgElt& x) const {
  TensorElt out;
  for (const auto& [s, c] : x) {
    TensorElt t = comult_sym(s);
    t *= c;
    out += t;
  }
  return out;
}

TensorElt HallAlgebra::comult_plus(const AlgElt& x) const {
  if (!is_pure_plus(x)) throw DomainError("comult_plus expects a positive element");
  return comult(x);
}

TensorElt HallAlgebra::comult_minus(const AlgElt& x) const {
  if (!is_pure_minus(x)) throw DomainError("comult_minus expects a negative element");
  return comult(x);
}

Scalar HallAlgebra::counit(const AlgElt& x) const {
  Scalar out;
  for (const auto& [s, c] : x)
    if (s.minus == 0 && s.plus == 0) out += c;
  return out;
}

AlgElt HallAlgebra::printed_word_plus(ClassId delta) const {
  std::lock_guard lock(cache_mutex_);
  auto it = word_plus_cache_.find(delta);
  if (it != word_plus_cache_.end()) return it->second;
  AlgElt out;
  if (delta == 0) {
    out = one();
  } else {
    for (const auto& s : table_.splittings(delta)) {
      if (s.quotient == 0) continue;
      Scalar c = -Scalar(static_cast<long>(s.count)) * v(2 * euler(table_.dim(s.quotient), table_.dim(s.sub))) *
                 aut(s.quotient);
      for (const auto& [w, cw] : printed_word_plus(s.sub)) {
        if (w.plus == 0) {
          out.add(sym(0, {}, s.quotient), c * cw);
          continue;
        }
        for (const auto& p : table_.products(s.quotient, w.plus))
          out.add(sym(0, {}, p.gamma), c * cw * Scalar(static_cast<long>(p.count)));
      }
    }
  }
  return word_plus_cache_.emplace(delta, std::move(out)).first->second;
}

AlgElt HallAlgebra::printed_word_minus(ClassId delta) const {
  std::lock_guard lock(cache_mutex_);
  auto it = word_minus_cache_.find(delta);
  if (it != word_minus_cache_.end()) return it->second;
  AlgElt out;
  if (delta == 0) {
    out = one();
  } else {
    for (const auto& s : table_.splittings(delta)) {
      if (s.quotient == 0) continue;
      Scalar c = -Scalar(static_cast<long>(s.count)) * aut(s.quotient);
      for (const auto& [w, cw] : printed_word_minus(s.sub)) {
        if (w.minus == 0) {
          out.add(sym(s.quotient, {}, 0), c * cw);
          continue;
        }
        for (const auto& p : table_.products(w.minus, s.quotient))
          out.add(sym(p.gamma, {}, 0), c * cw * Scalar(static_cast<long>(p.count)));
      }
    }
  }
  return word_minus_cache_.emplace(delta, std::move(out)).first->second;
}

const AlgElt& HallAlgebra::antipode_u_plus(ClassId gamma, AntipodeFormula f) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(gamma, f);
  auto it = antipode_plus_cache_.find(key);
  if (it != antipode_plus_cache_.end()) return it->second;
  AlgElt out;
  const IntVec& dg = table_.dim(gamma);
  if (gamma == 0) {
    out = one();
  } else if (f == AntipodeFormula::printed) {
    Scalar inv = aut(gamma).inverse();
    for (const auto& [w, cw] : printed_word_plus(gamma)) out.add(sym(0, -dg, w.plus), cw * inv);
  } else {
    // From m(S (x) id) Delta = eps: S(u_g) = -sum_{b != 0} v^<a,b> (a_a a_b / a_g) g K_{-b} S(u_a) u_b
    for (const auto& s : table_.splittings(gamma)) {
      if (s.sub == 0) continue;
      const IntVec& da = table_.dim(s.quotient);
      const IntVec& db = table_.dim(s.sub);
      Scalar c = -v(euler(da, db)) * aut(s.quotient) * aut(s.sub) / aut(gamma) * Scalar(static_cast<long>(s.count));
      AlgElt t = mult(mult(k(-db), antipode_u_plus(s.quotient, f)), plus(s.sub));
      t *= c;
      out += t;
    }
  }
  return antipode_plus_cache_.emplace(key, std::move(out)).first->second;
}

const AlgElt& HallAlgebra::antipode_u_minus(ClassId gamma, AntipodeFormula f) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(gamma, f);
  auto it = antipode_minus_cache_.find(key);
  if (it != antipode_minus_cache_.end()) return it->second;
  AlgElt out;
  const IntVec& dg = table_.dim(gamma);
  if (gamma == 0) {
    out = one();
  } else if (f == AntipodeFormula::printed) {
    Scalar inv = aut(gamma).inverse();
    for (const auto& [w, cw] : printed_word_minus(gamma)) out.add(sym(w.minus, dg, 0), cw * inv);
  } else {
    // From m(id (x) S) Delta = eps: S(u_g^-) = -sum_{a != 0} v^<b,a> (a_a a_b / a_g) g u_a^- K_a S(u_b^-)
    for (const auto& s : table_.splittings(gamma)) {
      ClassId b = s.quotient, a = s.sub;
      if (a == 0) continue;
      const IntVec& da = table_.dim(a);
      const IntVec& db = table_.dim(b);
      Scalar c = -v(euler(db, da)) * aut(a) * aut(b) / aut(gamma) * Scalar(static_cast<long>(s.count));
      AlgElt t = mult(minus(a, da), antipode_u_minus(b, f));
      t *= c;
      out += t;
    }
  }
  return antipode_minus_cache_.emplace(key, std::move(out)).first->second;
}

AlgElt HallAlgebra::antipode(const AlgElt& x, AntipodeFormula f) const {
  AlgElt out;
  for (const auto& [s, c] : x) {
    // S(u_b^- K_mu u_a^+) = S(u_a^+) K_{-mu} S(u_b^-)
    AlgElt t = mult(mult(antipode_u_plus(s.plus, f), k(-s.torus)), antipode_u_minus(s.minus, f));
    t *= c;
    out += t;
  }
  return out;
}

AlgElt HallAlgebra::antipode_plus(const AlgElt& x, AntipodeFormula f) const {
  if (!is_pure_plus(x)) throw DomainError("antipode_plus expects a positive element");
  return antipode(x, f);
}

AlgElt HallAlgebra::antipode_minus(const AlgElt& x, AntipodeFormula f) const {
  if (!is_pure_minus(x)) throw DomainError("antipode_minus expects a negative element");
  return antipode(x, f);
}

AlgElt HallAlgebra::omega(const AlgElt& x) const {
  AlgElt out;
  for (const auto& [s, c] : x) {
    AlgElt t = mult(mult(plus(s.minus), k(-s.torus)), minus(s.plus));
    t *= c;
    out += t;
  }
  return out;
}

Scalar HallAlgebra::phi_basis(const BasisSym& x, const BasisSym& y) const {
  // phi(K_mu u_a^+, u_b^- K_nu) = delta_ab v^{-(mu,nu) + (mu,a)} / a_a
  if (x.plus != y.minus) return Scalar();
  return v(-form(x.torus, y.torus) + form(x.torus, table_.dim(x.plus))) * inv_aut_[static_cast<std::size_t>(x.plus)];
}

Scalar HallAlgebra::pairing_phi(const AlgElt& x, const AlgElt& y) const {
  if (!is_pure_plus(x) || !is_pure_minus(y)) throw DomainError("pairing_phi expects (positive, negative) arguments");
  Scalar out;
  for (const auto& [s, c] : x)
    for (const auto& [t, d] : y)
      if (s.plus == t.minus) out += c * d * phi_basis(s, t);
  return out;
}

Scalar HallAlgebra::pairing_psi(const AlgElt& x, const AlgElt& y) const {
  if (!is_pure_plus(x) || !is_pure_plus(y)) throw DomainError("pairing_psi expects positive arguments");
  return pairing_phi(x, omega(y));
}

const AlgElt& HallAlgebra::straighten(ClassId alpha, ClassId beta) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(alpha, beta);
  auto it = straighten_cache_.find(key);
  if (it != straighten_cache_.end()) return it->second;
  AlgElt out;
  if (alpha == 0 || beta == 0) {
    out.add(sym(beta, {}, alpha), Scalar(1));
  } else {
    // a b = sum phi(a1, b1) phi(a3, S(b3)) b2 a2, with Delta^2 = (Delta (x) id) Delta.
    Tensor3 da = comult_left(comult_u_plus(alpha));
    Tensor3 db = comult_left(comult_u_minus(beta));
    std::map<BasisSym, AlgElt> s_cache;
    for (const auto& [ka, ca] : da) {
      const auto& [a1, a2, a3] = ka;
      for (const auto& [kb, cb] : db) {
        const auto& [b1, b2, b3] = kb;
        if (a1.plus != b1.minus) continue;
        Scalar p1 = phi_basis(a1, b1);
        auto sit = s_cache.find(b3);
        if (sit == s_cache.end()) sit = s_cache.emplace(b3, antipode(AlgElt(b3, Scalar(1)))).first;
        Scalar p3;
        for (const auto& [t, ct] : sit->second) p3 += ct * phi_basis(a3, t);
        if (p3.is_zero()) continue;
        out.add(BasisSym{b2.minus, b2.torus + a2.torus, a2.plus}, ca * cb * p1 * p3);
      }
    }
  }
  return straighten_cache_.emplace(key, std::move(out)).first->second;
}

TensorElt HallAlgebra::tensor_mult(const TensorElt& x, const TensorElt& y) const {
  TensorElt out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      AlgElt l = mult(kx.first, ky.first);
      AlgElt r = mult(kx.second, ky.second);
      Scalar c = cx * cy;
      for (const auto& [ls, lc] : l)
        for (const auto& [rs, rc] : r) out.add({ls, rs}, c * lc * rc);
    }
  return out;
}

Tensor3 HallAlgebra::comult_left(const TensorElt& x) const {
  Tensor3 out;
  for (const auto& [k, c] : x)
    for (const auto& [t, d] : comult_sym(k.first)) out.add({t.first, t.second, k.second}, c * d);
  return out;
}

Tensor3 HallAlgebra::comult_right(const TensorElt& x) const {
  Tensor3 out;
  for (const auto& [k, c] : x)
    for (const auto& [t, d] : comult_sym(k.second)) out.add({k.first, t.first, t.second}, c * d);
  return out;
}

TensorElt HallAlgebra::flip(const TensorElt& x) const {
  TensorElt out;
  for (const auto& [k, c] : x) out.add({k.second, k.first}, c);
  return out;
}

AlgElt HallAlgebra::mult_antipode_left(const TensorElt& x, AntipodeFormula f) const {
  AlgElt out;
  for (const auto& [k, c] : x) {
    AlgElt t = mult(antipode(AlgElt(k.first, Scalar(1)), f), AlgElt(k.second, Scalar(1)));
    t *= c;
    out += t;
  }
  return out;
}

AlgElt HallAlgebra::mult_antipode_right(const TensorElt& x, AntipodeFormula f) const {
  AlgElt out;
  for (const auto& [k, c] : x) {
    AlgElt t = mult(AlgElt(k.first, Scalar(1)), antipode(AlgElt(k.second, Scalar(1)), f));
    t *= c;
    out += t;
  }
  return out;
}

}  // namespace ringelhall
