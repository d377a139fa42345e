#include "ringelhall/class_table.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "ringelhall/errors.hpp"

namespace ringelhall {

bool Region::contains(const IntVec& d) const {
  if (d.size() != bound.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0 || d[i] > bound[i]) return false;
  return !max_height || height(d) <= *max_height;
}

std::vector<DimVec> Region::dims() const {
  std::vector<DimVec> out;
  DimVec d(bound.size(), 0);
  for (;;) {
    if (contains(d)) out.push_back(d);
    std::size_t i = 0;
    for (; i < d.size(); ++i) {
      if (++d[i] <= bound[i]) break;
      d[i] = 0;
    }
    if (i == d.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const DimVec& a, const DimVec& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Orbit enumeration

namespace {

struct Layout {
  std::vector<int> offset;  // per arrow
  std::vector<int> rows, cols;
  int digits = 0;
};

Layout make_layout(const Quiver& quiver, const DimVec& dim) {
  Layout l;
  for (const Arrow& a : quiver.arrows()) {
    l.offset.push_back(l.digits);
    l.rows.push_back(dim[static_cast<std::size_t>(a.target)]);
    l.cols.push_back(dim[static_cast<std::size_t>(a.source)]);
    l.digits += l.rows.back() * l.cols.back();
  }
  return l;
}

std::uint64_t encode_digits(const std::vector<std::uint32_t>& d, std::uint64_t q) {
  std::uint64_t code = 0;
  for (auto x : d) code = code * q + x;
  return code;
}

void decode_digits(std::uint64_t code, std::uint64_t q, std::vector<std::uint32_t>& d) {
  for (std::size_t k = d.size(); k-- > 0;) {
    d[k] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
}

// Group generators acting on flattened digits.
struct Generator {
  int vertex;
  int i, j;             // transvection I + e_ij when i != j; scaling of slot i when i == j
  std::uint32_t scale;  // scaling factor g (only for i == j)
  std::uint32_t scale_inv;
};

void apply_generator(const Quiver& quiver, const Layout& l, const Generator& g, std::uint64_t p,
                     std::vector<std::uint32_t>& d) {
  const auto& arrows = quiver.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int off = l.offset[k], rows = l.rows[k], cols = l.cols[k];
    if (arrows[k].target == g.vertex) {
      if (g.i != g.j) {  // row i += row j
        for (int c = 0; c < cols; ++c) {
          auto& x = d[static_cast<std::size_t>(off + g.i * cols + c)];
          x = static_cast<std::uint32_t>((x + d[static_cast<std::size_t>(off + g.j * cols + c)]) % p);
        }
      } else {
        for (int c = 0; c < cols; ++c) {
          auto& x = d[static_cast<std::size_t>(off + g.i * cols + c)];
          x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * g.scale) % p);
        }
      }
    }
    if (arrows[k].source == g.vertex) {
      if (g.i != g.j) {  // right multiplication by (I + e_ij)^-1 = I - e_ij: col j -= col i
        for (int r = 0; r < rows; ++r) {
          auto& x = d[static_cast<std::size_t>(off + r * cols + g.j)];
          x = static_cast<std::uint32_t>((x + p - d[static_cast<std::size_t>(off + r * cols + g.i)]) % p);
        }
      } else {
        for (int r = 0; r < rows; ++r) {
          auto& x = d[static_cast<std::size_t>(off + r * cols + g.i)];
          x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * g.scale_inv) % p);
        }
      }
    }
  }
}

std::vector<Generator> group_generators(const DimVec& dim, std::uint64_t p) {
  std::vector<Generator> gens;
  const auto root = static_cast<std::uint32_t>(primitive_root(p));
  const auto root_inv = static_cast<std::uint32_t>(inv_mod(root, p));
  for (std::size_t v = 0; v < dim.size(); ++v) {
    for (int i = 0; i < dim[v]; ++i)
      for (int j = 0; j < dim[v]; ++j)
        if (i != j) gens.push_back({static_cast<int>(v), i, j, 1, 1});
    if (root != 1)
      for (int i = 0; i < dim[v]; ++i) gens.push_back({static_cast<int>(v), i, i, root, root_inv});
  }
  return gens;
}

}  // namespace

std::uint64_t encode_rep(const Rep& m, std::uint64_t q) {
  std::uint64_t code = 0;
  for (const auto& mat : m.maps)
    for (auto x : mat.data()) code = code * q + x;
  return code;
}

Rep decode_rep(const Quiver& quiver, const DimVec& dim, std::uint64_t code, std::uint64_t q) {
  Layout l = make_layout(quiver, dim);
  std::vector<std::uint32_t> d(static_cast<std::size_t>(l.digits));
  decode_digits(code, q, d);
  Rep r = zero_rep(quiver, dim);
  for (std::size_t k = 0; k < r.maps.size(); ++k)
    std::copy_n(d.begin() + l.offset[k], l.rows[k] * l.cols[k], r.maps[k].data().begin());
  return r;
}

OrbitCatalog enumerate_orbits(const Quiver& quiver, const GroundField& field, const DimVec& dim, const Limits& limits) {
  const std::uint64_t q = field.q();
  OrbitCatalog cat;
  cat.dim = dim;
  Layout layout = make_layout(quiver, dim);
  if (static_cast<double>(layout.digits) * std::log2(static_cast<double>(q)) >= 63.0)
    throw ResourceError("state space for dimension vector " + to_string(dim) + " does not fit 64-bit codes");

  auto charge = [&](std::uint64_t n) {
    cat.states += n;
    if (cat.states > limits.max_states)
      throw ResourceError("enumeration for dimension vector " + to_string(dim) + " exceeds max_states (" +
                          std::to_string(limits.max_states) + ")");
  };

  // Word over vertices with the prescribed multiplicities.
  std::vector<int> word;
  for (std::size_t v = 0; v < dim.size(); ++v) word.insert(word.end(), static_cast<std::size_t>(dim[v]), static_cast<int>(v));

  const auto gens = group_generators(dim, q);
  std::vector<int> orbit_min_local;  // per discovered orbit, index into orbit_codes list
  std::vector<std::uint64_t> orbit_min_code, orbit_count;
  std::unordered_map<std::uint64_t, int>& seen = cat.class_of_code;

  std::vector<std::uint32_t> digits(static_cast<std::size_t>(layout.digits), 0), work(digits.size());
  auto close_orbit = [&](std::uint64_t start) {
    const int orbit = static_cast<int>(orbit_min_code.size());
    std::deque<std::uint64_t> queue{start};
    seen.emplace(start, orbit);
    charge(1);
    std::uint64_t min_code = start, size = 1;
    while (!queue.empty()) {
      std::uint64_t c = queue.front();
      queue.pop_front();
      decode_digits(c, q, digits);
      for (const auto& g : gens) {
        work = digits;
        apply_generator(quiver, layout, g, q, work);
        std::uint64_t nc = encode_digits(work, q);
        if (seen.emplace(nc, orbit).second) {
          charge(1);
          queue.push_back(nc);
          ++size;
          min_code = std::min(min_code, nc);
        }
      }
    }
    orbit_min_code.push_back(min_code);
    orbit_count.push_back(size);
  };

  do {
    // Position of each word letter inside its vertex space.
    std::vector<int> local(word.size());
    std::vector<int> counter(dim.size(), 0);
    for (std::size_t k = 0; k < word.size(); ++k) local[k] = counter[static_cast<std::size_t>(word[k])]++;
    // Free slots: arrow a maps basis vector k (at source) into span of earlier vectors k' < k (at target).
    std::vector<std::size_t> slots;
    for (std::size_t a = 0; a < quiver.arrows().size(); ++a) {
      const Arrow& arr = quiver.arrows()[a];
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] != arr.source) continue;
        for (std::size_t kp = 0; kp < k; ++kp) {
          if (word[kp] != arr.target) continue;
          slots.push_back(static_cast<std::size_t>(layout.offset[a] + local[kp] * layout.cols[a] + local[k]));
        }
      }
    }
    std::vector<std::uint32_t> cand(static_cast<std::size_t>(layout.digits), 0);
    std::vector<std::uint32_t> slot_val(slots.size(), 0);
    for (;;) {
      charge(1);
      std::uint64_t code = encode_digits(cand, q);
      if (!seen.contains(code)) close_orbit(code);
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        if (++slot_val[s] < q) {
          cand[slots[s]] = slot_val[s];
          break;
        }
        slot_val[s] = 0;
        cand[slots[s]] = 0;
      }
      if (s == slots.size()) break;
    }
  } while (std::next_permutation(word.begin(), word.end()));

  // Order orbits by canonical code and relabel.
  std::vector<int> order(orbit_min_code.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return orbit_min_code[static_cast<std::size_t>(x)] < orbit_min_code[static_cast<std::size_t>(y)]; });
  std::vector<int> rank_of(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto o = static_cast<std::size_t>(order[r]);
    rank_of[o] = static_cast<int>(r);
    RepClass c;
    c.id = static_cast<ClassId>(r);
    c.dim = dim;
    c.code = orbit_min_code[o];
    c.rep = decode_rep(quiver, dim, c.code, q);
    c.orbit_size = orbit_count[o];
    cat.classes.push_back(std::move(c));
  }
  for (auto& [code, idx] : seen) idx = rank_of[static_cast<std::size_t>(idx)];
  return cat;
}

std::vector<RepClass> enumerate_classes(const Quiver& quiver, const GroundField& field, const DimVec& dim,
                                        const Limits& limits) {
  return enumerate_orbits(quiver, field, dim, limits).classes;
}

// ---------------------------------------------------------------------------
// ClassTable

ClassTable::ClassTable(Quiver quiver, GroundField field, Region region, Limits limits)
    : quiver_(std::move(quiver)), field_(field), region_(std::move(region)), limits_(limits) {
  if (region_.bound.size() != static_cast<std::size_t>(quiver_.vertex_count()))
    throw DomainError("bound has wrong number of components");
  for (int b : region_.bound)
    if (b < 0) throw DomainError("bound must be componentwise nonnegative");

  for (const DimVec& d : region_.dims()) {
    OrbitCatalog cat = enumerate_orbits(quiver_, field_, d, limits_);
    total_states_ += cat.states;
    auto& index = code_index_[d];
    auto& ids = by_dim_[d];
    const auto base = static_cast<ClassId>(classes_.size());
    for (auto& c : cat.classes) {
      c.id = base + c.id;
      ids.push_back(c.id);
      classes_.push_back(std::move(c));
    }
    for (const auto& [code, local] : cat.class_of_code) index.emplace(code, base + local);
    if (classes_.size() > limits_.max_classes)
      throw ResourceError("class count exceeds max_classes (" + std::to_string(limits_.max_classes) + ")");
  }

  for (int v = 0; v < quiver_.vertex_count(); ++v) {
    DimVec e = unit_vector(static_cast<std::size_t>(quiver_.vertex_count()), static_cast<std::size_t>(v));
    auto it = by_dim_.find(e);
    simples_.push_back(it == by_dim_.end() || it->second.empty() ? -1 : it->second.front());
  }

  for (const auto& c : classes_) {
    mpz_class g = group_order(c.dim, q());
    mpz_class orbit(static_cast<unsigned long>(c.orbit_size));
    if (g % orbit != 0) throw InternalError("orbit size does not divide group order");
    aut_.push_back(g / orbit);
  }

  compute_hall_numbers();
  compute_indecomposables();
}

std::span<const ClassId> ClassTable::classes_of_dim(const DimVec& d) const {
  auto it = by_dim_.find(d);
  if (it == by_dim_.end()) return {};
  return it->second;
}

bool ClassTable::is_simple(ClassId id) const {
  return std::find(simples_.begin(), simples_.end(), id) != simples_.end();
}

ClassId ClassTable::classify(const Rep& m) const {
  check_shape(quiver_, m);
  auto it = code_index_.find(m.dim);
  if (it == code_index_.end())
    throw TruncationError("dimension vector " + to_string(m.dim) + " outside the class table region");
  auto jt = it->second.find(encode_rep(m, q()));
  if (jt == it->second.end()) throw DomainError("representation is not nilpotent");
  return jt->second;
}

int ClassTable::hom(ClassId a, ClassId b) const {
  std::lock_guard lock(hom_mutex_);
  auto key = std::make_pair(a, b);
  auto it = hom_cache_.find(key);
  if (it != hom_cache_.end()) return it->second;
  int h = hom_dim(quiver_, field_, cls(a).rep, cls(b).rep);
  hom_cache_.emplace(key, h);
  return h;
}

std::uint64_t ClassTable::hall(ClassId alpha, ClassId beta, ClassId gamma) const {
  if (!(dim(alpha) + dim(beta) == dim(gamma))) return 0;
  for (const auto& t : products(alpha, beta))
    if (t.gamma == gamma) return t.count;
  return 0;
}

std::span<const HallProduct> ClassTable::products(ClassId alpha, ClassId beta) const {
  DimVec d = dim(alpha) + dim(beta);
  if (!region_.contains(d))
    throw TruncationError("product of degree " + to_string(d) + " leaves the class table region");
  auto it = products_.find({alpha, beta});
  if (it == products_.end()) return {};
  return it->second;
}

std::uint64_t ClassTable::hall_multi(ClassId gamma, std::span<const ClassId> parts) const {
  if (parts.empty()) return gamma == zero() ? 1 : 0;
  if (parts.size() == 1) return parts[0] == gamma ? 1 : 0;
  std::uint64_t total = 0;
  for (const auto& s : splittings(gamma))
    if (s.quotient == parts[0]) total += s.count * hall_multi(s.sub, parts.subspan(1));
  return total;
}

namespace {

// Subspace of F_q^n in reduced row echelon form.
struct Subspace {
  FpMatrix rows;  // k x n
  std::vector<int> pivots;
  std::vector<int> non_pivots;
};

std::vector<Subspace> all_subspaces(int n, std::uint64_t q) {
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    // choose pivot columns
    std::vector<int> piv(static_cast<std::size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
        for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
          for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
            if (!is_piv[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
        std::vector<std::uint32_t> val(free.size(), 0);
        for (;;) {
          Subspace s;
          s.rows = FpMatrix(k, n);
          for (int r = 0; r < k; ++r) s.rows(r, piv[static_cast<std::size_t>(r)]) = 1;
          for (std::size_t f = 0; f < free.size(); ++f) s.rows(free[f].first, free[f].second) = val[f];
          s.pivots = piv;
          for (int c = 0; c < n; ++c)
            if (!is_piv[static_cast<std::size_t>(c)]) s.non_pivots.push_back(c);
          out.push_back(std::move(s));
          std::size_t f = 0;
          for (; f < val.size(); ++f) {
            if (++val[f] < q) break;
            val[f] = 0;
          }
          if (f == val.size()) break;
        }
        return;
      }
      for (int c = start; c < n; ++c) {
        piv[static_cast<std::size_t>(idx)] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

// w minus its projection along the RREF rows of s (zeroes the pivot entries).
std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> w, const Subspace& s, std::uint64_t q) {
  for (int r = 0; r < s.rows.rows(); ++r) {
    std::uint64_t f = w[static_cast<std::size_t>(s.pivots[static_cast<std::size_t>(r)])];
    if (!f) continue;
    for (int c = 0; c < s.rows.cols(); ++c)
      w[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>((w[static_cast<std::size_t>(c)] + (q - f) * s.rows(r, c)) % q);
  }
  return w;
}

std::vector<std::uint32_t> apply(const FpMatrix& m, const std::vector<std::uint32_t>& x, std::uint64_t q) {
  std::vector<std::uint32_t> y(static_cast<std::size_t>(m.rows()), 0);
  for (int r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    for (int c = 0; c < m.cols(); ++c) acc += static_cast<std::uint64_t>(m(r, c)) * x[static_cast<std::size_t>(c)];
    y[static_cast<std::size_t>(r)] = static_cast<std::uint32_t>(acc % q);
  }
  return y;
}

}  // namespace

void ClassTable::compute_hall_numbers() {
  const auto q = this->q();
  const auto nv = static_cast<std::size_t>(quiver_.vertex_count());
  const auto& arrows = quiver_.arrows();
  std::map<int, std::vector<Subspace>> subspace_cache;
  auto subspaces = [&](int n) -> const std::vector<Subspace>& {
    auto it = subspace_cache.find(n);
    if (it == subspace_cache.end()) it = subspace_cache.emplace(n, all_subspaces(n, q)).first;
    return it->second;
  };

  splittings_.assign(classes_.size(), {});
  std::map<std::tuple<ClassId, ClassId, ClassId>, std::uint64_t> counts;  // (gamma, alpha, beta)

  for (const auto& gamma : classes_) {
    const Rep& m = gamma.rep;
    std::vector<const Subspace*> choice(nv, nullptr);
    std::uint64_t visited = 0;

    // closed under arrows whose endpoints are both chosen, with max(s,t) == v
    auto closed_at = [&](std::size_t v) {
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        auto s = static_cast<std::size_t>(arrows[k].source), t = static_cast<std::size_t>(arrows[k].target);
        if (std::max(s, t) != v) continue;
        const Subspace& us = *choice[s];
        const Subspace& ut = *choice[t];
        for (int r = 0; r < us.rows.rows(); ++r) {
          std::vector<std::uint32_t> u(us.rows.data().begin() + r * us.rows.cols(),
                                       us.rows.data().begin() + (r + 1) * us.rows.cols());
          auto w = reduce(apply(m.maps[k], u, q), ut, q);
          for (auto x : w)
            if (x) return false;
        }
      }
      return true;
    };

    auto record = [&]() {
      Rep sub = zero_rep(quiver_, DimVec(nv, 0));
      Rep quot = sub;
      DimVec sd(nv), qd(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        sd[v] = choice[v]->rows.rows();
        qd[v] = m.dim[v] - sd[v];
      }
      sub = zero_rep(quiver_, sd);
      quot = zero_rep(quiver_, qd);
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        auto s = static_cast<std::size_t>(arrows[k].source), t = static_cast<std::size_t>(arrows[k].target);
        const Subspace& us = *choice[s];
        const Subspace& ut = *choice[t];
        for (int c = 0; c < us.rows.rows(); ++c) {
          std::vector<std::uint32_t> u(us.rows.data().begin() + c * us.rows.cols(),
                                       us.rows.data().begin() + (c + 1) * us.rows.cols());
          auto w = apply(m.maps[k], u, q);
          for (int r = 0; r < ut.rows.rows(); ++r) sub.maps[k](r, c) = w[static_cast<std::size_t>(ut.pivots[static_cast<std::size_t>(r)])];
        }
        for (std::size_t c = 0; c < us.non_pivots.size(); ++c) {
          std::vector<std::uint32_t> e(static_cast<std::size_t>(m.dim[s]), 0);
          e[static_cast<std::size_t>(us.non_pivots[c])] = 1;
          auto w = reduce(apply(m.maps[k], e, q), ut, q);
          for (std::size_t r = 0; r < ut.non_pivots.size(); ++r)
            quot.maps[k](static_cast<int>(r), static_cast<int>(c)) = w[static_cast<std::size_t>(ut.non_pivots[r])];
        }
      }
      ++counts[{gamma.id, classify(quot), classify(sub)}];
    };

    std::function<void(std::size_t)> descend = [&](std::size_t v) {
      if (v == nv) {
        record();
        return;
      }
      for (const auto& s : subspaces(m.dim[v])) {
        if (++visited > limits_.max_states)
          throw ResourceError("subobject enumeration for " + to_string(m.dim) + " exceeds max_states");
        choice[v] = &s;
        if (closed_at(v)) descend(v + 1);
      }
    };
    descend(0);
  }

  for (const auto& [key, g] : counts) {
    auto [gamma, alpha, beta] = key;
    splittings_[static_cast<std::size_t>(gamma)].push_back({alpha, beta, g});
    products_[{alpha, beta}].push_back({gamma, g});
  }
}

void ClassTable::compute_indecomposables() {
  indecomposable_.assign(classes_.size(), true);
  indecomposable_[0] = false;
  for (std::size_t a = 1; a < classes_.size(); ++a)
    for (std::size_t b = a; b < classes_.size(); ++b) {
      DimVec d = classes_[a].dim + classes_[b].dim;
      if (!region_.contains(d)) continue;
      indecomposable_[static_cast<std::size_t>(classify(direct_sum(quiver_, classes_[a].rep, classes_[b].rep)))] = false;
    }
}

}  // namespace ringelhall
