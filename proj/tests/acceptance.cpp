// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance <ringelhall executable> <config dir>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <sys/wait.h>

#include "ringelhall/cli.hpp"
#include "ringelhall/sv_extension.hpp"
#include "ringelhall/verify.hpp"

using namespace ringelhall;

namespace {

struct Table {
  std::string name;
  DimVec bound;
  std::unique_ptr<ClassTable> table;
  std::unique_ptr<HallAlgebra> h;
};

std::unique_ptr<Table> make(const std::string& name, const Quiver& quiver, std::uint64_t q, DimVec bound,
                            std::optional<int> height = {}) {
  auto t = std::make_unique<Table>();
  t->name = name + " q=" + std::to_string(q) + " bound " + to_string(bound);
  t->bound = bound;
  t->table = std::make_unique<ClassTable>(quiver, GroundField(q), Region{bound, height});
  t->h = std::make_unique<HallAlgebra>(*t->table);
  return t;
}

/// Collects failures for one criterion.
struct Verdict {
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void report(const std::string& table, const CheckReport& r, bool allow_skips = true) {
    for (const Check& c : r.checks) {
      if (c.status == CheckStatus::fail) problems.push_back(table + " " + r.suite + "/" + c.name + ": " + c.detail);
      if (c.status == CheckStatus::skipped && !allow_skips)
        problems.push_back(table + " " + r.suite + "/" + c.name + " skipped: " + c.detail);
    }
  }
};

const Check* find(const CheckReport& r, const std::string& name, CheckStatus s) {
  for (const Check& c : r.checks)
    if (c.name == name && c.status == s) return &c;
  return nullptr;
}

std::size_t instances(const Check* c) { return c ? std::stoul(c->detail) : 0; }

/// rank of the two-factor products in degree theta, by elimination on their coordinates
std::size_t product_rank(const HallAlgebra& h, const DimVec& theta) {
  const ClassTable& t = h.table();
  const auto cols = t.classes_of_dim(theta);
  ScalarMatrix m;
  for (const auto& x : t.classes())
    for (const auto& y : t.classes()) {
      if (x.id == 0 || y.id == 0 || !(x.dim + y.dim == theta)) continue;
      AlgElt p = h.mult_plus(h.plus(x.id), h.plus(y.id));
      std::vector<Scalar> row;
      for (ClassId c : cols) row.push_back(p.coeff(h.sym(0, {}, c)));
      m.push_back(row);
    }
  return row_reduce(m).size();
}

std::string capture(const std::string& cmd, int& status) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <ringelhall executable> <config dir>\n";
    return 2;
  }
  const std::string cli = argv[1], configs = argv[2];

  std::vector<std::pair<std::string, Verdict>> results;
  auto criterion = [&](const std::string& title, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(v);
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (v.problems.empty() ? "PASS " : "FAIL ") << title << " (" << std::fixed;
    line.precision(1);
    line << secs << " s)";
    if (!v.problems.empty()) line << ": " << v.problems.front();
    if (v.problems.size() > 1) line << " [+" << v.problems.size() - 1 << " more]";
    std::cout << line.str() << std::endl;
    for (const auto& p : v.problems) std::cerr << "  " << p << "\n";
    results.push_back({title, v});
  };

  criterion("1 kac: indecomposable dimension vectors are the predicted roots", [&](Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    auto a2 = make("A2", Quiver::a2(), 2, {2, 2}, 2);
    auto jordan = make("Jordan", Quiver::jordan(), 2, {4});
    auto kron = make("Kronecker", Quiver::kronecker(), 2, {4, 4}, 4);
    for (auto* t : {a2.get(), jordan.get(), kron.get()}) {
      const int h = t == a2.get() ? 2 : 4;
      auto r = suite_kac(*t->table, h);
      v.report(t->name, r, false);
      v.require(find(r, "root-set", CheckStatus::pass) != nullptr, t->name + ": root set not confirmed");
    }
    v.require(indecomposable_counts(*kron->table).at({1, 1}) == 3, "I((1,1), 2) != 3 for Kronecker");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  });

  std::vector<std::unique_ptr<Table>> tables;
  for (std::uint64_t q : {2, 3}) {
    tables.push_back(make("A2", Quiver::a2(), q, {2, 2}));
    tables.push_back(make("Jordan", Quiver::jordan(), q, {4}));
    tables.push_back(make("Kronecker", Quiver::kronecker(), q, {2, 2}));
  }

  criterion("2 hopf: coassociativity, Green, counit, antipode at q=2 and q=3", [&](Verdict& v) {
    for (const auto& t : tables) v.report(t->name, suite_hopf(*t->h), false);
  });

  criterion("3 pairing: skew-Hopf pairing, psi diagonal and positive, omega properties", [&](Verdict& v) {
    for (const auto& t : tables) v.report(t->name, suite_pairing(*t->h), false);
  });

  std::vector<CheckReport> composition, sv;

  criterion("4 commutator: simple pairs and new-generator pairs", [&](Verdict& v) {
    for (const auto& t : tables) {
      composition.push_back(suite_composition(*t->h));
      sv.push_back(suite_sv(*t->h, t->bound));
    }
    std::size_t l_pairs = 0;
    for (std::size_t k = 0; k < tables.size(); ++k) {
      const Check* simple = find(composition[k], "commutator-simple", CheckStatus::pass);
      const Check* l = find(sv[k], "commutator-l", CheckStatus::pass);
      v.require(simple && instances(simple) > 0, tables[k]->name + ": commutator-simple did not pass");
      v.require(l != nullptr, tables[k]->name + ": commutator-l did not pass");
      l_pairs += instances(l);
    }
    v.require(l_pairs > 0, "no new-generator pairs were exercised");
  });

  criterion("5 composition: relations (i)-(v), A2 Serre sum vanishes", [&](Verdict& v) {
    v.require(composition.size() == tables.size(), "composition suites did not run");
    for (std::size_t k = 0; k < composition.size(); ++k) v.report(tables[k]->name, composition[k]);
    for (std::size_t k : {0u, 3u}) {
      if (k >= composition.size()) break;
      for (const char* name : {"relation-iv[E]", "relation-iv[F]"}) {
        v.require(instances(find(composition[k], name, CheckStatus::pass)) > 0, tables[k]->name + ": " + name + " ran no instance");
        v.require(!find(composition[k], name, CheckStatus::skipped), tables[k]->name + ": " + name + " skipped");
      }
    }
  });

  criterion("6 sv: new generator dimensions, primitivity, fundamental region, extended form", [&](Verdict& v) {
    v.require(sv.size() == tables.size(), "sv suites did not run");
    for (std::size_t k = 0; k < sv.size(); ++k) {
      v.report(tables[k]->name, sv[k]);
      for (const char* name : {"primitive", "fundamental-region", "extended-form-offdiagonal", "extended-form-imaginary",
                               "extended-form-integrality"})
        v.require(find(sv[k], name, CheckStatus::pass) != nullptr, tables[k]->name + ": " + name + " did not pass");
    }
    const HallAlgebra& kron = *tables[2]->h;
    const HallAlgebra& jordan = *tables[1]->h;
    auto l_dim = [](const HallAlgebra& h, const DimVec& theta) { return l_space(h, theta).dim(); };
    auto oracle_dim = [](const HallAlgebra& h, const DimVec& theta) {
      return h.table().classes_of_dim(theta).size() - product_rank(h, theta);
    };
    v.require(l_dim(kron, {1, 1}) == 2 && oracle_dim(kron, {1, 1}) == 2, "Kronecker dim L_(1,1) != 2");
    for (int n : {2, 3})
      v.require(l_dim(jordan, {n}) == 1 && oracle_dim(jordan, {n}) == 1,
                "Jordan dim L_(" + std::to_string(n) + ") != 1");
  });

  criterion("7 character: product expansion reproduces class counts", [&](Verdict& v) {
    for (const auto& t : tables) v.report(t->name, suite_character(*t->table, t->bound), false);
    const ClassTable& jordan = *tables[1]->table;
    auto series = character_product(jordan, indecomposable_counts(jordan), {4});
    const long partitions[] = {1, 1, 2, 3, 5};
    for (int n = 0; n <= 4; ++n)
      v.require(series[{n}] == partitions[n], "Jordan coefficient at (" + std::to_string(n) + ") is " + series[{n}].get_str());
  });

  criterion("8 determinism: repeated runs give byte-identical JSON reports", [&](Verdict& v) {
    for (const char* name : {"a2.conf", "jordan.conf", "kronecker.conf"}) {
      const std::string cmd = cli + " verify " + configs + "/" + name + " --suite all --format json";
      const std::string sv_cmd = cli + " sv " + configs + "/" + name + " --format json";
      int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
      const std::string first = capture(cmd, s1), second = capture(cmd, s2);
      const std::string sv1 = capture(sv_cmd, s3), sv2 = capture(sv_cmd, s4);
      v.require(s1 == 0 && s2 == 0 && s3 == 0 && s4 == 0, std::string(name) + ": nonzero exit status");
      v.require(!first.empty() && first == second, std::string(name) + ": verify reports differ");
      v.require(!sv1.empty() && sv1 == sv2, std::string(name) + ": sv reports differ");
    }
  });

  std::size_t failed = 0;
  for (const auto& [title, v] : results) failed += v.problems.empty() ? 0 : 1;
  std::cout << (failed == 0 ? "ALL PASS" : "FAILED") << " (" << results.size() - failed << "/" << results.size()
            << " criteria)" << std::endl;
  return failed == 0 ? 0 : 1;
}
