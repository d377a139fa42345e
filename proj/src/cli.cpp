#include "ringelhall/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "ringelhall/errors.hpp"
#include "ringelhall/gkm.hpp"
#include "ringelhall/hall_algebra.hpp"
#include "ringelhall/sv_extension.hpp"

namespace ringelhall {

using ojson = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kSuites{"hopf", "pairing", "composition", "sv", "kac", "character"};

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson vec_json(const IntVec& v) { return ojson(v); }

ojson matrix_json(const std::vector<std::vector<int>>& m) {
  ojson out = ojson::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

void matrix_text(std::ostringstream& out, const std::vector<std::vector<int>>& m) {
  int w = 1;
  for (const auto& row : m)
    for (int x : row) w = std::max(w, static_cast<int>(std::to_string(x).size()));
  for (const auto& row : m) {
    out << "  ";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << std::right << std::setw(w) << row[j];
    out << "\n";
  }
}

std::string classify(const Config& config) {
  ClassTable t(config.quiver(), GroundField(config.q), config.region(), config.limits);
  const auto dims = t.dims();
  if (config.format == OutputFormat::json) {
    ojson rows = ojson::array();
    for (const auto& d : dims) {
      int ind = 0;
      for (ClassId id : t.classes_of_dim(d)) ind += t.indecomposable(id) ? 1 : 0;
      rows.push_back({{"dim", vec_json(d)}, {"classes", t.classes_of_dim(d).size()}, {"indecomposable", ind}});
    }
    return dump({{"command", "classify"},
                 {"config_digest", config_digest(config)},
                 {"q", config.q},
                 {"degrees", rows},
                 {"total_classes", t.size()},
                 {"states", t.total_states()}});
  }
  std::ostringstream out;
  out << "q = " << config.q << ", " << t.size() << " classes, " << t.total_states() << " states\n";
  out << std::left << std::setw(16) << "dim" << std::setw(10) << "classes" << "indecomposable\n";
  for (const auto& d : dims) {
    int ind = 0;
    for (ClassId id : t.classes_of_dim(d)) ind += t.indecomposable(id) ? 1 : 0;
    out << std::setw(16) << to_string(d) << std::setw(10) << t.classes_of_dim(d).size() << ind << "\n";
  }
  return out.str();
}

std::string hall_table(const Config& config) {
  ClassTable t(config.quiver(), GroundField(config.q), config.region(), config.limits);
  struct Row {
    ClassId alpha, beta, gamma;
    std::uint64_t g;
  };
  std::vector<Row> rows;
  for (const auto& c : t.classes())
    for (const HallSplit& s : t.splittings(c.id)) rows.push_back({s.quotient, s.sub, c.id, s.count});
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.alpha, x.beta, x.gamma) < std::tie(y.alpha, y.beta, y.gamma);
  });

  if (config.format == OutputFormat::json) {
    ojson classes = ojson::array();
    for (const auto& c : t.classes())
      classes.push_back({{"id", c.id}, {"dim", vec_json(c.dim)}, {"aut", t.aut(c.id).get_str()},
                         {"indecomposable", c.id != ClassTable::zero() && t.indecomposable(c.id)}});
    ojson numbers = ojson::array();
    for (const Row& r : rows) numbers.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}, {"g", r.g}});
    return dump({{"command", "hall-table"},
                 {"config_digest", config_digest(config)},
                 {"classes", classes},
                 {"hall_numbers", numbers}});
  }
  std::ostringstream out;
  out << "classes\n";
  out << std::left << "  " << std::setw(6) << "id" << std::setw(14) << "dim" << std::setw(16) << "aut" << "ind\n";
  for (const auto& c : t.classes())
    out << "  " << std::setw(6) << c.id << std::setw(14) << to_string(c.dim) << std::setw(16) << t.aut(c.id).get_str()
        << (c.id != ClassTable::zero() && t.indecomposable(c.id) ? "yes" : "no") << "\n";
  out << "hall numbers g^gamma_{alpha beta}\n";
  out << "  " << std::setw(8) << "alpha" << std::setw(8) << "beta" << std::setw(8) << "gamma" << "g\n";
  for (const Row& r : rows)
    out << "  " << std::setw(8) << r.alpha << std::setw(8) << r.beta << std::setw(8) << r.gamma << r.g << "\n";
  return out.str();
}

std::string cartan(const Config& config) {
  const CartanMatrix c = cartan_from_datum(datum_from_quiver(config.quiver()));
  auto kind = [&](std::size_t i) { return c.is_real(i) ? "real" : "imaginary"; };
  if (config.format == OutputFormat::json) {
    ojson kinds = ojson::array();
    for (std::size_t i = 0; i < c.size(); ++i) kinds.push_back(kind(i));
    return dump({{"command", "cartan"},
                 {"config_digest", config_digest(config)},
                 {"form", matrix_json(c.datum.form)},
                 {"cartan", matrix_json(c.c)},
                 {"symmetrizers", c.eps},
                 {"kinds", kinds}});
  }
  std::ostringstream out;
  out << "symmetric Euler form\n";
  matrix_text(out, c.datum.form);
  out << "Cartan matrix\n";
  matrix_text(out, c.c);
  out << "symmetrizers";
  for (int e : c.eps) out << " " << e;
  out << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) out << "vertex " << i + 1 << ": " << kind(i) << "\n";
  return out.str();
}

std::string roots(const Config& config, int h) {
  const CartanMatrix c = cartan_from_datum(datum_from_quiver(config.quiver()));
  const auto pos = positive_roots(c, h);
  std::size_t real = 0;
  for (const Root& r : pos) real += r.kind == RootKind::real ? 1 : 0;
  if (config.format == OutputFormat::json) {
    ojson list = ojson::array();
    for (const Root& r : pos) list.push_back({{"root", vec_json(r.vec)}, {"kind", r.kind == RootKind::real ? "real" : "imaginary"}});
    return dump({{"command", "roots"},
                 {"config_digest", config_digest(config)},
                 {"height", h},
                 {"positive_roots", list},
                 {"real", real},
                 {"imaginary", pos.size() - real}});
  }
  std::ostringstream out;
  out << pos.size() << " positive roots of height <= " << h << " (" << real << " real, " << pos.size() - real
      << " imaginary)\n";
  for (const Root& r : pos) out << "  " << std::left << std::setw(16) << to_string(r.vec) << (r.kind == RootKind::real ? "real" : "imaginary") << "\n";
  return out.str();
}

std::string sv(const Config& config) {
  ClassTable t(config.quiver(), GroundField(config.q), config.region(), config.limits);
  HallAlgebra h(t);
  const ExtendedDatum d = extend_datum(h, config.bound);
  const auto violations = validate_extended_form(d);

  if (config.format == OutputFormat::json) {
    ojson degrees = ojson::array();
    for (const auto& s : d.degrees)
      degrees.push_back({{"theta", vec_json(s.theta)}, {"classes", s.classes}, {"xi_dim", s.xi_dim}, {"l_dim", s.l_dim}});
    ojson idx = ojson::array();
    for (const auto& n : d.new_indices) idx.push_back({{"theta", vec_json(n.theta)}, {"p", n.p}});
    ojson viol = ojson::array();
    for (const auto& v : violations) viol.push_back({{"i", v.i}, {"j", v.j}, {"rule", v.rule}});
    ojson j{{"command", "sv"},
            {"config_digest", config_digest(config)},
            {"degrees", degrees},
            {"new_indices", idx},
            {"form", matrix_json(d.form.form)},
            {"violations", viol}};
    if (d.cartan) {
      j["cartan"] = matrix_json(d.cartan->c);
      j["symmetrizers"] = d.cartan->eps;
    } else {
      j["cartan"] = nullptr;
    }
    return dump(j);
  }
  std::ostringstream out;
  out << std::left << std::setw(16) << "theta" << std::setw(10) << "classes" << std::setw(8) << "dim Xi" << "dim L\n";
  for (const auto& s : d.degrees)
    out << std::setw(16) << to_string(s.theta) << std::setw(10) << s.classes << std::setw(8) << s.xi_dim << s.l_dim << "\n";
  out << "extended index set: " << d.original.size() << " original";
  for (const auto& n : d.new_indices) out << ", " << to_string(n.theta) << "#" << n.p;
  out << "\nextended form\n";
  matrix_text(out, d.form.form);
  if (d.cartan) {
    out << "extended Cartan matrix\n";
    matrix_text(out, d.cartan->c);
  }
  for (const auto& v : violations) out << "violation at (" << v.i + 1 << "," << v.j + 1 << "): " << v.rule << "\n";
  return out.str();
}

int kac_height(const Config& config) {
  if (config.height) return *config.height;
  return *std::min_element(config.bound.begin(), config.bound.end());
}

CheckReport run_one(const std::string& suite, const ClassTable& t, const HallAlgebra& h, const Config& config) {
  if (suite == "hopf") return suite_hopf(h);
  if (suite == "pairing") return suite_pairing(h);
  if (suite == "composition") return suite_composition(h);
  if (suite == "sv") return suite_sv(h, config.bound);
  if (suite == "kac") return suite_kac(t, kac_height(config));
  if (suite == "character") return suite_character(t, config.bound);
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace

CheckReport run_suite(const std::string& suite, const Config& config) {
  if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw DomainError("unknown suite '" + suite + "'");
  ClassTable t(config.quiver(), GroundField(config.q), config.region(), config.limits);
  HallAlgebra h(t);
  if (suite != "all") return run_one(suite, t, h, config);
  std::vector<CheckReport> parts;
  for (const auto& s : kSuites) parts.push_back(run_one(s, t, h, config));
  return combine_reports("all", parts);
}

std::string emit_report(const CheckReport& report, OutputFormat format, const std::string& config_digest) {
  if (format == OutputFormat::json) {
    ojson checks = ojson::array();
    for (const Check& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"status", to_string(c.status)},
                        {"witness", c.detail.empty() ? ojson(nullptr) : ojson(c.detail)}});
    return dump({{"suite", report.suite}, {"config_digest", config_digest}, {"checks", checks}, {"overall", report.overall()}});
  }
  std::size_t w = 5;
  for (const Check& c : report.checks) w = std::max(w, c.name.size());
  std::ostringstream out;
  out << "suite " << report.suite << "  config " << config_digest << "\n";
  out << std::left << std::setw(static_cast<int>(w) + 2) << "check" << std::setw(9) << "status" << "witness\n";
  for (const Check& c : report.checks)
    out << std::setw(static_cast<int>(w) + 2) << c.name << std::setw(9) << to_string(c.status) << c.detail << "\n";
  out << "overall " << report.overall() << "\n";
  return out.str();
}

CommandResult run_command(const Command& cmd, const Config& config) {
  CommandResult r;
  try {
    if (cmd.name == "classify") {
      r.output = classify(config);
    } else if (cmd.name == "hall-table") {
      r.output = hall_table(config);
    } else if (cmd.name == "cartan") {
      r.output = cartan(config);
    } else if (cmd.name == "roots") {
      int h = cmd.height ? *cmd.height : config.effective_height();
      if (h < 0) throw DomainError("height must be nonnegative");
      r.output = roots(config, h);
    } else if (cmd.name == "sv") {
      r.output = sv(config);
    } else if (cmd.name == "verify") {
      CheckReport report = run_suite(cmd.suite, config);
      r.output = emit_report(report, config.format, config_digest(config));
      r.exit_code = report.passed() ? kExitOk : kExitCheckFailed;
    } else {
      throw DomainError("unknown command '" + cmd.name + "'");
    }
  } catch (const ConfigError& e) {
    r = {kExitUsage, "", std::string("config error: ") + e.what()};
  } catch (const DomainError& e) {
    r = {kExitUsage, "", std::string("error: ") + e.what()};
  } catch (const TruncationError& e) {
    r = {kExitResource, "", std::string("truncated: ") + e.what()};
  } catch (const ResourceError& e) {
    r = {kExitResource, "", std::string("resource limit: ") + e.what()};
  } catch (const InternalError& e) {
    r = {kExitCheckFailed, "", std::string("internal invariant violated: ") + e.what()};
  }
  return r;
}

}  // namespace ringelhall
