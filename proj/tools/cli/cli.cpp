#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "equiv.hpp"
#include "output.hpp"
#include "qcat/braid.hpp"
#include "qcat/errors.hpp"
#include "qcat/sixj.hpp"
#include "qcat/virasoro.hpp"

namespace qcat::cli {

using json = nlohmann::ordered_json;

mpq_class parse_exact_rational(std::string_view text) {
  static const std::regex fraction(R"(([+-]?\d+)/(\d+))");
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den(m[2].str(), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class r(num, den);
    r.canonicalize();
    return r;
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? "0" : digits, 10);
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      long e = 0;
      const std::string es = m[4].str()[0] == '+' ? m[4].str().substr(1) : m[4].str();
      auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
      if (ec != std::errc() || std::abs(e) > 1000) throw ParseError("exponent out of range in '" + s + "'");
      exponent += e;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
    mpq_class r = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    r.canonicalize();
    if (m[1].str() == "-") r = -r;
    return r;
  }
  throw ParseError("not a rational number: '" + s + "'");
}

int level_cap_from_env() {
  const char* raw = std::getenv("QCAT_LEVEL_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultLevelCap;
  const std::string_view text(raw);
  int cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap <= 0)
    throw ParseError("QCAT_LEVEL_CAP must be a positive integer, got '" + std::string(text) + "'");
  return cap;
}

namespace {

std::string side_name(CoproductSide side) { return side == CoproductSide::Delta ? "delta" : "delta_op"; }

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Basis vectors of a tensor word as e_i(x)e_j(x)..., leftmost factor slowest.
std::string basis_label(const TensorWord& word, std::size_t flat) {
  const std::vector<int> idx = word.multi_index(flat);
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "(x)e" : "e") + std::to_string(idx[k]);
  return s;
}

void matrix_table(Output& o, const LinMap& map) {
  o.header = {"row"};
  for (std::size_t c = 0; c < map.matrix().cols(); ++c) o.header.push_back(basis_label(map.domain(), c));
  for (std::size_t r = 0; r < map.matrix().rows(); ++r) {
    std::vector<std::string> row{basis_label(map.codomain(), r)};
    for (std::size_t c = 0; c < map.matrix().cols(); ++c) row.push_back(map(r, c).to_string());
    o.rows.push_back(std::move(row));
  }
}

Output scalar_output(const char* key, int n, const ScalarQ& value) {
  Output o;
  const std::string text = value.to_string();
  o.json[key] = n;
  o.json["value"] = text;
  o.header = {key, "value"};
  o.rows = {{std::to_string(n), text}};
  o.bare = text;
  return o;
}

Output cmd_cg(int ell, int ell1, int ell2, bool op) {
  const CoproductSide side = op ? CoproductSide::DeltaOp : CoproductSide::Delta;
  const LinMap& iota = cg_embedding(ell, ell1, ell2, side);
  Output o;
  o.json["ell"] = ell;
  o.json["ell1"] = ell1;
  o.json["ell2"] = ell2;
  o.json["side"] = side_name(side);
  o.json["matrix"] = matrix_json(iota.matrix());
  matrix_table(o, iota);
  return o;
}

Output cmd_sixj(int a, int b, int c, int d) {
  const SixJTable& table = sixj(a, b, c, d);
  Output o;
  o.header = {"m", "n", "value"};
  for (const auto& [mn, value] : table.entries) {
    const std::string text = value.to_string();
    o.json[std::to_string(mn.first) + "," + std::to_string(mn.second)] = text;
    o.rows.push_back({std::to_string(mn.first), std::to_string(mn.second), text});
  }
  if (table.empty()) o.notes.push_back("no admissible channels");
  return o;
}

Output cmd_braid(int ell1, int ell2, bool eigenvalues) {
  Output o;
  o.json["ell1"] = ell1;
  o.json["ell2"] = ell2;
  if (eigenvalues) {
    json values = json::object();
    o.header = {"ell", "lambda"};
    for (int l : sel(ell1, ell2).members) {
      const std::string text = braiding_eigenvalue(l, ell1, ell2).to_string();
      values[std::to_string(l)] = text;
      o.rows.push_back({std::to_string(l), text});
    }
    o.json["eigenvalues"] = std::move(values);
    return o;
  }
  const LinMap c = braiding(ell1, ell2);
  o.json["matrix"] = matrix_json(c.matrix());
  matrix_table(o, c);
  return o;
}

Output report_output(const CheckReport& report) {
  Output o;
  o.json["check"] = report.check;
  o.json["params"] = report.params;
  o.json["pass"] = report.pass;
  o.json["failures"] = report.failures;
  std::string params;
  for (std::size_t i = 0; i < report.params.size(); ++i)
    params += (i ? " " : "") + std::to_string(report.params[i]);
  o.header = {"check", "params", "pass", "failure"};
  const std::string pass = report.pass ? "true" : "false";
  if (report.failures.empty()) o.rows.push_back({report.check, params, pass, ""});
  for (const auto& f : report.failures) o.rows.push_back({report.check, params, pass, f});
  return o;
}

Output cmd_verify(const std::string& kind, int lmax, bool& failed) {
  CheckReport report;
  if (kind == "pentagon") report = pentagon_sweep(lmax);
  else if (kind == "hexagon") report = hexagon_sweep(lmax);
  else if (kind == "ribbon") report = ribbon_sweep(lmax);
  else if (kind == "intertwiner") report = intertwiner_sweep(lmax);
  else report = fusion_count_sweep(lmax);
  failed = !report.pass;
  return report_output(report);
}

std::string decimal(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

Output cmd_vir(const std::string& kind, const mpq_class& t, int lmax, bool& failed) {
  const mpq_class c = central_charge(t);
  const double td = t.get_d();
  Output o;
  o.json["t"] = t.get_str();
  o.json["c"] = c.get_str();
  if (kind == "weights") {
    json weights = json::array();
    o.header = {"ell", "h", "h_decimal"};
    for (int l = 0; l <= lmax; ++l) {
      const mpq_class h = h_weight(l, t);
      weights.push_back({{"ell", l}, {"h", h.get_str()}});
      o.rows.push_back({std::to_string(l), h.get_str(), decimal(h.get_d())});
    }
    o.json["weights"] = std::move(weights);
  } else if (kind == "fusion") {
    json fusion = json::array();
    o.header = {"ell1", "ell2", "ell3", "dim"};
    for (int a = 0; a <= lmax; ++a)
      for (int b = 0; b <= lmax; ++b)
        for (int l : sel(a, b).members) {
          fusion.push_back({{"ell1", a}, {"ell2", b}, {"ell3", l}, {"dim", fusion_dim(a, b, l)}});
          o.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(l),
                            std::to_string(fusion_dim(a, b, l))});
        }
    o.json["fusion"] = std::move(fusion);
  } else if (kind == "bconst") {
    json values = json::array();
    o.header = {"ell1", "ell2", "ell", "B"};
    for (int a = 0; a <= lmax; ++a)
      for (int b = 0; b <= lmax; ++b)
        for (int l : sel(a, b).members) {
          json entry{{"ell1", a}, {"ell2", b}, {"ell", l}};
          std::string text;
          try {
            const double value = b_const(a, b, l, td);
            entry["B"] = value;
            text = decimal(value);
          } catch (const EvaluationSingularity&) {
            entry["B"] = nullptr;
            text = "singular";
          }
          values.push_back(std::move(entry));
          o.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(l), text});
        }
    o.json["bconst"] = std::move(values);
  } else {
    const int cap = level_cap_from_env();
    json kac = json::array();
    o.header = {"ell", "level", "det_zero", "lower_zero_levels"};
    for (int l = 0; l <= lmax; ++l) {
      const KacCheck check = kac_first_row_check(l, t, cap);
      json lower = json::array();
      std::string lower_text;
      for (const auto& lv : check.lower_levels) {
        lower.push_back({{"level", lv.level}, {"det_zero", lv.det_zero}});
        if (lv.det_zero) lower_text += (lower_text.empty() ? "" : " ") + std::to_string(lv.level);
      }
      kac.push_back({{"ell", l}, {"level", check.level}, {"det_zero", check.det_zero},
                     {"lower_levels", std::move(lower)}});
      o.rows.push_back({std::to_string(l), std::to_string(check.level), check.det_zero ? "true" : "false",
                        lower_text.empty() ? "-" : lower_text});
      if (!check.passed()) failed = true;
    }
    o.json["kac"] = std::move(kac);
  }
  return o;
}

Output cmd_equiv(const mpq_class& t, int lmax, double tol, int pentagon_lmax, bool& failed) {
  const EquivReport r = compute_equivalence(t.get_d(), lmax, tol, pentagon_lmax);
  failed = !r.pass();
  Output o;
  o.json["t"] = r.t;
  o.json["lmax"] = r.lmax;
  o.json["tol"] = r.tol;
  o.json["fusion"] = {{"match", r.fusion_match}, {"failures", r.fusion_failures}};
  json channels = json::array();
  for (const auto& p : r.braiding)
    channels.push_back({{"ell1", p.ell1}, {"ell2", p.ell2}, {"ell", p.ell}, {"lambda", p.exact},
                        {"deviation", p.deviation}});
  o.json["braiding"] = {{"max_deviation", r.braiding_max_deviation}, {"channels", std::move(channels)}};
  json labels = json::array();
  for (const auto& p : r.twists)
    labels.push_back({{"ell", p.ell}, {"theta", p.exact}, {"deviation", p.deviation}});
  o.json["twist"] = {{"max_deviation", r.twist_max_deviation}, {"labels", std::move(labels)}};
  o.json["pentagon"] = {{"lmax", r.pentagon_lmax}, {"pass", r.pentagon_pass}};
  o.json["pass"] = r.pass();

  auto verdict = [](bool ok) { return std::string(ok ? "PASS" : "FAIL"); };
  o.header = {"identity", "detail", "status"};
  o.rows = {
      {"fusion", std::to_string(r.fusion_failures.size()) + " mismatches", verdict(r.fusion_match)},
      {"braiding phase", "max deviation " + decimal(r.braiding_max_deviation),
       verdict(r.braiding_max_deviation < r.tol)},
      {"twist phase", "max deviation " + decimal(r.twist_max_deviation), verdict(r.twist_max_deviation < r.tol)},
      {"pentagon", "lmax " + std::to_string(r.pentagon_lmax), verdict(r.pentagon_pass)},
  };
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Uq(sl2) braided tensor category data and first-row Virasoro checks.", "qcat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  std::string out_path;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write results to FILE instead of stdout");

  std::function<Output(bool&)> action;
  int n = 0, ell = 0, ell1 = 0, ell2 = 0, lmax = 0;
  std::vector<int> four;
  bool op = false, eigen = false;
  std::string kind, t_text;
  double tol = 1e-9;
  int pentagon_lmax = -1;

  auto* qint_cmd = app.add_subcommand("qint", "Quantum integer [N]");
  qint_cmd->add_option("N", n)->required();
  qint_cmd->callback([&] { action = [&](bool&) { return scalar_output("n", n, qint(n)); }; });

  auto* qfact_cmd = app.add_subcommand("qfact", "Quantum factorial [N]!");
  qfact_cmd->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  qfact_cmd->callback([&] { action = [&](bool&) { return scalar_output("n", n, qfact(n)); }; });

  auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan embedding matrix");
  cg_cmd->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  cg_cmd->add_option("--ell1", ell1)->required()->check(CLI::NonNegativeNumber);
  cg_cmd->add_option("--ell2", ell2)->required()->check(CLI::NonNegativeNumber);
  cg_cmd->add_flag("--op", op, "Use the opposite coproduct");
  cg_cmd->callback([&] { action = [&](bool&) { return cmd_cg(ell, ell1, ell2, op); }; });

  auto* sixj_cmd = app.add_subcommand("sixj", "6j table for labels A B C D");
  sixj_cmd->add_option("labels", four, "A B C D")->required()->expected(4)->check(CLI::NonNegativeNumber);
  sixj_cmd->callback([&] { action = [&](bool&) { return cmd_sixj(four[0], four[1], four[2], four[3]); }; });

  auto* braid_cmd = app.add_subcommand("braid", "Braiding V_A (x) V_B -> V_B (x) V_A");
  braid_cmd->add_option("A", ell1)->required()->check(CLI::NonNegativeNumber);
  braid_cmd->add_option("B", ell2)->required()->check(CLI::NonNegativeNumber);
  braid_cmd->add_flag("--eigenvalues", eigen, "Per-channel eigenvalues instead of the matrix");
  braid_cmd->callback([&] { action = [&](bool&) { return cmd_braid(ell1, ell2, eigen); }; });

  auto* twist_cmd = app.add_subcommand("twist", "Twist scalar on V_L");
  twist_cmd->add_option("L", ell)->required()->check(CLI::NonNegativeNumber);
  twist_cmd->callback([&] { action = [&](bool&) { return scalar_output("ell", ell, twist(ell)); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Exact coherence sweep");
  verify_cmd->add_option("check", kind)
      ->required()
      ->check(CLI::IsMember({"pentagon", "hexagon", "ribbon", "intertwiner", "fusion"}));
  verify_cmd->add_option("--lmax", lmax)->required()->check(CLI::NonNegativeNumber);
  verify_cmd->callback([&] { action = [&](bool& failed) { return cmd_verify(kind, lmax, failed); }; });

  auto* vir_cmd = app.add_subcommand("vir", "First-row Virasoro tables");
  vir_cmd->add_option("table", kind)->required()->check(CLI::IsMember({"weights", "fusion", "bconst", "kac"}));
  vir_cmd->add_option("--t", t_text, "Parameter t as a fraction or decimal")->required();
  vir_cmd->add_option("--lmax", lmax)->required()->check(CLI::NonNegativeNumber);
  vir_cmd->callback([&] {
    action = [&](bool& failed) { return cmd_vir(kind, parse_exact_rational(t_text), lmax, failed); };
  });

  auto* equiv_cmd = app.add_subcommand("equiv", "Quantum-group data against Virasoro phases at q = e^{i pi t}");
  equiv_cmd->add_option("--t", t_text)->required();
  equiv_cmd->add_option("--lmax", lmax)->required()->check(CLI::NonNegativeNumber);
  equiv_cmd->add_option("--tol", tol)->capture_default_str()->check(CLI::PositiveNumber);
  equiv_cmd->add_option("--pentagon-lmax", pentagon_lmax, "Pentagon sweep bound (default min(lmax, 2))")
      ->check(CLI::NonNegativeNumber);
  equiv_cmd->callback([&] {
    action = [&](bool& failed) {
      const int p = pentagon_lmax >= 0 ? pentagon_lmax : std::min(lmax, 2);
      return cmd_equiv(parse_exact_rational(t_text), lmax, tol, p, failed);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    bool failed = false;
    const Output output = action(failed);
    const OutputFormat format = parse_format(format_text);
    if (out_path.empty()) {
      render(output, format, out);
    } else {
      std::ofstream file(out_path);
      if (!file) {
        err << "error: cannot open " << out_path << " for writing\n";
        return kExitUsage;
      }
      render(output, format, file);
    }
    return failed ? kExitVerificationFailure : kExitPass;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LevelCapExceeded& e) {
    err << "error: " << e.what() << " (raise QCAT_LEVEL_CAP)\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}

}  // namespace qcat::cli
