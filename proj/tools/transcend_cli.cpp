// Command-line front end: classify equations and closed-form numbers, solve
// for real/complex roots, batch-process input files, and run the tau-algebra
// demonstrations.  Output is plain text or a single JSON document (--json).
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "transcend/certify.hpp"
#include "transcend/errors.hpp"
#include "transcend/expr.hpp"
#include "transcend/laurent.hpp"
#include "transcend/rational.hpp"
#include "transcend/roots.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace transcend;

constexpr const char* kSchemaVersion = "1";

struct RunConfig {
  double tolerance = 1e-12;
  double scan_step = 0.1;
  int max_depth = 40;
  bool structured = false;  // --json
  std::optional<double> tau_value;
};

// ---- formatting -------------------------------------------------------------

// 12 significant digits, the precision used throughout the text reports.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt(z.real());
  std::string out = fmt(z.real());
  out += z.imag() < 0 ? " - " : " + ";
  out += fmt(std::abs(z.imag()));
  out += "i";
  return out;
}

json value_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json certificate_json(const Certificate& c) {
  json j;
  j["claim"] = c.claim;
  j["status"] = status_name(c.status);
  j["rule"] = c.rule;
  j["premises"] = json::array();
  for (const auto& p : c.premises) j["premises"].push_back(certificate_json(p));
  j["exceptions"] = json::array();
  for (const auto& ex : c.exceptions) {
    j["exceptions"].push_back(json{{"root", ex.root.fraction_string()},
                                   {"status", status_name(ex.status)},
                                   {"residual", ex.residual}});
  }
  return j;
}

void print_certificate(std::ostream& os, const Certificate& c, int indent) {
  const std::string pad(static_cast<std::size_t>(2 * indent), ' ');
  os << pad << "(" << status_name(c.status);
  if (!c.rule.empty()) os << ", " << c.rule;
  os << ") " << c.claim << "\n";
  for (const auto& ex : c.exceptions) {
    os << pad << "  exception root " << ex.root.to_string() << ": "
       << status_name(ex.status) << " (residual " << fmt(ex.residual) << ")\n";
  }
  for (const auto& p : c.premises) print_certificate(os, p, indent + 1);
}

// ---- shared helpers ---------------------------------------------------------

int status_exit_code(Status s) { return s == Status::Unknown ? 2 : 0; }

// Status attached to an individual root: the equation's verdict, unless the
// root coincides with a listed exceptional root.
Status root_status(const Certificate& cert, std::complex<double> z) {
  if (cert.status == Status::Transcendental && std::abs(z.imag()) < 1e-9) {
    for (const auto& ex : cert.exceptions) {
      if (std::abs(z.real() - ex.root.to_double()) < 1e-6) return ex.status;
    }
  }
  return cert.status;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- classify ---------------------------------------------------------------

int run_classify(const std::string& input, const RunConfig& cfg) {
  Parsed parsed = parse(input);
  Certificate cert;
  if (std::holds_alternative<Equation>(parsed)) {
    cert = classify_equation(std::get<Equation>(parsed));
  } else {
    const Expr& e = std::get<Expr>(parsed);
    if (e.contains_var()) {
      std::cerr << "error: expression contains the variable x but no '='; "
                   "classify takes an equation or a closed-form number\n";
      return 1;
    }
    cert = classify_number(e);
  }
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "classify";
    doc["input"] = input;
    doc["certificate"] = certificate_json(cert);
    emit_json(doc);
  } else {
    std::cout << "input: " << input << "\n";
    std::cout << "status: " << status_name(cert.status) << "\n";
    std::cout << "rule: " << (cert.rule.empty() ? "none" : cert.rule) << "\n";
    std::cout << "certificate:\n";
    print_certificate(std::cout, cert, 1);
  }
  return status_exit_code(cert.status);
}

// ---- solve ------------------------------------------------------------------

struct SolveReport {
  std::vector<RootComplex> roots;  // real roots carried with im = 0
  std::vector<Interval> brackets;  // parallel to roots in real mode
  std::vector<std::string> errors;
  bool real_mode = false;
};

json region_json(const Region& r) {
  return json{{"re_lo", r.re_lo},
              {"re_hi", r.re_hi},
              {"im_lo", r.im_lo},
              {"im_hi", r.im_hi}};
}

int emit_solve(const std::string& input, const std::string& mode,
               const SolveReport& rep, const Certificate& cert,
               const RunConfig& cfg) {
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "solve";
    doc["mode"] = mode;
    doc["input"] = input;
    doc["roots"] = json::array();
    for (std::size_t i = 0; i < rep.roots.size(); ++i) {
      const RootComplex& rc = rep.roots[i];
      json r;
      r["value"] = value_json(rc.value);
      r["residual"] = rc.residual;
      if (rep.real_mode) {
        r["region"] = json{{"lo", rep.brackets[i].lo},
                           {"hi", rep.brackets[i].hi}};
      } else {
        r["region"] = region_json(rc.region);
        r["count"] = rc.count;
      }
      r["status"] = status_name(root_status(cert, rc.value));
      doc["roots"].push_back(r);
    }
    doc["errors"] = rep.errors;
    doc["certificate"] = certificate_json(cert);
    emit_json(doc);
  } else {
    std::cout << "equation: " << input << "\n";
    std::cout << "classification: " << status_name(cert.status)
              << (cert.rule.empty() ? "" : " (rule " + cert.rule + ")") << "\n";
    for (std::size_t i = 0; i < rep.roots.size(); ++i) {
      const RootComplex& rc = rep.roots[i];
      std::cout << "root " << (i + 1) << ": "
                << (rep.real_mode ? "x = " : "z = ") << fmt(rc.value)
                << "  (residual " << fmt(rc.residual);
      if (rep.real_mode) {
        std::cout << ", bracket [" << fmt(rep.brackets[i].lo) << ", "
                  << fmt(rep.brackets[i].hi) << "]";
      } else {
        std::cout << ", count " << rc.count;
      }
      std::cout << ", " << status_name(root_status(cert, rc.value)) << ")\n";
    }
    for (const auto& err : rep.errors) {
      std::cerr << "solver error: " << err << "\n";
    }
    if (rep.roots.empty()) {
      std::cout << "no roots found\n";
    } else {
      std::cout << rep.roots.size()
                << (rep.roots.size() == 1 ? " root found\n" : " roots found\n");
    }
  }
  return rep.roots.empty() ? 3 : 0;
}

int run_solve(const std::string& input, const std::string& mode,
              const std::vector<double>& interval,
              const std::vector<double>& rect, double radius,
              const RunConfig& cfg) {
  Parsed parsed = parse(input);
  if (!std::holds_alternative<Equation>(parsed)) {
    std::cerr << "error: solve takes an equation (text containing '=')\n";
    return 1;
  }
  const Equation& eq = std::get<Equation>(parsed);
  Certificate cert = classify_equation(eq);
  CompiledEquation F(eq, cfg.tau_value);
  ContourOptions opts;
  opts.max_depth = cfg.max_depth;
  opts.tol = cfg.tolerance;

  SolveReport rep;
  if (mode == "real") {
    rep.real_mode = true;
    ScanReport scan = bracket_scan(F, {interval[0], interval[1]}, cfg.scan_step);
    for (const Interval& b : scan.brackets) {
      try {
        RootReal r = solve_real(F, b, cfg.tolerance);
        rep.roots.push_back(
            {{r.value, 0.0}, r.residual, Region{}, 1});
        rep.brackets.push_back(r.bracket);
      } catch (const Error& e) {
        rep.errors.push_back("bracket [" + fmt(b.lo) + ", " + fmt(b.hi) +
                             "]: " + e.what());
      }
    }
  } else if (mode == "complex") {
    Region region{rect[0], rect[1], rect[2], rect[3]};
    try {
      rep.roots = solve_complex_all(F, region, opts);
    } catch (const Error& e) {
      rep.errors.push_back(std::string("region: ") + e.what());
    }
  } else {  // min-modulus
    try {
      if (auto z = min_modulus_zero(F, radius, opts)) rep.roots.push_back(*z);
    } catch (const Error& e) {
      rep.errors.push_back(std::string("disk: ") + e.what());
    }
  }
  return emit_solve(input, mode, rep, cert, cfg);
}

// ---- batch ------------------------------------------------------------------

int run_batch(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 1;
  }
  struct LineReport {
    int line = 0;
    std::string input;
    std::optional<Certificate> cert;
    std::string error;
  };
  std::vector<LineReport> reports;
  int counts[3] = {0, 0, 0};  // indexed by Status
  int errors = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    LineReport rep;
    rep.line = lineno;
    rep.input = line.substr(first, last - first + 1);
    try {
      Parsed parsed = parse(rep.input);
      if (std::holds_alternative<Equation>(parsed)) {
        rep.cert = classify_equation(std::get<Equation>(parsed));
      } else {
        rep.cert = classify_number(std::get<Expr>(parsed));
      }
      ++counts[static_cast<int>(rep.cert->status)];
    } catch (const Error& e) {
      rep.error = e.what();
      ++errors;
    }
    reports.push_back(std::move(rep));
  }
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "batch";
    doc["path"] = path;
    doc["lines"] = json::array();
    for (const auto& rep : reports) {
      json j;
      j["line"] = rep.line;
      j["input"] = rep.input;
      if (rep.cert) {
        j["certificate"] = certificate_json(*rep.cert);
      } else {
        j["error"] = rep.error;
      }
      doc["lines"].push_back(j);
    }
    doc["summary"] =
        json{{"transcendental", counts[static_cast<int>(Status::Transcendental)]},
             {"algebraic", counts[static_cast<int>(Status::Algebraic)]},
             {"unknown", counts[static_cast<int>(Status::Unknown)]},
             {"errors", errors}};
    emit_json(doc);
  } else {
    for (const auto& rep : reports) {
      std::cout << "line " << rep.line << ": " << rep.input << " -> ";
      if (rep.cert) {
        std::cout << status_name(rep.cert->status);
        if (!rep.cert->rule.empty()) std::cout << " (rule " << rep.cert->rule << ")";
        for (const auto& ex : rep.cert->exceptions) {
          std::cout << " [exception root " << ex.root.to_string() << ": "
                    << status_name(ex.status) << "]";
        }
      } else {
        std::cout << "error: " << rep.error;
      }
      std::cout << "\n";
    }
    std::cout << "summary: "
              << counts[static_cast<int>(Status::Transcendental)]
              << " transcendental / "
              << counts[static_cast<int>(Status::Algebraic)] << " algebraic / "
              << counts[static_cast<int>(Status::Unknown)] << " unknown / "
              << errors << (errors == 1 ? " error" : " errors") << "\n";
  }
  return errors == 0 ? 0 : 1;
}

// ---- algebra ----------------------------------------------------------------

LaurentPoly parse_laurent_or_throw(const std::string& text) {
  auto p = parse_laurent(text);
  if (!p) {
    throw Error("'" + text + "' is not a Laurent polynomial in tau");
  }
  return *p;
}

json laurent_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(json{{"exponent", it->first},
                         {"coefficient", it->second.fraction_string()}});
  }
  return json{{"text", p.to_string()}, {"terms", terms}};
}

int run_algebra_binary(const std::string& op, const std::string& ptext,
                       const std::string& qtext, const RunConfig& cfg) {
  LaurentPoly p = parse_laurent_or_throw(ptext);
  LaurentPoly q = parse_laurent_or_throw(qtext);
  LaurentPoly r = op == "add" ? add(p, q) : mul(p, q);
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "algebra";
    doc["subcommand"] = op;
    doc["operands"] = json::array({laurent_json(p), laurent_json(q)});
    doc["result"] = laurent_json(r);
    emit_json(doc);
  } else {
    std::cout << r.to_string() << "\n";
  }
  return 0;
}

int run_algebra_grade(const std::string& ptext, const RunConfig& cfg) {
  LaurentPoly p = parse_laurent_or_throw(ptext);
  auto comps = grade_decompose(p);
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "algebra";
    doc["subcommand"] = "grade";
    doc["input"] = laurent_json(p);
    doc["components"] = json::array();
    for (const auto& c : comps) {
      doc["components"].push_back(
          json{{"level", c.level}, {"part", laurent_json(c.part)}});
    }
    emit_json(doc);
  } else {
    if (comps.empty()) std::cout << "0\n";
    for (const auto& c : comps) {
      std::cout << "level " << c.level << ": " << c.part.to_string() << "\n";
    }
  }
  return 0;
}

const char* class_name(LaurentClass c) {
  return c == LaurentClass::Rational ? "rational" : "transcendental";
}

int run_algebra_class(const std::string& ptext, const std::string& qtext,
                      const RunConfig& cfg) {
  LaurentPoly p = parse_laurent_or_throw(ptext);
  std::optional<LaurentPoly> q;
  if (!qtext.empty()) q = parse_laurent_or_throw(qtext);
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "algebra";
    doc["subcommand"] = "class";
    doc["elements"] = json::array();
    doc["elements"].push_back(json{{"input", laurent_json(p)},
                                   {"class", class_name(classify_element(p))}});
    if (q) {
      doc["elements"].push_back(
          json{{"input", laurent_json(*q)},
               {"class", class_name(classify_element(*q))}});
      doc["same_class"] = same_class(p, *q);
    }
    emit_json(doc);
  } else {
    if (!q) {
      std::cout << class_name(classify_element(p)) << "\n";
    } else {
      std::cout << ptext << ": " << class_name(classify_element(p)) << "\n";
      std::cout << qtext << ": " << class_name(classify_element(*q)) << "\n";
      std::cout << "same class: " << (same_class(p, *q) ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int run_algebra_dense(double target, double eps, const RunConfig& cfg) {
  if (!cfg.tau_value) {
    std::cerr << "error: algebra dense needs --tau-value\n";
    return 1;
  }
  DenseApprox d = dense_approx(*cfg.tau_value, target, eps);
  if (cfg.structured) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "algebra";
    doc["subcommand"] = "dense";
    doc["tau_value"] = *cfg.tau_value;
    doc["target"] = target;
    doc["eps"] = eps;
    doc["offset"] = d.offset.fraction_string();
    doc["decimal_places"] = d.decimal_places;
    doc["achieved_error"] = d.achieved_error;
    emit_json(doc);
  } else {
    std::cout << "offset q = " << d.offset.to_string() << " ("
              << d.decimal_places << " decimal places)\n";
    std::cout << "tau + q = " << fmt(*cfg.tau_value + d.offset.to_double())
              << "\n";
    std::cout << "error = " << fmt(d.achieved_error) << " < " << fmt(eps)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("TRANSCEND_PRECISION")) {
    try {
      cfg.tolerance = std::stod(env);
    } catch (...) {
      std::cerr << "error: TRANSCEND_PRECISION is not a number: '" << env
                << "'\n";
      return 1;
    }
  }

  CLI::App app{"transcend: transcendence certificates and root solving for "
               "elementary equations"};
  app.require_subcommand(1);
  double tau_flag = 0.0;
  auto* tau_opt = app.add_option(
      "--tau-value", tau_flag,
      "numeric value substituted for the formal constant tau");
  app.add_option("--tol", cfg.tolerance,
                 "solver tolerance (default 1e-12; TRANSCEND_PRECISION "
                 "overrides the default)")
      ->check(CLI::PositiveNumber);
  app.add_option("--step", cfg.scan_step,
                 "bracket scan step width (default 0.1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.max_depth,
                 "max contour subdivision depth (default 40)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.structured,
               "emit one self-describing JSON document");

  std::string input;
  auto* c_classify =
      app.add_subcommand("classify", "classify an equation or number");
  c_classify->fallthrough();
  c_classify->add_option("input", input, "equation or closed-form number")
      ->required();

  auto* c_solve = app.add_subcommand("solve", "find roots of an equation");
  c_solve->fallthrough();
  bool mode_real = false, mode_complex = false, mode_min = false;
  std::vector<double> interval, rect;
  double radius = 0.0;
  c_solve->add_flag("--real", mode_real, "real roots by bracket scan + hybrid");
  c_solve->add_flag("--complex", mode_complex,
                    "complex zeros by the argument principle");
  c_solve->add_flag("--min-modulus", mode_min,
                    "smallest-modulus zero in a disk");
  auto* iv = c_solve->add_option("--interval", interval, "LO HI")
                 ->expected(2);
  auto* rc = c_solve->add_option("--rect", rect, "RE_LO RE_HI IM_LO IM_HI")
                 ->expected(4);
  auto* rd = c_solve->add_option("--radius", radius, "disk radius")
                 ->check(CLI::PositiveNumber);
  c_solve->add_option("equation", input, "equation text")->required();

  std::string batch_path;
  auto* c_batch =
      app.add_subcommand("batch", "classify every line of a file");
  c_batch->fallthrough();
  c_batch->add_option("file", batch_path, "input file, one entry per line")
      ->required();

  auto* c_algebra =
      app.add_subcommand("algebra", "exact tau-algebra demonstrations");
  c_algebra->fallthrough();
  c_algebra->require_subcommand(1);
  std::string ptext, qtext;
  double dense_target = 0.0, dense_eps = 0.0;
  auto* a_add = c_algebra->add_subcommand("add", "sum of two elements");
  a_add->fallthrough();
  a_add->add_option("p", ptext, "first element")->required();
  a_add->add_option("q", qtext, "second element")->required();
  auto* a_mul = c_algebra->add_subcommand("mul", "product of two elements");
  a_mul->fallthrough();
  a_mul->add_option("p", ptext, "first element")->required();
  a_mul->add_option("q", qtext, "second element")->required();
  auto* a_grade =
      c_algebra->add_subcommand("grade", "graded decomposition by |exponent|");
  a_grade->fallthrough();
  a_grade->add_option("p", ptext, "element")->required();
  auto* a_class =
      c_algebra->add_subcommand("class", "value class at tau (one or two)");
  a_class->fallthrough();
  a_class->add_option("p", ptext, "element")->required();
  a_class->add_option("q", qtext, "optional second element");
  auto* a_dense = c_algebra->add_subcommand(
      "dense", "minimal decimal shift of tau toward a target");
  a_dense->fallthrough();
  a_dense->add_option("target", dense_target, "target value")->required();
  a_dense->add_option("eps", dense_eps, "required accuracy")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (tau_opt->count() > 0) cfg.tau_value = tau_flag;

  try {
    if (c_classify->parsed()) return run_classify(input, cfg);
    if (c_solve->parsed()) {
      const int n_modes = (mode_real ? 1 : 0) + (mode_complex ? 1 : 0) +
                          (mode_min ? 1 : 0);
      if (n_modes != 1) {
        std::cerr << "error: pick exactly one of --real, --complex, "
                     "--min-modulus\n";
        return 1;
      }
      if (mode_real && iv->count() == 0) {
        std::cerr << "error: --real needs --interval LO HI\n";
        return 1;
      }
      if (mode_complex && rc->count() == 0) {
        std::cerr << "error: --complex needs --rect RE_LO RE_HI IM_LO IM_HI\n";
        return 1;
      }
      if (mode_min && rd->count() == 0) {
        std::cerr << "error: --min-modulus needs --radius R\n";
        return 1;
      }
      if (mode_real && interval[0] >= interval[1]) {
        std::cerr << "error: interval bounds must satisfy LO < HI\n";
        return 1;
      }
      if (mode_complex && (rect[0] >= rect[1] || rect[2] >= rect[3])) {
        std::cerr << "error: rectangle bounds must satisfy RE_LO < RE_HI and "
                     "IM_LO < IM_HI\n";
        return 1;
      }
      const std::string mode =
          mode_real ? "real" : (mode_complex ? "complex" : "min-modulus");
      return run_solve(input, mode, interval, rect, radius, cfg);
    }
    if (c_batch->parsed()) return run_batch(batch_path, cfg);
    if (c_algebra->parsed()) {
      if (a_add->parsed()) return run_algebra_binary("add", ptext, qtext, cfg);
      if (a_mul->parsed()) return run_algebra_binary("mul", ptext, qtext, cfg);
      if (a_grade->parsed()) return run_algebra_grade(ptext, cfg);
      if (a_class->parsed()) return run_algebra_class(ptext, qtext, cfg);
      if (a_dense->parsed())
        return run_algebra_dense(dense_target, dense_eps, cfg);
    }
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const UnknownFunction& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
