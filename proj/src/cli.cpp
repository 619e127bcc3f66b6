#include "ffda/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ffda/cfrac.hpp"
#include "ffda/oracle.hpp"
#include "ffda/quadform.hpp"
#include "ffda/randgen.hpp"
#include "ffda/textio.hpp"
#include "ffda/transference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffda {

namespace {

json envelope(const std::string& command, u32 p, json result) {
  json out;
  out["schema"] = 1;
  out["command"] = command;
  out["p"] = p;
  out["result"] = std::move(result);
  out["meta"] = json{{"tool", "ffda"}, {"version", "0.1.0"}};
  return out;
}

void print_json(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

std::string read_input_arg(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw DomainError("cannot open input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExpRational parse_lambda(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos)
      return ExpRational::integer(std::stoll(text));
    return ExpRational(std::stoll(text.substr(0, slash)),
                       std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("expected an integer or num/den exponent", 0);
  }
}

json status_to_json(const CFStatus& st) {
  json out;
  switch (st.kind) {
    case CFStatusKind::complete_rational: out["kind"] = "complete-rational"; break;
    case CFStatusKind::periodic:
      out["kind"] = "periodic";
      out["preperiod"] = st.preperiod;
      out["period"] = st.period;
      break;
    case CFStatusKind::precision_exhausted:
      out["kind"] = "precision-exhausted";
      break;
  }
  out["emitted"] = st.emitted;
  return out;
}

json expansion_to_json(const CFExpansion& exp) {
  json out;
  json quot = json::array();
  for (const auto& a : exp.quotients) quot.push_back(a.to_string());
  out["quotients"] = quot;
  json conv = json::array();
  for (const auto& [pn, qn] : exp.convergents)
    conv.push_back(json::array({pn.to_string(), qn.to_string()}));
  out["convergents"] = conv;
  out["status"] = status_to_json(exp.status);
  return out;
}

json solution_to_json(const ApproxSolution& sol) {
  json out;
  out["x"] = point_to_json(sol.x);
  out["norm_exp"] = sol.norm_exp;
  out["degree_cap"] = sol.degree_cap;
  json ach = json::array();
  for (std::size_t i = 0; i < sol.achieved.size(); ++i) {
    json a = qexponent_to_json(sol.achieved[i]);
    a["certified_to"] = sol.achieved_prec[i];
    ach.push_back(std::move(a));
  }
  out["achieved"] = ach;
  return out;
}

struct VerifySuiteResult {
  json assertions = json::array();
  bool pass = true;

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    json row;
    row["name"] = name;
    row["pass"] = ok;
    if (!detail.empty()) row["detail"] = detail;
    assertions.push_back(std::move(row));
    pass = pass && ok;
  }
};

void suite_dirichlet(const FieldConfig& field, int max_deg,
                     VerifySuiteResult& res) {
  Rng rng(1001);
  (void)max_deg;
  for (int trial = 0; trial < 12; ++trial) {
    int n = rng.range(1, 3);
    int h = rng.range(0, 4);
    int R = h / n + 1;
    int prec = R + h + 6;
    std::vector<LaurentSeries> thetas;
    for (int i = 0; i < n; ++i) {
      int kind = rng.range(0, 2);
      if (kind == 0) {
        thetas.push_back(surd_to_series(random_surd(rng, field, 4), prec));
      } else if (kind == 1) {
        Poly num = random_poly(rng, field, 2);
        Poly den = random_poly(rng, field, 2, true);
        thetas.push_back(
            LaurentSeries::from_rational(RationalFn(num, den), prec));
      } else {
        thetas.push_back(random_series(rng, field, -2, 2, prec));
      }
    }
    bool ok = true;
    std::string detail;
    try {
      ApproxSolution sol = dirichlet_simultaneous(thetas, h);
      for (const auto& norm : sol.achieved)
        ok = ok && (norm.is_zero() || norm.exponent() >= R);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    res.record("simultaneous n=" + std::to_string(n) + " h=" +
                   std::to_string(h),
               ok, detail);
  }
  // Sharpness: against 1/T^2 with h=2 no polynomial below q^2 beats q^{-2}.
  try {
    LaurentSeries theta = LaurentSeries::from_rational(
        RationalFn(Poly::constant(field, 1),
                   Poly::monomial(field, 1, 2)),
        12);
    ApproxSolution sol = dirichlet_single(theta, 2);
    bool ok = !sol.achieved[0].is_zero() && sol.achieved[0].exponent() >= 2;
    i64 best = 0;
    for (u64 idx = 1; idx < poly_count(field, 1); ++idx) {
      QExponent norm =
          frac_norm(mul_poly(theta, poly_from_index(field, idx)));
      if (!norm.is_zero()) best = std::max(best, norm.exponent());
    }
    ok = ok && best == 2;
    res.record("sharpness at h=2", ok);
  } catch (const std::exception& e) {
    res.record("sharpness at h=2", false, e.what());
  }
}

void suite_lower(const FieldConfig& field, int max_deg,
                 VerifySuiteResult& res) {
  Rng rng(1002);
  int deg = std::min(max_deg, 5);
  for (int trial = 0; trial < 3; ++trial) {
    try {
      QuadraticSurd s = random_surd(rng, field, 2);
      int tau_exp = static_cast<int>(tau_of_surd(s).exponent());
      int prec = deg + 3 * tau_exp + 20;
      auto rep = verify_lower_bound(
          {OracleTheta::from_series(surd_to_series(s, prec))}, deg);
      bool ok = rep.positive;
      // The convergent denominators attain the constant, so the searched
      // minimum reaches it.
      ok = ok && !less(rep.gamma_exp, ExpRational::integer(tau_exp));
      res.record("surd lower bound trial " + std::to_string(trial), ok);
    } catch (const std::exception& e) {
      res.record("surd lower bound trial " + std::to_string(trial), false,
                 e.what());
    }
  }
}

void suite_quadform(const FieldConfig& field, int max_deg,
                    VerifySuiteResult& res) {
  Rng rng(1003);
  (void)max_deg;
  for (int trial = 0; trial < 5; ++trial) {
    try {
      BinaryQuadraticForm f = random_form(rng, field, 4);
      QExponent tau = tau_theta(f);  // cross-checks both routes internally
      bool ok = tau.exponent() >= 1;
      int d = largest_quotient_degree(f);  // checks the degree identity
      ok = ok && d == static_cast<int>(tau.exponent());
      res.record("form trial " + std::to_string(trial), ok);
    } catch (const std::exception& e) {
      res.record("form trial " + std::to_string(trial), false, e.what());
    }
  }
}

void suite_mahler(const FieldConfig& field, int max_deg,
                  VerifySuiteResult& res) {
  try {
    int deg = std::min(max_deg, 4);
    int prec = static_cast<int>(field.p()) * deg + 8;
    auto rep = extremal_witnesses(field, deg, prec);
    bool has_T = false;
    Poly t = Poly::monomial(field, 1, 1);
    for (const auto& w : rep.witnesses) has_T = has_T || w == t;
    res.record("equality witnesses exist", !rep.witnesses.empty());
    res.record("T is a witness", has_T);
  } catch (const std::exception& e) {
    res.record("equality witnesses exist", false, e.what());
  }
}

void suite_transfer(const FieldConfig& field, int max_deg,
                    VerifySuiteResult& res) {
  Rng rng(1004);
  (void)max_deg;
  for (int trial = 0; trial < 6; ++trial) {
    int n = rng.range(1, 2);
    int m = rng.range(1, 2);
    int h = rng.range(0, 2);
    try {
      int R = (m * h + m - 1) / n + 1;
      int prec = R + h + 10;
      std::vector<std::vector<LaurentSeries>> theta;
      for (int i = 0; i < n; ++i) {
        std::vector<LaurentSeries> row;
        for (int j = 0; j < m; ++j)
          row.push_back(rng.chance(1, 2)
                            ? surd_to_series(random_surd(rng, field, 2), prec)
                            : random_series(rng, field, -1, 2, prec));
        theta.push_back(std::move(row));
      }
      ApproxSolution sol = general_linear_forms(theta, h);
      TransferCertificate cert = transfer(theta, sol.x, R, h);
      bool ok = true;
      if (n == 1 && m == 1)
        ok = cert.D_exp == R && cert.Y_exp == h;
      res.record("transfer n=" + std::to_string(n) + " m=" +
                     std::to_string(m) + " h=" + std::to_string(h),
                 ok);
    } catch (const std::exception& e) {
      res.record("transfer trial " + std::to_string(trial), false, e.what());
    }
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact Diophantine approximation over truncated Laurent "
               "series fields"};
  app.set_help_flag("--help", "print usage");  // keep -h free for --h
  app.fallthrough();  // global flags may follow the subcommand
  app.require_subcommand(1);

  u32 p = 3;
  int prec = 24;
  int jobs = 0;
  bool json_flag = true;
  app.add_option("--p", p, "prime field order")->capture_default_str();
  app.add_option("--prec", prec, "default working precision")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "parallel worker count (0 = library default)");
  app.add_flag("--json", json_flag, "emit JSON (always on)");

  // cf
  auto* cf_cmd = app.add_subcommand("cf", "continued-fraction expansion");
  std::string cf_input;
  int cf_max_terms = 16;
  int cf_quality = -1;
  cf_cmd->add_option("--input", cf_input, "element spec")->required();
  cf_cmd->add_option("--max-terms", cf_max_terms, "series engine term cap");
  cf_cmd->add_option("--verify-quality", cf_quality,
                     "check the distance law at one convergent index");

  // approx family
  auto* approx_cmd = app.add_subcommand("approx", "simultaneous approximation");
  std::vector<std::string> approx_thetas;
  int approx_h = 1;
  approx_cmd->add_option("--theta", approx_thetas, "targets")->required();
  approx_cmd->add_option("--h", approx_h, "size budget exponent")->required();

  auto* transp_cmd =
      app.add_subcommand("approx-transpose", "small linear combination");
  std::vector<std::string> transp_thetas;
  int transp_h = 1;
  transp_cmd->add_option("--theta", transp_thetas, "targets")->required();
  transp_cmd->add_option("--h", transp_h, "size budget exponent")->required();

  auto* gen_cmd = app.add_subcommand("approx-general", "general linear forms");
  std::vector<std::string> gen_rows;
  int gen_h = 1;
  gen_cmd->add_option("--row", gen_rows,
                      "one form row: comma-separated element specs")
      ->required();
  gen_cmd->add_option("--h", gen_h, "size budget exponent")->required();

  // solve-gamma
  auto* gamma_cmd = app.add_subcommand("solve-gamma",
                                       "valuation-inequality system");
  std::string gamma_input;
  gamma_cmd->add_option("--input", gamma_input, "instance JSON file or '-'")
      ->required();

  // transfer
  auto* transfer_cmd =
      app.add_subcommand("transfer", "transpose a solved linear-form system");
  std::string transfer_input;
  transfer_cmd
      ->add_option("--input", transfer_input,
                   "solution JSON from approx-general, file or '-'")
      ->required();

  // form
  auto* form_cmd = app.add_subcommand("form", "binary quadratic form data");
  std::string form_spec, form_op = "sigma";
  form_cmd->add_option("--f", form_spec, "coefficients '<a>;<b>;<c>'")
      ->required();
  form_cmd->add_option("--op", form_op, "sigma|tau|automorph|D")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "randomized check suites");
  std::string suite;
  int verify_deg = 4;
  verify_cmd
      ->add_option("--suite", suite, "dirichlet|lower|quadform|mahler|transfer")
      ->required();
  verify_cmd->add_option("--max-deg", verify_deg, "search degree cap");

  // estimate-b
  auto* estb_cmd = app.add_subcommand("estimate-b",
                                      "finite-horizon product minimum");
  std::vector<std::string> estb_thetas;
  std::string estb_lambda = "1";
  int estb_deg = 4;
  estb_cmd->add_option("--theta", estb_thetas, "targets")->required();
  estb_cmd->add_option("--lambda", estb_lambda, "exponent, integer or num/den");
  estb_cmd->add_option("--max-deg", estb_deg, "window cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif
  (void)json_flag;
  FieldConfig field(p);

  if (cf_cmd->parsed()) {
    ElementSpec spec = parse_element_spec(field, cf_input, prec);
    CFExpansion exp;
    json result;
    if (spec.is_surd()) {
      exp = cf_surd(std::get<QuadraticSurd>(spec.value));
      result["tau"] = qexponent_to_json(tau_of_expansion(exp));
    } else if (spec.is_rational()) {
      exp = cf_rational(std::get<RationalFn>(spec.value));
      result["tau"] = qexponent_to_json(tau_of_expansion(exp));
    } else {
      exp = cf_series(std::get<LaurentSeries>(spec.value), cf_max_terms);
      result["tau"] = nullptr;  // not certified from a truncated view
    }
    result.update(expansion_to_json(exp));
    if (cf_quality >= 0) {
      auto [pn, qn] = cf_convergent(exp, cf_quality);
      Poly a_next = cf_quotient(exp, cf_quality + 1);
      int need = a_next.degree() + 2 * qn.degree() + 2;
      QualityReport rep =
          convergent_quality(exp, spec.as_series(std::max(prec, need)),
                             cf_quality, true);
      result["quality"] = json{{"n", rep.n},
                               {"expected_exp", rep.expected_exp},
                               {"equality", rep.equality},
                               {"best_ok", rep.best_ok}};
    }
    print_json(out, envelope("cf", p, std::move(result)));
    return exp.status.kind == CFStatusKind::precision_exhausted &&
                   exp.status.emitted == 0
               ? 3
               : 0;
  }

  auto specs_to_series = [&](const std::vector<std::string>& texts,
                             int need) {
    std::vector<LaurentSeries> ser;
    for (const auto& t : texts)
      ser.push_back(parse_element_spec(field, t, prec).as_series(
          std::max(prec, need)));
    return ser;
  };

  if (approx_cmd->parsed()) {
    int n = static_cast<int>(approx_thetas.size());
    int need = approx_h / n + 1 + approx_h + 2;
    ApproxSolution sol =
        dirichlet_simultaneous(specs_to_series(approx_thetas, need), approx_h);
    json result = solution_to_json(sol);
    result["h"] = approx_h;
    print_json(out, envelope("approx", p, std::move(result)));
    return 0;
  }
  if (transp_cmd->parsed()) {
    int n = static_cast<int>(transp_thetas.size());
    int need = n * (transp_h + 1) + transp_h + 2;
    ApproxSolution sol =
        transpose_form(specs_to_series(transp_thetas, need), transp_h);
    json result = solution_to_json(sol);
    result["h"] = transp_h;
    print_json(out, envelope("approx-transpose", p, std::move(result)));
    return 0;
  }
  if (gen_cmd->parsed()) {
    std::vector<std::vector<std::string>> row_texts;
    for (const auto& row : gen_rows) {
      std::vector<std::string> cells;
      std::size_t start = 0;
      while (start <= row.size()) {
        auto comma = row.find(',', start);
        if (comma == std::string::npos) {
          cells.push_back(row.substr(start));
          break;
        }
        cells.push_back(row.substr(start, comma - start));
        start = comma + 1;
      }
      row_texts.push_back(std::move(cells));
    }
    int n = static_cast<int>(row_texts.size());
    int m = static_cast<int>(row_texts[0].size());
    int R = (m * gen_h + m - 1) / n + 1;
    std::vector<std::vector<LaurentSeries>> theta;
    for (const auto& row : row_texts)
      theta.push_back(specs_to_series(row, R + gen_h + 2));
    ApproxSolution sol = general_linear_forms(theta, gen_h);
    json result = solution_to_json(sol);
    result["h"] = gen_h;
    result["C_exp"] = R;
    result["X_exp"] = gen_h;
    json rows_json = json::array();
    for (const auto& row : row_texts) rows_json.push_back(row);
    result["theta"] = rows_json;
    print_json(out, envelope("approx-general", p, std::move(result)));
    return 0;
  }

  if (gamma_cmd->parsed()) {
    json in = json::parse(read_input_arg(gamma_input));
    FieldConfig gfield(in.value("p", p));
    GammaInstance inst;
    for (const auto& row : in.at("rows")) {
      std::vector<LaurentSeries> r;
      for (const auto& cell : row)
        r.push_back(parse_series_spec(gfield, cell.get<std::string>()));
      inst.rows.push_back(std::move(r));
    }
    inst.targets = in.at("r").get<std::vector<int>>();
    inst.deg_bounds = in.at("deg_bounds").get<std::vector<int>>();
    auto sol = solve_gamma(inst);
    json result;
    result["solution"] = sol ? point_to_json(*sol) : json(nullptr);
    if (sol) {
      json ach = json::array();
      for (int i = 0; i < inst.n(); ++i) {
        LaurentSeries v =
            laurent_dot(inst.rows[static_cast<std::size_t>(i)], *sol);
        Valuation val = v.valuation();
        ach.push_back(json{{"target", inst.targets[static_cast<std::size_t>(i)]},
                           {"exact", val.exact},
                           {"valuation", val.value}});
      }
      result["achieved"] = ach;
    }
    print_json(out, envelope("solve-gamma", gfield.p(), std::move(result)));
    return sol ? 0 : 4;
  }

  if (transfer_cmd->parsed()) {
    json in = json::parse(read_input_arg(transfer_input));
    const json& payload = in.contains("result") ? in.at("result") : in;
    FieldConfig tfield(in.value("p", p));
    std::vector<std::vector<LaurentSeries>> theta;
    int C_exp = payload.at("C_exp").get<int>();
    int X_exp = payload.at("X_exp").get<int>();
    for (const auto& row : payload.at("theta")) {
      std::vector<LaurentSeries> r;
      for (const auto& cell : row)
        r.push_back(parse_element_spec(tfield, cell.get<std::string>(), prec)
                        .as_series(std::max(prec, C_exp + X_exp + 12)));
      theta.push_back(std::move(r));
    }
    IntegralPoint x;
    for (const auto& c : payload.at("x"))
      x.coords.push_back(parse_poly(tfield, c.get<std::string>()));
    TransferCertificate cert = transfer(theta, x, C_exp, X_exp);
    json result;
    result["y"] = point_to_json(cert.y);
    result["D_exp"] = cert.D_exp;
    result["Y_exp"] = cert.Y_exp;
    result["D_rational"] = exp_rational_to_json(cert.D_rational);
    result["Y_rational"] = exp_rational_to_json(cert.Y_rational);
    json norms = json::array();
    for (const auto& nv : cert.achieved_norms)
      norms.push_back(qexponent_to_json(nv));
    result["achieved_norms"] = norms;
    result["achieved_degrees"] = cert.achieved_degrees;
    print_json(out, envelope("transfer", tfield.p(), std::move(result)));
    return 0;
  }

  if (form_cmd->parsed()) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= form_spec.size()) {
      auto semi = form_spec.find(';', start);
      if (semi == std::string::npos) {
        parts.push_back(form_spec.substr(start));
        break;
      }
      parts.push_back(form_spec.substr(start, semi - start));
      start = semi + 1;
    }
    if (parts.size() != 3)
      throw ParseError("expected '<a>;<b>;<c>'", form_spec.size());
    BinaryQuadraticForm f(parse_poly(field, parts[0]),
                          parse_poly(field, parts[1]),
                          parse_poly(field, parts[2]));
    json result;
    result["disc"] = f.disc().to_string();
    if (form_op == "sigma") {
      result["sigma"] = qexponent_to_json(sigma(f));
    } else if (form_op == "tau") {
      result["tau"] = qexponent_to_json(tau_theta(f));
    } else if (form_op == "automorph") {
      Automorph a = automorph(f);
      result["matrix"] = json::array({a.m00.to_string(), a.m01.to_string(),
                                      a.m10.to_string(), a.m11.to_string()});
      result["eta_exp"] = a.eta_exp;
    } else if (form_op == "D") {
      result["D"] = largest_quotient_degree(f);
    } else {
      throw ParseError("unknown form op '" + form_op + "'", 0);
    }
    print_json(out, envelope("form", p, std::move(result)));
    return 0;
  }

  if (verify_cmd->parsed()) {
    VerifySuiteResult res;
    if (suite == "dirichlet") suite_dirichlet(field, verify_deg, res);
    else if (suite == "lower") suite_lower(field, verify_deg, res);
    else if (suite == "quadform") suite_quadform(field, verify_deg, res);
    else if (suite == "mahler") suite_mahler(field, verify_deg, res);
    else if (suite == "transfer") suite_transfer(field, verify_deg, res);
    else throw ParseError("unknown suite '" + suite + "'", 0);
    json result;
    result["suite"] = suite;
    result["assertions"] = res.assertions;
    result["pass"] = res.pass;
    print_json(out, envelope("verify", p, std::move(result)));
    return res.pass ? 0 : 5;
  }

  if (estb_cmd->parsed()) {
    ExpRational lambda = parse_lambda(estb_lambda);
    std::vector<OracleTheta> thetas;
    for (const auto& t : estb_thetas) {
      ElementSpec spec = parse_element_spec(field, t, prec);
      int need = std::max({prec, estb_deg + 8, spec.declared_prec});
      if (spec.is_rational())
        thetas.push_back(
            OracleTheta::from_rational(std::get<RationalFn>(spec.value), need));
      else
        thetas.push_back(OracleTheta::from_series(spec.as_series(need)));
    }
    BEstimate est = estimate_B(thetas, lambda, estb_deg);
    json result;
    result["exact_zero"] = est.exact_zero;
    result["precision_limited"] = est.precision_limited;
    json windows = json::array();
    for (const auto& [d, e] : est.windows)
      windows.push_back(json{{"deg", d}, {"exp", exp_rational_to_json(e)}});
    result["windows"] = windows;
    result["estimate"] =
        est.exact_zero
            ? json{{"kind", "zero"}}
            : json{{"kind", "finite"},
                   {"exp", exp_rational_to_json(est.estimate_exp)}};
    print_json(out, envelope("estimate-b", p, std::move(result)));
    return 0;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    err << "internal verification failure: " << e.what() << "\n";
    return 5;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ffda
