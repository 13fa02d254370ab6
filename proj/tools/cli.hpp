#pragma once

// Command-line front end: argument parsing and the subcommand handlers.

#include <CLI11.hpp>
#include <gmpxx.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qvbs/qvbs.hpp"
#include "serialize.hpp"
#include "suites.hpp"

namespace qvbs::cli {

/// q as an exact rational plus its double value.
struct QValue {
  mpq_class exact;
  double value = 0;
  std::string text;
};

/// Accepts "a/b", an integer, or a decimal such as "0.8" (read exactly as 4/5).
inline QValue parse_q(const std::string& s) {
  QValue q;
  q.text = s;
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      q.exact = mpq_class(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    } else {
      const auto dot = s.find('.');
      if (s.find_first_of("eE") != std::string::npos) throw std::invalid_argument("exponent");
      if (dot == std::string::npos) {
        q.exact = mpq_class(mpz_class(s, 10));
      } else {
        const std::string frac = s.substr(dot + 1);
        std::string digits = s.substr(0, dot) + frac;
        if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("empty");
        if (digits[0] == '+') digits.erase(0, 1);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        q.exact = mpq_class(mpz_class(digits, 10), den);
      }
    }
    q.exact.canonicalize();
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse q = '" + s + "' (use a/b, an integer, or a decimal)");
  }
  if (sgn(q.exact) <= 0) throw DomainError("q must be positive");
  q.value = q.exact.get_d();
  return q;
}

/// c * sqrt(r) at a rational point, with perfect squares folded into c.
inline std::string exact_surd_value(const Surd& s, const mpq_class& q0) {
  mpq_class c = s.coeff().eval(q0);
  if (c == 0 || s.radicand().is_one()) return c.get_str();
  mpq_class r = s.radicand().product().eval(q0);
  mpz_class root;
  if (mpz_perfect_square_p(r.get_den_mpz_t()) != 0) {
    mpz_sqrt(root.get_mpz_t(), r.get_den_mpz_t());
    c /= root;
    r = r.get_num();
  }
  if (mpz_perfect_square_p(r.get_num_mpz_t()) != 0) {
    mpz_sqrt(root.get_mpz_t(), r.get_num_mpz_t());
    c *= root;
    r /= r.get_num();
  }
  c.canonicalize();
  r.canonicalize();
  if (r == 1) return c.get_str();
  return c.get_str() + "*sqrt(" + r.get_str() + ")";
}

inline Boundary parse_boundary(const std::string& s) {
  if (s == "pbc") return Boundary::Periodic;
  if (s == "open") return Boundary::Open;
  throw DomainError("--bc must be pbc or open");
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Options {
  int spin = 2;
  int length = 0;
  std::string bc = "pbc";
  int p1 = 1;
  int p2 = 1;
  std::string q = "1";
  bool exact = false;
  std::string source = "boson";
  bool check_conjecture = false;
  std::string op = "sz";
  std::string mode = "thermo";
  int r_min = 2;
  int r_max = 8;
  std::string suite;
  std::uint64_t seed = 20240601;
  std::string output;
};

// ---------------------------------------------------------------------------

inline void cmd_state(const Options& o, const CLI::App& sub, std::ostream& out) {
  if (sub.count("--length") == 0) throw DomainError("state: --length is required");
  const Boundary bc = parse_boundary(o.bc);
  const QValue q = parse_q(o.q);
  StateVector<Surd> psi(o.spin, std::max(o.length, 1));
  std::string tag;
  if (o.source == "boson") {
    psi = bc == Boundary::Periodic ? build_pbc(o.spin, o.length) : build_open(o.spin, o.length, o.p1, o.p2);
    tag = bc == Boundary::Periodic ? "vbs.boson_pbc" : "vbs.boson_open";
  } else if (o.source == "mps") {
    psi = bc == Boundary::Periodic ? contract_pbc(tensor_g(o.spin), o.length) : contract_open(o.spin, o.length, o.p1, o.p2);
    tag = bc == Boundary::Periodic ? "mps.trace_g" : "mps.open_gstart";
  } else {
    throw DomainError("--source must be boson or mps");
  }
  out << "config,value,source\n";
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (psi[i].is_zero()) continue;
    const std::string v = o.exact ? exact_surd_value(psi[i], q.exact) : format_double(psi[i].value(q.value));
    out << psi.m_string(i) << ',' << csv_field(v) << ',' << tag << '\n';
  }
}

inline void cmd_eigenvalues(const Options& o, std::ostream& out) {
  const QValue q = parse_q(o.q);
  json j;
  j["spin"] = o.spin;
  j["q"] = q.exact.get_str();
  j["source"] = "transfer.spectrum";
  const auto es = eigensystem(transfer_matrix(o.spin, q.value).matrix, kDegeneracyTolerance, false);
  json ev = json::array();
  json deg = json::array();
  for (const auto& g : es.groups) {
    ev.push_back(g.value);
    deg.push_back(g.multiplicity);
  }
  j["eigenvalues"] = ev;
  j["degeneracies"] = deg;
  if (o.exact) {
    const ExactConjectureCheck ec = check_conjecture_exact(o.spin);
    json levels = json::array();
    for (const auto& lev : ec.levels) {
      levels.push_back(json{{"l", lev.l},
                            {"eigenvalue", to_json(lev.eigenvalue)},
                            {"value", lev.eigenvalue.eval(q.exact).get_str()},
                            {"multiplicity", lev.nullity},
                            {"source", "transfer.eigenvalue_conjecture"}});
    }
    j["exact"] = levels;
    j["exact_kernels_match"] = ec.match;
  }
  if (o.check_conjecture) {
    const auto cc = check_conjecture<long double>(o.spin, static_cast<long double>(q.value));
    j["conjecture_match"] = cc.match;
    j["conjecture_max_rel_error"] = static_cast<double>(cc.max_rel_error);
    json exp = json::array();
    for (const auto& lev : cc.levels) {
      exp.push_back(json{{"l", lev.l},
                         {"expected", static_cast<double>(lev.expected)},
                         {"multiplicity", lev.multiplicity},
                         {"expected_multiplicity", lev.expected_multiplicity}});
    }
    j["conjecture_levels"] = exp;
  }
  out << j.dump(2) << '\n';
}

inline void cmd_correlator(const Options& o, const CLI::App& sub, std::ostream& out) {
  if (o.op != "sz") throw DomainError("--op: only sz is supported");
  if (o.mode != "thermo" && o.mode != "finite") throw DomainError("--mode must be thermo or finite");
  if (o.r_min < 2 || o.r_max < o.r_min) throw DomainError("need 2 <= r-min <= r-max");
  const bool finite = o.mode == "finite";
  if (finite && sub.count("--length") == 0) throw DomainError("correlator: --mode finite needs --length");
  if (finite && o.r_max > o.length) throw DomainError("correlator: r-max must not exceed the length");
  const QValue q = parse_q(o.q);
  const auto sz = sz_operator<double>(o.spin);
  const bool has_closed = o.spin == 2 || o.spin == 3;
  std::optional<ThermoCorrelator<double>> thermo;
  if (!finite) thermo.emplace(o.spin, q.value);
  out << "r,value,closed_form_value,abs_diff,source\n";
  for (int r = o.r_min; r <= o.r_max; ++r) {
    const double v = finite ? two_point_finite(o.spin, q.value, o.length, r, sz, sz) : thermo->two_point(r, sz, sz);
    out << r << ',' << format_double(v) << ',';
    std::string tag = finite ? "transfer.two_point_finite" : "transfer.two_point_thermo";
    if (has_closed) {
      const double c = closed_form_szsz(o.spin, q.value, r);
      out << format_double(c) << ',' << format_double(std::abs(v - c));
      tag += o.spin == 2 ? "|closed_form.szsz_s2" : "|closed_form.szsz_s3";
    } else {
      out << ',';
    }
    out << ',' << tag << '\n';
  }
}

inline void cmd_prob(const Options& o, std::ostream& out) {
  const QValue q = parse_q(o.q);
  out << "m,probability,source\n";
  if (o.exact) {
    const auto p = sz_distribution_exact(o.spin);
    for (int m = -o.spin; m <= o.spin; ++m) {
      out << m << ',' << p[static_cast<std::size_t>(m + o.spin)].eval(q.exact).get_str() << ",transfer.sz_distribution_exact\n";
    }
    return;
  }
  const auto p = sz_distribution(o.spin, q.value);
  for (int m = -o.spin; m <= o.spin; ++m) {
    out << m << ',' << format_double(p[static_cast<std::size_t>(m + o.spin)]) << ",transfer.one_point_thermo\n";
  }
}

inline int cmd_verify(const Options& o, const CLI::App& sub, std::ostream& out) {
  SuiteOptions so;
  if (sub.count("--spin") > 0) so.spin = o.spin;
  if (sub.count("--length") > 0) so.length = o.length;
  so.seed = o.seed;
  const Suite s = run_suite(o.suite, so);
  out << s.to_json().dump(2) << '\n';
  return s.pass() ? 0 : 1;
}

inline int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  const json report = reproduce_paper(o.seed, [&err](const Criterion& c, bool pass, double secs) {
    err << "criterion " << c.number << " (" << c.title << "): " << (pass ? "PASS" : "FAIL") << " in " << secs << " s\n";
  });
  out << report.dump(2) << '\n';
  return report["pass"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed valence-bond-solid chains: states, spectra, correlators, and verification suites"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto add_spin = [&o](CLI::App* s) { s->add_option("--spin", o.spin, "integer spin S >= 1")->check(CLI::PositiveNumber); };
  auto add_q = [&o](CLI::App* s) { s->add_option("--q", o.q, "deformation parameter: a/b, integer, or decimal"); };
  auto add_output = [&o](CLI::App* s) { s->add_option("--output", o.output, "write to this file instead of stdout"); };

  CLI::App* state = app.add_subcommand("state", "amplitudes of the ground state as CSV");
  add_spin(state);
  state->add_option("--length", o.length, "number of sites L")->check(CLI::PositiveNumber);
  state->add_option("--bc", o.bc, "pbc or open");
  state->add_option("--p1", o.p1, "left boundary index (open chains)");
  state->add_option("--p2", o.p2, "right boundary index (open chains)");
  add_q(state);
  state->add_flag("--exact", o.exact, "exact values at rational q");
  state->add_option("--source", o.source, "boson or mps");
  add_output(state);

  CLI::App* eig = app.add_subcommand("eigenvalues", "spectrum of the transfer matrix as JSON");
  add_spin(eig);
  add_q(eig);
  eig->add_flag("--exact", o.exact, "exact eigenvalues with kernel dimensions");
  eig->add_flag("--check-conjecture", o.check_conjecture, "compare with the conjectured eigenvalue formula");
  add_output(eig);

  CLI::App* corr = app.add_subcommand("correlator", "two-point S^z correlator as CSV");
  add_spin(corr);
  add_q(corr);
  corr->add_option("--op", o.op, "operator (sz)");
  corr->add_option("--mode", o.mode, "thermo or finite");
  corr->add_option("--length", o.length, "chain length for finite mode")->check(CLI::PositiveNumber);
  corr->add_option("--r-min", o.r_min, "smallest distance (>= 2)");
  corr->add_option("--r-max", o.r_max, "largest distance");
  add_output(corr);

  CLI::App* prob = app.add_subcommand("prob", "distribution of S^z on one site as CSV");
  add_spin(prob);
  add_q(prob);
  prob->add_flag("--exact", o.exact, "exact rational values at rational q");
  add_output(prob);

  CLI::App* verify = app.add_subcommand("verify", "run one verification suite, JSON report");
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_spin(verify);
  verify->add_option("--length", o.length, "chain length")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "seed for the random negative control");
  add_output(verify);

  CLI::App* repro = app.add_subcommand("reproduce-paper", "run every acceptance check, one JSON report");
  repro->add_option("--seed", o.seed, "seed for the random negative control");
  add_output(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (state->parsed()) {
      cmd_state(o, *state, buf);
    } else if (eig->parsed()) {
      cmd_eigenvalues(o, buf);
    } else if (corr->parsed()) {
      cmd_correlator(o, *corr, buf);
    } else if (prob->parsed()) {
      cmd_prob(o, buf);
    } else if (verify->parsed()) {
      code = cmd_verify(o, *verify, buf);
    } else if (repro->parsed()) {
      code = cmd_reproduce(o, buf, err);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << o.output << '\n';
      return 2;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace qvbs::cli
