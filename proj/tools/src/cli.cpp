#include "pelltrib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "pelltrib/report_json.hpp"

namespace pelltrib::cli {

namespace {

using Json = nlohmann::json;
namespace rj = pelltrib::json;

struct Global {
  long precision_bits = 192;
  long max_bits = 8192;
  std::string output = "text";
  unsigned jobs = 1;
  unsigned long long factoring_effort = 200000;
  std::size_t convergent_budget = 16;

  bool as_json() const { return output == "json"; }

  PrecisionPolicy policy() const {
    PrecisionPolicy p;
    p.initial_bits = precision_bits;
    p.max_bits = max_bits;
    p.validate();
    return p;
  }

  SearchConfig search() const {
    SearchConfig c;
    c.policy = policy();
    c.jobs = jobs;
    c.convergent_budget = convergent_budget;
    c.factor = factoring_effort > 0;
    c.factoring.rho_iterations = factoring_effort;
    return c;
  }
};

// Thrown for arguments CLI11 accepts syntactically but that make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string env_name(const std::string& flag) {
  std::string s = kEnvPrefix;
  for (char c : flag) s.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return s;
}

mpz_class parse_integer(const std::string& text) {
  mpq_class q;
  try {
    q = parse_decimal(text);
  } catch (const DomainError&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (q.get_den() != 1) throw UsageError("not an integer: '" + text + "'");
  return q.get_num();
}

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1" || text == "+") return 1;
  if (text == "-1" || text == "-") return -1;
  throw UsageError("epsilon must be +1 or -1, got '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

CertifiedReal decimal_or_usage(const std::string& text) {
  try {
    return CertifiedReal::from_decimal(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

CertifiedReal log_delta_over_log_alpha(const CertifiedReal& delta) {
  return log(delta) / default_binet_constants().log_alpha;
}

// chi | logdelta:d | trivial:eps:m1 | x1:X1:eps | custom:<decimal> | <decimal>
CertifiedReal parse_target(const std::string& target) {
  const auto parts = split(target, ':');
  if (target == "chi") return default_binet_constants().chi;
  if (parts.size() == 2 && parts[0] == "logdelta") {
    try {
      return log_delta_over_log_alpha(fundamental(parse_integer(parts[1])).delta);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (parts.size() == 3 && parts[0] == "trivial") {
    const int eps = parse_sign(parts[1]);
    const mpz_class m1 = parse_integer(parts[2]);
    if (m1 < 1 || m1 > 100000) throw UsageError("trivial: m1 out of range");
    return log_delta_over_log_alpha(delta_from_x1(trib(m1.get_ui()), eps));
  }
  if (parts.size() == 3 && parts[0] == "x1") {
    try {
      return log_delta_over_log_alpha(delta_from_x1(parse_integer(parts[1]), parse_sign(parts[2])));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (parts.size() == 2 && parts[0] == "custom") return decimal_or_usage(parts[1]);
  return decimal_or_usage(target);
}

std::string signed_eps(int eps) { return eps > 0 ? "+1" : "-1"; }

std::string pairs_text(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::string s;
  for (const auto& [n, m] : pairs) {
    s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(n) + "," + std::to_string(m) + ")";
  }
  return s.empty() ? "-" : s;
}

void print_steps(std::ostream& out, const std::vector<ChainStep>& steps) {
  for (const auto& s : steps) {
    out << (s.certified ? "  ok   " : "  FAIL ") << s.id << ": " << s.claim << "  [" << s.value << "]\n";
  }
}

void print_record(std::ostream& out, const SolutionRecord& r) {
  out << "  eps=" << signed_eps(r.epsilon) << " X1=" << r.X1
      << " d=" << (r.d ? r.d->get_str() : std::string("unresolved")) << ": " << pairs_text(r.pairs) << "\n";
}

// Each handler writes its result and returns the exit code.
using Handler = std::function<int(const Global&, std::ostream&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified Pell / Tribonacci computations", "pelltrib"};
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  app.add_option("--precision-bits", g.precision_bits, "initial working precision in bits")
      ->envname(env_name("precision-bits"))
      ->check(CLI::Range(64L, 1L << 24));
  app.add_option("--max-bits", g.max_bits, "precision cap for automatic refinement")
      ->envname(env_name("max-bits"))
      ->check(CLI::Range(64L, 1L << 24));
  app.add_option("--output", g.output, "text or json")
      ->envname(env_name("output"))
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")
      ->envname(env_name("jobs"))
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--factoring-effort", g.factoring_effort,
                 "Pollard rho iteration budget for d annotations, 0 disables factoring")
      ->envname(env_name("factoring-effort"));
  app.add_option("--convergent-budget", g.convergent_budget,
                 "convergents tried per Baker-Davenport reduction")
      ->envname(env_name("convergent-budget"))
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));

  Handler handler;

  // trib
  std::size_t trib_m = 0;
  auto* c_trib = app.add_subcommand("trib", "print T_m");
  c_trib->add_option("m", trib_m)->required()->check(CLI::Range(std::size_t{0}, std::size_t{1000000}));
  c_trib->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      const mpz_class t = trib(trib_m);
      if (gl.as_json()) {
        o << rj::dump(Json{{"m", trib_m}, {"T", t.get_str()}});
      } else {
        o << t << "\n";
      }
      return kOk;
    };
  });

  // constants
  int digits = 30;
  auto* c_const = app.add_subcommand("constants", "certified Binet constants");
  c_const->add_option("--digits", digits)->check(CLI::Range(1, 2000));
  c_const->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      PrecisionPolicy p = gl.policy();
      // digits need about 3.33 bits each plus slack
      const long need = static_cast<long>(digits) * 34 / 10 + 64;
      p.initial_bits = std::max<long>(p.initial_bits, need);
      p.max_bits = std::max(p.max_bits, p.initial_bits);
      const BinetConstants bc = binet_constants(p);
      if (gl.as_json()) {
        o << rj::dump(rj::convert(bc, digits));
        return kOk;
      }
      const std::vector<std::pair<const char*, const CertifiedReal*>> rows = {
          {"alpha", &bc.alpha}, {"|beta|", &bc.beta_abs}, {"a", &bc.a},
          {"|b|", &bc.b_abs},   {"omega1", &bc.omega1},   {"omega2", &bc.omega2},
          {"log alpha", &bc.log_alpha}, {"chi", &bc.chi}, {"c1", &bc.c1}};
      for (const auto& [name, x] : rows) {
        o << name << " = " << x->to_decimal(digits) << "  in " << x->enclosure().describe(digits) << "\n";
      }
      return kOk;
    };
  });

  // pell-fundamental
  std::string pell_d;
  auto* c_pf = app.add_subcommand("pell-fundamental", "fundamental solution of X^2 - dY^2 = +-1");
  c_pf->add_option("d", pell_d)->required();
  c_pf->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      const FundamentalSolution f = fundamental(parse_integer(pell_d));
      if (gl.as_json()) {
        o << rj::dump(rj::convert(f));
      } else {
        o << "X1 = " << f.x1 << ", Y1 = " << f.y1 << ", eps = " << signed_eps(f.epsilon) << "\n";
      }
      return kOk;
    };
  });

  // pell-x
  std::string px_d;
  std::size_t px_n = 1;
  auto* c_px = app.add_subcommand("pell-x", "X-coordinate X_n for d");
  c_px->add_option("d", px_d)->required();
  c_px->add_option("n", px_n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  c_px->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      const FundamentalSolution f = fundamental(parse_integer(px_d));
      const auto [x, y] = pell_solution(f, px_n);
      if (gl.as_json()) {
        o << rj::dump(Json{{"d", f.d.get_str()}, {"n", px_n}, {"X", x.get_str()},
                                   {"Y", y.get_str()},
                            {"norm", (f.epsilon < 0 && px_n % 2 == 1) ? -1 : 1}});
      } else {
        o << x << "\n";
      }
      return kOk;
    };
  });

  // sqfree
  std::string sq_n;
  auto* c_sq = app.add_subcommand("sqfree", "n = d * y^2 with d squarefree");
  c_sq->add_option("n", sq_n)->required();
  c_sq->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      FactoringEffort effort;
      effort.rho_iterations = gl.factoring_effort;
      const SqfreeDecomposition s = sqfree_decompose(parse_integer(sq_n), effort);
      if (gl.as_json()) {
        o << rj::dump(rj::convert(s));
      } else {
        o << s.n << " = " << s.d << " * " << s.y << "^2" << (s.complete ? "" : "  (incomplete)") << "\n";
      }
      return kOk;
    };
  });

  // cf
  std::string cf_target = "chi", cf_qmin = "1e16";
  std::size_t cf_terms = 0;
  auto* c_cf = app.add_subcommand("cf", "continued fraction of a certified real");
  c_cf->add_option("--target", cf_target, "chi | logdelta:d | trivial:eps:m1 | x1:X1:eps | custom:<decimal>");
  c_cf->add_option("--qmin", cf_qmin, "expand until a denominator exceeds this");
  c_cf->add_option("--terms", cf_terms, "expand exactly this many quotients instead");
  c_cf->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      const CertifiedReal t = parse_target(cf_target);
      const CFExpansion e = cf_terms > 0 ? expand_terms(t, cf_terms, gl.policy())
                                         : expand_until_q_exceeds(t, parse_integer(cf_qmin), gl.policy());
      if (gl.as_json()) {
        o << rj::dump(rj::convert(e));
        return kOk;
      }
      o << "target " << e.target.to_decimal(30) << "\n";
      for (std::size_t k = 0; k < e.size(); ++k) {
        o << k << " " << e.quotients[k] << " " << e.convergents[k].p << "/" << e.convergents[k].q << "\n";
      }
      return kOk;
    };
  });

  // matveev
  unsigned mv_l = 3, mv_dl = 6;
  std::string mv_D = "3";
  std::vector<std::string> mv_A;
  bool mv_preset = false;
  auto* c_mv = app.add_subcommand("matveev", "Matveev lower bound for a linear form in logarithms");
  c_mv->add_option("--l", mv_l)->check(CLI::Range(1u, 50u));
  c_mv->add_option("--dl", mv_dl)->check(CLI::Range(1u, 1000u));
  c_mv->add_option("--D", mv_D, "largest coefficient bound");
  c_mv->add_option("--A", mv_A, "A_i, one per logarithm");
  c_mv->add_flag("--preset", mv_preset, "the three-logarithm instance with delta, 2a, alpha");
  c_mv->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      MatveevInput in = mv_preset ? matveev_preset() : MatveevInput{};
      if (!mv_preset) {
        in.l = mv_l;
        in.d_L = mv_dl;
        for (const auto& a : mv_A) in.A.push_back(decimal_or_usage(a));
      }
      if (!mv_preset || c_mv->count("--D") > 0) in.D = parse_integer(mv_D);
      try {
        validate(in, gl.policy());
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      const CertifiedReal c = matveev_constant(in.l, in.d_L, in.A);
      const CertifiedReal b = matveev_bound(in, gl.policy());
      if (gl.as_json()) {
        o << rj::dump(Json{{"l", in.l}, {"d_L", in.d_L}, {"D", in.D.get_str()},
                                   {"constant", rj::real(c, 20)}, {"bound", rj::real(b, 20)}});
      } else {
        o << "constant = " << c.to_decimal(15) << "\nlog|Lambda| > " << b.to_decimal(15) << "\n";
      }
      return kOk;
    };
  });

  // lmn
  unsigned lmn_dl = 3;
  std::string lmn_b1, lmn_b2, lmn_bp;
  bool lmn_use_preset = false;
  auto* c_lmn = app.add_subcommand("lmn", "Laurent-Mignotte-Nesterenko bound for two logarithms");
  c_lmn->add_option("--dl", lmn_dl)->check(CLI::Range(1u, 1000u));
  c_lmn->add_option("--logB1", lmn_b1);
  c_lmn->add_option("--logB2", lmn_b2);
  c_lmn->add_option("--bprime", lmn_bp)->required();
  c_lmn->add_flag("--preset", lmn_use_preset, "the two-logarithm instance with 2a and alpha");
  c_lmn->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      const CertifiedReal bp = decimal_or_usage(lmn_bp);
      LMNInput in;
      if (lmn_use_preset) {
        in = lmn_preset(bp);
      } else {
        if (lmn_b1.empty() || lmn_b2.empty()) throw UsageError("lmn needs --logB1 and --logB2, or --preset");
        in.d_L = lmn_dl;
        in.logB1 = decimal_or_usage(lmn_b1);
        in.logB2 = decimal_or_usage(lmn_b2);
        in.b_prime = bp;
      }
      try {
        validate(in, gl.policy());
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      const CertifiedReal t = lmn_max_term(in, gl.policy());
      const CertifiedReal c = lmn_constant(in);
      const CertifiedReal b = lmn_bound(in, gl.policy());
      if (gl.as_json()) {
        o << rj::dump(Json{{"d_L", in.d_L}, {"max_term", rj::real(t, 20)},
                                   {"constant", rj::real(c, 20)}, {"bound", rj::real(b, 20)}});
      } else {
        o << "max term = " << t.to_decimal(15) << "\nconstant = " << c.to_decimal(15)
          << "\nlog|Lambda| > " << b.to_decimal(15) << "\n";
      }
      return kOk;
    };
  });

  // derive-bounds
  auto* c_db = app.add_subcommand("derive-bounds", "the full linear-forms bound chain");
  c_db->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      const DerivedBounds b = derive_lemma_jb0(gl.policy());
      if (gl.as_json()) {
        o << rj::dump(rj::convert(b));
      } else {
        print_steps(o, b.steps);
        o << "m1 < " << b.m1_final << ", n2 < " << b.n2_final << ", m2 < " << b.m2_final << "\n";
      }
      return b.all_certified() ? kOk : kDiscrepancy;
    };
  });

  // reduce
  std::string rd_kappa, rd_mu = "chi", rd_M = "1e16", rd_A = "14.8", rd_B = "2.4";
  auto* c_rd = app.add_subcommand("reduce", "Baker-Davenport reduction");
  c_rd->add_option("--kappa", rd_kappa, "logdelta:d | trivial:eps:m1 | x1:X1:eps | <decimal>")->required();
  c_rd->add_option("--mu", rd_mu, "chi or a decimal");
  c_rd->add_option("--M", rd_M);
  c_rd->add_option("--A", rd_A);
  c_rd->add_option("--B", rd_B);
  c_rd->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      ReductionInstance in;
      in.kappa = parse_target(rd_kappa);
      in.mu = parse_target(rd_mu);
      in.M = parse_integer(rd_M);
      in.A = decimal_or_usage(rd_A);
      in.B = decimal_or_usage(rd_B);
      ReductionOutcome r;
      try {
        r = reduce(in, gl.convergent_budget, gl.policy());
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      const ExclusionClaim claim = exclusion_statement(r, in);
      if (gl.as_json()) {
        o << rj::dump(Json{{"outcome", rj::convert(r)}, {"claim", rj::convert(claim)}});
      } else {
        o << "convergent " << r.index << ", Q = " << r.Q << "\nxi = " << r.xi.to_decimal(15)
          << "\nthreshold = " << r.threshold.to_decimal(15) << "\nk <= " << r.max_k << "\n"
          << claim.statement << "\n";
      }
      return kOk;
    };
  });

  // solve-small
  std::size_t m1_max = 100, n1_max = 69, m2_max = 100;
  auto* c_ss = app.add_subcommand("solve-small", "P^eps_n(X) = T_m for 2 <= n < m");
  c_ss->add_option("--m1-max", m1_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_ss->add_option("--n1-max", n1_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_ss->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      SearchConfig c = gl.search();
      c.m1_max = m1_max;
      c.n1_max = n1_max;
      const auto sols = solve_small(c);
      if (gl.as_json()) {
        Json a = Json::array();
        for (const auto& s : sols) a.push_back(rj::convert(s));
        o << rj::dump(a);
      } else {
        for (const auto& s : sols) {
          o << "eps=" << signed_eps(s.epsilon) << " n=" << s.n1 << " m=" << s.m1 << " X=" << s.X1 << "\n";
        }
      }
      return kOk;
    };
  });

  // trivial-sweep
  auto* c_ts = app.add_subcommand("trivial-sweep", "n1 = 1, X1 = T_m1 for both signs");
  c_ts->add_option("--m1-max", m1_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_ts->add_option("--m2-max", m2_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_ts->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      SearchConfig c = gl.search();
      c.m1_max = m1_max;
      c.m2_check_max = m2_max;
      const TrivialSweep s = trivial_case_sweep(c);
      if (gl.as_json()) {
        o << rj::dump(rj::convert(s));
      } else {
        for (const auto& i : s.instances) {
          if (i.status != "ok" || i.record.pairs.size() > 1) {
            o << "eps=" << signed_eps(i.epsilon) << " m1=" << i.m1 << " " << i.status << " pairs "
              << pairs_text(i.record.pairs) << (i.note.empty() ? "" : "  " + i.note) << "\n";
          }
        }
        o << s.completed() << "/" << s.instances.size() << " complete (" << s.count("ok")
          << " baker-davenport, " << s.count("ok-homogeneous") << " homogeneous, " << s.count("skipped")
          << " skipped), " << s.flagged() << " flagged\n";
      }
      return s.flagged() == 0 ? kOk : kDiscrepancy;
    };
  });

  // verify-theorem
  std::string vt_json;
  auto* c_vt = app.add_subcommand("verify-theorem", "run every step and compare with the exceptional set");
  c_vt->add_option("--json", vt_json, "also write the JSON report to this file");
  c_vt->add_option("--m1-max", m1_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_vt->add_option("--n1-max", n1_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_vt->add_option("--m2-max", m2_max)->check(CLI::Range(std::size_t{1}, std::size_t{5000}));
  c_vt->callback([&] {
    handler = [&](const Global& gl, std::ostream& o) {
      SearchConfig c = gl.search();
      c.m1_max = m1_max;
      c.n1_max = n1_max;
      c.m2_check_max = m2_max;
      const TheoremReport r = verify_theorem(c);
      const Json j = rj::convert(r);
      if (!vt_json.empty()) {
        std::ofstream f(vt_json);
        if (!f) throw UsageError("cannot write " + vt_json);
        f << rj::dump(j);
      }
      if (gl.as_json()) {
        o << rj::dump(j);
      } else {
        o << "bound chain " << (r.bounds.all_certified() ? "certified" : "NOT certified") << "\n";
        o << "m1 <= " << r.cutoff.cutoff << " (" << r.cutoff.m1_bound.to_decimal(8) << "), n1 <= " << r.n1_bound
          << "\n";
        o << "small solutions:\n";
        for (const auto& s : r.small) {
          o << "  eps=" << signed_eps(s.epsilon) << " n=" << s.n1 << " m=" << s.m1 << " X=" << s.X1 << "\n";
        }
        for (const auto& nc : r.nontrivial) {
          o << "  X=" << nc.solution.X1 << ": m2 <= " << nc.reduction.max_k << " (Q = " << nc.reduction.Q
            << ")\n";
        }
        o << "trivial sweep: " << r.sweep.completed() << "/" << r.sweep.instances.size() << " complete, "
          << r.sweep.flagged() << " flagged\n";
        o << "records with two or more pairs:\n";
        for (const auto& rec : r.records) print_record(o, rec);
        o << "matches theorem: " << (r.matches_theorem ? "yes" : "no") << "\n";
      }
      return r.matches_theorem ? kOk : kDiscrepancy;
    };
  });

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) {
      return s->get_name() == args.front();
    });
    if (!known) {
      err << "unknown command '" << args.front() << "'\n" << app.help();
      return kUsage;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (args.empty()) err << app.help();
    return kUsage;
  }
  if (!handler) {
    err << app.help();
    return kUsage;
  }

  auto report = [&](const std::string& kind, const std::string& message, Json extra) {
    if (g.as_json()) {
      extra["error"] = kind;
      extra["message"] = message;
      out << rj::dump(extra);
    } else {
      err << kind << ": " << message << "\n";
    }
  };
  try {
    return handler(g, out);
  } catch (const UsageError& e) {
    report("usage", e.what(), Json::object());
    return kUsage;
  } catch (const DomainError& e) {
    report("usage", e.what(), Json::object());
    return kUsage;
  } catch (const ReductionFailed& e) {
    Json tried = Json::array();
    for (const auto& t : e.tried()) {
      tried.push_back(Json{{"index", t.index}, {"Q", t.Q.get_str()}, {"xi", t.xi}, {"sign", t.sign}});
    }
    report("reduction-failed", e.what(), Json{{"tried", tried}});
    return kDiscrepancy;
  } catch (const Discrepancy& e) {
    report("discrepancy", e.what(), Json::object());
    return kDiscrepancy;
  } catch (const InsufficientPrecision& e) {
    report("insufficient-precision", e.what(), Json::object());
    return kDiscrepancy;
  }
}

}  // namespace pelltrib::cli
