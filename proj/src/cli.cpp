#include "telsum/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "telsum/classify.hpp"
#include "telsum/parse.hpp"
#include "telsum/specials.hpp"
#include "telsum/telescope.hpp"

namespace telsum {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Context {
  ProblemFile problem;
  ShiftSystem sys = ShiftSystem::companion({XRat(1)});
  bool machine = false;
  bool factored = false;
};

// Splitting factorization of the summand's denominator, honoring
// --factored-input when the problem file carries a pre-factored list.
SplitFactorization denominator_factors(const Context& ctx) {
  const TPoly& den = ctx.problem.summand.den();
  if (ctx.factored && ctx.problem.has_denfactors) {
    size_t n = ctx.sys.n();
    TPoly prod = TPoly::constant(n, XRat(1));
    for (const auto& [p, k] : ctx.problem.denfactors) prod = prod * p.pow(k);
    XRat u;
    if (!tpoly_proportional(prod, den, &u))
      throw std::runtime_error("denfactors do not multiply to the summand's denominator");
    return split_factorization(ctx.sys, u, ctx.problem.denfactors);
  }
  return split_factorization(ctx.sys, den);
}

std::string class_str(const FactorClass& c) {
  return c.special ? "special" : "normal";
}

int cmd_classify(const Context& ctx, std::ostream& out) {
  SplitFactorization sf = denominator_factors(ctx);
  if (ctx.machine) out << "unit=" << sf.unit.str() << "\n";
  for (const auto& e : sf.factors) {
    if (ctx.machine) {
      out << "factor=" << e.factor.str() << " mult=" << e.mult
          << " class=" << class_str(e.cls);
      if (e.cls.special) out << " ell=" << e.cls.ell << " unit=" << e.cls.unit.str();
      out << "\n";
    } else {
      out << "(" << e.factor.str() << ")^" << e.mult << "  " << class_str(e.cls);
      if (e.cls.special) out << "  ell=" << e.cls.ell << "  unit=" << e.cls.unit.str();
      out << "\n";
    }
  }
  return 0;
}

int cmd_equiv(const Context& ctx, const std::string& ptext, const std::string& qtext,
              std::ostream& out) {
  size_t n = ctx.sys.n();
  TRat pr = parse_expression(ptext, n);
  TRat qr = parse_expression(qtext, n);
  if (!pr.is_polynomial() || !qr.is_polynomial())
    throw std::runtime_error("equiv expects two polynomials");
  EquivalenceResult r =
      sigma_equivalent(ctx.sys, pr.num(), qr.num(), ctx.problem.config.max_shift_scan);
  if (ctx.machine) {
    out << "equivalent=" << (r.equivalent ? "true" : "false");
    if (r.equivalent) out << " i=" << r.i << " unit=" << r.u.str();
    out << "\n";
  } else if (r.equivalent) {
    out << "i=" << r.i << "  unit=" << r.u.str() << "\n";
  } else {
    out << "not equivalent\n";
  }
  return 0;
}

int cmd_disp(const Context& ctx, std::ostream& out) {
  SplitFactorization sf = denominator_factors(ctx);
  std::optional<long> d = dispersion(ctx.sys, sf, ctx.problem.config.max_shift_scan);
  std::string v = d ? std::to_string(*d) : "-inf";
  out << (ctx.machine ? "dispersion=" : "dispersion: ") << v << "\n";
  return 0;
}

int cmd_bound(const Context& ctx, std::ostream& out) {
  SplitFactorization sf = denominator_factors(ctx);
  std::optional<long> disp = dispersion(ctx.sys, sf, ctx.problem.config.max_shift_scan);
  long d = disp ? *disp - 1 : -1;
  TPoly b = normal_denominator_bound(ctx.sys, sf.normal_part(ctx.sys.n()), d);
  out << (ctx.machine ? "bound=" : "bound: ") << b.str() << "\n";
  return 0;
}

int cmd_specials(const Context& ctx, std::ostream& out) {
  std::vector<LinearSpecial> specials;
  try {
    specials = find_linear_specials(ctx.sys, static_cast<int>(ctx.sys.n()));
  } catch (const CyclicVectorFailure& e) {
    out << (ctx.machine ? "specials=unknown reason=" : "discovery failed: ") << e.what()
        << "\n";
    return 0;
  }
  if (specials.empty()) {
    out << (ctx.machine ? "specials=none" : "none found") << "\n";
    return 0;
  }
  for (const auto& s : specials) {
    if (ctx.machine)
      out << "form=" << s.form.str() << " ell=" << s.ell << " unit=" << s.unit.str() << "\n";
    else
      out << s.form.str() << "  ell=" << s.ell << "  unit=" << s.unit.str() << "\n";
  }
  return 0;
}

int cmd_sum(const Context& ctx, std::ostream& out) {
  TelescopeResult res =
      parallel_sum(ctx.sys, ctx.problem.summand, denominator_factors(ctx), ctx.problem.config);
  switch (res.status) {
    case TelescopeResult::Status::Found:
      if (ctx.machine)
        out << "status=found\ng=" << res.g.str() << "\n";
      else
        out << "g = " << res.g.str() << "\n";
      return 0;
    case TelescopeResult::Status::NotSummable:
      if (ctx.machine)
        out << "status=not_summable reason=" << res.detail << "\n";
      else
        out << "not summable (dispersion 0)\n";
      return 0;
    case TelescopeResult::Status::Inconclusive:
    default:
      if (ctx.machine)
        out << "status=inconclusive reason=" << res.detail << "\n";
      else
        out << "inconclusive: " << res.detail << "\n";
      return 1;
  }
}

int cmd_verify(const Context& ctx, const std::string& gtext, std::ostream& out) {
  TRat g = parse_expression(gtext, ctx.sys.n());
  bool ok = verify(ctx.sys, g, ctx.problem.summand);
  if (ctx.machine)
    out << "verified=" << (ok ? "true" : "false") << "\n";
  else
    out << (ok ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"telsum: indefinite summation over difference fields generated by "
               "P-recursive sequences"};
  app.require_subcommand(1);

  std::string problem_path;
  bool machine = false, factored = false, no_discover = false;
  std::optional<int> max_t, max_x, slack, scan;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", problem_path, "problem file")->required();
    sub->add_flag("--machine", machine, "machine-readable key=value output");
    sub->add_flag("--factored-input", factored, "use the problem file's denfactors");
    sub->add_option("--max-t-degree", max_t, "numerator ansatz t-degree cap");
    sub->add_option("--max-x-degree", max_x, "numerator ansatz x-degree cap");
    sub->add_option("--special-slack", slack, "extra multiplicity for special factors");
    sub->add_option("--max-shift-scan", scan, "shift scan bound");
    sub->add_flag("--no-discover-specials", no_discover, "skip linear-special discovery");
  };

  std::string expr_p, expr_q, expr_g;
  CLI::App* c_classify = app.add_subcommand("classify", "splitting factorization of den(f)");
  CLI::App* c_equiv = app.add_subcommand("equiv", "sigma-equivalence of two polynomials");
  CLI::App* c_disp = app.add_subcommand("disp", "dispersion of den(f)'s normal part");
  CLI::App* c_bound = app.add_subcommand("bound", "denominator bound polynomial");
  CLI::App* c_specials = app.add_subcommand("specials", "discover linear special polynomials");
  CLI::App* c_sum = app.add_subcommand("sum", "solve f = sigma(g) - g");
  CLI::App* c_verify = app.add_subcommand("verify", "check sigma(g) - g = f");
  for (CLI::App* sub : {c_classify, c_equiv, c_disp, c_bound, c_specials, c_sum, c_verify})
    add_common(sub);
  c_equiv->add_option("p", expr_p, "first polynomial")->required();
  c_equiv->add_option("q", expr_q, "second polynomial")->required();
  c_verify->add_option("g", expr_g, "candidate solution")->required();

  std::vector<const char*> argv;
  argv.push_back("telsum");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Context ctx;
    ctx.problem = parse_problem(read_file(problem_path));
    ctx.sys = ctx.problem.field.system();
    ctx.machine = machine;
    ctx.factored = factored;
    if (max_t) ctx.problem.config.max_t_degree = *max_t;
    if (max_x) ctx.problem.config.max_x_degree = *max_x;
    if (slack) ctx.problem.config.special_slack = *slack;
    if (scan) ctx.problem.config.max_shift_scan = *scan;
    if (no_discover) ctx.problem.config.discover_specials = false;

    if (c_classify->parsed()) return cmd_classify(ctx, out);
    if (c_equiv->parsed()) return cmd_equiv(ctx, expr_p, expr_q, out);
    if (c_disp->parsed()) return cmd_disp(ctx, out);
    if (c_bound->parsed()) return cmd_bound(ctx, out);
    if (c_specials->parsed()) return cmd_specials(ctx, out);
    if (c_sum->parsed()) return cmd_sum(ctx, out);
    if (c_verify->parsed()) return cmd_verify(ctx, expr_g, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace telsum
