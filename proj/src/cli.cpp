#include "forklab/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "forklab/adversary.hpp"
#include "forklab/analytic.hpp"
#include "forklab/consistency.hpp"
#include "forklab/deltasync.hpp"
#include "forklab/margin.hpp"
#include "forklab/montecarlo.hpp"
#include "forklab/settlement_dp.hpp"

namespace forklab {

namespace {

template <class Real>
std::string fmt(const Real& p, int digits) {
  return format_scientific(p, digits);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

Fork load_fork(const std::string& path, std::istream& in) {
  if (path == "-") return read_fork(in);
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open fork file " + path);
  return read_fork(file);
}

// Parsed flag values shared across subcommands; each subcommand binds the
// ones it documents.
struct Flags {
  std::string w, fork_path = "-", prefix, kind, mode, rule = "defined";
  int s = 0, k = 0, split = 0, delta = 0, digits = 3, any_horizon = -1, prefix_aware = -1;
  int warmup = -1, tail = -1;
  long trunc = -1;
  std::size_t T = 100000;
  double alpha = 0, ph = 0, eps = 0, f = 0, pa = 0;
  std::optional<double> qh;
  std::uint64_t samples = 100000, seed = 1;
  std::string emit_path;
  bool oracle = false, both = false, show_pi = false, check = false, check_condition = false;
  std::vector<double> alphas, ratios;
  std::vector<int> ks;
};

CharString parse_w(const std::string& text) { return CharString::parse(text); }

WindowRule parse_rule(const std::string& r) {
  if (r == "defined") return WindowRule::SilentOrAdversarial;
  if (r == "silent") return WindowRule::SilentOnly;
  throw DomainError("unknown window rule " + r);
}

void print_estimate(std::ostream& out, const Estimate& e, std::optional<long double> comparison, int digits) {
  out << "estimate\tstderr\thorizon_error\thits\tsamples\tcomparison\n";
  out << (e.sufficient() ? fmt(e.value, digits) : std::string("insufficient samples")) << '\t'
      << fmt(e.std_error, digits) << '\t' << fmt(e.horizon_error, digits) << '\t' << e.hits << '\t' << e.samples
      << '\t' << (comparison ? fmt(*comparison, digits) : std::string("-")) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"forklab: forks, margins and settlement probabilities for longest-chain protocols", "forklab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "forklab 0.1.0");
  Flags F;

  auto add_w = [&](CLI::App* c) { c->add_option("--w", F.w, "characteristic string over h, H, A, _")->required(); };
  auto add_digits = [&](CLI::App* c) {
    c->add_option("--digits", F.digits, "significant digits for probabilities")->check(CLI::Range(1, 30));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a fork file against the fork axioms");
  validate_cmd->add_option("--fork", F.fork_path, "fork file, '-' for stdin");
  validate_cmd->add_option("--delta", F.delta, "delay bound for delta-forks")->check(CLI::NonNegativeNumber);

  auto* catalan_cmd = app.add_subcommand("catalan", "TSV of left-, right- and Catalan flags per slot");
  add_w(catalan_cmd);

  auto* uvp_cmd = app.add_subcommand("uvp", "does slot s have the unique vertex property");
  add_w(uvp_cmd);
  uvp_cmd->add_option("--slot", F.s, "slot")->required();
  uvp_cmd->add_flag("--oracle", F.oracle, "decide by fork enumeration");
  uvp_cmd->add_flag("--both", F.both, "print the fast and oracle answers side by side");

  auto* settled_cmd = app.add_subcommand("settled", "is slot s k-settled in w");
  add_w(settled_cmd);
  settled_cmd->add_option("--slot", F.s, "slot")->required();
  settled_cmd->add_option("--k", F.k, "settlement depth")->required();
  settled_cmd->add_flag("--oracle", F.oracle, "decide by fork enumeration");
  settled_cmd->add_flag("--both", F.both, "print the fast and oracle answers side by side");

  auto* cp_cmd = app.add_subcommand("cp", "k-slot common prefix: enumeration oracle and UVP cover");
  add_w(cp_cmd);
  cp_cmd->add_option("--k", F.k, "window")->required();
  cp_cmd->add_flag("--oracle", F.oracle, "accepted for symmetry; the violation column always enumerates");

  auto* margin_cmd = app.add_subcommand("margin", "reach of w and relative margin of the split");
  add_w(margin_cmd);
  margin_cmd->add_option("--split", F.split, "length of the prefix x")->required();
  margin_cmd->add_flag("--oracle", F.oracle, "also print the brute-force values");

  auto* adversary_cmd = app.add_subcommand("adversary", "print the canonical fork built by the optimal adversary");
  add_w(adversary_cmd);
  adversary_cmd->add_option("--prefix-aware", F.prefix_aware, "use the simpler strategy aimed at this split");
  adversary_cmd->add_option("--emit-fork", F.emit_path, "write the fork here; stdout then carries only the TSV");
  adversary_cmd->add_flag("--verify", F.check, "append the canonical-fork verdict");

  auto* settle_cmd = app.add_subcommand("settle", "exact settlement-violation probability (DP)");
  settle_cmd->add_option("--alpha", F.alpha, "Pr[A]")->required();
  settle_cmd->add_option("--ph", F.ph, "Pr[h]")->required();
  settle_cmd->add_option("--k", F.k, "horizon")->required();
  settle_cmd->add_option("--prefix", F.prefix, "inf (stationary reach) or a prefix length M");
  settle_cmd->add_option("--any-horizon", F.any_horizon, "violation at any t in [k, T]");
  add_digits(settle_cmd);

  auto* table_cmd = app.add_subcommand("table", "grid of settlement-violation probabilities");
  table_cmd->add_option("--alphas", F.alphas, "adversarial probabilities")->required()->delimiter(',');
  table_cmd->add_option("--ratios", F.ratios, "Pr[h]/(1-alpha) values")->required()->delimiter(',');
  table_cmd->add_option("--ks", F.ks, "horizons")->required()->delimiter(',');
  add_digits(table_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "generating-function tail bounds");
  bound_cmd->add_option("--kind", F.kind, "unique-catalan | two-catalan | delta-walk")
      ->required()
      ->check(CLI::IsMember({"unique-catalan", "two-catalan", "delta-walk"}));
  bound_cmd->add_option("--eps", F.eps, "honest advantage")->required();
  bound_cmd->add_option("--qh", F.qh, "Pr[h] (default q: every honest slot unique)");
  bound_cmd->add_option("--k", F.k, "window length")->required();
  bound_cmd->add_option("--delta", F.delta, "delta for delta-walk");
  bound_cmd->add_option("--trunc", F.trunc, "series truncation order (default max(4000, 20k))");
  bound_cmd->add_option("--prefix", F.prefix, "empty | inf")->check(CLI::IsMember({"empty", "inf"}));
  add_digits(bound_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a semi-synchronous string");
  add_w(reduce_cmd);
  reduce_cmd->add_option("--delta", F.delta, "delay bound")->required()->check(CLI::NonNegativeNumber);
  reduce_cmd->add_flag("--show-pi", F.show_pi, "also print the slot map");
  reduce_cmd->add_option("--rule", F.rule, "defined (empty or A window) | silent (empty window)")
      ->check(CLI::IsMember({"defined", "silent"}));

  auto* sdelta_cmd = app.add_subcommand("settle-delta", "delta-synchronous settlement and parameter condition");
  sdelta_cmd->add_flag("--check-condition", F.check_condition, "evaluate the parameter condition");
  sdelta_cmd->add_option("--pa", F.pa, "Pr[A]");
  sdelta_cmd->add_option("--f", F.f, "active-slot probability");
  sdelta_cmd->add_option("--eps", F.eps, "target honest advantage");
  sdelta_cmd->add_option("--delta", F.delta, "delay bound")->check(CLI::NonNegativeNumber);
  sdelta_cmd->add_option("--w", F.w, "semi-synchronous string (oracle mode)");
  sdelta_cmd->add_option("--slot", F.s, "slot (oracle mode)");
  sdelta_cmd->add_option("--k", F.k, "settlement depth (oracle mode)");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo estimates");
  sim_cmd->add_option("--mode", F.mode, "catalan | two-catalan | settlement | delta-walk | reduction")
      ->required()
      ->check(CLI::IsMember({"catalan", "two-catalan", "settlement", "delta-walk", "reduction"}));
  sim_cmd->add_option("--samples", F.samples, "number of samples");
  sim_cmd->add_option("--seed", F.seed, "base seed");
  sim_cmd->add_option("--eps", F.eps, "honest advantage");
  sim_cmd->add_option("--qh", F.qh, "Pr[h] (catalan mode, default q)");
  sim_cmd->add_option("--k", F.k, "window or horizon");
  sim_cmd->add_option("--alpha", F.alpha, "Pr[A] (settlement mode)");
  sim_cmd->add_option("--ph", F.ph, "Pr[h] (settlement and reduction modes)");
  sim_cmd->add_option("--delta", F.delta, "delta (delta-walk and reduction modes)");
  sim_cmd->add_option("--f", F.f, "active-slot probability (reduction mode)");
  sim_cmd->add_option("--pa", F.pa, "Pr[A] (reduction mode)");
  sim_cmd->add_option("--T", F.T, "string length (reduction mode)");
  sim_cmd->add_option("--warmup", F.warmup, "warm-up prefix length (catalan modes)");
  sim_cmd->add_option("--tail", F.tail, "extra simulated steps standing in for the future");
  sim_cmd->add_option("--rule", F.rule, "reduction window rule: defined | silent")
      ->check(CLI::IsMember({"defined", "silent"}));
  add_digits(sim_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const int d = F.digits;
    if (validate_cmd->parsed()) {
      const Fork fork = load_fork(F.fork_path, in);
      const auto violations = validate(fork, F.delta);
      if (violations.empty()) {
        out << "valid\n";
        return 0;
      }
      for (const auto& v : violations) out << "invalid\t" << v.axiom << '\t' << v.message << '\n';
      err << "error: the fork violates " << violations.size() << " axiom instance(s)\n";
      return 1;
    }
    if (catalan_cmd->parsed()) {
      const CharString w = parse_w(F.w);
      const CatalanReport r = catalan_slots(w);
      out << "slot\tsymbol\tleft_catalan\tright_catalan\tcatalan\n";
      for (std::size_t i = 1; i <= w.size(); ++i) {
        out << i << '\t' << to_char(w.at(i)) << '\t' << r.left_catalan[i] << '\t' << r.right_catalan[i] << '\t'
            << r.catalan[i] << '\n';
      }
      return 0;
    }
    if (uvp_cmd->parsed()) {
      const CharString w = parse_w(F.w);
      out << "slot\tuvp";
      if (F.both) out << "\toracle";
      out << '\n' << F.s << '\t' << (F.oracle ? has_uvp_oracle(w, F.s) : has_uvp_fast(w, F.s));
      if (F.both) out << '\t' << has_uvp_oracle(w, F.s);
      out << '\n';
      return 0;
    }
    if (settled_cmd->parsed()) {
      const CharString w = parse_w(F.w);
      out << "slot\tk\tsettled";
      if (F.both) out << "\toracle";
      out << '\n'
          << F.s << '\t' << F.k << '\t' << (F.oracle ? is_settled_oracle(w, F.s, F.k) : is_settled_fast(w, F.s, F.k));
      if (F.both) out << '\t' << is_settled_oracle(w, F.s, F.k);
      out << '\n';
      return 0;
    }
    if (cp_cmd->parsed()) {
      const CharString w = parse_w(F.w);
      out << "k\tslot_cp_violated\tuvp_cover\n"
          << F.k << '\t' << violates_k_slot_cp(w, F.k) << '\t' << cp_implied_by_uvp(w, F.k) << '\n';
      return 0;
    }
    if (margin_cmd->parsed()) {
      const CharString w = parse_w(F.w);
      if (F.split < 0 || F.split > static_cast<int>(w.size())) throw DomainError("split outside 0..|w|");
      const CharString x = w.prefix(F.split);
      const CharString y = w.substr(F.split + 1, w.size() - F.split);
      out << "rho=" << rho_recursive(w) << "\tmu=" << mu_recursive(x, y);
      if (F.oracle) out << "\toracle_rho=" << rho_bruteforce(w) << "\toracle_mu=" << mu_bruteforce(x, y);
      out << '\n';
      return 0;
    }
    if (adversary_cmd->parsed()) {
      const CharString w = parse_w(F.w);
      const Fork fork = F.prefix_aware >= 0 ? build_prefix_aware_fork(w, F.prefix_aware) : build_canonical_fork(w);
      // Without --emit-fork the fork goes to stdout and the TSV follows as
      // comment lines, so the output still parses as a fork file.
      std::string lead;
      if (F.emit_path.empty()) {
        write_fork(out, fork);
        lead = "# ";
      } else {
        std::ofstream file(F.emit_path);
        if (!file) throw DomainError("cannot write " + F.emit_path);
        write_fork(file, fork);
      }
      out << lead << "split\trho\tmu\n";
      for (std::size_t m = 0; m <= w.size(); ++m) {
        const CharString x = w.prefix(m);
        out << lead << m << '\t' << rho_recursive(x) << '\t' << fork_mu(fork, static_cast<int>(m)) << '\n';
      }
      if (F.check) {
        const CanonicalCheck c = verify_canonical(fork, w);
        out << lead << "canonical=" << (c.ok ? "ok" : "failed");
        if (!c.ok) out << "\tsplit=" << c.split << "\treason=" << c.reason;
        out << '\n';
      }
      return 0;
    }
    if (settle_cmd->parsed()) {
      DpParams p;
      p.alpha = F.alpha;
      p.p_h = F.ph;
      p.k = F.k;
      if (!F.prefix.empty() && F.prefix != "inf") {
        p.init = InitKind::FinitePrefix;
        try {
          p.prefix_len = std::stoi(F.prefix);
        } catch (const std::exception&) {
          throw DomainError("--prefix takes 'inf' or a prefix length");
        }
      }
      if (F.any_horizon >= 0) {
        out << fmt(static_cast<long double>(violation_prob_any_horizon(p, F.any_horizon)), d) << '\n';
      } else {
        out << fmt(violation_prob_ext(p), d) << '\n';
      }
      return 0;
    }
    if (table_cmd->parsed()) {
      const auto grid = settlement_table(F.alphas, F.ratios, F.ks);
      // Rows (ratio, k), one column per alpha.
      out << "#ratio\tk";
      for (double a : F.alphas) out << '\t' << num(a);
      out << '\n';
      const std::size_t nr = F.ratios.size(), nk = F.ks.size();
      for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t i = 0; i < nk; ++i) {
          out << num(F.ratios[r]) << '\t' << F.ks[i];
          for (std::size_t a = 0; a < F.alphas.size(); ++a) out << '\t' << fmt(grid[(a * nr + r) * nk + i].prob, d);
          out << '\n';
        }
      }
      return 0;
    }
    if (bound_cmd->parsed()) {
      const bool with_prefix = F.prefix == "inf";
      const std::size_t N = F.trunc >= 0 ? static_cast<std::size_t>(F.trunc) : default_truncation(F.k);
      TailBound b;
      if (F.kind == "unique-catalan") {
        const double qh = F.qh.value_or((1.0 + F.eps) / 2.0);
        b = bound_unique_catalan_tail(F.eps, qh, F.k, N, with_prefix);
      } else if (F.kind == "two-catalan") {
        b = bound_two_catalan_tail(F.eps, F.k, N, with_prefix);
      } else {
        b = delta_walk_tail(F.delta, F.k, F.eps);
      }
      out << "bound=" << fmt(b.value, d) << "\tremainder=" << fmt(b.remainder, d) << '\n';
      return 0;
    }
    if (reduce_cmd->parsed()) {
      const Reduction red = reduce(parse_w(F.w), F.delta, parse_rule(F.rule));
      out << red.output.str() << '\n';
      if (F.show_pi) {
        out << "slot\tpi\n";
        for (std::size_t i = 1; i < red.pi.size(); ++i) {
          if (red.pi[i] > 0) out << i << '\t' << red.pi[i] << '\n';
        }
      }
      return 0;
    }
    if (sdelta_cmd->parsed()) {
      if (F.check_condition) {
        const bool ok = theorem71_condition(F.pa, F.f, F.eps, F.delta);
        const ReducedProbs r = reduced_probs(F.f, F.delta, F.pa, 0.0);
        out << "condition=" << ok << "\treduced_pA=" << fmt(static_cast<long double>(r.A), d)
            << "\ttarget=" << fmt(static_cast<long double>((1.0 - F.eps) / 2.0), d) << '\n';
        return 0;
      }
      if (F.w.empty()) throw DomainError("settle-delta needs --check-condition or --w/--slot/--k");
      out << "settled=" << is_k_delta_settled_oracle(parse_w(F.w), F.s, F.k, F.delta) << '\n';
      return 0;
    }
    if (sim_cmd->parsed()) {
      const McConfig cfg{F.samples, F.seed};
      if (F.mode == "catalan") {
        const double qh = F.qh.value_or((1.0 + F.eps) / 2.0);
        const Estimate e = estimate_no_unique_catalan(F.k, F.eps, qh, cfg, F.warmup, F.tail);
        std::optional<long double> cmp;
        if (qh > 0.0) cmp = bound_unique_catalan_tail(F.eps, qh, F.k, default_truncation(F.k), true).value;
        print_estimate(out, e, cmp, d);
      } else if (F.mode == "two-catalan") {
        const Estimate e = estimate_no_two_catalan(F.k, F.eps, cfg, F.warmup, F.tail);
        print_estimate(out, e, bound_two_catalan_tail(F.eps, F.k, default_truncation(F.k), true).value, d);
      } else if (F.mode == "settlement") {
        const Estimate e = estimate_settlement_violation(F.k, F.alpha, F.ph, cfg);
        DpParams p;
        p.alpha = F.alpha;
        p.p_h = F.ph;
        p.k = F.k;
        print_estimate(out, e, static_cast<long double>(violation_prob(p)), d);
      } else if (F.mode == "delta-walk") {
        const Estimate e = estimate_delta_walk(F.delta, F.k, F.eps, cfg, F.tail);
        print_estimate(out, e, delta_walk_tail(F.delta, F.k, F.eps).value, d);
      } else {
        const ReductionFrequencies r =
            reduction_frequencies(F.T, F.f, F.delta, F.pa, F.ph, F.seed, parse_rule(F.rule));
        out << "symbol\tobserved\texpected\tz\n";
        const double n = r.total > 0 ? static_cast<double>(r.total) : 1.0;
        auto row = [&](const char* s, std::uint64_t c, double e, double z) {
          char zbuf[32];
          std::snprintf(zbuf, sizeof zbuf, "%.2f", z);
          out << s << '\t' << fmt(static_cast<long double>(c / n), d) << '\t' << fmt(static_cast<long double>(e), d)
              << '\t' << zbuf << '\n';
        };
        row("h", r.h, r.expected.h, r.z_h);
        row("H", r.H, r.expected.H, r.z_H);
        row("A", r.A, r.expected.A, r.z_A);
      }
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace forklab
