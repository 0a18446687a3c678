#include "commands.hpp"

#include <CLI11.hpp>

#include "setup.hpp"
#include "vgr/constructions.hpp"
#include "vgr/suites.hpp"

namespace vgr::cli {

namespace {

struct Options {
  std::string setup;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> bound;
  std::optional<std::size_t> samples;
  bool machine = false;
};

SuiteOptions suite_options(const Setup& s, const Options& o) {
  SuiteOptions opt;
  opt.seed = o.seed.value_or(s.file.campaign.seed);
  opt.bound = o.bound.value_or(s.file.campaign.bound);
  opt.samples = o.samples.value_or(s.file.campaign.samples);
  return opt;
}

const ChoiceFunction& require_choice(const Setup& s) {
  if (!s.choice) throw Error("the setup defines no choice function (choice = none)");
  return *s.choice;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

void header(std::ostream& out, const char* command, const SuiteOptions& opt, bool machine) {
  if (machine)
    out << "command=" << command << "\nseed=" << opt.seed << "\nbound=" << opt.bound << "\nsamples=" << opt.samples
        << "\n";
  else
    out << command << ": seed " << opt.seed << ", bound " << opt.bound << ", samples " << opt.samples << "\n";
}

std::string verdict_text(const TrivialityVerdict& t) {
  if (!t.trivial)
    return "NON-TRIVIAL at (" + to_string(t.counterexample->first) + ", " + to_string(t.counterexample->second) + ")";
  if (t.certified) return "TRIVIAL (certified by construction; " + std::to_string(t.pairs_checked) + " pairs checked)";
  return "TRIVIAL (verified up to height " + std::to_string(t.bound) + ", " + std::to_string(t.pairs_checked) +
         " pairs)";
}

void verdict_machine(std::ostream& out, const char* key, const TrivialityVerdict& t) {
  out << key << ".trivial=" << true_false(t.trivial) << "\n"
      << key << ".certified=" << true_false(t.certified) << "\n"
      << key << ".pairs=" << t.pairs_checked << "\n";
  if (t.counterexample)
    out << key << ".counterexample=" << to_string(t.counterexample->first) << ";" << to_string(t.counterexample->second)
        << "\n";
}

int cmd_ring_axioms(const Setup& s, const Options& o, std::ostream& out) {
  const ChoiceFunction& eps = require_choice(s);
  const SuiteOptions opt = suite_options(s, o);
  header(out, "ring-axioms", opt, o.machine);
  SuiteReport ring = ring_axioms_suite(eps, opt);
  SuiteReport cocycle = cocycle_suite(eps, opt);
  out << ring.format(o.machine) << cocycle.format(o.machine);
  const bool ok = ring.ok() && cocycle.ok();
  out << (o.machine ? "status=" : "status: ") << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? pass : conflict;
}

int cmd_iso_verify(const Setup& s, const Options& o, std::ostream& out) {
  const ChoiceFunction& eps = require_choice(s);
  const SuiteOptions opt = suite_options(s, o);
  header(out, "iso-verify", opt, o.machine);
  GradedIsomorphism iso(GradedAlgebra(s.valuation, s.subring), eps, s.lift);
  const char* subring = s.subring == Subring::field ? "field" : "polynomial";
  if (o.machine) {
    out << "subring=" << subring << "\nlifting=" << s.file.lift << "\n";
  } else {
    out << "subring: " << subring << "\n";
    out << "lifting oracle: "
        << (s.lift ? "constants (assumes the residue field is Q)" : "none, surjectivity round trips SKIPPED") << "\n";
  }
  SuiteReport report = iso_suite(iso, opt);
  out << report.format(o.machine);
  out << (o.machine ? "status=" : "status: ") << (report.ok() ? "PASS" : "FAIL") << "\n";
  return report.ok() ? pass : conflict;
}

int cmd_build(const Setup& s, const Options& o, std::ostream& out) {
  const ChoiceFunction& eps = require_choice(s);
  const MonomialValuation& v = *s.valuation;
  const unsigned bound = o.bound.value_or(s.file.campaign.bound);
  const bool m = o.machine;
  std::string gens;
  for (const auto& g : eps.generators()) gens += (gens.empty() ? "" : m ? ";" : ", ") + to_string(g);
  out << (m ? "choice=" : "choice: ") << s.file.choice << "\n";
  out << (m ? "generators=" : "generators: ") << gens << "\n";

  std::vector<const Extension*> steps;
  for (const Extension* e = s.chain ? s.chain->extension.get() : nullptr; e; e = e->base.extension.get())
    steps.insert(steps.begin(), e);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Extension& e = *steps[i];
    const std::string period = e.period ? to_string(*e.period) : "none";
    if (m) {
      const std::string k = "step[" + std::to_string(i + 1) + "].";
      out << k << "gamma=" << to_string(e.gamma) << "\n"
          << k << "witness=" << v.format(e.witness) << "\n"
          << k << "period=" << period << "\n"
          << k << "root=" << v.format(e.root) << "\n"
          << k << "step=" << v.format(e.step) << "\n";
    } else {
      out << "step " << i + 1 << ": gamma = " << to_string(e.gamma) << ", witness = " << v.format(e.witness)
          << ", n0 = " << period << ", root a = " << v.format(e.root) << ", a * witness = " << v.format(e.step)
          << "\n";
    }
  }
  const TrivialityVerdict t = is_trivial(eps, bound);
  if (m) {
    out << "certified=" << true_false(eps.certified_trivial()) << "\n";
    verdict_machine(out, "twisting", t);
  } else {
    out << "certified trivial: " << yes_no(eps.certified_trivial()) << "\n";
    out << "twisting: " << verdict_text(t) << "\n";
  }
  for (const auto& g : eps.elements(bound)) {
    if (m)
      out << "eps[" << to_string(g) << "]=" << v.format(eps(g)) << "\n";
    else
      out << "  eps(" << to_string(g) << ") = " << v.format(eps(g)) << "\n";
  }
  return pass;
}

int cmd_counterexample(const Setup& s, const Options& o, std::ostream& out) {
  if (!s.file.counterexample) throw Error("the setup has no counterexample section");
  const CounterexampleSection& c = *s.file.counterexample;
  const bool m = o.machine;
  if (c.primes.empty()) {
    out << (m ? "primes=\nverdict=VACUOUS\n" : "primes: (none)\nverdict: vacuous PASS (no primes to check)\n");
    return pass;
  }
  if (s.valuation->dimension() != 1) throw Error("the counterexample needs a rank-one valuation");
  for (unsigned p : c.primes) {
    auto idx = s.valuation->variables().index("x" + std::to_string(p));
    if (!idx || s.valuation->weight(*idx) != GroupElement::scalar(Rational(1, p)))
      throw Error("the valuation must give x" + std::to_string(p) + " the value 1/" + std::to_string(p));
  }

  int code = pass;
  if (!s.file.table.empty()) {
    ChoiceFunction::Table candidates;
    for (const auto& [g, f] : s.file.table) candidates.emplace(parse_group_element(g), s.valuation->parse(f));
    AnalyzerReport r = analyze_counterexample(s.valuation, c.primes, candidates);
    out << format_report(r, *s.valuation, m);
    if (r.conflict || !r.divisible) code = conflict;
  } else if (!c.enumerate) {
    throw Error("the counterexample section needs a candidate table or enumerate = true");
  }

  if (c.enumerate) {
    std::vector<Rational> constants;
    for (const auto& q : c.constants) constants.push_back(parse_rational(q));
    EnumerationSummary e = enumerate_monomial_tables(s.valuation, c.primes, c.degree_bound, constants);
    std::string degrees;
    for (auto d : e.consistent_degrees) degrees += (degrees.empty() ? "" : m ? ";" : ", ") + std::to_string(d);
    std::string consts;
    for (const auto& q : c.constants) consts += (consts.empty() ? "" : " ") + q;
    if (m) {
      out << "enumeration.degree_bound=" << c.degree_bound << "\nenumeration.constants=" << consts
          << "\nenumeration.tables=" << e.tables << "\nenumeration.consistent=" << e.consistent
          << "\nenumeration.degrees=" << degrees << "\nenumeration.modulus=" << to_string(e.modulus)
          << "\nenumeration.all_divisible=" << true_false(e.all_divisible) << "\n";
      if (e.first_consistent)
        for (const auto& [g, f] : *e.first_consistent)
          out << "enumeration.first[" << to_string(g) << "]=" << s.valuation->format(f) << "\n";
    } else {
      out << "enumeration over monomial candidates (degree bound " << c.degree_bound << ", constants " << consts
          << "):\n";
      out << "  tables " << e.tables << ", consistent " << e.consistent << ", degrees of eps(1): "
          << (degrees.empty() ? "(none)" : degrees) << "\n";
      out << "  " << to_string(e.modulus) << " | deg eps(1) for every consistent table: " << yes_no(e.all_divisible)
          << "\n";
      if (e.first_consistent) {
        out << "  first consistent table:";
        for (const auto& [g, f] : *e.first_consistent)
          out << " eps(" << to_string(g) << ") = " << s.valuation->format(f) << ";";
        out << "\n";
      }
    }
    if (!e.all_divisible) code = conflict;
  }
  return code;
}

int cmd_twisting(const Setup& s, const Options& o, std::ostream& out) {
  const ChoiceFunction& eps = require_choice(s);
  const unsigned bound = o.bound.value_or(s.file.campaign.bound);
  const bool m = o.machine;
  TwistingTable table(eps);
  const auto elems = eps.elements(std::max(1u, bound / 3));
  if (!m) out << "twisting values (degrees of height <= " << std::max(1u, bound / 3) << "):\n";
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      if (!eps.defined_at(elems[i] + elems[j])) continue;
      const std::string value = table(elems[i], elems[j]).to_string();
      if (m)
        out << "twist[" << to_string(elems[i]) << ";" << to_string(elems[j]) << "]=" << value << "\n";
      else
        out << "  twist(" << to_string(elems[i]) << ", " << to_string(elems[j]) << ") = " << value << "\n";
    }
  const TrivialityVerdict a = is_trivial(table, bound);
  const TrivialityVerdict b = semigroup_hom_check(eps, bound);
  const bool agree = a.trivial == b.trivial && a.counterexample == b.counterexample;
  if (m) {
    verdict_machine(out, "is_trivial", a);
    verdict_machine(out, "semigroup_hom", b);
    out << "agree=" << true_false(agree) << "\n";
  } else {
    out << "is_trivial: " << verdict_text(a) << "\n";
    out << "in_v o eps semigroup homomorphism: " << verdict_text(b) << "\n";
    out << "checks agree: " << yes_no(agree) << "\n";
  }
  return agree ? pass : conflict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted semigroup rings and graded algebras of monomial valuations", "vgr"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;
  unsigned bound = 0;
  std::size_t samples = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--setup", o.setup, "setup file")->required();
    sub->add_option("--seed", seed, "random seed (overrides the campaign section)");
    sub->add_option("--bound", bound, "height bound for enumerated degrees");
    sub->add_option("--samples", samples, "samples per randomized check");
    sub->add_flag("--machine", o.machine, "line-oriented key=value output");
  };
  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Setup&, const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"ring-axioms", "ring axioms of the twisted semigroup ring and the cocycle identity", cmd_ring_axioms},
      {"iso-verify", "psi: well-definedness, injectivity, homomorphism, degree, round trips", cmd_iso_verify},
      {"build", "build the choice function and dump it", cmd_build},
      {"counterexample", "analyze candidate choice functions for v(x_p) = 1/p", cmd_counterexample},
      {"twisting", "list twisting values and the triviality verdicts", cmd_twisting},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    subs.push_back(app.add_subcommand(c.name, c.help));
    add_common(subs.back());
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? pass : input_error;
  }

  std::size_t which = 0;
  while (!subs[which]->parsed()) ++which;
  const CLI::App& sub = *subs[which];
  if (sub.count("--seed")) o.seed = seed;
  if (sub.count("--bound")) o.bound = bound;
  if (sub.count("--samples")) o.samples = samples;

  try {
    Setup s = load_setup(read_setup(o.setup));
    return commands[which].fn(s, o, out);
  } catch (const RootNotFound& e) {
    err << "construction failed: " << e.what() << "\n";
    return construction_failure;
  } catch (const InvalidChoice& e) {
    err << "invalid choice function: " << e.what() << "\n";
    return input_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace vgr::cli
