#include "ordlen_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordlen/calculus.hpp"
#include "ordlen/checks.hpp"
#include "ordlen/error.hpp"
#include "ordlen/io.hpp"

namespace ordlen::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Config {
  std::string command;
  std::string vars;
  std::optional<std::string> ideal;
  std::optional<std::string> numerator;
  std::optional<std::string> module;
  std::optional<std::string> input;
  Format format = Format::text;
  std::string prime;
  std::string mult;
  std::string suite = "all";
  std::size_t max_vars = 2;
  Exponent max_deg = 3;
  std::uint64_t seed = 1;
  std::size_t truncation = 8;
  std::size_t random_pairs = 500;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

io::ParsedModule load_module(const Config& cfg) {
  const int sources = int(cfg.module.has_value()) + int(cfg.input.has_value()) +
                      int(cfg.ideal.has_value() || cfg.numerator.has_value());
  if (sources != 1) {
    throw ParseError("give exactly one of --module, --input, or --vars with --ideal");
  }
  if (cfg.module) return io::parse_module(*cfg.module);
  if (cfg.input) {
    const std::string text = read_source(*cfg.input);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      try {
        return io::module_from_json(json::parse(text));
      } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON module: ") + e.what());
      }
    }
    return io::parse_module(text);
  }
  if (cfg.vars.empty()) throw ParseError("--ideal needs --vars");
  io::VarNames vars = io::parse_vars(cfg.vars);
  MonomialIdeal J = io::parse_ideal(cfg.ideal.value_or(""), vars);
  MonomialIdeal I = cfg.numerator ? io::parse_ideal(*cfg.numerator, vars)
                                  : MonomialIdeal::unit(vars.size());
  if (!contains(I, J)) throw ParseError("the ideal J is not contained in the numerator I");
  return {std::move(vars), MonomialModule(std::move(I), std::move(J))};
}

json primes_json(const std::set<MonomialPrime>& ass, const io::VarNames& vars) {
  json out = json::array();
  for (const auto& P : ass) out.push_back(io::format_prime(P, vars));
  return out;
}

std::string primes_text(const std::set<MonomialPrime>& ass, const io::VarNames& vars) {
  std::string out;
  for (const auto& P : ass) {
    if (!out.empty()) out += ' ';
    out += io::format_prime(P, vars);
  }
  return out.empty() ? "none" : out;
}

json submodule_json(const MonomialModule& N, const io::VarNames& vars) {
  return {{"I", io::format_ideal(N.numerator(), vars)},
          {"J", io::format_ideal(N.denominator(), vars)},
          {"length", io::to_json(length(N))}};
}

std::string opt_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "none";
}

json opt_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json natural_json(const Natural& n) {
  if (n <= std::numeric_limits<std::int64_t>::max()) return json(n.convert_to<std::int64_t>());
  return json(n.str());
}

void emit(std::ostream& out, const Config& cfg, const std::string& text, json data,
          const io::ParsedModule* pm) {
  if (cfg.format == Format::text) {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
    return;
  }
  json doc = {{"command", cfg.command}};
  if (pm) doc["module"] = io::to_json(pm->module, pm->vars);
  doc["result"] = std::move(data);
  out << doc.dump(2) << '\n';
}

int cmd_len(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const Ordinal a = length(pm.module);
  emit(out, cfg, to_string(a), {{"length", io::to_json(a)}, {"text", to_string(a)}}, &pm);
  return kExitOk;
}

int cmd_fcyc(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const Cycle c = fcyc(pm.module);
  const std::string text = io::format_cycle(c, pm.vars);
  emit(out, cfg, text, {{"fcyc", io::to_json(c)}, {"binary", c.is_binary()}, {"text", text}},
       &pm);
  return kExitOk;
}

int cmd_ass(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const auto ass = associated_primes(pm.module);
  std::string text;
  for (const auto& P : ass) text += io::format_prime(P, pm.vars) + '\n';
  emit(out, cfg, text, {{"ass", primes_json(ass, pm.vars)}}, &pm);
  return kExitOk;
}

int cmd_profile(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const ModuleProfile p = profile(pm.module);
  std::ostringstream text;
  text << "length: " << to_string(p.length) << '\n'
       << "fcyc: " << io::format_cycle(p.fcyc, pm.vars) << '\n'
       << "ass: " << primes_text(p.ass, pm.vars) << '\n'
       << "dim: " << opt_text(p.dim) << '\n'
       << "order: " << opt_text(p.order) << '\n'
       << "valence: " << p.valence.str() << '\n'
       << "binary: " << (p.is_binary ? "true" : "false") << '\n';
  json data = {{"length", io::to_json(p.length)},
               {"fcyc", io::to_json(p.fcyc)},
               {"ass", primes_json(p.ass, pm.vars)},
               {"dim", opt_json(p.dim)},
               {"order", opt_json(p.order)},
               {"valence", natural_json(p.valence)},
               {"binary", p.is_binary}};
  emit(out, cfg, text.str(), std::move(data), &pm);
  return kExitOk;
}

int cmd_filtration(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const std::size_t n = pm.vars.size();
  std::ostringstream text;
  json steps = json::array();
  for (std::size_t e = 0; e <= n; ++e) {
    const MonomialModule D = dim_filtration(pm.module, e);
    const Ordinal a = length(D);
    text << "D" << e << ": " << io::format_ideal(D.numerator(), pm.vars)
         << "  length " << to_string(a) << '\n';
    json step = submodule_json(D, pm.vars);
    step["e"] = e;
    steps.push_back(std::move(step));
  }
  emit(out, cfg, text.str(), {{"filtration", std::move(steps)}}, &pm);
  return kExitOk;
}

int cmd_prim(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const MonomialPrime P = io::parse_prime(cfg.prime, pm.vars);
  const PrimKernel k = prim_kernel(pm.module, P);
  const auto quotient_ass = associated_primes(k.quotient);
  std::ostringstream text;
  text << "prime: " << io::format_prime(P, pm.vars) << '\n'
       << "associated: " << (k.prime_is_associated ? "true" : "false") << '\n'
       << "kernel: " << io::format_ideal(k.kernel.numerator(), pm.vars) << "  length "
       << to_string(length(k.kernel)) << '\n'
       << "quotient length: " << to_string(length(k.quotient)) << '\n'
       << "quotient ass: " << primes_text(quotient_ass, pm.vars) << '\n';
  json data = {{"prime", io::format_prime(P, pm.vars)},
               {"associated", k.prime_is_associated},
               {"kernel", submodule_json(k.kernel, pm.vars)},
               {"quotient_length", io::to_json(length(k.quotient))},
               {"quotient_ass", primes_json(quotient_ass, pm.vars)}};
  emit(out, cfg, text.str(), std::move(data), &pm);
  return kExitOk;
}

int cmd_endo(const Config& cfg, std::ostream& out) {
  const auto pm = load_module(cfg);
  const Monomial r = io::parse_monomial(cfg.mult, pm.vars);
  const EndoAnalysis a = mult_endo(pm.module, r);
  auto yes = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream text;
  text << "multiplier: " << io::format_monomial(r, pm.vars) << '\n'
       << "kernel: " << io::format_ideal(a.kernel.numerator(), pm.vars) << '\n'
       << "image: " << io::format_ideal(a.image.numerator(), pm.vars) << '\n'
       << "mu: " << to_string(a.mu) << '\n'
       << "kappa: " << to_string(a.kappa) << '\n'
       << "theta: " << to_string(a.theta) << '\n'
       << "reductive: " << yes(a.reductive) << '\n'
       << "rank_nullity: " << yes(a.satisfies_rank_nullity) << '\n'
       << "reductive_power: " << a.reductive_power << '\n'
       << "tectonics_length: " << to_string(a.tectonics_length) << '\n'
       << "nilpotent: " << yes(a.nilpotent) << '\n'
       << "nilpotency_index: " << opt_text(a.nilpotency_index) << '\n'
       << "monic: " << yes(a.monic) << '\n'
       << "open_image: " << yes(a.open_image) << '\n'
       << "regular: " << yes(a.regular) << '\n'
       << "low_kernel: " << yes(a.low_kernel) << '\n';
  json data = {{"multiplier", io::format_monomial(r, pm.vars)},
               {"kernel", submodule_json(a.kernel, pm.vars)},
               {"image", submodule_json(a.image, pm.vars)},
               {"mu", io::to_json(a.mu)},
               {"kappa", io::to_json(a.kappa)},
               {"theta", io::to_json(a.theta)},
               {"reductive", a.reductive},
               {"rank_nullity", a.satisfies_rank_nullity},
               {"reductive_power", a.reductive_power},
               {"tectonics_length", io::to_json(a.tectonics_length)},
               {"nilpotent", a.nilpotent},
               {"nilpotency_index", opt_json(a.nilpotency_index)},
               {"monic", a.monic},
               {"open_image", a.open_image},
               {"regular", a.regular},
               {"low_kernel", a.low_kernel}};
  emit(out, cfg, text.str(), std::move(data), &pm);
  return kExitOk;
}

std::size_t max_dim_from_env() {
  const char* v = std::getenv("ORDLEN_MAX_DIM");
  if (!v || !*v) return 10;
  char* end = nullptr;
  const unsigned long long d = std::strtoull(v, &end, 10);
  if (*end != '\0' || d == 0) throw ParseError(std::string("ORDLEN_MAX_DIM must be a positive integer, got '") + v + "'");
  return static_cast<std::size_t>(d);
}

int cmd_check(const Config& cfg, std::ostream& out) {
  checks::CorpusOptions opts;
  opts.max_vars = cfg.max_vars;
  opts.max_deg = cfg.max_deg;
  opts.seed = cfg.seed;
  opts.truncation = cfg.truncation;
  opts.random_pairs = cfg.random_pairs;
  opts.max_oracle_dim = max_dim_from_env();
  const auto results = checks::run_suite(cfg.suite, opts);
  const bool pass = checks::all_pass(results);
  if (cfg.format == Format::text) {
    out << checks::format_report(results);
    out << (pass ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  } else {
    json doc = checks::report_json(results);
    doc["command"] = "check";
    doc["suite"] = cfg.suite;
    out << doc.dump(2) << '\n';
  }
  return pass ? kExitOk : kExitCheckFailed;
}

void add_module_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--vars", cfg.vars, "Ring variables, e.g. x,y,z");
  sub->add_option("--ideal", cfg.ideal, "Denominator J as comma-separated monomials");
  sub->add_option("--numerator", cfg.numerator, "Numerator I (default: the unit ideal)");
  sub->add_option("--module", cfg.module, "Module text 'vars: x,y ; I: 1 ; J: x^2'");
  sub->add_option("--input", cfg.input, "File with module text or JSON ('-' for stdin)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Ordinal length of monomial subquotients I/J", "ordlen"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats))
      ->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub module_subs[] = {
      {"len", "Ordinal length"},
      {"fcyc", "Fundamental cycle"},
      {"profile", "Length, cycle, primes, dimension, valence"},
      {"ass", "Associated primes"},
      {"filtration", "Dimension filtration D_0 .. D_n"},
      {"prim", "Kernel of localization at a prime"},
      {"endo", "Multiplication endomorphism by a monomial"},
  };
  for (const auto& s : module_subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_module_options(sub, cfg);
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats));
    if (std::string(s.name) == "prim") {
      sub->add_option("--prime", cfg.prime, "Monomial prime, e.g. x,y or 0")->required();
    }
    if (std::string(s.name) == "endo") {
      sub->add_option("--mult", cfg.mult, "Monomial multiplier, e.g. x*y")->required();
    }
  }
  CLI::App* check = app.add_subcommand("check", "Run verification suites");
  std::string suites_help = "Suite: all";
  for (const auto& n : checks::suite_names()) suites_help += " | " + n;
  check->add_option("suite", cfg.suite, suites_help)->capture_default_str();
  check->add_option("--max-vars", cfg.max_vars, "Largest ring in the sweeps")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  check->add_option("--max-deg", cfg.max_deg, "Generator degree bound")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  check->add_option("--seed", cfg.seed, "Seed for random samples")->capture_default_str();
  check->add_option("--truncation", cfg.truncation, "Endomorphism fixture truncation")
      ->check(CLI::Range(4, 64))
      ->capture_default_str();
  check->add_option("--random-pairs", cfg.random_pairs, "Random pairs in 3 variables")
      ->capture_default_str();
  check->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "len") return cmd_len(cfg, out);
    if (cfg.command == "fcyc") return cmd_fcyc(cfg, out);
    if (cfg.command == "profile") return cmd_profile(cfg, out);
    if (cfg.command == "ass") return cmd_ass(cfg, out);
    if (cfg.command == "filtration") return cmd_filtration(cfg, out);
    if (cfg.command == "prim") return cmd_prim(cfg, out);
    if (cfg.command == "endo") return cmd_endo(cfg, out);
    return cmd_check(cfg, out);
  } catch (const ParseError& e) {
    err << "ordlen: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GuardError& e) {
    err << "ordlen: guard exceeded: " << e.what()
        << '\n';
    return kExitGuard;
  } catch (const InvalidArgument& e) {
    err << "ordlen: invalid argument: " << e.what() << '\n';
    return kExitParse;
  }
}

} // namespace ordlen::cli
