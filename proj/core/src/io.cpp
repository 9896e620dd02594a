#include "ordlen/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "ordlen/error.hpp"

namespace ordlen::io {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Trimmed view together with the offset of its first character in the
// original text, so parse errors can point at the right place.
struct Piece {
  std::string_view text;
  std::size_t offset = 0;
};

Piece trim(Piece p) {
  while (!p.text.empty() && is_space(p.text.front())) {
    p.text.remove_prefix(1);
    ++p.offset;
  }
  while (!p.text.empty() && is_space(p.text.back())) p.text.remove_suffix(1);
  return p;
}

std::vector<Piece> split_on(Piece whole, char sep) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= whole.text.size(); ++i) {
    if (i == whole.text.size() || whole.text[i] == sep) {
      out.push_back(trim({whole.text.substr(start, i - start), whole.offset + start}));
      start = i + 1;
    }
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::size_t var_index(std::string_view name, const VarNames& vars, std::size_t offset) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw ParseError("unknown variable '" + std::string(name) + "'", offset);
  return static_cast<std::size_t>(it - vars.begin());
}

Monomial parse_monomial_piece(Piece p, const VarNames& vars) {
  p = trim(p);
  if (p.text.empty()) throw ParseError("empty monomial", p.offset);
  std::vector<Exponent> e(vars.size(), 0);
  if (p.text == "1") return Monomial(std::move(e));
  for (Piece factor : split_on(p, '*')) {
    auto caret = factor.text.find('^');
    std::string_view name = factor.text.substr(0, caret);
    while (!name.empty() && is_space(name.back())) name.remove_suffix(1);
    std::uint64_t power = 1;
    if (caret != std::string_view::npos) {
      Piece ex = trim({factor.text.substr(caret + 1), factor.offset + caret + 1});
      auto [ptr, ec] = std::from_chars(ex.text.data(), ex.text.data() + ex.text.size(), power);
      if (ec != std::errc() || ptr != ex.text.data() + ex.text.size())
        throw ParseError("bad exponent '" + std::string(ex.text) + "'", ex.offset);
      if (power > std::numeric_limits<Exponent>::max())
        throw GuardError("exponent too large: " + std::string(ex.text));
    }
    if (name == "1" && caret == std::string_view::npos) continue;
    if (!is_identifier(name))
      throw ParseError("expected a variable, got '" + std::string(name) + "'", factor.offset);
    std::size_t i = var_index(name, vars, factor.offset);
    std::uint64_t total = std::uint64_t{e[i]} + power;
    if (total > std::numeric_limits<Exponent>::max()) throw GuardError("exponent too large");
    e[i] = static_cast<Exponent>(total);
  }
  return Monomial(std::move(e));
}

MonomialIdeal parse_ideal_piece(Piece p, const VarNames& vars) {
  p = trim(p);
  if (p.text.empty() || p.text == "0") return MonomialIdeal::zero(vars.size());
  std::vector<Monomial> gens;
  for (Piece m : split_on(p, ',')) gens.push_back(parse_monomial_piece(m, vars));
  return MonomialIdeal(vars.size(), std::move(gens));
}

std::uint64_t json_uint(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError(std::string("expected a natural number for ") + what);
  return j.get<std::uint64_t>();
}

Natural json_natural(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("bad coefficient string '" + s + "'");
    return Natural(s);
  }
  return Natural(json_uint(j, "coefficient"));
}

nlohmann::json natural_json(const Natural& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

} // namespace

VarNames parse_vars(std::string_view text) {
  VarNames vars;
  Piece whole = trim({text, 0});
  if (whole.text.empty()) return vars;
  std::set<std::string> seen;
  for (Piece p : split_on(whole, ',')) {
    if (!is_identifier(p.text))
      throw ParseError("bad variable name '" + std::string(p.text) + "'", p.offset);
    if (!seen.insert(std::string(p.text)).second)
      throw ParseError("duplicate variable '" + std::string(p.text) + "'", p.offset);
    vars.emplace_back(p.text);
  }
  return vars;
}

VarNames default_vars(std::size_t n) {
  static const char* names[] = {"x", "y", "z"};
  VarNames vars;
  for (std::size_t i = 0; i < n; ++i)
    vars.push_back(n <= 3 ? names[i] : "x" + std::to_string(i));
  return vars;
}

Monomial parse_monomial(std::string_view text, const VarNames& vars) {
  return parse_monomial_piece({text, 0}, vars);
}

std::string format_monomial(const Monomial& m, const VarNames& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal parse_ideal(std::string_view text, const VarNames& vars) {
  return parse_ideal_piece({text, 0}, vars);
}

std::string format_ideal(const MonomialIdeal& I, const VarNames& vars) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.gens()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return out;
}

std::string format_prime(const MonomialPrime& P, const VarNames& vars) {
  if (P.gens().empty()) return "[0]";
  std::string out = "[";
  for (std::size_t k = 0; k < P.gens().size(); ++k) {
    if (k) out += ',';
    out += vars.at(P.gens()[k]);
  }
  return out + "]";
}

MonomialPrime parse_prime(std::string_view text, const VarNames& vars) {
  Piece p = trim({text, 0});
  if (!p.text.empty() && p.text.front() == '[') {
    if (p.text.back() != ']') throw ParseError("unbalanced '['", p.offset);
    p = trim({p.text.substr(1, p.text.size() - 2), p.offset + 1});
  }
  std::vector<std::size_t> gens;
  if (!p.text.empty() && p.text != "0") {
    for (Piece v : split_on(p, ',')) gens.push_back(var_index(v.text, vars, v.offset));
  }
  return MonomialPrime(vars.size(), std::move(gens));
}

std::string format_cycle(const Cycle& c, const VarNames& vars) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [P, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff.str() + "*" + format_prime(P, vars);
  }
  return out;
}

std::string format_pair(const StandardPair& p, const VarNames& vars) {
  std::string out = "(" + format_monomial(p.head, vars) + ", {";
  for (std::size_t k = 0; k < p.free.size(); ++k) {
    if (k) out += ',';
    out += vars.at(p.free[k]);
  }
  return out + "})";
}

ParsedModule parse_module(std::string_view text) {
  std::optional<Piece> vars_text, i_text, j_text;
  for (Piece section : split_on({text, 0}, ';')) {
    if (section.text.empty()) continue;
    auto colon = section.text.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'key: value' section", section.offset);
    Piece key = trim({section.text.substr(0, colon), section.offset});
    Piece value{section.text.substr(colon + 1), section.offset + colon + 1};
    std::optional<Piece>* slot = nullptr;
    if (key.text == "vars") slot = &vars_text;
    else if (key.text == "I") slot = &i_text;
    else if (key.text == "J") slot = &j_text;
    else throw ParseError("unknown section '" + std::string(key.text) + "'", key.offset);
    if (*slot) throw ParseError("repeated section '" + std::string(key.text) + "'", key.offset);
    *slot = value;
  }
  if (!vars_text) throw ParseError("module text needs a 'vars:' section");
  if (!j_text) throw ParseError("module text needs a 'J:' section");
  Piece vp = trim(*vars_text);
  VarNames vars = parse_vars(vp.text);
  MonomialIdeal J = parse_ideal_piece(*j_text, vars);
  MonomialIdeal I = i_text ? parse_ideal_piece(*i_text, vars) : MonomialIdeal::unit(vars.size());
  if (!contains(I, J)) throw ParseError("J is not contained in I");
  return {std::move(vars), MonomialModule(std::move(I), std::move(J))};
}

std::string format_module(const MonomialModule& M, const VarNames& vars) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += vars[i];
  }
  return out + " ; I: " + format_ideal(M.numerator(), vars) +
         " ; J: " + format_ideal(M.denominator(), vars);
}

nlohmann::json to_json(const Ordinal& a) {
  auto out = nlohmann::json::array();
  const auto& c = a.coefficients();
  for (std::size_t e = c.size(); e-- > 0;) {
    if (c[e] != 0) out.push_back({e, natural_json(c[e])});
  }
  return out;
}

Ordinal ordinal_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("ordinal JSON must be an array");
  std::vector<Natural> coeffs;
  std::optional<std::uint64_t> previous;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw ParseError("ordinal term must be [exponent, coefficient]");
    std::uint64_t e = json_uint(term[0], "exponent");
    if (previous && e >= *previous) throw ParseError("ordinal exponents must descend");
    previous = e;
    if (e > (1u << 20)) throw GuardError("ordinal exponent too large");
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = json_natural(term[1]);
  }
  return Ordinal(std::move(coeffs));
}

nlohmann::json to_json(const Cycle& c) {
  auto terms = nlohmann::json::array();
  for (const auto& [P, coeff] : c.terms())
    terms.push_back({{"prime", P.gens()}, {"coeff", natural_json(coeff)}});
  return {{"n", c.num_vars()}, {"terms", terms}};
}

Cycle cycle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw ParseError("cycle JSON needs 'n' and 'terms'");
  std::size_t n = json_uint(j.at("n"), "n");
  Cycle c(n);
  for (const auto& t : j.at("terms")) {
    std::vector<std::size_t> gens;
    for (const auto& g : t.at("prime")) gens.push_back(json_uint(g, "prime index"));
    try {
      c.add(MonomialPrime(n, std::move(gens)), json_natural(t.at("coeff")));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return c;
}

nlohmann::json to_json(const MonomialIdeal& I, const VarNames& vars) {
  auto gens = nlohmann::json::array();
  for (const auto& g : I.gens()) gens.push_back(g.exponents());
  return {{"vars", vars}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j, VarNames* vars) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    throw ParseError("ideal JSON needs 'vars' and 'gens'");
  VarNames names;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string() || !is_identifier(v.get_ref<const std::string&>()))
      throw ParseError("bad variable name in ideal JSON");
    names.push_back(v.get<std::string>());
  }
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    if (!g.is_array() || g.size() != names.size())
      throw ParseError("generator length does not match the variable count");
    std::vector<Exponent> e;
    for (const auto& x : g) {
      std::uint64_t v = json_uint(x, "exponent");
      if (v > std::numeric_limits<Exponent>::max()) throw GuardError("exponent too large");
      e.push_back(static_cast<Exponent>(v));
    }
    gens.emplace_back(std::move(e));
  }
  MonomialIdeal I(names.size(), std::move(gens));
  if (vars) *vars = std::move(names);
  return I;
}

nlohmann::json to_json(const MonomialModule& M, const VarNames& vars) {
  return {{"I", to_json(M.numerator(), vars)}, {"J", to_json(M.denominator(), vars)}};
}

ParsedModule module_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("J")) throw ParseError("module JSON needs 'J'");
  VarNames vars;
  MonomialIdeal J = ideal_from_json(j.at("J"), &vars);
  MonomialIdeal I = MonomialIdeal::unit(vars.size());
  if (j.contains("I")) {
    VarNames ivars;
    I = ideal_from_json(j.at("I"), &ivars);
    if (ivars != vars) throw ParseError("I and J use different variables");
  }
  if (!contains(I, J)) throw ParseError("J is not contained in I");
  return {std::move(vars), MonomialModule(std::move(I), std::move(J))};
}

} // namespace ordlen::io
