#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordlen/cycle.hpp"
#include "ordlen/module.hpp"
#include "ordlen/monomial.hpp"
#include "ordlen/ordinal.hpp"
#include "ordlen/standard_pairs.hpp"

namespace ordlen::io {

/// Variable names of a polynomial ring, in index order.
using VarNames = std::vector<std::string>;

/// "x,y,z" -> {"x","y","z"}. Names are identifiers and must be distinct.
VarNames parse_vars(std::string_view text);
/// Default names x, y, z, then x3, x4, ... for larger rings.
VarNames default_vars(std::size_t n);

/// "x^2*y" -> exponent vector; "1" is the unit monomial.
Monomial parse_monomial(std::string_view text, const VarNames& vars);
std::string format_monomial(const Monomial& m, const VarNames& vars);

/// Comma-separated monomials. "" and "0" give the zero ideal, "1" the unit.
MonomialIdeal parse_ideal(std::string_view text, const VarNames& vars);
/// "x^2, x*y"; the zero ideal is "0".
std::string format_ideal(const MonomialIdeal& I, const VarNames& vars);

/// "[x,y]"; the zero prime is "[0]".
std::string format_prime(const MonomialPrime& P, const VarNames& vars);
/// "x,y" or "0"/"" for the zero prime (brackets optional).
MonomialPrime parse_prime(std::string_view text, const VarNames& vars);
/// "1*[x] + 1*[x,y]"; the zero cycle is "0".
std::string format_cycle(const Cycle& c, const VarNames& vars);

std::string format_pair(const StandardPair& p, const VarNames& vars);

struct ParsedModule {
  VarNames vars;
  MonomialModule module;
};

/// "vars: x,y ; I: 1 ; J: x^2, x*y". The I section may be omitted (R/J).
ParsedModule parse_module(std::string_view text);
std::string format_module(const MonomialModule& M, const VarNames& vars);

/// [[exponent, coefficient], ...] with descending exponents. Coefficients
/// that do not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const Ordinal& a);
Ordinal ordinal_from_json(const nlohmann::json& j);

/// {"n": 2, "terms": [{"prime": [0], "coeff": 1}, ...]}
nlohmann::json to_json(const Cycle& c);
Cycle cycle_from_json(const nlohmann::json& j);

/// {"vars": ["x","y"], "gens": [[2,0],[1,1]]}
nlohmann::json to_json(const MonomialIdeal& I, const VarNames& vars);
MonomialIdeal ideal_from_json(const nlohmann::json& j, VarNames* vars = nullptr);

/// {"I": <ideal json>, "J": <ideal json>}
nlohmann::json to_json(const MonomialModule& M, const VarNames& vars);
ParsedModule module_from_json(const nlohmann::json& j);

} // namespace ordlen::io
