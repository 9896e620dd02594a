#pragma once

#include <cstdint>

#include "ordlen/cycle.hpp"
#include "ordlen/module.hpp"

namespace ordlen {

/// Localizes I/J at the monomial prime P by inverting every variable outside
/// P. The result lives in the ring of the |P.gens()| remaining variables (in
/// their original order); the inverted variables are absorbed into the
/// coefficient field.
MonomialModule localize(const MonomialModule& M, const MonomialPrime& P);

/// Length of the zeroth local cohomology of I/J with respect to the ideal of
/// all variables: the number of monomials of I outside J that some power of
/// every variable pushes into J.
///
/// Every such monomial m has m_i < max_i (the largest exponent of x_i among
/// the generators of J): if m_i reached it, the generator absorbing m*x_i^k
/// would already divide m. So the search is confined to that box.
std::uint64_t h0_length(const MonomialModule& M);

/// True when m lies in J : (x_0, ..., x_{n-1})^infinity.
bool in_maximal_saturation(const Monomial& m, const MonomialIdeal& J);

} // namespace ordlen
