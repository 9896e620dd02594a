#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "ordlen/monomial.hpp"

namespace ordlen {

/// The cone head * k[x_S] of standard monomials, with supp(head) ∩ S = ∅.
struct StandardPair {
  Monomial head;
  std::vector<std::size_t> free; ///< sorted variable indices S

  friend bool operator==(const StandardPair&, const StandardPair&) = default;
  friend auto operator<=>(const StandardPair&, const StandardPair&) = default;
};

/// (a, S) <= (b, T): b | a, S ⊆ T and supp(a / b) ⊆ T.
bool pair_dominated_by(const StandardPair& lhs, const StandardPair& rhs);

/// The standard-pair decomposition of I, sorted. Empty for the unit ideal.
///
/// Computed by recursion on the first variable x: a pair either leaves x
/// free (it comes from I : x^infinity in the remaining variables) or has
/// head x^j * a with j below the largest x-exponent of a generator (it comes
/// from the x-free generators of I : x^j). The union of the lifted pairs
/// covers all maximal admissible pairs, and the non-maximal ones are pruned.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& I);

/// Number of standard pairs per free set. For a prime P, the count at the
/// complement of P is the local multiplicity of R/I at P.
std::map<std::vector<std::size_t>, std::uint64_t> pair_counts(const std::vector<StandardPair>& pairs);

} // namespace ordlen
