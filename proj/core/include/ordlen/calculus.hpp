#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ordlen/cycle.hpp"
#include "ordlen/module.hpp"
#include "ordlen/ordinal.hpp"

namespace ordlen {

/// Associated primes are found by scanning all 2^n monomial primes.
inline constexpr std::size_t kMaxModuleVars = 12;

/// ann(I/J) = J : I. Requires a nonzero numerator.
MonomialIdeal annihilator(const MonomialModule& M);

/// Fundamental cycle: the sum over monomial primes P of finlen(M_P) [P].
Cycle fcyc(const MonomialModule& M);

/// Ordinal length, computed as the cohomological rank binord(fcyc(M)).
Ordinal length(const MonomialModule& M);

std::set<MonomialPrime> associated_primes(const MonomialModule& M);

struct ModuleProfile {
  Cycle fcyc;
  Ordinal length;
  std::set<MonomialPrime> ass;
  std::optional<std::size_t> dim;   ///< empty for the zero module
  std::optional<std::size_t> order; ///< empty for the zero module
  Natural valence = 0;
  bool is_binary = true;
};

ModuleProfile profile(const MonomialModule& M);

/// D_e(M): the elements whose support avoids every associated prime of
/// dimension > e, i.e. the intersection over those primes P of the kernels
/// of M -> M_P. Throws for e > n.
MonomialModule dim_filtration(const MonomialModule& M, std::size_t e);

struct PrimKernel {
  MonomialModule kernel;   ///< ker(M -> M_P)
  MonomialModule quotient; ///< M / kernel
  bool prime_is_associated = false;
};

/// Kernel of the localization map M -> M_P, computed as (J : s^inf) ∩ I with
/// s the product of the variables outside P.
PrimKernel prim_kernel(const MonomialModule& M, const MonomialPrime& P);

/// N is open in M when both have the same length. N must be a submodule
/// (same denominator, numerator inside M's).
bool is_open_submodule(const MonomialModule& M, const MonomialModule& N);

struct SplitBinary {
  MonomialModule submodule;
  /// One monomial per associated prime whose annihilator in M is that prime.
  std::vector<std::pair<MonomialPrime, Monomial>> witnesses;
};

/// Finds, for every associated prime P, a monomial m of I \ J with J : m = P
/// and returns the submodule they generate together with the witnesses.
/// Throws InvalidArgument for the zero module.
SplitBinary split_binary_submodule(const MonomialModule& M);

/// Openness of N in a binary M tested through witnesses x_P: N is open iff
/// N meets every R x_P nontrivially. Throws InvalidArgument on non-binary M.
bool open_via_witnesses(const MonomialModule& M, const MonomialModule& N);

bool is_univalent(const MonomialModule& M);

struct UnivalentData {
  MonomialPrime prime;
  MonomialIdeal annihilator;
  /// ann(M) equals the unique associated prime.
  bool annihilator_is_prime = false;
};

/// Empty when M is not univalent. Throws InvalidArgument for the zero module.
std::optional<UnivalentData> univalent_data(const MonomialModule& M);

/// Longest chain (counted in elements) of Ass(M) under inclusion.
std::size_t ass_poset_length(const MonomialModule& M);

/// Multiplication by a monomial r on M = I/J.
struct EndoAnalysis {
  Monomial r;
  MonomialModule kernel; ///< ((J : r) ∩ I) / J
  MonomialModule image;  ///< (rI + J) / J
  Ordinal mu;            ///< len M
  Ordinal kappa;         ///< len ker
  Ordinal theta;         ///< len im
  bool reductive = false;             ///< ker r = ker r^2
  bool satisfies_rank_nullity = false; ///< mu = kappa ⊕ theta
  /// Smallest k >= 1 with ker r^k = ker r^(k+1).
  std::size_t reductive_power = 1;
  /// Length of ker(r^k) + r^k M at k = reductive_power.
  Ordinal tectonics_length;
  bool nilpotent = false;
  /// Smallest k with r^k M = 0, when nilpotent.
  std::optional<std::size_t> nilpotency_index;
  bool monic = false;      ///< kernel is zero
  bool open_image = false; ///< theta = mu
  /// r lies in no associated prime of M.
  bool regular = false;
  /// dim(ker) equals order(M).
  bool low_kernel = false;
};

EndoAnalysis mult_endo(const MonomialModule& M, const Monomial& r);

/// ker(r^k) as a submodule of M.
MonomialModule mult_kernel(const MonomialModule& M, const Monomial& r, std::size_t k = 1);
/// r^k M as a submodule of M.
MonomialModule mult_image(const MonomialModule& M, const Monomial& r, std::size_t k = 1);

/// Best-effort search for a monomial submodule of the given length among
/// submodules generated over J by at most `max_generators` monomials of I
/// inside the standard search box. An empty result means "not found at this
/// bound", not that no such submodule exists.
std::optional<MonomialModule> find_submodule_of_length(const MonomialModule& M,
                                                       const Ordinal& target,
                                                       std::size_t max_generators = 2);

/// Monomials in I \ J inside the box where every annihilator is realized:
/// exponent i ranges up to max(largest x_i-exponent of J, of I). Ordered by
/// degree.
std::vector<Monomial> witness_candidates(const MonomialModule& M);

} // namespace ordlen
