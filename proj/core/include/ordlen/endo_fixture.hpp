#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordlen::fixture {

using Rational = boost::multiprecision::cpp_rational;

/// A truncated polynomial in y: coefficients c_0 .. c_{N-1}.
using TruncPoly = std::vector<Rational>;

/// An element a*x + q(y)*y of the maximal ideal M = (x, y) of
/// k[x,y]/(x^2, xy).
struct Element {
  Rational a;
  TruncPoly q;

  bool is_zero() const;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Element x^0 * y^k for k >= 1, or x itself for `x()`.
Element basis_x(std::size_t truncation);
Element basis_y_power(std::size_t k, std::size_t truncation);

/// The endomorphism of M with f(x) = u*x and f(y) = v*x + p(y)*y.
///
/// Because x^2 = xy = 0, any q(y)*x equals q(0)*x, which gives the
/// composition rule (f∘g) = (u_f u_g, u_f v_g + v_f p_g(0), p_f p_g).
struct EndoTriple {
  Rational u;
  Rational v;
  TruncPoly p;

  std::size_t truncation() const noexcept { return p.size(); }
  friend bool operator==(const EndoTriple&, const EndoTriple&) = default;
};

inline constexpr std::size_t kDefaultTruncation = 8;

EndoTriple make_triple(const Rational& u, const Rational& v, std::vector<Rational> p,
                       std::size_t truncation = kDefaultTruncation);
EndoTriple identity_endo(std::size_t truncation = kDefaultTruncation);
EndoTriple zero_endo(std::size_t truncation = kDefaultTruncation);
/// Multiplication by a nonzero scalar: a central automorphism.
EndoTriple scalar_endo(const Rational& c, std::size_t truncation = kDefaultTruncation);

EndoTriple endo_add(const EndoTriple& f, const EndoTriple& g);
EndoTriple endo_sub(const EndoTriple& f, const EndoTriple& g);
EndoTriple endo_scale(const Rational& c, const EndoTriple& f);
/// f after g. Throws InvalidArgument on mismatched truncation.
EndoTriple endo_compose(const EndoTriple& f, const EndoTriple& g);
EndoTriple endo_power(const EndoTriple& f, std::size_t k);
bool is_zero(const EndoTriple& f);

/// f(a x + q y) = (a u + q(0) v) x + (q p) y
Element apply(const EndoTriple& f, const Element& e);

enum class EndoClass { nilpotent, bijective, other };

std::string to_string(EndoClass c);
std::string to_string(const EndoTriple& f);

/// Nilpotent when u = 0 and p = 0; bijective when u != 0 and p(0) != 0.
EndoClass endo_classify(const EndoTriple& f);

/// Kernel openness through witnesses: x (annihilator (x, y)) and y
/// (annihilator (x)). The kernel meets R x iff f(x) = 0; it meets R y iff
/// some q(y) y != 0 is killed, which over the domain k[y] happens iff p = 0,
/// i.e. iff f(y^2) = 0.
bool endo_kernel_is_open(const EndoTriple& f);

/// Injective: the kernel meets neither R x nor R y. Every nonzero submodule
/// of M meets one of them (multiply a x + q y by y), so this is exact.
bool endo_is_monic(const EndoTriple& f);

/// Two-sided inverse modulo y^N for bijective triples (u != 0, p(0) != 0).
EndoTriple endo_inverse(const EndoTriple& f);

/// Basis monomials among x, y, ..., y^(N-1) that f sends to zero.
std::vector<std::string> kernel_basis_monomials(const EndoTriple& f);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;
};

struct FixtureSuiteOptions {
  std::size_t truncation = kDefaultTruncation;
  /// Coefficients of u, v, p_0, p_1 range over [-range, range].
  int coefficient_range = 2;
  /// Extra triples with full-length p drawn from a seeded generator.
  std::size_t random_samples = 64;
  std::uint64_t seed = 1;
};

/// The nilpotent-ideal and classification checks over an exhaustive
/// small-coefficient family plus a seeded random family.
std::vector<CheckLine> check_binendo_suite(const FixtureSuiteOptions& opts = {});

} // namespace ordlen::fixture
