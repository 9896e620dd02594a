#pragma once

#include <cstddef>

#include "ordlen/monomial.hpp"

namespace ordlen {

/// The subquotient I/J of k[x_0..x_{n-1}] for monomial ideals J ⊆ I.
/// R/J is the case I = (1).
class MonomialModule {
public:
  MonomialModule() = default;
  /// Throws InvalidArgument unless J ⊆ I over the same ring.
  MonomialModule(MonomialIdeal I, MonomialIdeal J);

  /// R/J
  static MonomialModule quotient(MonomialIdeal J);

  std::size_t num_vars() const noexcept { return I_.num_vars(); }
  const MonomialIdeal& numerator() const noexcept { return I_; }
  const MonomialIdeal& denominator() const noexcept { return J_; }
  bool is_zero() const { return I_ == J_; }

  /// The submodule I'/J of this module. Requires J ⊆ I' ⊆ I.
  MonomialModule submodule(MonomialIdeal I_prime) const;
  /// The quotient of this module by the submodule N = I'/J, i.e. I/I'.
  MonomialModule quotient_by(const MonomialModule& N) const;

  friend bool operator==(const MonomialModule&, const MonomialModule&) = default;

private:
  MonomialIdeal I_;
  MonomialIdeal J_;
};

} // namespace ordlen
