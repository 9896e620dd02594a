#include "ordlen/module.hpp"

#include "ordlen/error.hpp"

namespace ordlen {

MonomialModule::MonomialModule(MonomialIdeal I, MonomialIdeal J)
    : I_(std::move(I)), J_(std::move(J)) {
  if (I_.num_vars() != J_.num_vars()) throw InvalidArgument("I and J live in different rings");
  if (!contains(I_, J_)) throw InvalidArgument("J must be contained in I");
}

MonomialModule MonomialModule::quotient(MonomialIdeal J) {
  const auto n = J.num_vars();
  return MonomialModule(MonomialIdeal::unit(n), std::move(J));
}

MonomialModule MonomialModule::submodule(MonomialIdeal I_prime) const {
  if (!contains(I_, I_prime)) throw InvalidArgument("submodule numerator must lie in I");
  return MonomialModule(std::move(I_prime), J_);
}

MonomialModule MonomialModule::quotient_by(const MonomialModule& N) const {
  if (N.J_ != J_ || !contains(I_, N.I_)) throw InvalidArgument("not a submodule");
  return MonomialModule(I_, N.I_);
}

} // namespace ordlen
