#include "ordlen/calculus.hpp"

#include <algorithm>
#include <map>

#include "ordlen/error.hpp"
#include "ordlen/local_cohomology.hpp"

namespace ordlen {

namespace {

void guard_vars(const MonomialModule& M) {
  if (M.num_vars() > kMaxModuleVars) {
    throw GuardError("module has " + std::to_string(M.num_vars()) +
                     " variables; at most " + std::to_string(kMaxModuleVars) + " supported");
  }
}

MonomialPrime prime_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) gens.push_back(i);
  }
  return MonomialPrime(n, std::move(gens));
}

bool monomial_in_prime(const Monomial& r, const MonomialPrime& P) {
  const auto supp = r.support();
  return std::any_of(supp.begin(), supp.end(),
                     [&](std::size_t v) { return P.contains_variable(v); });
}

} // namespace

MonomialIdeal annihilator(const MonomialModule& M) {
  if (M.numerator().is_zero()) throw InvalidArgument("annihilator of the zero module");
  return colon_ideal(M.denominator(), M.numerator());
}

Cycle fcyc(const MonomialModule& M) {
  guard_vars(M);
  const std::size_t n = M.num_vars();
  Cycle out(n);
  if (M.is_zero()) return out;
  const MonomialIdeal ann = annihilator(M);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    MonomialPrime P = prime_from_mask(n, mask);
    // M_P = 0 unless ann(M) ⊆ P.
    if (!contains(P.ideal(), ann)) continue;
    const auto h = h0_length(localize(M, P));
    if (h != 0) out.add(P, h);
  }
  return out;
}

Ordinal length(const MonomialModule& M) { return binord(fcyc(M)); }

std::set<MonomialPrime> associated_primes(const MonomialModule& M) { return fcyc(M).support(); }

ModuleProfile profile(const MonomialModule& M) {
  ModuleProfile p;
  p.fcyc = fcyc(M);
  p.length = binord(p.fcyc);
  p.ass = p.fcyc.support();
  p.valence = p.fcyc.degree();
  p.is_binary = p.fcyc.is_binary();
  if (!p.length.is_zero()) {
    p.dim = static_cast<std::size_t>(p.length.degree());
    p.order = static_cast<std::size_t>(p.length.order());
  }
  return p;
}

MonomialModule dim_filtration(const MonomialModule& M, std::size_t e) {
  if (e > M.num_vars()) {
    throw InvalidArgument("filtration index " + std::to_string(e) + " exceeds variable count");
  }
  MonomialIdeal D = M.numerator();
  for (const auto& P : associated_primes(M)) {
    if (P.dim() > e) D = intersect(D, saturate(M.denominator(), P.complement_monomial()));
  }
  return MonomialModule(std::move(D), M.denominator());
}

PrimKernel prim_kernel(const MonomialModule& M, const MonomialPrime& P) {
  if (P.num_vars() != M.num_vars()) throw InvalidArgument("prime and module rings differ");
  MonomialIdeal K =
      intersect(M.numerator(), saturate(M.denominator(), P.complement_monomial()));
  MonomialModule kernel(K, M.denominator());
  MonomialModule quotient(M.numerator(), std::move(K));
  const auto ass = associated_primes(M);
  return {std::move(kernel), std::move(quotient), ass.count(P) != 0};
}

bool is_open_submodule(const MonomialModule& M, const MonomialModule& N) {
  if (N.denominator() != M.denominator() || !contains(M.numerator(), N.numerator())) {
    throw InvalidArgument("not a submodule");
  }
  return length(N) == length(M);
}

std::vector<Monomial> witness_candidates(const MonomialModule& M) {
  const auto dj = M.denominator().max_exponents();
  const auto di = M.numerator().max_exponents();
  std::vector<Exponent> bound(M.num_vars());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < bound.size(); ++i) {
    bound[i] = std::max(dj[i], di[i]);
    total += bound[i];
  }
  std::vector<Monomial> out;
  for (auto& m : monomials_up_to_degree(M.num_vars(), static_cast<Exponent>(total))) {
    bool in_box = true;
    for (std::size_t i = 0; i < bound.size(); ++i) in_box = in_box && m[i] <= bound[i];
    if (in_box && member(m, M.numerator()) && !member(m, M.denominator())) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

SplitBinary split_binary_submodule(const MonomialModule& M) {
  if (M.is_zero()) throw InvalidArgument("split_binary_submodule of the zero module");
  const auto ass = associated_primes(M);
  std::map<MonomialPrime, Monomial> found;
  for (const auto& m : witness_candidates(M)) {
    if (found.size() == ass.size()) break;
    const MonomialIdeal ann = colon_mono(M.denominator(), m);
    for (const auto& P : ass) {
      if (!found.count(P) && ann == P.ideal()) {
        found.emplace(P, m);
        break;
      }
    }
  }
  if (found.size() != ass.size()) {
    throw Error("witness search exhausted before realizing every associated prime");
  }
  SplitBinary out;
  std::vector<Monomial> gens = M.denominator().gens();
  for (const auto& [P, m] : found) {
    out.witnesses.emplace_back(P, m);
    gens.push_back(m);
  }
  out.submodule = MonomialModule(MonomialIdeal(M.num_vars(), std::move(gens)), M.denominator());
  return out;
}

bool open_via_witnesses(const MonomialModule& M, const MonomialModule& N) {
  if (N.denominator() != M.denominator() || !contains(M.numerator(), N.numerator())) {
    throw InvalidArgument("not a submodule");
  }
  if (!profile(M).is_binary) throw InvalidArgument("requires binary module");
  if (M.is_zero()) return true;
  const auto& J = M.denominator();
  for (const auto& [P, x] : split_binary_submodule(M).witnesses) {
    const MonomialIdeal cyclic = ideal_sum(MonomialIdeal(M.num_vars(), {x}), J);
    if (contains(J, intersect(N.numerator(), cyclic))) return false;
  }
  return true;
}

bool is_univalent(const MonomialModule& M) { return fcyc(M).degree() == 1; }

std::optional<UnivalentData> univalent_data(const MonomialModule& M) {
  if (M.is_zero()) throw InvalidArgument("univalent_data of the zero module");
  const Cycle c = fcyc(M);
  if (c.degree() != 1) return std::nullopt;
  UnivalentData d;
  d.prime = c.terms().begin()->first;
  d.annihilator = annihilator(M);
  d.annihilator_is_prime = d.annihilator == d.prime.ideal();
  return d;
}

std::size_t ass_poset_length(const MonomialModule& M) {
  std::vector<MonomialPrime> ass;
  for (const auto& P : associated_primes(M)) ass.push_back(P);
  if (ass.empty()) throw InvalidArgument("ass_poset_length of the zero module");
  std::sort(ass.begin(), ass.end(), [](const auto& a, const auto& b) {
    return a.gens().size() < b.gens().size();
  });
  // chain[i]: longest chain ending at ass[i]; proper inclusions only go to
  // strictly larger generator sets, which come later in this order.
  std::vector<std::size_t> chain(ass.size(), 1);
  std::size_t best = 1;
  for (std::size_t i = 0; i < ass.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (ass[j] != ass[i] && ass[j].is_subset_of(ass[i])) {
        chain[i] = std::max(chain[i], chain[j] + 1);
      }
    }
    best = std::max(best, chain[i]);
  }
  return best;
}

MonomialModule mult_kernel(const MonomialModule& M, const Monomial& r, std::size_t k) {
  const Monomial rk = r.pow(static_cast<Exponent>(k));
  return MonomialModule(intersect(colon_mono(M.denominator(), rk), M.numerator()),
                        M.denominator());
}

MonomialModule mult_image(const MonomialModule& M, const Monomial& r, std::size_t k) {
  const Monomial rk = r.pow(static_cast<Exponent>(k));
  return MonomialModule(ideal_sum(product(rk, M.numerator()), M.denominator()),
                        M.denominator());
}

EndoAnalysis mult_endo(const MonomialModule& M, const Monomial& r) {
  if (r.num_vars() != M.num_vars()) throw InvalidArgument("multiplier lives in a different ring");
  EndoAnalysis a;
  a.r = r;
  a.kernel = mult_kernel(M, r);
  a.image = mult_image(M, r);
  const ModuleProfile pm = profile(M);
  a.mu = pm.length;
  a.kappa = length(a.kernel);
  a.theta = length(a.image);
  a.reductive = a.kernel == mult_kernel(M, r, 2);
  a.satisfies_rank_nullity = a.mu == shuffle_sum(a.kappa, a.theta);
  a.monic = a.kernel.is_zero();
  a.open_image = a.theta == a.mu;
  a.regular = std::none_of(pm.ass.begin(), pm.ass.end(),
                           [&](const MonomialPrime& P) { return monomial_in_prime(r, P); });
  a.low_kernel = !a.kappa.is_zero() && pm.order && a.kappa.degree() == *pm.order;

  // The kernel chain stabilizes once every exponent of r^k reaches the
  // corresponding exponent bound of J.
  const auto bound = M.denominator().max_exponents();
  Exponent limit = 1;
  for (auto b : bound) limit = std::max(limit, b + 1);
  std::size_t k = 1;
  MonomialModule ker_k = a.kernel;
  while (true) {
    MonomialModule ker_next = mult_kernel(M, r, k + 1);
    if (ker_next == ker_k) break;
    if (k > limit) throw Error("kernel chain failed to stabilize");
    ker_k = std::move(ker_next);
    ++k;
  }
  a.reductive_power = k;
  const MonomialModule im_k = mult_image(M, r, k);
  a.tectonics_length =
      length(MonomialModule(ideal_sum(ker_k.numerator(), im_k.numerator()), M.denominator()));
  a.nilpotent = im_k.is_zero();
  if (a.nilpotent) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (mult_image(M, r, j).is_zero()) {
        a.nilpotency_index = j;
        break;
      }
    }
  }
  return a;
}

std::optional<MonomialModule> find_submodule_of_length(const MonomialModule& M,
                                                       const Ordinal& target,
                                                       std::size_t max_generators) {
  const auto& J = M.denominator();
  if (target.is_zero()) return MonomialModule(J, J);
  if (length(M) == target) return M;
  const auto pool = witness_candidates(M);
  std::vector<std::size_t> pick;
  std::optional<MonomialModule> result;
  // Depth-first over index subsets of increasing size.
  auto search = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
    if (!pick.empty()) {
      std::vector<Monomial> gens = J.gens();
      for (auto i : pick) gens.push_back(pool[i]);
      MonomialModule N(MonomialIdeal(M.num_vars(), std::move(gens)), J);
      if (length(N) == target) {
        result = std::move(N);
        return true;
      }
    }
    if (depth == max_generators) return false;
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(i);
      if (self(self, i + 1, depth + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  search(search, 0, 0);
  return result;
}

} // namespace ordlen
