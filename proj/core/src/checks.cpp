#include "ordlen/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ordlen/calculus.hpp"
#include "ordlen/endo_fixture.hpp"
#include "ordlen/error.hpp"
#include "ordlen/io.hpp"
#include "ordlen/local_cohomology.hpp"
#include "ordlen/ordinal.hpp"
#include "ordlen/standard_pairs.hpp"

namespace ordlen::checks {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

class Tally {
public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void count(std::size_t k = 1) { r_.cases += k; }
  void fail(std::string witness) {
    r_.pass = false;
    if (r_.witnesses.size() < kMaxWitnesses) r_.witnesses.push_back(std::move(witness));
  }
  /// Records a failure when `ok` is false; returns ok.
  bool expect(bool ok, const std::string& witness) {
    count();
    if (!ok) fail(witness);
    return ok;
  }
  CheckResult done(std::string detail = {}) {
    r_.detail = std::move(detail);
    return std::move(r_);
  }

private:
  CheckResult r_;
};

std::string show(const MonomialModule& M) {
  return io::format_module(M, io::default_vars(M.num_vars()));
}

std::string show(const MonomialIdeal& I) {
  return "(" + io::format_ideal(I, io::default_vars(I.num_vars())) + ")";
}

// Profiles keyed by presentation; sweeps revisit the same subquotients often.
class ProfileCache {
public:
  const ModuleProfile& get(const MonomialModule& M) {
    auto key = std::make_pair(M.numerator(), M.denominator());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), profile(M)).first;
    return it->second;
  }
  const Ordinal& length(const MonomialModule& M) { return get(M).length; }
  const Ordinal& length(const MonomialIdeal& I, const MonomialIdeal& J) {
    return length(MonomialModule(I, J));
  }

private:
  std::map<std::pair<MonomialIdeal, MonomialIdeal>, ModuleProfile> cache_;
};

std::vector<MonomialModule> sweep_corpus(const CorpusOptions& opts) {
  std::vector<MonomialModule> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(opts.max_vars, 2); ++n) {
    auto pairs = exhaustive_pairs(n, opts.max_deg);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

std::vector<MonomialModule> random_corpus(const CorpusOptions& opts) {
  if (opts.max_vars < 3) return {};
  return random_pairs(3, opts.max_deg, opts.random_pairs, opts.seed);
}

std::vector<MonomialModule> full_corpus(const CorpusOptions& opts) {
  auto out = sweep_corpus(opts);
  auto extra = random_corpus(opts);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<Ordinal> all_small_ordinals(Exponent max_degree, unsigned max_coeff) {
  std::vector<Ordinal> out;
  const std::size_t len = max_degree + 1;
  std::vector<unsigned> c(len, 0);
  while (true) {
    std::vector<Natural> coeffs(c.begin(), c.end());
    out.emplace_back(std::move(coeffs));
    std::size_t i = 0;
    while (i < len && c[i] == max_coeff) c[i++] = 0;
    if (i == len) break;
    ++c[i];
  }
  return out;
}

std::string pair_text(const Ordinal& a, const Ordinal& b) {
  return to_string(a) + " ; " + to_string(b);
}

// Standard monomials of a zero-dimensional ideal, counted in the box of its
// pure powers.
std::size_t count_standard_monomials(const MonomialIdeal& J) {
  std::size_t count = 0;
  for_each_in_box(J.max_exponents(), [&](const Monomial& m) {
    if (!member(m, J)) ++count;
  });
  return count;
}

std::vector<Monomial> multipliers(std::size_t n, Exponent max_deg) {
  return monomials_up_to_degree(n, max_deg);
}

} // namespace

std::vector<MonomialIdeal> all_ideals(std::size_t n, Exponent d) {
  const auto mons = monomials_up_to_degree(n, d);
  std::set<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  // Monomials come in increasing degree, so a later one never divides an
  // earlier one; only divisibility by chosen generators needs checking.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == mons.size()) {
      out.insert(MonomialIdeal(n, chosen));
      return;
    }
    self(self, k + 1);
    const bool blocked = std::any_of(chosen.begin(), chosen.end(),
                                     [&](const Monomial& g) { return g.divides(mons[k]); });
    if (!blocked) {
      chosen.push_back(mons[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return {out.begin(), out.end()};
}

std::vector<MonomialModule> exhaustive_pairs(std::size_t n, Exponent d) {
  const auto ideals = all_ideals(n, d);
  std::vector<MonomialModule> out;
  for (const auto& I : ideals) {
    for (const auto& J : ideals) {
      if (contains(I, J)) out.emplace_back(I, J);
    }
  }
  return out;
}

std::vector<MonomialModule> random_pairs(std::size_t n, Exponent d, std::size_t count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto mons = monomials_up_to_degree(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> ngens(1, 3);
  auto random_ideal = [&] {
    std::vector<Monomial> gens;
    const int k = ngens(rng);
    for (int i = 0; i < k; ++i) gens.push_back(mons[pick(rng)]);
    return MonomialIdeal(n, std::move(gens));
  };
  std::vector<MonomialModule> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    MonomialIdeal I = random_ideal();
    MonomialIdeal C = random_ideal();
    MonomialIdeal J = intersect(I, C);
    out.emplace_back(std::move(I), std::move(J));
  }
  return out;
}

std::vector<MonomialIdeal> sandwich_family(const MonomialModule& M, Exponent d) {
  const MonomialIdeal& I = M.numerator();
  const MonomialIdeal& J = M.denominator();
  std::vector<Monomial> mons;
  for (const auto& m : monomials_up_to_degree(M.num_vars(), d)) {
    if (member(m, I) && !member(m, J)) mons.push_back(m);
  }
  std::set<MonomialIdeal> out{J, I};
  for (std::size_t a = 0; a < mons.size(); ++a) {
    out.insert(ideal_sum(J, MonomialIdeal(M.num_vars(), {mons[a]})));
    for (std::size_t b = a + 1; b < mons.size(); ++b)
      out.insert(ideal_sum(J, MonomialIdeal(M.num_vars(), {mons[a], mons[b]})));
  }
  return {out.begin(), out.end()};
}

std::vector<MonomialIdeal> artinian_ideals(std::size_t n, Exponent d) {
  const MonomialIdeal top = MonomialIdeal::maximal_power(n, d);
  std::set<MonomialIdeal> out;
  for (const auto& A : all_ideals(n, d == 0 ? 0 : d - 1)) out.insert(ideal_sum(A, top));
  return {out.begin(), out.end()};
}

std::vector<CheckResult> check_ordinals(Exponent max_degree, unsigned max_coeff) {
  const auto all = all_small_ordinals(max_degree, max_coeff);
  const std::size_t k = all.size();
  const Ordinal zero;
  std::vector<CheckResult> out;

  // Pairwise sums are tabulated once; associativity then needs one more sum
  // per side and triple.
  std::vector<Ordinal> osum(k * k), ssum(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      osum[i * k + j] = ord_sum(all[i], all[j]);
      ssum[i * k + j] = shuffle_sum(all[i], all[j]);
    }
  }

  // Associativity over every triple. Each distinct sum is computed once by
  // the operation under test and interned, so the triple loop compares ids.
  auto associativity = [&](const char* name, const std::vector<Ordinal>& pair_table,
                           Ordinal (*op)(const Ordinal&, const Ordinal&)) {
    std::map<Ordinal, std::size_t> ids;
    std::vector<const Ordinal*> by_id;
    auto intern = [&](const Ordinal& a) {
      auto [it, inserted] = ids.emplace(a, by_id.size());
      if (inserted) by_id.push_back(&it->first);
      return it->second;
    };
    std::vector<std::size_t> pair_id(k * k);
    for (std::size_t i = 0; i < k * k; ++i) pair_id[i] = intern(pair_table[i]);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    // left[x][l] = id(x op c_l), right[i][x] = id(c_i op x) for interned x.
    std::vector<std::vector<std::size_t>> left, right(k);
    auto left_of = [&](std::size_t x, std::size_t l) {
      if (left.size() <= x) left.resize(x + 1);
      if (left[x].empty()) left[x].assign(k, unset);
      if (left[x][l] == unset) left[x][l] = intern(op(*by_id[x], all[l]));
      return left[x][l];
    };
    auto right_of = [&](std::size_t i, std::size_t x) {
      if (right[i].size() <= x) right[i].resize(x + 1, unset);
      if (right[i][x] == unset) right[i][x] = intern(op(all[i], *by_id[x]));
      return right[i][x];
    };
    Tally t(name);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
          t.count();
          if (left_of(pair_id[i * k + j], l) != right_of(i, pair_id[j * k + l]))
            t.fail(to_string(all[i]) + " ; " + pair_text(all[j], all[l]));
        }
      }
    }
    return t.done(std::to_string(by_id.size()) + " distinct sums");
  };
  out.push_back(associativity("ordinal.sum_associative", osum, &ord_sum));
  out.push_back(associativity("ordinal.shuffle_associative", ssum, &shuffle_sum));
  {
    Tally t("ordinal.identities");
    for (std::size_t i = 0; i < k; ++i) {
      const Ordinal& a = all[i];
      t.expect(ord_sum(a, zero) == a && ord_sum(zero, a) == a && shuffle_sum(a, zero) == a,
               to_string(a));
      for (std::size_t j = 0; j < k; ++j)
        t.expect(ssum[i * k + j] == ssum[j * k + i], pair_text(a, all[j]));
      t.expect(parse_ordinal(to_string(a)) == a, to_string(a));
    }
    out.push_back(t.done("zero is neutral, shuffle commutes, text round-trips"));
  }
  {
    Tally total("ordinal.total_order");
    Tally ext("ordinal.weaker_extends_total");
    Tally diff("ordinal.weaker_iff_difference");
    Tally sum_le("ordinal.sum_le_shuffle");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Ordinal& a = all[i];
        const Ordinal& b = all[j];
        total.expect(leq_total(a, b) || leq_total(b, a), pair_text(a, b));
        const bool w = weaker(a, b);
        if (w) ext.expect(leq_total(a, b), pair_text(a, b));
        bool has_difference = false;
        try {
          const Ordinal g = shuffle_difference(b, a);
          has_difference = shuffle_sum(a, g) == b;
        } catch (const InvalidArgument&) {
        }
        diff.expect(has_difference == w, pair_text(a, b));
        sum_le.expect(leq_total(osum[i * k + j], ssum[i * k + j]), pair_text(a, b));
      }
    }
    // Uniqueness of the difference: a ⊕ · is injective.
    for (const auto& a : all) {
      std::set<Ordinal> images;
      for (const auto& g : all) images.insert(shuffle_sum(a, g));
      diff.expect(images.size() == k, "non-injective shuffle by " + to_string(a));
    }
    out.push_back(total.done());
    out.push_back(ext.done());
    out.push_back(diff.done("difference exists and is unique exactly when weaker"));
    out.push_back(sum_le.done());
  }
  {
    Tally t("ordinal.split_reconstruction");
    for (const auto& a : all) {
      for (std::uint64_t e = 0; e <= max_degree + 1; ++e) {
        const auto [high, low] = split(a, e);
        const bool ok = ord_sum(high, low) == a && shuffle_sum(high, low) == a &&
                        (high.is_zero() || high.order() > e) &&
                        (low.is_zero() || low.degree() <= e);
        t.expect(ok, to_string(a) + " at e=" + std::to_string(e));
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("ordinal.meet_join_lattice");
    // Meets and joins of the family stay inside it, so the bound checks run on
    // a precomputed table of the partial order.
    std::map<Ordinal, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index.emplace(all[i], i);
    std::vector<char> le(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) le[i * k + j] = weaker(all[i], all[j]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Ordinal& a = all[i];
        const Ordinal& b = all[j];
        const auto mi = index.find(meet(a, b));
        const auto ji = index.find(join(a, b));
        if (!t.expect(mi != index.end() && ji != index.end(), pair_text(a, b))) continue;
        const std::size_t m = mi->second, J = ji->second;
        t.expect(le[m * k + i] && le[m * k + j] && le[i * k + J] && le[j * k + J], pair_text(a, b));
        for (std::size_t c = 0; c < k; ++c) {
          if (le[c * k + i] && le[c * k + j] && !le[c * k + m]) t.fail("meet " + pair_text(a, b));
          if (le[i * k + c] && le[j * k + c] && !le[J * k + c]) t.fail("join " + pair_text(a, b));
        }
      }
    }
    out.push_back(t.done("meet is the greatest lower bound, join the least upper bound"));
  }
  return out;
}

std::vector<CheckResult> check_examples() {
  const std::size_t n = 2;
  const io::VarNames vars{"x", "y"};
  const MonomialIdeal J = io::parse_ideal("x^2, x*y", vars);
  const MonomialModule R_J = MonomialModule::quotient(J);
  const MonomialModule yJ(ideal_sum(io::parse_ideal("y", vars), J), J);
  const MonomialModule mJ(io::parse_ideal("x, y", vars), J);
  const Ordinal w{0, 1};
  const Ordinal w1{1, 1};

  std::vector<CheckResult> out;
  Tally t("examples.bivalent_ring");
  t.expect(length(R_J) == w1, "len R/J = " + to_string(length(R_J)));
  t.expect(length(yJ) == w, "len (y)/J = " + to_string(length(yJ)));
  t.expect(length(mJ) == w1, "len (x,y)/J = " + to_string(length(mJ)));
  Cycle expected(n);
  expected.add(MonomialPrime(n, {0}));
  expected.add(MonomialPrime(n, {0, 1}));
  const ModuleProfile p = profile(R_J);
  t.expect(p.fcyc == expected, "fcyc = " + io::format_cycle(p.fcyc, vars));
  t.expect(p.is_binary, "not binary");
  out.push_back(t.done("len R/J = w + 1, len (y)/J = w, len (x,y)/J = w + 1, fcyc = [x] + [x,y]"));
  return out;
}

std::vector<CheckResult> check_domains(std::size_t max_vars) {
  Tally t("domain.length_of_prime_quotients");
  for (std::size_t n = 1; n <= max_vars; ++n) {
    const MonomialModule R = MonomialModule::quotient(MonomialIdeal::zero(n));
    t.expect(length(R) == Ordinal::monomial(n), "len R for n=" + std::to_string(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) gens.push_back(i);
      }
      const MonomialPrime P(n, gens);
      const MonomialModule Q = MonomialModule::quotient(P.ideal());
      t.expect(length(Q) == Ordinal::monomial(P.dim()), show(Q));
    }
  }
  return {t.done("len R/P = w^dim P for every monomial prime, n <= " + std::to_string(max_vars))};
}

std::vector<CheckResult> check_semiadd(const CorpusOptions& opts) {
  ProfileCache cache;
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, const std::vector<MonomialModule>& pairs) {
    Tally t(name);
    Tally fin(name + ".finite_equality");
    for (const auto& N : pairs) {
      const std::size_t n = N.num_vars();
      const MonomialIdeal unit = MonomialIdeal::unit(n);
      const Ordinal& q = cache.length(unit, N.numerator());
      const Ordinal& nl = cache.length(N);
      const Ordinal& m = cache.length(unit, N.denominator());
      t.expect(leq_total(ord_sum(q, nl), m) && leq_total(m, shuffle_sum(q, nl)),
               show(N) + ": Q=" + to_string(q) + " N=" + to_string(nl) + " M=" + to_string(m));
      if (m.is_finite()) fin.expect(shuffle_sum(q, nl) == m, show(N));
    }
    out.push_back(t.done("len Q + len N <= len M <= len Q ⊕ len N"));
    out.push_back(fin.done("finite length: len M = len Q + len N"));
  };
  run("semiadd.exhaustive", sweep_corpus(opts));
  if (opts.max_vars >= 3) run("semiadd.random3", random_corpus(opts));
  return out;
}

std::vector<CheckResult> check_submod(const CorpusOptions& opts) {
  ProfileCache cache;
  Tally mono("submod.weaker_than_module");
  Tally heredity("submod.binary_heredity");
  Tally loc("submod.localization_heredity");
  Tally converse("submod.converse_search");
  std::size_t found = 0, missed = 0;
  for (const auto& M : full_corpus(opts)) {
    const ModuleProfile& pm = cache.get(M);
    const bool sweep = M.num_vars() <= 2;
    for (const auto& Ip : sandwich_family(M, opts.max_deg)) {
      const MonomialModule N = M.submodule(Ip);
      const ModuleProfile& pn = cache.get(N);
      mono.expect(weaker(pn.length, pm.length),
                  show(N) + " in " + show(M.numerator()) + ": " + pair_text(pn.length, pm.length));
      if (pm.is_binary) heredity.expect(pn.is_binary, show(N));
    }
    if (pm.is_binary) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << M.num_vars()); ++mask) {
        std::vector<std::size_t> gens;
        for (std::size_t i = 0; i < M.num_vars(); ++i) {
          if (mask >> i & 1U) gens.push_back(i);
        }
        const MonomialModule L = localize(M, MonomialPrime(M.num_vars(), gens));
        loc.expect(profile(L).is_binary, show(M) + " at " + std::to_string(mask));
      }
      // Binary lengths below len M are the sub-supports; search a small
      // generated submodule for each.
      if (sweep && pm.valence <= 3 && !M.is_zero()) {
        const auto supp = pm.length.support();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << supp.size()); ++s) {
          Ordinal target;
          for (std::size_t b = 0; b < supp.size(); ++b) {
            if (s >> b & 1U) target = shuffle_sum(target, Ordinal::monomial(supp[b]));
          }
          converse.count();
          if (find_submodule_of_length(M, target)) ++found;
          else ++missed;
        }
      }
    }
  }
  std::vector<CheckResult> out;
  out.push_back(mono.done("len N ⪯ len M for every sandwiched N"));
  out.push_back(heredity.done("submodules of binary modules are binary"));
  out.push_back(loc.done("localizations of binary modules are binary"));
  out.push_back(converse.done("found " + std::to_string(found) + "; not found at bound " +
                              std::to_string(missed) + " (not counterexamples)"));
  return out;
}

std::vector<CheckResult> check_latt(const CorpusOptions& opts) {
  ProfileCache cache;
  Tally law("latt.intersection_is_meet");
  Tally join_le("latt.join_weaker_than_sum");
  Tally strict("latt.strict_join_found");
  std::string strict_example;
  std::size_t binary_modules = 0;
  for (const auto& M : sweep_corpus(opts)) {
    const ModuleProfile& pm = cache.get(M);
    const bool binary_length = pm.length.is_binary();
    binary_modules += binary_length ? 1 : 0;
    const MonomialIdeal& J = M.denominator();
    const auto fam = sandwich_family(M, opts.max_deg);
    for (std::size_t a = 0; a < fam.size(); ++a) {
      const Ordinal& la = cache.length(fam[a], J);
      for (std::size_t b = a; b < fam.size(); ++b) {
        const Ordinal& lb = cache.length(fam[b], J);
        if (binary_length) {
          const Ordinal& li = cache.length(intersect(fam[a], fam[b]), J);
          law.expect(li == meet(la, lb), show(M) + ": N=" + show(fam[a]) + " N'=" + show(fam[b]));
        }
        const Ordinal j = join(la, lb);
        const Ordinal& ls = cache.length(ideal_sum(fam[a], fam[b]), J);
        join_le.expect(weaker(j, ls), show(M) + ": N=" + show(fam[a]) + " N'=" + show(fam[b]));
        if (j != ls) {
          strict.count();
          if (strict_example.empty()) {
            strict_example = show(M) + ", N=" + show(fam[a]) + ", N'=" + show(fam[b]) + ": " +
                             to_string(la) + " v " + to_string(lb) + " = " + to_string(j) +
                             " < " + to_string(ls);
          }
        }
      }
    }
  }
  if (strict_example.empty()) strict.fail("no instance with len N v len N' strictly below len(N + N')");

  // In k[x,y]/(x^2, xy) the monomial pair (y), (x) has join equal to the
  // length of its sum.
  Tally bivalent("latt.bivalent_ring_join");
  {
    const io::VarNames vars{"x", "y"};
    const MonomialIdeal J = io::parse_ideal("x^2, x*y", vars);
    const MonomialIdeal Y = ideal_sum(io::parse_ideal("y", vars), J);
    const MonomialIdeal X = io::parse_ideal("x", vars);
    const Ordinal j = join(cache.length(Y, J), cache.length(X, J));
    bivalent.expect(j == Ordinal{1, 1} && j == cache.length(ideal_sum(X, Y), J),
                    "join = " + to_string(j));
  }

  // Outside binary length the law can fail: in k[x,y]/(xy), (x) ∩ (y) = 0.
  Tally needs("latt.fails_outside_binary_length");
  {
    const io::VarNames vars{"x", "y"};
    const MonomialIdeal J = io::parse_ideal("x*y", vars);
    const MonomialIdeal X = io::parse_ideal("x", vars);
    const MonomialIdeal Y = io::parse_ideal("y", vars);
    const Ordinal lx = cache.length(X, J), ly = cache.length(Y, J);
    const Ordinal li = cache.length(intersect(X, Y), J);
    needs.expect(!cache.length(MonomialIdeal::unit(2), J).is_binary() && li != meet(lx, ly),
                 "expected failure in k[x,y]/(xy) not reproduced");
  }
  std::vector<CheckResult> out;
  out.push_back(law.done(std::to_string(binary_modules) + " modules of binary length"));
  out.push_back(join_le.done());
  out.push_back(strict.done(strict_example));
  out.push_back(bivalent.done("k[x,y]/(x^2, xy): len (y) v len (x) = w v 1 = w + 1 = len (x,y)"));
  out.push_back(needs.done("k[x,y]/(xy): len((x) ∩ (y)) = 0 but meet(w, w) = w"));
  return out;
}

std::vector<CheckResult> check_dimfil(const CorpusOptions& opts) {
  ProfileCache cache;
  Tally lengths("dimfil.lengths");
  Tally graded("dimfil.graded_pieces");
  Tally ord("dimfil.first_nonzero_is_order");
  for (const auto& M : full_corpus(opts)) {
    const ModuleProfile& pm = cache.get(M);
    if (!pm.is_binary) continue;
    const std::size_t n = M.num_vars();
    const MonomialIdeal& J = M.denominator();
    MonomialIdeal previous = J;
    std::optional<std::size_t> first_nonzero;
    for (std::size_t e = 0; e <= n; ++e) {
      const MonomialModule D = dim_filtration(M, e);
      const auto [high, low] = split(pm.length, e);
      const Ordinal& ld = cache.length(D);
      const Ordinal& lq = cache.length(M.quotient_by(D));
      lengths.expect(ld == low && lq == high,
                     show(M) + " e=" + std::to_string(e) + ": " + pair_text(ld, lq));
      std::size_t v_e = 0;
      for (const auto& P : pm.ass) v_e += P.dim() == e ? 1 : 0;
      const Ordinal& piece = cache.length(D.numerator(), previous);
      graded.expect(piece == Ordinal::monomial(e, v_e),
                    show(M) + " e=" + std::to_string(e) + ": " + to_string(piece));
      if (!first_nonzero && !D.is_zero()) first_nonzero = e;
      previous = D.numerator();
    }
    if (!M.is_zero()) ord.expect(first_nonzero == pm.order, show(M));
  }
  return {lengths.done("len D_e = low part, len M/D_e = high part"),
          graded.done("len D_e/D_{e-1} = v_e w^e"), ord.done()};
}

std::vector<CheckResult> check_primmin(const CorpusOptions& opts) {
  ProfileCache cache;
  Tally ass("primmin.quotient_primes");
  Tally len("primmin.length_split");
  for (const auto& M : full_corpus(opts)) {
    const ModuleProfile& pm = cache.get(M);
    if (!pm.is_binary || M.is_zero()) continue;
    for (const auto& P : pm.ass) {
      const PrimKernel pk = prim_kernel(M, P);
      std::set<MonomialPrime> expected;
      for (const auto& q : pm.ass) {
        if (q.is_subset_of(P)) expected.insert(q);
      }
      const ModuleProfile& pq = cache.get(pk.quotient);
      const std::string where = show(M) + " at " + io::format_prime(P, io::default_vars(M.num_vars()));
      ass.expect(pq.ass == expected, where);
      len.expect(shuffle_sum(cache.length(pk.kernel), pq.length) == pm.length, where);
    }
  }
  return {ass.done("Ass(M/prim) = primes of M inside P"), len.done("len prim ⊕ len M/prim = len M")};
}

std::vector<CheckResult> check_maxassopen(const CorpusOptions& opts) {
  ProfileCache cache;
  Tally t("maxassopen.maximal_embedded_prime_open");
  std::size_t rings = 0;
  for (std::size_t n = 1; n <= std::min<std::size_t>(opts.max_vars, 3); ++n) {
    for (const auto& J : all_ideals(n, n <= 2 ? opts.max_deg : std::min<Exponent>(opts.max_deg, 2))) {
      const MonomialModule M = MonomialModule::quotient(J);
      const ModuleProfile& pm = cache.get(M);
      if (!pm.is_binary) continue;
      std::vector<MonomialPrime> embedded;
      for (const auto& P : pm.ass) {
        const bool emb = std::any_of(pm.ass.begin(), pm.ass.end(), [&](const MonomialPrime& q) {
          return q != P && q.is_subset_of(P);
        });
        if (emb) embedded.push_back(P);
      }
      if (embedded.empty()) continue;
      ++rings;
      for (const auto& P : embedded) {
        const bool maximal = std::none_of(embedded.begin(), embedded.end(), [&](const MonomialPrime& q) {
          return q != P && P.is_subset_of(q);
        });
        if (!maximal) continue;
        const Ordinal& lp = cache.length(ideal_sum(P.ideal(), J), J);
        t.expect(lp == pm.length, show(M) + " at " + io::format_prime(P, io::default_vars(n)) +
                                      ": " + pair_text(lp, pm.length));
      }
    }
  }
  return {t.done(std::to_string(rings) + " binary rings with embedded primes")};
}

std::vector<CheckResult> check_endo_mult(const CorpusOptions& opts) {
  ProfileCache cache;
  Tally bounds("endo.rank_nullity_bounds");
  Tally monic("endo.monic_iff_open_image");
  Tally regular("endo.regular_iff_open_image");
  Tally openker("endo.open_kernel_implies_nilpotent");
  Tally binnil("endo.binary_nilpotent_iff_open_kernel");
  Tally valpow("endo.binary_nilpotent_power_valence");
  Tally nilpow("endo.binary_nilpotent_power_ass_length");
  Tally redpow("endo.binary_reductive_power_le_valence");
  Tally rkred("endo.rank_nullity_at_reductive_power");
  Tally unmixed("endo.unmixed_rank_nullity");
  Tally lowker("endo.low_kernel_rank_nullity");
  Tally tec("endo.tectonics_open");
  for (const auto& M : full_corpus(opts)) {
    const ModuleProfile& pm = cache.get(M);
    const std::size_t w = M.is_zero() ? 0 : ass_poset_length(M);
    const std::size_t v = pm.valence.convert_to<std::size_t>();
    for (const auto& r : multipliers(M.num_vars(), 2)) {
      const EndoAnalysis a = mult_endo(M, r);
      const std::string where =
          show(M) + ", r=" + io::format_monomial(r, io::default_vars(M.num_vars()));
      bounds.expect(weaker(a.kappa, a.mu) && weaker(a.theta, a.mu) &&
                        leq_total(ord_sum(a.theta, a.kappa), a.mu) &&
                        leq_total(a.mu, shuffle_sum(a.theta, a.kappa)),
                    where);
      monic.expect(a.monic == a.open_image, where);
      regular.expect(a.regular == a.open_image, where);
      const bool open_kernel = a.kappa == a.mu;
      if (open_kernel) openker.expect(a.nilpotent, where);
      if (pm.is_binary && !M.is_zero()) {
        binnil.expect(a.nilpotent == open_kernel, where);
        if (a.nilpotent) {
          valpow.expect(*a.nilpotency_index <= v, where);
          nilpow.expect(*a.nilpotency_index <= w, where);
        }
        redpow.expect(a.reductive_power <= std::max<std::size_t>(v, 1), where);
      }
      const EndoAnalysis ak = mult_endo(M, r.pow(static_cast<Exponent>(a.reductive_power)));
      rkred.expect(ak.reductive && ak.satisfies_rank_nullity, where);
      tec.expect(a.tectonics_length == a.mu, where);
      if (pm.dim && pm.dim == pm.order) unmixed.expect(a.satisfies_rank_nullity, where);
      if (a.low_kernel) lowker.expect(a.satisfies_rank_nullity, where);
    }
  }
  return {bounds.done("θ + κ <= μ <= θ ⊕ κ, κ ⪯ μ, θ ⪯ μ"),
          monic.done(), regular.done(), openker.done(), binnil.done(),
          valpow.done("r^v M = 0 at v = valence"), nilpow.done("r^w M = 0 at w = length of Ass"),
          redpow.done(), rkred.done(), unmixed.done(), lowker.done(),
          tec.done("ker r^k + r^k M is open at the reductive power")};
}

std::vector<CheckResult> check_oracle_artinian(const CorpusOptions& opts) {
  Tally chain("oracle.chain_equals_length");
  Tally realized("oracle.every_length_realized");
  Tally finite("oracle.finite_semiadd");
  Tally endos("oracle.endo_theorems");
  Tally sample("oracle.random3_chain_equals_length");
  std::size_t endo_modules = 0, endo_maps = 0, non_reductive = 0, simple = 0;
  std::size_t max_dim = 0;
  std::map<MonomialIdeal, std::size_t> chains;
  auto chain_of = [&](const MonomialModule& M) {
    auto key = M.numerator().is_unit() ? std::optional<MonomialIdeal>(M.denominator()) : std::nullopt;
    if (key) {
      auto it = chains.find(*key);
      if (it != chains.end()) return it->second;
    }
    const auto F = oracle::FiniteModule::from_subquotient(M);
    const std::size_t c = oracle::longest_chain(F, opts.max_oracle_dim);
    if (key) chains.emplace(*key, c);
    return c;
  };
  for (std::size_t n = 1; n <= std::min<std::size_t>(opts.max_vars, 2); ++n) {
    const auto ideals = artinian_ideals(n, 4);
    for (const auto& J : ideals) {
      const MonomialModule M = MonomialModule::quotient(J);
      const auto F = oracle::FiniteModule::from_subquotient(M);
      max_dim = std::max(max_dim, F.dim());
      const std::size_t c = chain_of(M);
      const Ordinal len = length(M);
      const auto pairs = standard_pairs(J);
      const bool pairs_finite = std::all_of(pairs.begin(), pairs.end(),
                                            [](const StandardPair& p) { return p.free.empty(); });
      chain.expect(len == Ordinal::finite(c) && count_standard_monomials(J) == c &&
                       pairs_finite && pairs.size() == c,
                   show(M) + ": chain " + std::to_string(c) + ", len " + to_string(len));

      std::set<std::size_t> dims;
      for (const auto& S : oracle::enumerate_submodules(F, opts.max_oracle_dim)) dims.insert(S.dim());
      realized.expect(dims.size() == c + 1, show(M));

      for (const auto& m : monomials_up_to_degree(n, 3)) {
        if (member(m, J)) continue;
        const MonomialIdeal I = ideal_sum(J, MonomialIdeal(n, {m}));
        const std::size_t lq = chain_of(MonomialModule::quotient(I));
        const std::size_t ln = oracle::longest_chain(
            oracle::FiniteModule::from_subquotient(MonomialModule(I, J)), opts.max_oracle_dim);
        finite.expect(lq + ln == c, show(MonomialModule(I, J)));
      }

      if (F.dim() <= oracle::kDefaultMaxEndoDim) {
        const auto rep = oracle::check_endo_theorems(F);
        ++endo_modules;
        endo_maps += rep.endomorphisms;
        non_reductive += rep.non_reductive;
        simple += rep.simple ? 1 : 0;
        endos.expect(rep.ok(), show(M) + ": " + rep.failure);
      }
    }
  }
  if (opts.max_vars >= 3) {
    std::mt19937_64 rng(opts.seed);
    const auto mons = monomials_up_to_degree(3, 2);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int s = 0; s < 20; ++s) {
      std::vector<Monomial> gens = MonomialIdeal::maximal_power(3, 3).gens();
      for (int g = 0; g < 2; ++g) gens.push_back(mons[pick(rng)]);
      const MonomialModule M = MonomialModule::quotient(MonomialIdeal(3, gens));
      const auto F = oracle::FiniteModule::from_subquotient(M);
      if (F.dim() > opts.max_oracle_dim) continue;
      const std::size_t c = oracle::longest_chain(F, opts.max_oracle_dim);
      sample.expect(length(M) == Ordinal::finite(c), show(M));
    }
  }
  std::vector<CheckResult> out;
  out.push_back(chain.done("longest F2 chain = length = standard monomials = standard pairs; max dim " +
                           std::to_string(max_dim)));
  out.push_back(realized.done("every length 0..len M occurs as a submodule"));
  out.push_back(finite.done("chain(I/J) + chain(R/I) = chain(R/J)"));
  out.push_back(endos.done(std::to_string(endo_modules) + " modules, " + std::to_string(endo_maps) +
                           " endomorphisms, " + std::to_string(non_reductive) + " non-reductive, " +
                           std::to_string(simple) + " simple"));
  if (opts.max_vars >= 3) out.push_back(sample.done());
  return out;
}

std::vector<CheckResult> check_endo_fixture(const CorpusOptions& opts) {
  std::vector<CheckResult> out;
  std::set<std::size_t> truncations{4, opts.truncation};
  for (std::size_t N : truncations) {
    fixture::FixtureSuiteOptions fo;
    fo.truncation = N;
    fo.seed = opts.seed;
    for (auto& line : fixture::check_binendo_suite(fo)) {
      CheckResult r;
      r.name = line.name + "[N=" + std::to_string(N) + "]";
      r.pass = line.pass;
      r.cases = line.cases;
      r.detail = line.detail;
      out.push_back(std::move(r));
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "ordinal", "examples", "domain",     "semiadd",         "submod",      "latt",
      "dimfil",  "primmin",  "maxassopen", "endo-mult", "oracle-artinian", "endo-fixture"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const CorpusOptions& opts) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "ordinal") return check_ordinals();
  if (name == "examples") return check_examples();
  if (name == "domain") return check_domains(std::max<std::size_t>(opts.max_vars, 1));
  if (name == "semiadd") return check_semiadd(opts);
  if (name == "submod") return check_submod(opts);
  if (name == "latt") return check_latt(opts);
  if (name == "dimfil") return check_dimfil(opts);
  if (name == "primmin") return check_primmin(opts);
  if (name == "maxassopen") return check_maxassopen(opts);
  if (name == "endo-mult") return check_endo_mult(opts);
  if (name == "oracle-artinian") return check_oracle_artinian(opts);
  if (name == "endo-fixture") return check_endo_fixture(opts);
  throw InvalidArgument("unknown check suite '" + name + "'");
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "CHECK " << r.name << (r.pass ? " PASS " : " FAIL ") << r.cases << " cases";
    if (!r.detail.empty()) os << "; " << r.detail;
    os << '\n';
    for (const auto& w : r.witnesses) os << "  witness: " << w << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  auto checks = nlohmann::json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"status", r.pass ? "PASS" : "FAIL"},
                      {"cases", r.cases},
                      {"detail", r.detail},
                      {"witnesses", r.witnesses}});
  }
  return {{"pass", all_pass(results)}, {"checks", checks}};
}

} // namespace ordlen::checks
