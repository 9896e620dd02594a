#include "ordlen/endo_fixture.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ordlen/calculus.hpp"
#include "ordlen/error.hpp"

namespace ordlen::fixture {

namespace {

void require_same_truncation(const EndoTriple& f, const EndoTriple& g) {
  if (f.truncation() != g.truncation()) throw InvalidArgument("truncation mismatch");
}

bool poly_is_zero(const TruncPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncPoly poly_mul(const TruncPoly& a, const TruncPoly& b) {
  const std::size_t n = a.size();
  TruncPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncPoly poly_add(const TruncPoly& a, const TruncPoly& b, int sign = 1) {
  TruncPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sign > 0 ? Rational(a[i] + b[i]) : Rational(a[i] - b[i]);
  return out;
}

// Inverse power series modulo y^N; requires p(0) != 0.
TruncPoly poly_inverse(const TruncPoly& p) {
  const std::size_t n = p.size();
  TruncPoly inv(n);
  inv[0] = 1 / p[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += p[j] * inv[k - j];
    inv[k] = -s / p[0];
  }
  return inv;
}

std::string rational_str(const Rational& r) { return r.str(); }

// Index of the lowest nonzero coefficient, or p.size() for zero.
std::size_t poly_order(const TruncPoly& p) {
  std::size_t i = 0;
  while (i < p.size() && p[i].is_zero()) ++i;
  return i;
}

} // namespace

bool Element::is_zero() const { return a.is_zero() && poly_is_zero(q); }

Element basis_x(std::size_t truncation) { return {1, TruncPoly(truncation)}; }

Element basis_y_power(std::size_t k, std::size_t truncation) {
  if (k == 0 || k > truncation) throw InvalidArgument("y power out of range");
  Element e{0, TruncPoly(truncation)};
  e.q[k - 1] = 1;
  return e;
}

EndoTriple make_triple(const Rational& u, const Rational& v, std::vector<Rational> p,
                       std::size_t truncation) {
  if (p.size() > truncation) throw InvalidArgument("p longer than the truncation");
  p.resize(truncation);
  return {u, v, std::move(p)};
}

EndoTriple identity_endo(std::size_t truncation) { return make_triple(1, 0, {1}, truncation); }
EndoTriple zero_endo(std::size_t truncation) { return make_triple(0, 0, {}, truncation); }
EndoTriple scalar_endo(const Rational& c, std::size_t truncation) {
  return make_triple(c, 0, {c}, truncation);
}

EndoTriple endo_add(const EndoTriple& f, const EndoTriple& g) {
  require_same_truncation(f, g);
  return {f.u + g.u, f.v + g.v, poly_add(f.p, g.p)};
}

EndoTriple endo_sub(const EndoTriple& f, const EndoTriple& g) {
  require_same_truncation(f, g);
  return {f.u - g.u, f.v - g.v, poly_add(f.p, g.p, -1)};
}

EndoTriple endo_scale(const Rational& c, const EndoTriple& f) {
  TruncPoly p = f.p;
  for (auto& x : p) x *= c;
  return {c * f.u, c * f.v, std::move(p)};
}

EndoTriple endo_compose(const EndoTriple& f, const EndoTriple& g) {
  require_same_truncation(f, g);
  return {f.u * g.u, f.u * g.v + f.v * g.p[0], poly_mul(f.p, g.p)};
}

EndoTriple endo_power(const EndoTriple& f, std::size_t k) {
  EndoTriple out = identity_endo(f.truncation());
  for (std::size_t i = 0; i < k; ++i) out = endo_compose(f, out);
  return out;
}

bool is_zero(const EndoTriple& f) { return f.u.is_zero() && f.v.is_zero() && poly_is_zero(f.p); }

Element apply(const EndoTriple& f, const Element& e) {
  if (e.q.size() != f.truncation()) throw InvalidArgument("truncation mismatch");
  return {e.a * f.u + e.q[0] * f.v, poly_mul(e.q, f.p)};
}

std::string to_string(EndoClass c) {
  switch (c) {
  case EndoClass::nilpotent: return "nilpotent";
  case EndoClass::bijective: return "bijective";
  case EndoClass::other: return "other";
  }
  return "other";
}

std::string to_string(const EndoTriple& f) {
  std::ostringstream os;
  os << "(" << rational_str(f.u) << ", " << rational_str(f.v) << ", [";
  for (std::size_t i = 0; i < f.p.size(); ++i) os << (i ? "," : "") << rational_str(f.p[i]);
  os << "])";
  return os.str();
}

EndoClass endo_classify(const EndoTriple& f) {
  if (f.u.is_zero() && poly_is_zero(f.p)) return EndoClass::nilpotent;
  if (!f.u.is_zero() && !f.p[0].is_zero()) return EndoClass::bijective;
  return EndoClass::other;
}

bool endo_kernel_is_open(const EndoTriple& f) {
  const std::size_t n = f.truncation();
  const bool meets_rx = apply(f, basis_x(n)).is_zero();
  const bool meets_ry =
      apply(f, basis_y_power(1, n)).is_zero() || apply(f, basis_y_power(2, n)).is_zero();
  return meets_rx && meets_ry;
}

bool endo_is_monic(const EndoTriple& f) {
  const std::size_t n = f.truncation();
  const bool meets_rx = apply(f, basis_x(n)).is_zero();
  const bool meets_ry =
      apply(f, basis_y_power(1, n)).is_zero() || apply(f, basis_y_power(2, n)).is_zero();
  return !meets_rx && !meets_ry;
}

EndoTriple endo_inverse(const EndoTriple& f) {
  if (endo_classify(f) != EndoClass::bijective) throw InvalidArgument("triple is not bijective");
  EndoTriple g;
  g.u = 1 / f.u;
  g.p = poly_inverse(f.p);
  // From u_f v_g + v_f p_g(0) = 0.
  g.v = -f.v * g.p[0] / f.u;
  return g;
}

std::vector<std::string> kernel_basis_monomials(const EndoTriple& f) {
  const std::size_t n = f.truncation();
  std::vector<std::string> out;
  if (apply(f, basis_x(n)).is_zero()) out.emplace_back("x");
  for (std::size_t k = 1; k < n; ++k) {
    if (apply(f, basis_y_power(k, n)).is_zero()) {
      out.push_back(k == 1 ? std::string("y") : "y^" + std::to_string(k));
    }
  }
  return out;
}

namespace {

struct Family {
  std::vector<EndoTriple> all;
  std::vector<EndoTriple> nilpotent;
};

Family build_family(const FixtureSuiteOptions& o) {
  Family fam;
  const int r = o.coefficient_range;
  for (int u = -r; u <= r; ++u) {
    for (int v = -r; v <= r; ++v) {
      for (int p0 = -r; p0 <= r; ++p0) {
        for (int p1 = -r; p1 <= r; ++p1) {
          fam.all.push_back(make_triple(u, v, {p0, p1}, o.truncation));
        }
      }
    }
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> coef(-r, r);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t s = 0; s < o.random_samples; ++s) {
    std::vector<Rational> p(o.truncation);
    for (auto& c : p) c = coef(rng);
    Rational u = coef(rng);
    // Bias a quarter of the samples toward the non-bijective strata.
    switch (kind(rng)) {
    case 0: u = 0; break;
    case 1: p[0] = 0; break;
    default: break;
    }
    fam.all.push_back(make_triple(u, coef(rng), std::move(p), o.truncation));
  }
  for (const auto& f : fam.all) {
    if (endo_classify(f) == EndoClass::nilpotent) fam.nilpotent.push_back(f);
  }
  return fam;
}

// Nilpotency from the definition: some power vanishes. A zero power counts
// only when truncation modulo y^N cannot have faked it, i.e. p = 0 or
// k * ord(p) < N.
bool nilpotent_by_powers(const EndoTriple& f) {
  const std::size_t n = f.truncation();
  const std::size_t ord = poly_order(f.p);
  EndoTriple pw = f;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const bool exact = ord >= n || k * ord < n;
    if (exact && is_zero(pw)) return true;
    pw = endo_compose(f, pw);
  }
  return false;
}

class Recorder {
public:
  void fail(const std::string& what) {
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void count() { ++checked_; }
  CheckLine line(const std::string& name, const std::string& extra = {}) const {
    std::string detail = extra;
    if (failures_) detail += (detail.empty() ? "" : "; ") + ("first failure: " + first_);
    return {name, failures_ == 0, checked_, detail};
  }

private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

} // namespace

std::vector<CheckLine> check_binendo_suite(const FixtureSuiteOptions& opts) {
  if (opts.truncation < 4) throw InvalidArgument("fixture truncation must be at least 4");
  const std::size_t n = opts.truncation;
  const Family fam = build_family(opts);
  const EndoTriple id = identity_endo(n);
  std::vector<CheckLine> out;

  {
    Recorder rec;
    for (const auto& f : fam.all) {
      rec.count();
      const bool by_class = endo_classify(f) == EndoClass::nilpotent;
      if (by_class != nilpotent_by_powers(f)) rec.fail(to_string(f));
    }
    out.push_back(rec.line("fixture.nilpotent_iff_u_p_zero"));
  }
  {
    Recorder rec;
    for (const auto& f : fam.all) {
      rec.count();
      if (endo_classify(f) == EndoClass::bijective) {
        const EndoTriple g = endo_inverse(f);
        if (!(endo_compose(f, g) == id) || !(endo_compose(g, f) == id)) rec.fail(to_string(f));
      } else if (f.u.is_zero()) {
        if (!apply(f, basis_x(n)).is_zero()) rec.fail(to_string(f));
      } else {
        // p(0) = 0: no basis image has a y-coefficient, so y is not hit.
        bool hits_y = apply(f, basis_x(n)).q[0] != 0;
        for (std::size_t k = 1; k <= n; ++k) hits_y = hits_y || apply(f, basis_y_power(k, n)).q[0] != 0;
        if (hits_y) rec.fail(to_string(f));
      }
    }
    out.push_back(rec.line("fixture.bijective_iff_u_p0_nonzero"));
  }
  {
    Recorder rec;
    const std::size_t J_vars = 2;
    const MonomialIdeal J(J_vars, {Monomial{2, 0}, Monomial{1, 1}});
    const MonomialModule M(MonomialIdeal(J_vars, {Monomial{1, 0}, Monomial{0, 1}}), J);
    const MonomialModule K(MonomialIdeal(J_vars, {Monomial{1, 0}, Monomial{0, 2}}), J);
    const bool kernel_ideal_open = length(K) == length(M);
    std::vector<std::string> expected{"x"};
    for (std::size_t k = 2; k < n; ++k) expected.push_back("y^" + std::to_string(k));
    for (const auto& f : fam.nilpotent) {
      if (is_zero(f)) continue;
      rec.count();
      if (kernel_basis_monomials(f) != expected || !endo_kernel_is_open(f)) rec.fail(to_string(f));
    }
    if (!kernel_ideal_open) rec.fail("len((x,y^2)/J) != len((x,y)/J)");
    out.push_back(rec.line("fixture.nilpotent_kernel_is_x_y2_open",
                           "len((x,y^2)/J) = " + to_string(length(K))));
  }
  {
    Recorder rec;
    for (const auto& f : fam.all) {
      rec.count();
      const bool nil = endo_classify(f) == EndoClass::nilpotent;
      if (nil != endo_kernel_is_open(f)) rec.fail(to_string(f));
    }
    out.push_back(rec.line("fixture.nilpotent_iff_kernel_open"));
  }
  {
    Recorder rec;
    for (const auto& a : fam.nilpotent) {
      for (const auto& b : fam.nilpotent) {
        rec.count();
        if (endo_classify(endo_add(a, b)) != EndoClass::nilpotent) rec.fail(to_string(a) + "+" + to_string(b));
      }
      for (const auto& t : fam.all) {
        rec.count();
        if (endo_classify(endo_compose(t, a)) != EndoClass::nilpotent ||
            endo_classify(endo_compose(a, t)) != EndoClass::nilpotent) {
          rec.fail(to_string(t) + " with " + to_string(a));
        }
      }
    }
    out.push_back(rec.line("fixture.nilpotents_two_sided_ideal"));
  }
  {
    Recorder sq, cube;
    for (const auto& a : fam.nilpotent) {
      for (const auto& b : fam.nilpotent) {
        sq.count();
        if (!is_zero(endo_compose(a, b))) sq.fail(to_string(a) + "*" + to_string(b));
        for (const auto& c : fam.nilpotent) {
          cube.count();
          if (!is_zero(endo_compose(a, endo_compose(b, c)))) cube.fail(to_string(a));
        }
      }
    }
    out.push_back(sq.line("fixture.nilpotent_ideal_square_zero"));
    out.push_back(cube.line("fixture.nilpotent_ideal_cube_zero", "Nagata-Higman bound 3 for w = 2"));
  }
  {
    Recorder rec;
    bool noncommutative = false;
    for (const auto& f : fam.all) {
      for (const auto& g : fam.all) {
        rec.count();
        const EndoTriple c = endo_sub(endo_compose(f, g), endo_compose(g, f));
        if (!is_zero(c)) noncommutative = true;
        if (endo_classify(c) != EndoClass::nilpotent) rec.fail(to_string(f) + "," + to_string(g));
      }
    }
    if (!noncommutative) rec.fail("endomorphism ring looked commutative");
    out.push_back(rec.line("fixture.commutators_nilpotent",
                           noncommutative ? "ring is not commutative" : "no noncommuting pair"));
  }
  {
    Recorder rec;
    for (const auto& h : fam.all) {
      if (!endo_is_monic(h)) continue;
      for (const auto& f : fam.nilpotent) {
        rec.count();
        if (!endo_is_monic(endo_add(h, f))) rec.fail(to_string(h) + "+" + to_string(f));
      }
    }
    out.push_back(rec.line("fixture.monic_plus_nilpotent_monic"));
  }
  {
    Recorder rec;
    for (int lambda = -2; lambda <= 2; ++lambda) {
      if (lambda == 0) continue;
      const EndoTriple u = scalar_endo(lambda, n);
      for (const auto& f : fam.nilpotent) {
        rec.count();
        // (u + f)(u - f) = u^2 when f^2 = 0 and u is central.
        const EndoTriple prod = endo_compose(endo_add(u, f), endo_sub(u, f));
        if (!(prod == endo_compose(u, u))) rec.fail(to_string(f));
        if (endo_classify(endo_add(u, f)) != EndoClass::bijective) rec.fail(to_string(f));
      }
    }
    for (const auto& g : fam.all) {
      if (endo_classify(g) != EndoClass::bijective) continue;
      for (const auto& f : fam.nilpotent) {
        rec.count();
        const EndoTriple s = endo_add(g, f);
        if (endo_classify(s) != EndoClass::bijective || !(endo_compose(s, endo_inverse(s)) == id)) {
          rec.fail(to_string(g) + "+" + to_string(f));
        }
      }
    }
    out.push_back(rec.line("fixture.unit_plus_nilpotent_invertible"));
  }
  {
    Recorder rec;
    const MonomialIdeal J(2, {Monomial{2, 0}, Monomial{1, 1}});
    const MonomialModule M(MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 1}}), J);
    const std::size_t w = ass_poset_length(M);
    const auto valence = fcyc(M).degree();
    for (const auto& f : fam.nilpotent) {
      rec.count();
      if (!is_zero(endo_power(f, w))) rec.fail(to_string(f));
      if (!is_zero(endo_power(f, static_cast<std::size_t>(valence)))) rec.fail(to_string(f));
    }
    if (w != 2) rec.fail("ass poset length " + std::to_string(w));
    out.push_back(rec.line("fixture.nilpotent_power_w_zero",
                           "w = " + std::to_string(w) + ", valence = " + valence.str()));
  }
  return out;
}

} // namespace ordlen::fixture
