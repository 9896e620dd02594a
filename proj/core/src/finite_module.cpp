#include "ordlen/finite_module.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "ordlen/error.hpp"

namespace ordlen::oracle {

namespace {

int leading_bit(F2Vector v) { return 31 - std::countl_zero(v); }

} // namespace

F2Matrix F2Matrix::identity(std::size_t d) {
  std::vector<F2Vector> c(d);
  for (std::size_t j = 0; j < d; ++j) c[j] = F2Vector{1} << j;
  return F2Matrix(std::move(c));
}

F2Vector F2Matrix::apply(F2Vector v) const {
  F2Vector out = 0;
  while (v != 0) {
    const int j = std::countr_zero(v);
    out ^= cols_[static_cast<std::size_t>(j)];
    v &= v - 1;
  }
  return out;
}

bool F2Matrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](F2Vector c) { return c == 0; });
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  std::vector<F2Vector> c(b.dim());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.apply(b.cols_[j]);
  return F2Matrix(std::move(c));
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
  std::vector<F2Vector> c(a.dim());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.cols_[j] ^ b.cols_[j];
  return F2Matrix(std::move(c));
}

F2Matrix power(const F2Matrix& a, std::size_t k) {
  F2Matrix out = F2Matrix::identity(a.dim());
  for (std::size_t i = 0; i < k; ++i) out = a * out;
  return out;
}

Subspace Subspace::span(const std::vector<F2Vector>& vectors) {
  Subspace s;
  for (auto v : vectors) s.insert(v);
  return s;
}

F2Vector Subspace::reduce(F2Vector v) const {
  for (auto b : basis_) {
    if (v >> leading_bit(b) & 1U) v ^= b;
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](F2Vector v) { return contains(v); });
}

bool Subspace::insert(F2Vector v) {
  const F2Vector r = reduce(v);
  if (r == 0) return false;
  const int p = leading_bit(r);
  for (auto& b : basis_) {
    if (b >> p & 1U) b ^= r;
  }
  basis_.push_back(r);
  std::sort(basis_.begin(), basis_.end(),
            [](F2Vector a, F2Vector b) { return leading_bit(a) < leading_bit(b); });
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Zassenhaus would do; the subspaces here are tiny, so enumerate a.
  Subspace out;
  const std::size_t k = a.dim();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    F2Vector v = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) v ^= a.basis()[i];
    }
    if (b.contains(v)) out.insert(v);
  }
  return out;
}

Subspace kernel(const F2Matrix& f) {
  // Row-reduce the images while tracking which inputs produced them.
  std::vector<std::pair<F2Vector, F2Vector>> pivots; // (image, preimage)
  Subspace ker;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    F2Vector img = f.columns()[j];
    F2Vector pre = F2Vector{1} << j;
    for (const auto& [pi, pp] : pivots) {
      if (img >> leading_bit(pi) & 1U) {
        img ^= pi;
        pre ^= pp;
      }
    }
    if (img == 0) {
      ker.insert(pre);
    } else {
      pivots.emplace_back(img, pre);
    }
  }
  return ker;
}

Subspace image(const F2Matrix& f) { return Subspace::span(f.columns()); }

FiniteModule FiniteModule::from_subquotient(const MonomialModule& M) {
  const auto& I = M.numerator();
  const auto& J = M.denominator();
  const std::size_t n = M.num_vars();
  FiniteModule out;
  if (!M.is_zero()) {
    // Artinian: each variable has a pure power among the generators of J.
    std::vector<Exponent> bound(n, 0);
    for (const auto& g : J.gens()) {
      const auto s = g.support();
      if (s.size() == 1) bound[s[0]] = g[s[0]];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (bound[i] == 0) throw InvalidArgument("module does not have finite length");
    }
    for_each_in_box(bound, [&](const Monomial& m) {
      if (member(m, I) && !member(m, J)) out.basis_.push_back(m);
    });
  }
  if (out.basis_.size() > 32) throw GuardError("finite module exceeds 32 basis elements");
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < out.basis_.size(); ++k) index.emplace(out.basis_[k], k);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<F2Vector> cols(out.basis_.size(), 0);
    const Monomial x = Monomial::variable(n, v);
    for (std::size_t k = 0; k < out.basis_.size(); ++k) {
      auto it = index.find(out.basis_[k] * x);
      if (it != index.end()) cols[k] = F2Vector{1} << it->second;
    }
    out.action_.emplace_back(std::move(cols));
  }
  return out;
}

F2Vector FiniteModule::full_mask() const {
  return dim() == 32 ? ~F2Vector{0} : (F2Vector{1} << dim()) - 1;
}

Subspace FiniteModule::closure(Subspace seed, F2Vector v) const {
  std::deque<F2Vector> queue{v};
  while (!queue.empty()) {
    const F2Vector w = queue.front();
    queue.pop_front();
    if (!seed.insert(w)) continue;
    for (const auto& a : action_) queue.push_back(a.apply(w));
  }
  return seed;
}

bool FiniteModule::is_submodule(const Subspace& s) const {
  for (auto b : s.basis()) {
    for (const auto& a : action_) {
      if (!s.contains(a.apply(b))) return false;
    }
  }
  return true;
}

namespace {

void guard_dim(std::size_t dim, std::size_t max_dim, const char* what) {
  if (dim > max_dim) {
    throw GuardError(std::string(what) + ": dimension " + std::to_string(dim) +
                     " exceeds guard " + std::to_string(max_dim));
  }
}

struct SubmoduleGraph {
  std::vector<Subspace> nodes;
  std::vector<std::vector<std::size_t>> successors;
};

SubmoduleGraph build_graph(const FiniteModule& M) {
  SubmoduleGraph g;
  std::map<Subspace, std::size_t> index;
  g.nodes.emplace_back();
  g.successors.emplace_back();
  index.emplace(g.nodes.front(), 0);
  for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
    const Subspace s = g.nodes[cur];
    std::vector<std::size_t> succ;
    for (F2Vector v = 1; v != 0 && v <= M.full_mask(); ++v) {
      // One representative per coset of s: reduced vectors only.
      if (s.reduce(v) != v) continue;
      Subspace t = M.closure(s, v);
      auto [it, inserted] = index.emplace(t, g.nodes.size());
      if (inserted) {
        g.nodes.push_back(std::move(t));
        g.successors.emplace_back();
      }
      succ.push_back(it->second);
    }
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    g.successors[cur] = std::move(succ);
  }
  return g;
}

} // namespace

std::vector<Subspace> enumerate_submodules(const FiniteModule& M, std::size_t max_dim) {
  guard_dim(M.dim(), max_dim, "enumerate_submodules");
  auto nodes = build_graph(M).nodes;
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::size_t longest_chain(const FiniteModule& M, std::size_t max_dim) {
  guard_dim(M.dim(), max_dim, "longest_chain");
  const SubmoduleGraph g = build_graph(M);
  // Edges strictly increase the dimension, so dimension order is topological.
  std::vector<std::size_t> order(g.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return g.nodes[a].dim() < g.nodes[b].dim(); });
  std::vector<std::size_t> best(g.nodes.size(), 0);
  std::size_t longest = 0;
  for (auto u : order) {
    for (auto w : g.successors[u]) best[w] = std::max(best[w], best[u] + 1);
    longest = std::max(longest, best[u]);
  }
  return longest;
}

std::vector<F2Matrix> enumerate_endos(const FiniteModule& M, std::size_t max_dim) {
  guard_dim(M.dim(), max_dim, "enumerate_endos");
  const std::size_t d = M.dim();
  if (d > 8) throw GuardError("enumerate_endos supports at most 8 dimensions");
  // Unknown X[r][c] is variable c*d + r. Each equation (AX + XA)[r][c] = 0 is
  // a bitmask over the d*d unknowns.
  auto bit = [d](std::size_t r, std::size_t c) { return std::uint64_t{1} << (c * d + r); };
  auto entry = [](const F2Matrix& a, std::size_t r, std::size_t c) {
    return (a.columns()[c] >> r & 1U) != 0;
  };
  std::vector<std::uint64_t> rows;
  for (const auto& a : M.action()) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        std::uint64_t eq = 0;
        for (std::size_t k = 0; k < d; ++k) {
          if (entry(a, r, k)) eq ^= bit(k, c);
          if (entry(a, k, c)) eq ^= bit(r, k);
        }
        if (eq != 0) rows.push_back(eq);
      }
    }
  }
  // Reduced row echelon form over F2, pivot = lowest set bit.
  std::vector<std::uint64_t> pivots;
  std::vector<int> pivot_col;
  for (auto row : rows) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (row >> pivot_col[i] & 1U) row ^= pivots[i];
    }
    if (row == 0) continue;
    const int p = std::countr_zero(row);
    for (auto& q : pivots) {
      if (q >> p & 1U) q ^= row;
    }
    pivots.push_back(row);
    pivot_col.push_back(p);
  }
  const std::size_t unknowns = d * d;
  std::vector<bool> is_pivot(unknowns, false);
  for (auto p : pivot_col) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::uint64_t> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t sol = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] >> f & 1U) sol |= std::uint64_t{1} << pivot_col[i];
    }
    basis.push_back(sol);
  }
  if (basis.size() > 20) throw GuardError("commutant too large to enumerate");
  std::vector<F2Matrix> out;
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mask >> i & 1U) x ^= basis[i];
    }
    std::vector<F2Vector> cols(d, 0);
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t r = 0; r < d; ++r) {
        if (x & bit(r, c)) cols[c] |= F2Vector{1} << r;
      }
    }
    out.emplace_back(std::move(cols));
  }
  return out;
}

EndoTheoremReport check_endo_theorems(const FiniteModule& M, std::size_t max_dim) {
  EndoTheoremReport rep;
  const std::size_t d = M.dim();
  const auto endos = enumerate_endos(M, max_dim);
  rep.endomorphisms = endos.size();

  std::vector<Subspace> cyclic;
  for (F2Vector v = 1; d > 0 && v <= M.full_mask(); ++v) cyclic.push_back(M.closure({}, v));
  rep.simple = d > 0 && std::all_of(cyclic.begin(), cyclic.end(),
                                    [&](const Subspace& s) { return s.dim() == d; });

  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (rep.failure.empty()) rep.failure = why;
  };

  for (std::size_t idx = 0; idx < endos.size(); ++idx) {
    const F2Matrix& f = endos[idx];
    const std::string tag = "endo #" + std::to_string(idx) + ": ";
    const Subspace k1 = kernel(f);
    if (!(k1 == kernel(f * f))) ++rep.non_reductive;

    std::size_t k = 1;
    F2Matrix fk = f;
    Subspace ker_k = k1;
    while (k <= d + 1) {
      const Subspace ker_next = kernel(fk * f);
      if (ker_next == ker_k) break;
      fk = fk * f;
      ker_k = ker_next;
      ++k;
    }
    const Subspace im_k = image(fk);
    if (k > d + 1 || intersect(ker_k, im_k).dim() != 0) {
      fail(rep.kernels_stabilize_to_reductive, tag + "no reductive power");
    }
    if (ker_k.dim() + im_k.dim() != d) fail(rep.rank_nullity_at_reductive_power, tag + "rank-nullity");
    Subspace tec = ker_k;
    for (auto b : im_k.basis()) tec.insert(b);
    if (tec.dim() != d) fail(rep.tectonics_open, tag + "tectonics not open");

    const bool essential = std::all_of(cyclic.begin(), cyclic.end(), [&](const Subspace& c) {
      return intersect(c, k1).dim() != 0;
    });
    if (essential && d > 0) {
      ++rep.essential_kernels;
      if (!power(f, d).is_zero()) fail(rep.essential_kernel_implies_nilpotent, tag + "essential kernel, not nilpotent");
    }
    if (rep.simple && !f.is_zero() && k1.dim() != 0) fail(rep.schur, tag + "nonzero non-invertible endo of a simple module");
  }
  return rep;
}

} // namespace ordlen::oracle
