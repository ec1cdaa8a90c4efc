#include "hh1/derivations.hpp"

#include <algorithm>
#include <string>

namespace hh1 {

namespace {

Vec flatten(const FpMatrix& m) { return Vec(m.data().begin(), m.data().end()); }

FpMatrix unflatten(std::span<const Scalar> v, std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
  return m;
}

}  // namespace

bool is_derivation(const Group& g, const Fp& f, const FpMatrix& d) {
  const std::size_t n = g.order();
  Vec rhs(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::fill(rhs.begin(), rhs.end(), Scalar{0});
      // D(a) b + a D(b)
      for (Elem h = 0; h < n; ++h) {
        Scalar da = d.at(a, h), db = d.at(b, h);
        if (da) rhs[g.mul(h, b)] = f.add(rhs[g.mul(h, b)], da);
        if (db) rhs[g.mul(a, h)] = f.add(rhs[g.mul(a, h)], db);
      }
      auto lhs = d.row(g.mul(a, b));
      if (!std::equal(lhs.begin(), lhs.end(), rhs.begin())) return false;
    }
  return true;
}

FpMatrix derivation_bracket(const Fp& f, const FpMatrix& d1, const FpMatrix& d2) {
  // rows are images, so (D1 o D2) has matrix D2 * D1
  FpMatrix a = d2.multiply(f, d1);
  FpMatrix b = d1.multiply(f, d2);
  FpMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = f.sub(a.at(r, c), b.at(r, c));
  return out;
}

FpMatrix inner_derivation(const Group& g, const Fp& f, Elem x) {
  const std::size_t n = g.order();
  FpMatrix d(n, n);
  for (Elem h = 0; h < n; ++h) {
    d.at(h, g.mul(x, h)) = f.add(d.at(h, g.mul(x, h)), 1);
    d.at(h, g.mul(h, x)) = f.sub(d.at(h, g.mul(h, x)), 1);
  }
  return d;
}

DerivationSpace full_der_algebra(const Group& g, unsigned p) {
  const std::size_t n = g.order();
  if (n > kDerivationOracleCap)
    fail(ErrorKind::CapExceeded, "derivation oracle is limited to order " +
                                     std::to_string(kDerivationOracleCap) + ", got " +
                                     std::to_string(n));
  const Fp f(p);
  const auto gens = generating_set(g, Subgroup::whole(g));
  const std::size_t k = gens.size();
  const std::size_t unknowns = k * n;  // coefficient of h in D(s_j) at j*n + h

  // D(g) as a linear function of the unknowns, following a BFS spanning tree:
  // D(g' s) = D(g') s + g' D(s).
  std::vector<FpMatrix> expr(n);
  std::vector<bool> done(n, false);
  expr[0] = FpMatrix(n, unknowns);
  done[0] = true;
  std::vector<Elem> queue{0};
  auto extend = [&](Elem gp, std::size_t j) {
    FpMatrix m(n, unknowns);
    const Elem s = gens[j];
    for (Elem h = 0; h < n; ++h) f.axpy(1, expr[gp].row(h), m.row(g.mul(h, s)));
    for (Elem h = 0; h < n; ++h) {
      Scalar& c = m.at(g.mul(gp, h), j * n + h);
      c = f.add(c, 1);
    }
    return m;
  };
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem next = g.mul(queue[i], gens[j]);
      if (done[next]) continue;
      expr[next] = extend(queue[i], j);
      done[next] = true;
      queue.push_back(next);
    }

  // Consistency on every (g, s): together with D(e) = 0 this gives the
  // Leibniz rule on all pairs by induction on word length.
  FpSubspace constraints(f, unknowns);
  for (Elem a = 0; a < n; ++a)
    for (std::size_t j = 0; j < k; ++j) {
      FpMatrix rhs = extend(a, j);
      const FpMatrix& lhs = expr[g.mul(a, gens[j])];
      for (std::size_t r = 0; r < n; ++r) {
        Vec row(lhs.row(r).begin(), lhs.row(r).end());
        f.axpy(f.neg(1), rhs.row(r), row);
        if (!is_zero(row)) constraints.insert(std::move(row));
      }
    }

  DerivationSpace out{g, p, {}, {}};
  for (const auto& u : constraints.kernel()) {
    FpMatrix d(n, n);
    for (Elem a = 0; a < n; ++a) {
      Vec img = expr[a].apply(f, u);
      std::copy(img.begin(), img.end(), d.row(a).begin());
    }
    if (!is_derivation(g, f, d))
      fail(ErrorKind::Precondition, "internal: solved map violates the Leibniz rule");
    out.basis.push_back(std::move(d));
  }

  FpSubspace inner(f, n * n);
  for (Elem x = 0; x < n; ++x) {
    FpMatrix d = inner_derivation(g, f, x);
    if (inner.insert(flatten(d))) out.inner.push_back(std::move(d));
  }
  return out;
}

QuotientSolvability hh1_quotient_solvable(const DerivationSpace& d) {
  const Fp f(d.prime);
  const std::size_t n = d.group.order();
  FpSubspace inner(f, n * n);
  for (const auto& m : d.inner) inner.insert(flatten(m));
  FpSubspace current(f, n * n);
  for (const auto& m : d.basis) current.insert(flatten(m));
  for (const auto& m : d.inner) current.insert(flatten(m));

  QuotientSolvability out;
  out.dims.push_back(current.dim() - inner.dim());
  while (current.dim() > inner.dim()) {
    std::vector<FpMatrix> basis;
    for (const auto& row : current.basis()) basis.push_back(unflatten(row, n));
    FpSubspace next = inner;
    for (std::size_t i = 0; i < basis.size() && next.dim() < current.dim(); ++i)
      for (std::size_t j = i + 1; j < basis.size() && next.dim() < current.dim(); ++j)
        next.insert(flatten(derivation_bracket(f, basis[i], basis[j])));
    if (next.dim() == current.dim()) return out;  // stabilized above InnDer
    current = std::move(next);
    out.dims.push_back(current.dim() - inner.dim());
  }
  out.solvable = true;
  out.derived_length = Length::finite(out.dims.size() - 1);
  return out;
}

}  // namespace hh1
