#include "hh1/loewy.hpp"

#include <cmath>
#include <string>

namespace hh1 {

Vec group_algebra_product(const Group& g, const Fp& f, std::span<const Scalar> x,
                          std::span<const Scalar> y) {
  const std::size_t n = g.order();
  Vec out(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (Elem b = 0; b < n; ++b)
      if (y[b]) out[g.mul(a, b)] = f.add(out[g.mul(a, b)], f.mul(x[a], y[b]));
  }
  return out;
}

RadicalFiltration loewy(const Group& g, unsigned p, bool keep_powers) {
  if (!is_p_group(g, p))
    fail(ErrorKind::Precondition, "Loewy length is only computed for p-groups (order " +
                                      std::to_string(g.order()) + ", p = " + std::to_string(p) + ")");
  const std::size_t n = g.order();
  if (n > kLoewyCap)
    fail(ErrorKind::CapExceeded, "radical filtration is limited to order " +
                                     std::to_string(kLoewyCap));
  const Fp f(p);
  RadicalFiltration out{g, p, {}, 0, {}};

  FpSubspace whole(f, n), radical(f, n);
  for (Elem x = 0; x < n; ++x) {
    Vec e(n, 0);
    e[x] = 1;
    whole.insert(e);
    if (x == 0) continue;
    e[0] = f.neg(1);  // x - e
    radical.insert(std::move(e));
  }
  out.dims.push_back(whole.dim());
  if (keep_powers) out.powers.push_back(whole);

  // J is generated as a right ideal by s - e for generators s, so
  // J^{k+1} = sum_s (s - e) J^k, and (s - e) v is a shifted difference.
  const auto gens = generating_set(g, Subgroup::whole(g));
  FpSubspace current = radical;
  while (true) {
    out.dims.push_back(current.dim());
    if (keep_powers) out.powers.push_back(current);
    if (current.dim() == 0) break;
    if (out.dims.size() > n + 1)
      fail(ErrorKind::Precondition, "augmentation ideal is not nilpotent");
    FpSubspace next(f, n);
    for (const auto& v : current.basis())
      for (Elem s : gens) {
        Vec w(n, 0);
        for (Elem h = 0; h < n; ++h)
          if (v[h]) w[g.mul(s, h)] = f.add(w[g.mul(s, h)], v[h]);
        f.axpy(f.neg(1), v, w);
        next.insert(std::move(w));
      }
    current = std::move(next);
  }
  out.loewy_length = out.dims.size() - 1;
  return out;
}

std::vector<std::size_t> jennings_ranks(const Group& g, unsigned p) {
  if (!is_p_group(g, p))
    fail(ErrorKind::Precondition, "Jennings series is only computed for p-groups");
  const auto gens = generating_set(g, Subgroup::whole(g));
  std::vector<Subgroup> d{Subgroup::whole(g)};  // d[i] = D_{i+1}
  std::vector<std::size_t> ranks;
  while (d.back().order() > 1) {
    const std::size_t i = d.size() + 1;  // index of the term being built
    std::vector<Elem> words;
    for (Elem h : d.back().members())
      for (Elem s : gens) words.push_back(g.commutator(h, s));
    for (Elem h : d[(i + p - 1) / p - 1].members()) words.push_back(g.pow(h, p));
    Subgroup next = normal_closure(g, words);
    std::size_t index = d.back().order() / next.order(), r = 0;
    for (; index > 1; index /= p) ++r;
    ranks.push_back(r);
    d.push_back(std::move(next));
  }
  return ranks;
}

std::size_t jennings_loewy_length(const Group& g, unsigned p) {
  const auto ranks = jennings_ranks(g, p);
  std::size_t sum = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) sum += (i + 1) * ranks[i];
  return 1 + (p - 1) * sum;
}

double dl_upper_bound(std::size_t loewy_length, std::size_t path_length) {
  if (loewy_length < 2) fail(ErrorKind::Precondition, "bound needs Loewy length at least 2");
  return std::log2(double(loewy_length - 1)) + double(path_length);
}

}  // namespace hh1
