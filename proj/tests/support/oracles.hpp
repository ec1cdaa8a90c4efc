#pragma once

// Reference computations for the tests. These avoid the code paths they are
// used to check: groups are rebuilt from explicit matrices, graph edges are
// recomputed from group-valued transfers, and HH^1 dimensions come from the
// centralizer decomposition rather than from solving for derivations.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hh1/group.hpp"
#include "hh1/transfer.hpp"

namespace oracle {

using hh1::Elem;
using hh1::Group;
using hh1::Subgroup;

using Mat3 = std::array<unsigned, 9>;
using Mat2 = std::array<unsigned, 4>;

struct Mat3Hash {
  std::size_t operator()(const Mat3& m) const noexcept {
    std::size_t h = 0;
    for (auto v : m) h = h * 131 + v;
    return h;
  }
};

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const noexcept {
    std::size_t h = 0;
    for (auto v : m) h = h * 131 + v;
    return h;
  }
};

inline Mat3 mul3(const Mat3& a, const Mat3& b, unsigned p) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      unsigned s = 0;
      for (int k = 0; k < 3; ++k) s += a[i * 3 + k] * b[k * 3 + j];
      c[i * 3 + j] = s % p;
    }
  return c;
}

inline Mat2 mul2(const Mat2& a, const Mat2& b, unsigned p) {
  return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
          (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
}

/// UT(3, p) as literal 3x3 matrices.
inline Group unitriangular(unsigned p) {
  Mat3 id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  Mat3 x{1, 1, 0, 0, 1, 0, 0, 0, 1};
  Mat3 y{1, 0, 0, 0, 1, 1, 0, 0, 1};
  return Group::from_closure<Mat3, std::function<Mat3(const Mat3&, const Mat3&)>, Mat3Hash>(
      id, {x, y}, [p](const Mat3& a, const Mat3& b) { return mul3(a, b, p); });
}

/// SL(2, 3) as literal 2x2 matrices.
inline Group sl23_matrices() {
  Mat2 id{1, 0, 0, 1};
  Mat2 s{1, 1, 0, 1};
  Mat2 t{0, 2, 1, 0};
  return Group::from_closure<Mat2, std::function<Mat2(const Mat2&, const Mat2&)>, Mat2Hash>(
      id, {s, t}, [](const Mat2& a, const Mat2& b) { return mul2(a, b, 3); });
}

/// Brute-force class partition by conjugating with every element.
inline std::size_t class_count(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Elem h = 0; h < g.order(); ++h) seen[g.mul(g.mul(h, x), g.inv(h))] = true;
  }
  return count;
}

/// dim Hom(H, F_p): counts the generator assignments that extend to a
/// homomorphism H -> C_p, which number p^dim.
inline std::size_t hom_dim(const Group& g, const Subgroup& h, unsigned p) {
  const auto gens = hh1::generating_set(g, h);
  std::size_t homs = 0;
  std::vector<unsigned> val(gens.size(), 0);
  while (true) {
    std::vector<int> image(g.order(), -1);
    image[0] = 0;
    std::vector<Elem> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        Elem nx = g.mul(queue[i], gens[k]);
        int v = int((unsigned(image[queue[i]]) + val[k]) % p);
        if (image[nx] < 0) {
          image[nx] = v;
          queue.push_back(nx);
        } else if (image[nx] != v) {
          ok = false;
        }
      }
    if (ok) ++homs;
    std::size_t k = 0;
    while (k < val.size() && ++val[k] == p) val[k++] = 0;
    if (k == val.size()) break;
  }
  std::size_t dim = 0;
  while (homs > 1) {
    homs /= p;
    ++dim;
  }
  return dim;
}

/// dim HH^1(kG) = sum over classes of dim Hom(C_G(x), k).
inline std::size_t hh1_dim_by_centralizers(const Group& g, unsigned p) {
  std::size_t total = 0;
  for (const auto& cls : hh1::conjugacy_classes(g))
    total += hom_dim(g, hh1::centralizer(g, cls.front()), p);
  return total;
}

/// Edges of the transfer graph recomputed from group-valued transfers: a -> b
/// iff some x over a has tr_{C_G(x)}(y) outside Phi_p(C_G(x)) for y over b.
inline std::set<std::pair<std::size_t, std::size_t>> transfer_edges(const Group& g, unsigned p) {
  const auto coords = hh1::frattini_coordinates(g, p);
  const std::size_t nv = coords.codec().size();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::map<std::vector<Elem>, std::vector<bool>> nonzero_by_c;
  for (Elem x = 0; x < g.order(); ++x) {
    const Subgroup c = hh1::centralizer(g, x);
    std::vector<Elem> key(c.members().begin(), c.members().end());
    auto it = nonzero_by_c.find(key);
    if (it == nonzero_by_c.end()) {
      const hh1::Transfer tr(g, c);
      const Subgroup phi = hh1::frattini_p(g, c, p);
      // value in C/C' -> whether a preimage lies outside Phi_p(C)
      std::map<Elem, bool> outside;
      for (Elem h : c.members()) outside.emplace(tr.abelianize(h), !phi.contains(h));
      std::vector<bool> nz(nv);
      for (std::size_t b = 0; b < nv; ++b) nz[b] = outside.at(tr(coords.representative[b]));
      it = nonzero_by_c.emplace(std::move(key), std::move(nz)).first;
    }
    const std::size_t a = std::size_t(coords.vertex[x]);
    for (std::size_t b = 0; b < nv; ++b)
      if (it->second[b]) edges.emplace(a, b);
  }
  return edges;
}

}  // namespace oracle
