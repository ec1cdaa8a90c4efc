#include "hh1/catalog.hpp"

#include <array>
#include <algorithm>
#include <string>

namespace hh1::catalog {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidInput, what);
}

bool prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// C_m x| C_n with b a b^-1 = a^r, elements a^i b^j packed as i * n + j.
Group semidirect(std::size_t m, std::size_t n, std::size_t r) {
  std::vector<std::size_t> rpow(n);
  std::size_t acc = 1 % m;
  for (std::size_t j = 0; j < n; ++j) {
    rpow[j] = acc;
    acc = acc * r % m;
  }
  require(acc == 1 % m, "semidirect product action does not have order dividing n");
  auto mul = [=](std::size_t x, std::size_t y) {
    std::size_t i = x / n, j = x % n, k = y / n, l = y % n;
    return ((i + rpow[j] * k) % m) * n + (j + l) % n;
  };
  std::vector<std::size_t> gens;
  if (m > 1) gens.push_back(1 * n);  // a
  if (n > 1) gens.push_back(1);      // b
  return Group::from_closure<std::size_t>(0, gens, mul);
}

}  // namespace

Group cyclic(std::size_t n) {
  require(n >= 1 && n <= kClosureCap, "cyclic group order must be in [1, " +
                                          std::to_string(kClosureCap) + "]");
  auto mul = [n](std::size_t a, std::size_t b) { return (a + b) % n; };
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  return Group::from_closure<std::size_t>(0, gens, mul);
}

Group elem_ab(unsigned p, std::size_t n) {
  require(prime(p), "elem_ab needs a prime p");
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= p;
    if (size > kClosureCap) fail(ErrorKind::CapExceeded, "elem_ab exceeds the order cap");
  }
  const VertexCodec codec(p, n);
  auto mul = [codec](std::size_t a, std::size_t b) { return codec.add(a, b); };
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    gens.push_back(codec.encode(e));
  }
  return Group::from_closure<std::size_t>(0, gens, mul);
}

Group heisenberg(unsigned p) {
  require(prime(p), "heisenberg needs a prime p");
  // [[1,a,c],[0,1,b],[0,0,1]] packed as a + p b + p^2 c
  auto mul = [p](std::size_t x, std::size_t y) {
    std::size_t a1 = x % p, b1 = x / p % p, c1 = x / (p * p);
    std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    std::size_t a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
    return a + p * b + p * p * c;
  };
  return Group::from_closure<std::size_t>(0, {1, p}, mul);
}

Group modular(unsigned p) {
  require(prime(p), "modular needs a prime p");
  return semidirect(std::size_t(p) * p, p, 1 + p);
}

Group c9_rtimes_c9() { return semidirect(9, 9, 4); }

Group dihedral(std::size_t order) {
  require(order >= 4 && order % 2 == 0, "dihedral order must be even and at least 4");
  const std::size_t m = order / 2;
  return semidirect(m, 2, m - 1);
}

Group quaternion8() {
  // a^i b^j, i mod 4, j mod 2, b^2 = a^2, b a b^-1 = a^-1; packed as 2i + j
  auto mul = [](std::size_t x, std::size_t y) {
    std::size_t i = x / 2, j = x % 2, k = y / 2, l = y % 2;
    std::size_t e = (j ? 4 - k : k) % 4;
    std::size_t a = (i + e + (j && l ? 2 : 0)) % 4;
    return 2 * a + (j + l) % 2;
  };
  return Group::from_closure<std::size_t>(0, {2, 1}, mul);
}

Group sl23() {
  std::vector<std::array<unsigned, 2>> vecs;
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y)
      if (x || y) vecs.push_back({x, y});
  auto index = [&](std::array<unsigned, 2> v) {
    return std::uint32_t(std::find(vecs.begin(), vecs.end(), v) - vecs.begin());
  };
  auto perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    Permutation out;
    for (auto v : vecs) out.push_back(index({(a * v[0] + b * v[1]) % 3, (c * v[0] + d * v[1]) % 3}));
    return out;
  };
  // [[1,1],[0,1]] and [[0,-1],[1,0]]
  return Group::from_permutations(vecs.size(), {perm(1, 1, 0, 1), perm(0, 2, 1, 0)});
}

Group wreath_cp_cp(unsigned p) {
  require(prime(p), "wreath product needs a prime p");
  const std::size_t deg = std::size_t(p) * p;
  Permutation base(deg), top(deg);
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j) {
      std::uint32_t pt = i * p + j;
      base[pt] = i == 0 ? (j + 1) % p : pt;
      top[pt] = ((i + 1) % p) * p + j;
    }
  return Group::from_permutations(deg, {base, top});
}

}  // namespace hh1::catalog
