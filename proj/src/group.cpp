#include "hh1/group.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace hh1 {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::vector<Elem> small_generators(const Group& g) {
  return generating_set(g, Subgroup::whole(g));
}

}  // namespace

// -- Group ---------------------------------------------------------------------

Group Group::build(std::size_t n, std::vector<std::uint16_t> table, std::vector<Elem> generators,
                   bool validate) {
  if (n == 0) fail(ErrorKind::InvalidInput, "group must have at least one element");
  if (n > kClosureCap)
    fail(ErrorKind::CapExceeded, "group order " + std::to_string(n) + " exceeds cap " +
                                     std::to_string(kClosureCap));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t { return table[i * n + j]; };

  auto d = std::make_shared<Data>();
  d->order = n;
  d->inverse.assign(n, 0);
  if (validate) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (at(i, j) >= n)
          fail(ErrorKind::InvalidInput, "table entry out of range at " + triple(i, j, at(i, j)));
    for (std::size_t i = 0; i < n; ++i)
      if (at(0, i) != i || at(i, 0) != i)
        fail(ErrorKind::InvalidInput,
             "index 0 is not a two-sided identity, witness element " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      if (at(i, j) == 0) {
        if (at(j, i) != 0)
          fail(ErrorKind::InvalidInput, "left and right inverses differ for element " +
                                            std::to_string(i));
        d->inverse[i] = Elem(j);
        found = true;
      }
    if (!found) fail(ErrorKind::InvalidInput, "element " + std::to_string(i) + " has no inverse");
  }
  if (validate) {
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (at(at(a, b), c) != at(a, at(b, c)))
        fail(ErrorKind::InvalidInput, "associativity fails for triple " + triple(a, b, c));
    };
    if (n <= kExhaustiveAssociativityCap) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int s = 0; s < 1'000'000; ++s) check(pick(rng), pick(rng), pick(rng));
    }
  }
  d->table = std::move(table);
  d->generators = std::move(generators);
  Group g(std::move(d));
  if (validate && generated_subgroup(g, g.generators()).order() != n)
    fail(ErrorKind::InvalidInput, "generators do not generate the group");
  return g;
}

Group Group::from_cayley(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "empty Cayley table");
  if (n > kClosureCap)
    fail(ErrorKind::CapExceeded, "Cayley table of order " + std::to_string(n) + " exceeds cap");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      fail(ErrorKind::InvalidInput, "Cayley table row " + std::to_string(i) + " has length " +
                                        std::to_string(rows[i].size()) + ", expected " +
                                        std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n)
        fail(ErrorKind::InvalidInput, "table entry out of range at " + triple(i, j, rows[i][j]));
      table[i * n + j] = std::uint16_t(rows[i][j]);
    }
  }
  std::vector<Elem> gens;
  for (Elem i = 1; i < n; ++i) gens.push_back(i);
  return build(n, std::move(table), std::move(gens), true);
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

Group Group::from_permutations(std::size_t degree, const std::vector<Permutation>& gens) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& perm = gens[k];
    if (perm.size() != degree)
      fail(ErrorKind::InvalidInput, "generator " + std::to_string(k) + " has length " +
                                        std::to_string(perm.size()) + ", expected degree " +
                                        std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (auto v : perm) {
      if (v >= degree || seen[v])
        fail(ErrorKind::InvalidInput, "generator " + std::to_string(k) + " is not a bijection");
      seen[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  // (a*b)(i) = b(a(i)): apply a first, matching right-multiplication closure.
  auto mul = [](const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  return from_closure<Permutation, decltype(mul), PermHash>(id, gens, mul);
}

Group Group::with_generators(std::vector<Elem> gens) const {
  auto d = std::make_shared<Data>(*d_);
  d->generators = std::move(gens);
  Group g(std::move(d));
  if (generated_subgroup(g, g.generators()).order() != order())
    fail(ErrorKind::InvalidInput, "generators do not generate the group");
  return g;
}

Elem Group::pow(Elem a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Elem result = 0;
  Elem base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t Group::element_order(Elem a) const noexcept {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (Elem a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool Group::is_abelian() const noexcept {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

// -- Subgroup / GroupHom ---------------------------------------------------------

Subgroup::Subgroup(std::size_t parent_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(parent_order, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem m : members_) {
    if (m >= parent_order) fail(ErrorKind::InvalidInput, "subgroup member out of range");
    mask_[m] = 1;
  }
}

Subgroup Subgroup::whole(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(g.order(), std::move(all));
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g.order(), {0}); }

GroupHom::GroupHom(Group source, Group target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!is_homomorphism(source_, target_, images_))
    fail(ErrorKind::InvalidInput, "map is not a group homomorphism");
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem x = 0; x < source_.order(); ++x)
    if (images_[x] == 0) k.push_back(x);
  return Subgroup(source_.order(), std::move(k));
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target_.order(), false);
  for (Elem y : images_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_homomorphism(const Group& source, const Group& target, std::span<const Elem> images) {
  if (images.size() != source.order() || images[0] != 0) return false;
  for (Elem y : images)
    if (y >= target.order()) return false;
  // f(xs) = f(x)f(s) for generators s extends to all products by induction
  for (Elem s : small_generators(source))
    for (Elem x = 0; x < source.order(); ++x)
      if (images[source.mul(x, s)] != target.mul(images[x], images[s])) return false;
  return true;
}

bool is_p_group(const Group& g, unsigned p) {
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

// -- subgroups -----------------------------------------------------------------

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Elem> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  return Subgroup(g.order(), std::move(members));
}

std::vector<Elem> generating_set(const Group& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup current = Subgroup::trivial(g);
  for (Elem x : h.members()) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
    if (current.order() == h.order()) break;
  }
  return gens;
}

Subgroup normal_closure(const Group& g, const Subgroup& within, std::span<const Elem> gens) {
  const auto conjugators = generating_set(g, within);
  std::vector<Elem> ngens;
  for (Elem x : gens)
    if (x != 0) ngens.push_back(x);
  Subgroup n = generated_subgroup(g, ngens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ngens.size(); ++i)
      for (Elem t : conjugators) {
        Elem c = g.conj(t, ngens[i]);
        if (!n.contains(c)) {
          ngens.push_back(c);
          n = generated_subgroup(g, ngens);
          changed = true;
        }
      }
  }
  return n;
}

Subgroup normal_closure(const Group& g, std::span<const Elem> gens) {
  return normal_closure(g, Subgroup::whole(g), gens);
}

bool is_normal_in(const Group& g, const Subgroup& n, const Subgroup& within) {
  for (Elem t : generating_set(g, within))
    for (Elem s : generating_set(g, n))
      if (!n.contains(g.conj(t, s))) return false;
  return true;
}

bool is_normal(const Group& g, const Subgroup& n) {
  return is_normal_in(g, n, Subgroup::whole(g));
}

Subgroup centralizer(const Group& g, Elem x) {
  if (x >= g.order()) fail(ErrorKind::Precondition, "element index out of range");
  std::vector<Elem> c;
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
  return Subgroup(g.order(), std::move(c));
}

Subgroup center(const Group& g) {
  const auto gens = small_generators(g);
  std::vector<Elem> z;
  for (Elem y = 0; y < g.order(); ++y)
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Elem s) { return g.mul(s, y) == g.mul(y, s); }))
      z.push_back(y);
  return Subgroup(g.order(), std::move(z));
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  const auto gens = small_generators(g);
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem s : gens) {
        Elem y = g.conj(s, orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, h, comms);
}

Subgroup commutator_subgroup(const Group& g) { return commutator_subgroup(g, Subgroup::whole(g)); }

Subgroup frattini_p(const Group& g, const Subgroup& h, unsigned p) {
  // h/N is elementary abelian iff the generators of h commute and have
  // p-th powers in N, so it suffices to close over those relators.
  const auto gens = generating_set(g, h);
  std::vector<Elem> rel;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    rel.push_back(g.pow(gens[i], p));
    for (std::size_t j = i + 1; j < gens.size(); ++j) rel.push_back(g.commutator(gens[i], gens[j]));
  }
  return normal_closure(g, h, rel);
}

Subgroup frattini_p(const Group& g, unsigned p) { return frattini_p(g, Subgroup::whole(g), p); }

std::vector<std::uint32_t> right_coset_labels(const Group& g, const Subgroup& h) {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.order(), unset);
  std::uint32_t next = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != unset) continue;
    for (Elem m : h.members()) label[g.mul(m, x)] = next;
    ++next;
  }
  return label;
}

std::vector<Elem> right_transversal(const Group& g, const Subgroup& h) {
  const auto label = right_coset_labels(g, h);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x)
    if (label[x] == reps.size()) reps.push_back(x);
  return reps;
}

// -- constructions ---------------------------------------------------------------

InducedGroup induced_group(const Group& g, const Subgroup& h) {
  const auto members = h.members();
  const std::size_t n = members.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = Elem(i);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem prod = g.mul(members[i], members[j]);
      if (!h.contains(prod)) fail(ErrorKind::Precondition, "subset is not closed under multiplication");
      table[i * n + j] = std::uint16_t(local[prod]);
    }
  std::vector<Elem> gens;
  for (Elem s : generating_set(g, h)) gens.push_back(local[s]);
  return {Group::build(n, std::move(table), std::move(gens), false),
          std::vector<Elem>(members.begin(), members.end())};
}

Quotient quotient(const Group& g, const Subgroup& n) {
  if (n.parent_order() != g.order())
    fail(ErrorKind::Precondition, "subgroup belongs to a different group");
  if (!is_normal(g, n)) fail(ErrorKind::Precondition, "quotient by a non-normal subgroup");
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> label(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != unset) continue;
    for (Elem m : n.members()) label[g.mul(x, m)] = Elem(reps.size());
    reps.push_back(x);
  }
  const std::size_t k = reps.size();
  std::vector<std::uint16_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = std::uint16_t(label[g.mul(reps[i], reps[j])]);
  std::vector<Elem> gens;
  for (Elem s : g.generators())
    if (label[s] != 0 && std::find(gens.begin(), gens.end(), label[s]) == gens.end())
      gens.push_back(label[s]);
  Group q = Group::build(k, std::move(table), std::move(gens), false);
  return {q, GroupHom(g, q, std::move(label))};
}

DirectProduct direct_product(const Group& g1, const Group& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  if (n1 * n2 > kClosureCap)
    fail(ErrorKind::CapExceeded, "direct product order " + std::to_string(n1 * n2) +
                                     " exceeds cap " + std::to_string(kClosureCap));
  const std::size_t n = n1 * n2;
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = std::uint16_t(g1.mul(Elem(a / n2), Elem(b / n2)) * n2 +
                                       g2.mul(Elem(a % n2), Elem(b % n2)));
  std::vector<Elem> gens;
  for (Elem s : g1.generators()) gens.push_back(Elem(s * n2));
  for (Elem t : g2.generators()) gens.push_back(t);
  Group p = Group::build(n, std::move(table), std::move(gens), false);

  std::vector<Elem> in1(n1), in2(n2), pr1(n), pr2(n);
  for (Elem i = 0; i < n1; ++i) in1[i] = Elem(i * n2);
  for (Elem j = 0; j < n2; ++j) in2[j] = j;
  for (Elem a = 0; a < n; ++a) {
    pr1[a] = Elem(a / n2);
    pr2[a] = Elem(a % n2);
  }
  return {p, GroupHom(g1, p, std::move(in1)), GroupHom(g2, p, std::move(in2)),
          GroupHom(p, g1, std::move(pr1)), GroupHom(p, g2, std::move(pr2))};
}

ElemAbStructure elem_ab_structure(const Group& g, unsigned p) {
  if (!g.is_abelian()) fail(ErrorKind::Precondition, "group is not abelian");
  for (Elem x = 0; x < g.order(); ++x)
    if (g.pow(x, p) != 0) fail(ErrorKind::Precondition, "group does not have exponent p");
  auto sc = section_coordinates(g, Subgroup::whole(g), Subgroup::trivial(g), p);
  ElemAbStructure s{g, p, sc.dim, sc.basis, {}};
  s.coords.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) s.coords.push_back(sc.coords(x));
  return s;
}

// -- coordinates -------------------------------------------------------------------

VertexCodec::VertexCodec(unsigned p, std::size_t dim) : p_(p), dim_(dim), size_(1) {
  for (std::size_t i = 0; i < dim; ++i) size_ *= p;
}

std::size_t VertexCodec::encode(std::span<const Scalar> v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim_; ++i) idx = idx * p_ + v[i];
  return idx;
}

Vec VertexCodec::decode(std::size_t index) const {
  Vec v(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    v[i] = Scalar(index % p_);
    index /= p_;
  }
  return v;
}

std::size_t VertexCodec::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, place = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::size_t VertexCodec::scale(Scalar c, std::size_t a) const {
  std::size_t out = 0, place = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += ((a % p_) * c % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Vec SectionCoordinates::coords(Elem x) const {
  if (vertex[x] < 0) fail(ErrorKind::Precondition, "element outside the section");
  return codec().decode(std::size_t(vertex[x]));
}

SectionCoordinates section_coordinates(const Group& g, const Subgroup& k, const Subgroup& n,
                                       unsigned p) {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset(g.order(), unset);
  std::vector<Elem> coset_rep;
  for (Elem x : k.members()) {
    if (coset[x] != unset) continue;
    for (Elem m : n.members()) coset[g.mul(x, m)] = std::uint32_t(coset_rep.size());
    coset_rep.push_back(x);
  }
  const std::size_t ncosets = coset_rep.size();

  // Coordinates are accumulated little-endian (basis j has weight p^j) and
  // converted to the lexicographic packing once the dimension is known.
  std::vector<std::int64_t> code(ncosets, -1);
  std::vector<std::uint32_t> assigned{0};
  code[0] = 0;
  std::vector<Elem> basis;
  std::size_t weight = 1;
  for (Elem x : k.members()) {
    if (code[coset[x]] >= 0) continue;
    if (assigned.size() * p > ncosets)
      fail(ErrorKind::Precondition, "section is not elementary abelian of exponent p");
    basis.push_back(x);
    const std::size_t base = assigned.size();
    Elem xm = 0;
    for (unsigned m = 1; m < p; ++m) {
      xm = g.mul(xm, x);
      for (std::size_t i = 0; i < base; ++i) {
        std::uint32_t c = coset[g.mul(coset_rep[assigned[i]], xm)];
        if (code[c] >= 0)
          fail(ErrorKind::Precondition, "section is not elementary abelian of exponent p");
        code[c] = code[assigned[i]] + std::int64_t(m * weight);
        assigned.push_back(c);
      }
    }
    weight *= p;
  }
  if (assigned.size() != ncosets)
    fail(ErrorKind::Precondition, "section is not elementary abelian of exponent p");

  const std::size_t dim = basis.size();
  // translation by each basis element must act as +e_j
  for (std::size_t c = 0; c < ncosets; ++c) {
    std::size_t w = 1;
    for (std::size_t j = 0; j < dim; ++j, w *= p) {
      std::int64_t digit = (code[c] / std::int64_t(w)) % p;
      std::int64_t expect = code[c] + (digit == p - 1 ? -std::int64_t((p - 1) * w) : std::int64_t(w));
      if (code[coset[g.mul(coset_rep[c], basis[j])]] != expect)
        fail(ErrorKind::Precondition, "section is not elementary abelian of exponent p");
    }
  }

  SectionCoordinates out;
  out.prime = p;
  out.dim = dim;
  out.basis = basis;
  const VertexCodec codec(p, dim);
  std::vector<std::int32_t> lex(ncosets);
  for (std::size_t c = 0; c < ncosets; ++c) {
    Vec v(dim);
    std::int64_t rest = code[c];
    for (std::size_t j = 0; j < dim; ++j) {
      v[j] = Scalar(rest % p);
      rest /= p;
    }
    lex[c] = std::int32_t(codec.encode(v));
  }
  out.vertex.assign(g.order(), -1);
  for (Elem x : k.members()) out.vertex[x] = lex[coset[x]];
  out.representative.assign(ncosets, 0);
  for (std::size_t c = 0; c < ncosets; ++c) out.representative[std::size_t(lex[c])] = coset_rep[c];
  return out;
}

SectionCoordinates frattini_coordinates(const Group& g, unsigned p) {
  return section_coordinates(g, Subgroup::whole(g), frattini_p(g, p), p);
}

}  // namespace hh1
