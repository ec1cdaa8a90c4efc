#pragma once

// Finite groups as Cayley tables over dense element indices. Index 0 is
// always the identity. Everything here is deterministic: whenever a choice is
// made (basis, transversal, class representative, coset order) the smallest
// element index wins.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hh1/error.hpp"
#include "hh1/fp.hpp"

namespace hh1 {

using Elem = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kClosureCap = 10000;
inline constexpr std::size_t kExhaustiveAssociativityCap = 256;

/// Immutable finite group. Copies share the underlying table.
class Subgroup;
struct InducedGroup;
struct Quotient;
struct DirectProduct;

class Group {
 public:
  /// Validates identity row/column, inverses and associativity (exhaustive up
  /// to order 256, 10^6 sampled triples above). Generators = all elements.
  static Group from_cayley(const std::vector<std::vector<Elem>>& table);

  /// BFS closure of the generated permutation group, identity first.
  static Group from_permutations(std::size_t degree, const std::vector<Permutation>& gens);

  /// BFS closure of `gens` under `mul` starting from `identity`. Element i of
  /// the result is the i-th element reached. T must be hashable.
  template <class T, class Mul, class Hash = std::hash<T>>
  static Group from_closure(const T& identity, const std::vector<T>& gens, Mul mul,
                            std::vector<T>* elements_out = nullptr);

  std::size_t order() const noexcept { return d_->order; }
  Elem mul(Elem a, Elem b) const noexcept {
    return d_->table[std::size_t(a) * d_->order + b];
  }
  Elem inv(Elem a) const noexcept { return d_->inverse[a]; }
  std::span<const Elem> generators() const noexcept { return d_->generators; }

  Elem pow(Elem a, long long n) const;
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elem commutator(Elem x, Elem y) const noexcept {  // x y x^-1 y^-1
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  std::size_t element_order(Elem a) const noexcept;
  std::size_t exponent() const;
  bool is_abelian() const noexcept;

  /// Same table, different recorded generating set (must generate).
  Group with_generators(std::vector<Elem> gens) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.d_ == b.d_ || (a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<std::uint16_t> table;
    std::vector<Elem> inverse;
    std::vector<Elem> generators;
  };
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Group build(std::size_t order, std::vector<std::uint16_t> table,
                     std::vector<Elem> generators, bool validate);

  std::shared_ptr<const Data> d_;

  friend InducedGroup induced_group(const Group& g, const Subgroup& h);
  friend Quotient quotient(const Group& g, const Subgroup& n);
  friend DirectProduct direct_product(const Group& g1, const Group& g2);
};

/// Subset of a group closed under multiplication and inverses. Holds no
/// reference to the parent; operations take the parent explicitly.
class Subgroup {
 public:
  Subgroup(std::size_t parent_order, std::vector<Elem> members);
  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);

  std::size_t parent_order() const noexcept { return mask_.size(); }
  std::size_t order() const noexcept { return members_.size(); }
  std::span<const Elem> members() const noexcept { return members_; }
  bool contains(Elem x) const noexcept { return mask_[x] != 0; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }

 private:
  std::vector<Elem> members_;
  std::vector<std::uint8_t> mask_;
};

/// Total map between groups, element-wise. Verified on construction.
class GroupHom {
 public:
  GroupHom(Group source, Group target, std::vector<Elem> images);

  const Group& source() const noexcept { return source_; }
  const Group& target() const noexcept { return target_; }
  Elem operator()(Elem x) const noexcept { return images_[x]; }
  std::span<const Elem> images() const noexcept { return images_; }
  Subgroup kernel() const;
  bool is_surjective() const;

 private:
  Group source_;
  Group target_;
  std::vector<Elem> images_;
};

/// Coordinates of an elementary abelian group of order p^dim.
struct ElemAbStructure {
  Group group;
  unsigned prime = 0;
  std::size_t dim = 0;
  std::vector<Elem> basis;
  std::vector<Vec> coords;  // indexed by element
};

struct Quotient {
  Group group;
  GroupHom projection;
};

struct DirectProduct {
  Group group;
  GroupHom inject1, inject2, project1, project2;
};

// -- subgroups ---------------------------------------------------------------

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens);
/// Smallest normal subgroup of `within` containing `gens`.
Subgroup normal_closure(const Group& g, const Subgroup& within, std::span<const Elem> gens);
Subgroup normal_closure(const Group& g, std::span<const Elem> gens);
/// Greedy generating set: members in index order not already generated.
std::vector<Elem> generating_set(const Group& g, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& n);
bool is_normal_in(const Group& g, const Subgroup& n, const Subgroup& within);

Subgroup centralizer(const Group& g, Elem x);
Subgroup center(const Group& g);
/// Classes sorted by smallest member; each class sorted.
std::vector<std::vector<Elem>> conjugacy_classes(const Group& g);
Subgroup commutator_subgroup(const Group& g);
Subgroup commutator_subgroup(const Group& g, const Subgroup& h);
/// Normal closure of p-th powers and commutators: the smallest normal
/// subgroup with elementary abelian p-quotient. Equals g when p does not
/// divide |g|.
Subgroup frattini_p(const Group& g, unsigned p);
Subgroup frattini_p(const Group& g, const Subgroup& h, unsigned p);

/// Right coset representatives of h in g (smallest member of each coset Hx),
/// sorted by index, so the identity comes first.
std::vector<Elem> right_transversal(const Group& g, const Subgroup& h);
/// For every element of g, the position in `right_transversal` of its coset.
std::vector<std::uint32_t> right_coset_labels(const Group& g, const Subgroup& h);

// -- constructions -----------------------------------------------------------

/// h as a group in its own right, with members in increasing index order.
/// embedding[i] is the parent index of element i.
struct InducedGroup {
  Group group;
  std::vector<Elem> embedding;
};
InducedGroup induced_group(const Group& g, const Subgroup& h);

Quotient quotient(const Group& g, const Subgroup& n);
ElemAbStructure elem_ab_structure(const Group& g, unsigned p);
DirectProduct direct_product(const Group& g1, const Group& g2);

bool is_p_group(const Group& g, unsigned p);
bool is_homomorphism(const Group& source, const Group& target, std::span<const Elem> images);

// -- coordinates on elementary abelian sections ------------------------------

/// Lexicographic packing of vectors in F_p^dim into [0, p^dim).
class VertexCodec {
 public:
  VertexCodec(unsigned p, std::size_t dim);
  unsigned prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t encode(std::span<const Scalar> v) const;
  Vec decode(std::size_t index) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(Scalar c, std::size_t a) const;

 private:
  unsigned p_;
  std::size_t dim_;
  std::size_t size_;
};

/// Coordinates of the section k/n (n normal in k, k/n elementary abelian of
/// exponent p) with the greedy basis obtained by scanning k in index order.
struct SectionCoordinates {
  unsigned prime = 0;
  std::size_t dim = 0;
  std::vector<Elem> basis;            // elements of k, one per coordinate
  std::vector<std::int32_t> vertex;   // per element of the ambient group; -1 outside k
  std::vector<Elem> representative;   // per vertex: smallest element of k mapping there

  VertexCodec codec() const { return VertexCodec(prime, dim); }
  Vec coords(Elem x) const;
};
SectionCoordinates section_coordinates(const Group& g, const Subgroup& k, const Subgroup& n,
                                       unsigned p);

/// Coordinates of G/Phi_p(G), computed directly on G.
SectionCoordinates frattini_coordinates(const Group& g, unsigned p);

// -----------------------------------------------------------------------------

template <class T, class Mul, class Hash>
Group Group::from_closure(const T& identity, const std::vector<T>& gens, Mul mul,
                          std::vector<T>* elements_out) {
  std::vector<T> elems{identity};
  std::unordered_map<T, Elem, Hash> index{{identity, 0}};
  // BFS: right-multiply every discovered element by each generator.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      T next = mul(elems[i], gens[k]);
      auto [it, inserted] = index.try_emplace(next, Elem(elems.size()));
      if (inserted) {
        if (elems.size() >= kClosureCap)
          fail(ErrorKind::CapExceeded, "group closure exceeds " + std::to_string(kClosureCap) +
                                           " elements");
        elems.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = std::uint16_t(index.at(mul(elems[i], elems[j])));
  std::vector<Elem> gen_idx;
  for (const auto& s : gens) {
    Elem e = index.at(s);
    if (e != 0 && std::find(gen_idx.begin(), gen_idx.end(), e) == gen_idx.end())
      gen_idx.push_back(e);
  }
  if (elements_out) *elements_out = std::move(elems);
  return build(n, std::move(table), std::move(gen_idx), true);
}

}  // namespace hh1
