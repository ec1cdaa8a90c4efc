#pragma once

// The transfer G -> H/H' and its reduction to F_p-linear maps between
// Frattini quotients, which is what the image subalgebra is built from.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hh1/fp.hpp"
#include "hh1/group.hpp"

namespace hh1 {

/// tr_H^G : G -> H/H'. Built once per (G, H); evaluation is O([G:H]).
class Transfer {
 public:
  Transfer(const Group& g, const Subgroup& h);
  /// Uses the given right transversal (one element per coset Hx, any order).
  Transfer(const Group& g, const Subgroup& h, std::vector<Elem> transversal);

  /// H/H' as a group; the value of the transfer lives here.
  const Group& abelianization() const noexcept { return quotient_.group; }
  /// Image in H/H' of an element of H (given by its index in G).
  Elem abelianize(Elem h) const;
  const std::vector<Elem>& transversal() const noexcept { return transversal_; }

  Elem operator()(Elem x) const;

 private:
  Group g_;
  Subgroup h_;
  std::vector<Elem> transversal_;
  std::vector<std::uint32_t> coset_;     // position in transversal_ of Hx
  InducedGroup induced_;
  std::vector<Elem> local_;              // G index -> index in induced_ (valid on H)
  Quotient quotient_;
};

/// tr_H^G(x) as an element of H/H' (see Transfer::abelianization()).
Elem transfer_element(const Group& g, const Subgroup& h, Elem x);

/// Coordinates of G/Phi_p(G); `section.vertex[x]` is q(x).
struct FrattiniQuotient {
  Group group;
  SectionCoordinates section;

  unsigned prime() const noexcept { return section.prime; }
  std::size_t dim() const noexcept { return section.dim; }
  VertexCodec codec() const { return section.codec(); }
  std::size_t vertex_of(Elem x) const { return std::size_t(section.vertex[x]); }
  std::size_t vertex_count() const { return codec().size(); }
};

FrattiniQuotient frattini_quotient(const Group& g, unsigned p);

/// The transfer into C = C_G(x) followed by C -> C/Phi_p(C), kept as a map
/// on elements of G (values are coordinate vectors of length d_x).
class CentralizerTransfer {
 public:
  CentralizerTransfer(const Group& g, Elem x, unsigned p);

  const Subgroup& centralizer() const noexcept { return c_; }
  std::size_t target_dim() const noexcept { return section_.dim; }
  Vec value(Elem y) const;

 private:
  Group g_;
  Subgroup c_;
  SectionCoordinates section_;
  std::vector<Elem> transversal_;
  std::vector<std::uint32_t> coset_;
};

struct ReducedTransfer {
  Vec source_vertex;  // q(x) in coordinates
  Elem rep = 0;
  FpMatrix matrix;    // d_x x d; column j is the value on a preimage of basis vector j
};

ReducedTransfer reduced_transfer(const Group& g, const FrattiniQuotient& a, Elem x);

/// h_a: row-reduced subspace of the dual of A spanned by the functionals
/// alpha o tr with q(x) = a.
struct HComponent {
  Vec vertex;
  FpSubspace space;
};

inline constexpr std::size_t kGraphOrderCap = 4096;
inline constexpr std::size_t kGraphDimCap = 8;

/// Reduced transfers for every conjugacy-class representative, cached by
/// centralizer. This is the shared input of the graph and the image algebra.
class TransferSummary {
 public:
  TransferSummary(const Group& g, unsigned p);

  const Group& group() const noexcept { return g_; }
  const FrattiniQuotient& quotient() const noexcept { return a_; }
  const std::vector<std::vector<Elem>>& classes() const noexcept { return classes_; }
  const std::vector<ReducedTransfer>& transfers() const noexcept { return transfers_; }

  /// h_a for the vertex with the given packed index.
  const FpSubspace& h_component(std::size_t vertex) const { return h_[vertex]; }
  std::size_t h_dim(std::size_t vertex) const { return h_[vertex].dim(); }

 private:
  Group g_;
  FrattiniQuotient a_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<ReducedTransfer> transfers_;
  std::vector<FpSubspace> h_;
};

HComponent h_component(const Group& g, unsigned p, std::span<const Scalar> vertex);

/// Right-hand side of the product transfer formula: for P = P1 x P2,
///   tr(a, b) = (tr_1(a)^{|y^P2|}, tr_2(b)^{|x^P1|})
/// with tr_1 into C_P1(x)/C' and tr_2 into C_P2(y)/C'.
std::pair<Elem, Elem> product_transfer_check(const Group& p1, const Group& p2, Elem x, Elem y,
                                             Elem a, Elem b);

}  // namespace hh1
