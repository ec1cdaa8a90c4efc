#pragma once

// The image algebra h inside HH^1(kA) = (+)_{a in A} Hom(A, k), A elementary
// abelian, with the bracket
//   [(phi, a), (psi, b)] = (phi(b) psi - psi(a) phi, a + b).
// Elements of A are packed vertex indices (see VertexCodec); functionals are
// coordinate vectors of length d.

#include <cstddef>
#include <map>
#include <vector>

#include "hh1/fp.hpp"
#include "hh1/gamma.hpp"
#include "hh1/group.hpp"
#include "hh1/transfer.hpp"

namespace hh1 {

/// Shape of the ambient algebra: prime and rank of A.
class GradedAlgebra {
 public:
  GradedAlgebra(unsigned p, std::size_t d) : field_(p), codec_(p, d) {}

  const Fp& field() const noexcept { return field_; }
  const VertexCodec& codec() const noexcept { return codec_; }
  unsigned prime() const noexcept { return field_.prime(); }
  std::size_t dim() const noexcept { return codec_.dim(); }

  /// phi(a) for a packed vertex a.
  Scalar eval(std::span<const Scalar> phi, std::size_t a) const;

 private:
  Fp field_;
  VertexCodec codec_;
};

/// (phi, a): a single graded summand element.
struct Homogeneous {
  std::size_t vertex = 0;
  Vec functional;

  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
};

/// Finite sum of homogeneous elements, keyed by vertex; zero parts dropped.
struct GradedElement {
  std::map<std::size_t, Vec> parts;

  bool is_zero() const noexcept { return parts.empty(); }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

Homogeneous bracket(const GradedAlgebra& L, const Homogeneous& x, const Homogeneous& y);
GradedElement bracket(const GradedAlgebra& L, const GradedElement& x, const GradedElement& y);
GradedElement add(const GradedAlgebra& L, const GradedElement& x, const GradedElement& y);
GradedElement scale(const GradedAlgebra& L, Scalar c, const GradedElement& x);
GradedElement as_element(const Homogeneous& x);

/// Ad(x)^n (y), by iterated brackets.
Homogeneous ad_power(const GradedAlgebra& L, const Homogeneous& x, const Homogeneous& y,
                     std::size_t n);

/// BV operator on a summand: Delta((phi, a)) = -phi(a) a. Returns the
/// coefficient of the group element a.
Scalar bv_delta(const GradedAlgebra& L, const Homogeneous& x);

/// A graded subspace: one row-reduced subspace of the dual per vertex.
class GradedLieBasis {
 public:
  explicit GradedLieBasis(const GradedAlgebra& L);

  const GradedAlgebra& algebra() const noexcept { return L_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t dim_at(std::size_t vertex) const { return parts_[vertex].dim(); }
  const FpSubspace& component(std::size_t vertex) const { return parts_[vertex]; }

  bool insert(const Homogeneous& x);
  bool contains(const Homogeneous& x) const;
  bool contains(const GradedElement& x) const;
  bool contains(const GradedLieBasis& other) const;
  /// Homogeneous basis, grades ascending, RREF rows within a grade.
  std::vector<Homogeneous> basis() const;
  /// Vertices with a nonzero component.
  std::vector<std::size_t> support() const;

  friend bool operator==(const GradedLieBasis& a, const GradedLieBasis& b) {
    return a.parts_ == b.parts_;
  }

 private:
  GradedAlgebra L_;
  std::vector<FpSubspace> parts_;
  std::size_t dim_ = 0;
};

/// The image subalgebra h, h_a taken from the reduced transfers.
GradedLieBasis build_h(const TransferSummary& summary);
GradedLieBasis build_h(const Group& g, unsigned p);
/// The whole of HH^1(kA) for A of rank d.
GradedLieBasis full_algebra(const GradedAlgebra& L);

/// Span of all [x, y] with x in a, y in b.
GradedLieBasis bracket_span(const GradedLieBasis& a, const GradedLieBasis& b);
bool is_subalgebra(const GradedLieBasis& s);

/// Dimensions of a descending series; `terminates` is true when it reached 0
/// and false when it stabilized at a nonzero dimension.
struct Series {
  std::vector<std::size_t> dims;
  bool terminates = false;
  /// First index with dimension 0, or infinite.
  Length length() const {
    return terminates ? Length::finite(dims.size() - 1) : Length::infinite();
  }
};

/// D^0 = L, D^{i+1} = [D^i, D^i]. `terms` receives the subspaces if non-null.
Series derived_series(const GradedLieBasis& l, std::vector<GradedLieBasis>* terms = nullptr);
/// C^0 = L, C^n = [L, C^{n-1}].
Series lower_central_series(const GradedLieBasis& l);
bool is_nilpotent(const GradedLieBasis& l);
/// Least n with D^n(L) nilpotent; infinite if none.
Length ss_rank(const GradedLieBasis& l);

}  // namespace hh1
