#pragma once

// Brute-force HH^1(kG) = Der(kG)/InnDer(kG): derivations of the group algebra
// as explicit |G| x |G| matrices over F_p, found by solving the Leibniz rule.
// Independent of the transfer machinery; used to cross-check it.

#include <cstddef>
#include <vector>

#include "hh1/fp.hpp"
#include "hh1/gamma.hpp"
#include "hh1/group.hpp"

namespace hh1 {

inline constexpr std::size_t kDerivationOracleCap = 32;

/// Row g of a derivation matrix holds the coefficients of D(g) in the group
/// basis.
struct DerivationSpace {
  Group group;
  unsigned prime = 0;
  std::vector<FpMatrix> basis;  // Der(kG)
  std::vector<FpMatrix> inner;  // basis of InnDer(kG)

  std::size_t der_dim() const noexcept { return basis.size(); }
  std::size_t inner_dim() const noexcept { return inner.size(); }
  std::size_t hh1_dim() const noexcept { return basis.size() - inner.size(); }
};

DerivationSpace full_der_algebra(const Group& g, unsigned p);

/// D(gh) == D(g) h + g D(h) for all group elements g, h.
bool is_derivation(const Group& g, const Fp& f, const FpMatrix& d);
/// [D1, D2] = D1 o D2 - D2 o D1.
FpMatrix derivation_bracket(const Fp& f, const FpMatrix& d1, const FpMatrix& d2);
/// ad_x for a group element x: h -> xh - hx.
FpMatrix inner_derivation(const Group& g, const Fp& f, Elem x);

struct QuotientSolvability {
  bool solvable = false;
  Length derived_length = Length::infinite();
  std::vector<std::size_t> dims;  // dim D^i(HH^1)
};

/// S_0 = Der, S_{i+1} = [S_i, S_i] + InnDer. HH^1 is solvable iff S_i
/// reaches InnDer; the derived length is the first such i.
QuotientSolvability hh1_quotient_solvable(const DerivationSpace& d);

}  // namespace hh1
