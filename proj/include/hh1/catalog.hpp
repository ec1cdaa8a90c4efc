#pragma once

// Named groups used by the input format and the test fixtures.

#include <cstddef>

#include "hh1/group.hpp"

namespace hh1::catalog {

Group cyclic(std::size_t n);
/// (C_p)^n.
Group elem_ab(unsigned p, std::size_t n);
/// UT(3, p): upper unitriangular 3x3 matrices over F_p.
Group heisenberg(unsigned p);
/// <a, b | a^{p^2} = b^p = 1, b a b^-1 = a^{1+p}>, order p^3.
Group modular(unsigned p);
/// <a, b | a^9 = b^9 = 1, b a b^-1 = a^4>, order 81.
Group c9_rtimes_c9();
/// Dihedral group of the given order (2m, m >= 2).
Group dihedral(std::size_t order);
Group quaternion8();
/// SL(2, 3) acting on the 8 nonzero vectors of F_3^2.
Group sl23();
/// C_p wr C_p as a permutation group of degree p^2.
Group wreath_cp_cp(unsigned p);

}  // namespace hh1::catalog
