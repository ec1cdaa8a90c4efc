#pragma once

// Radical filtration of kP for a p-group P, where the Jacobson radical is the
// augmentation ideal J = span{g - e}.

#include <cstddef>
#include <vector>

#include "hh1/fp.hpp"
#include "hh1/group.hpp"

namespace hh1 {

inline constexpr std::size_t kLoewyCap = 512;

struct RadicalFiltration {
  Group group;
  unsigned prime = 0;
  std::vector<std::size_t> dims;  // dim J^n for n = 0, 1, ..., ending with 0
  std::size_t loewy_length = 0;   // least n > 0 with J^n = 0
  std::vector<FpSubspace> powers; // J^0 .. J^ll, only when requested
};

RadicalFiltration loewy(const Group& g, unsigned p, bool keep_powers = false);

/// Ranks d_i of the Jennings quotients D_i/D_{i+1}, with D_1 = G and
/// D_i = [D_{i-1}, G] D_{ceil(i/p)}^p. Entry i-1 holds d_i.
std::vector<std::size_t> jennings_ranks(const Group& g, unsigned p);

/// ll(kP) = 1 + (p - 1) sum_i i d_i. Works from the group alone, so it is not
/// subject to kLoewyCap.
std::size_t jennings_loewy_length(const Group& g, unsigned p);

/// Product in kG of two vectors in the group basis.
Vec group_algebra_product(const Group& g, const Fp& f, std::span<const Scalar> x,
                          std::span<const Scalar> y);

/// log2(ll - 1) + path_length; requires ll >= 2.
double dl_upper_bound(std::size_t loewy_length, std::size_t path_length);

}  // namespace hh1
