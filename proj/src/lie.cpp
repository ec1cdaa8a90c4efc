#include "hh1/lie.hpp"

#include <limits>

namespace hh1 {

Scalar GradedAlgebra::eval(std::span<const Scalar> phi, std::size_t a) const {
  return field_.dot(phi, codec_.decode(a));
}

Homogeneous bracket(const GradedAlgebra& L, const Homogeneous& x, const Homogeneous& y) {
  const Fp& f = L.field();
  const Scalar phi_b = L.eval(x.functional, y.vertex);
  const Scalar psi_a = L.eval(y.functional, x.vertex);
  Vec chi(L.dim(), 0);
  f.axpy(phi_b, y.functional, chi);
  f.axpy(f.neg(psi_a), x.functional, chi);
  return {L.codec().add(x.vertex, y.vertex), std::move(chi)};
}

GradedElement add(const GradedAlgebra& L, const GradedElement& x, const GradedElement& y) {
  GradedElement out = x;
  for (const auto& [v, phi] : y.parts) {
    auto [it, inserted] = out.parts.try_emplace(v, phi);
    if (!inserted) {
      L.field().axpy(1, phi, it->second);
      if (is_zero(it->second)) out.parts.erase(it);
    }
  }
  return out;
}

GradedElement scale(const GradedAlgebra& L, Scalar c, const GradedElement& x) {
  GradedElement out;
  if (c == 0) return out;
  for (const auto& [v, phi] : x.parts) {
    Vec w(phi.size(), 0);
    L.field().axpy(c, phi, w);
    out.parts.emplace(v, std::move(w));
  }
  return out;
}

GradedElement as_element(const Homogeneous& x) {
  GradedElement e;
  if (!is_zero(x.functional)) e.parts.emplace(x.vertex, x.functional);
  return e;
}

GradedElement bracket(const GradedAlgebra& L, const GradedElement& x, const GradedElement& y) {
  GradedElement out;
  for (const auto& [a, phi] : x.parts)
    for (const auto& [b, psi] : y.parts)
      out = add(L, out, as_element(bracket(L, Homogeneous{a, phi}, Homogeneous{b, psi})));
  return out;
}

Homogeneous ad_power(const GradedAlgebra& L, const Homogeneous& x, const Homogeneous& y,
                     std::size_t n) {
  Homogeneous z = y;
  for (std::size_t i = 0; i < n; ++i) z = bracket(L, x, z);
  return z;
}

Scalar bv_delta(const GradedAlgebra& L, const Homogeneous& x) {
  return L.field().neg(L.eval(x.functional, x.vertex));
}

// -- GradedLieBasis ----------------------------------------------------------------

GradedLieBasis::GradedLieBasis(const GradedAlgebra& L)
    : L_(L), parts_(L.codec().size(), FpSubspace(L.field(), L.dim())) {}

bool GradedLieBasis::insert(const Homogeneous& x) {
  if (parts_.at(x.vertex).insert(x.functional)) {
    ++dim_;
    return true;
  }
  return false;
}

bool GradedLieBasis::contains(const Homogeneous& x) const {
  return parts_.at(x.vertex).contains(x.functional);
}

bool GradedLieBasis::contains(const GradedElement& x) const {
  for (const auto& [v, phi] : x.parts)
    if (!parts_.at(v).contains(phi)) return false;
  return true;
}

bool GradedLieBasis::contains(const GradedLieBasis& other) const {
  for (std::size_t v = 0; v < parts_.size(); ++v)
    if (!parts_[v].contains(other.parts_[v])) return false;
  return true;
}

std::vector<Homogeneous> GradedLieBasis::basis() const {
  std::vector<Homogeneous> out;
  out.reserve(dim_);
  for (std::size_t v = 0; v < parts_.size(); ++v)
    for (auto& row : parts_[v].basis()) out.push_back({v, std::move(row)});
  return out;
}

std::vector<std::size_t> GradedLieBasis::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < parts_.size(); ++v)
    if (!parts_[v].empty()) out.push_back(v);
  return out;
}

GradedLieBasis build_h(const TransferSummary& summary) {
  const auto& a = summary.quotient();
  GradedLieBasis h(GradedAlgebra(a.prime(), a.dim()));
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    for (auto& row : summary.h_component(v).basis()) h.insert({v, std::move(row)});
  return h;
}

GradedLieBasis build_h(const Group& g, unsigned p) { return build_h(TransferSummary(g, p)); }

GradedLieBasis full_algebra(const GradedAlgebra& L) {
  GradedLieBasis all(L);
  for (std::size_t v = 0; v < L.codec().size(); ++v)
    for (std::size_t i = 0; i < L.dim(); ++i) {
      Vec e(L.dim(), 0);
      e[i] = 1;
      all.insert({v, std::move(e)});
    }
  return all;
}

namespace {

// Span of brackets of basis pairs; stops early once `ceiling` is reached
// (a subspace known to contain the result).
GradedLieBasis bracket_span_impl(const GradedLieBasis& a, const GradedLieBasis& b, bool same,
                                 std::size_t ceiling) {
  const GradedAlgebra& L = a.algebra();
  GradedLieBasis out(L);
  const auto ba = a.basis();
  const auto bb = same ? ba : b.basis();
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t j = same ? i + 1 : 0; j < bb.size(); ++j) {
      Homogeneous z = bracket(L, ba[i], bb[j]);
      if (!is_zero(z.functional)) out.insert(z);
      if (out.dim() >= ceiling) return out;
    }
  return out;
}

}  // namespace

GradedLieBasis bracket_span(const GradedLieBasis& a, const GradedLieBasis& b) {
  return bracket_span_impl(a, b, false, std::numeric_limits<std::size_t>::max());
}

bool is_subalgebra(const GradedLieBasis& s) {
  return s.contains(bracket_span_impl(s, s, true, std::numeric_limits<std::size_t>::max()));
}

Series derived_series(const GradedLieBasis& l, std::vector<GradedLieBasis>* terms) {
  Series s;
  GradedLieBasis current = l;
  s.dims.push_back(current.dim());
  if (terms) terms->push_back(current);
  while (current.dim() > 0) {
    // D^{i+1} is contained in D^i
    GradedLieBasis next = bracket_span_impl(current, current, true, current.dim());
    if (next.dim() == current.dim()) return s;  // perfect: stabilized above zero
    current = std::move(next);
    s.dims.push_back(current.dim());
    if (terms) terms->push_back(current);
  }
  s.terminates = true;
  return s;
}

Series lower_central_series(const GradedLieBasis& l) {
  Series s;
  GradedLieBasis current = l;
  s.dims.push_back(current.dim());
  while (current.dim() > 0) {
    GradedLieBasis next = bracket_span_impl(l, current, false, current.dim());
    if (next.dim() == current.dim()) return s;
    current = std::move(next);
    s.dims.push_back(current.dim());
  }
  s.terminates = true;
  return s;
}

bool is_nilpotent(const GradedLieBasis& l) { return lower_central_series(l).terminates; }

Length ss_rank(const GradedLieBasis& l) {
  std::vector<GradedLieBasis> terms;
  derived_series(l, &terms);
  for (std::size_t n = 0; n < terms.size(); ++n)
    if (is_nilpotent(terms[n])) return Length::finite(n);
  // the last term is zero (nilpotent) or perfect and nonzero (not nilpotent)
  return Length::infinite();
}

}  // namespace hh1
