#include "hh1/transfer.hpp"

#include <numeric>
#include <string>

namespace hh1 {

namespace {

std::vector<Elem> local_index(const Group& g, const InducedGroup& ind) {
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < ind.embedding.size(); ++i) local[ind.embedding[i]] = Elem(i);
  return local;
}

std::vector<std::uint32_t> coset_positions(const Group& g, const Subgroup& h,
                                           const std::vector<Elem>& transversal) {
  const auto labels = right_coset_labels(g, h);
  std::vector<std::uint32_t> label_to_pos(transversal.size(), ~std::uint32_t{0});
  for (std::size_t i = 0; i < transversal.size(); ++i) {
    auto l = labels[transversal[i]];
    if (l >= transversal.size() || label_to_pos[l] != ~std::uint32_t{0})
      fail(ErrorKind::Precondition, "not a right transversal");
    label_to_pos[l] = std::uint32_t(i);
  }
  std::vector<std::uint32_t> pos(g.order());
  for (Elem x = 0; x < g.order(); ++x) pos[x] = label_to_pos[labels[x]];
  return pos;
}

}  // namespace

// -- Transfer ------------------------------------------------------------------

Transfer::Transfer(const Group& g, const Subgroup& h) : Transfer(g, h, right_transversal(g, h)) {}

Transfer::Transfer(const Group& g, const Subgroup& h, std::vector<Elem> transversal)
    : g_(g),
      h_(h),
      transversal_(std::move(transversal)),
      coset_(coset_positions(g, h, transversal_)),
      induced_(induced_group(g, h)),
      local_(local_index(g, induced_)),
      quotient_(quotient(induced_.group, commutator_subgroup(induced_.group))) {
  if (transversal_.size() * h.order() != g.order())
    fail(ErrorKind::Precondition, "transversal size does not match the index");
}

Elem Transfer::abelianize(Elem h) const {
  if (!h_.contains(h)) fail(ErrorKind::Precondition, "element is not in the subgroup");
  return quotient_.projection(local_[h]);
}

Elem Transfer::operator()(Elem x) const {
  const Group& ab = quotient_.group;
  Elem acc = 0;
  for (Elem t : transversal_) {
    Elem tx = g_.mul(t, x);
    Elem tj = transversal_[coset_[tx]];
    Elem factor = g_.mul(tx, g_.inv(tj));  // t_i x = factor * t_j
    acc = ab.mul(acc, abelianize(factor));
  }
  return acc;
}

Elem transfer_element(const Group& g, const Subgroup& h, Elem x) { return Transfer(g, h)(x); }

FrattiniQuotient frattini_quotient(const Group& g, unsigned p) {
  return {g, frattini_coordinates(g, p)};
}

// -- CentralizerTransfer -----------------------------------------------------------

CentralizerTransfer::CentralizerTransfer(const Group& g, Elem x, unsigned p)
    : g_(g),
      c_(hh1::centralizer(g, x)),
      section_(section_coordinates(g, c_, frattini_p(g, c_, p), p)),
      transversal_(right_transversal(g, c_)),
      coset_(coset_positions(g, c_, transversal_)) {}

Vec CentralizerTransfer::value(Elem y) const {
  const VertexCodec codec = section_.codec();
  std::size_t acc = 0;
  for (Elem t : transversal_) {
    Elem ty = g_.mul(t, y);
    Elem factor = g_.mul(ty, g_.inv(transversal_[coset_[ty]]));
    acc = codec.add(acc, std::size_t(section_.vertex[factor]));
  }
  return codec.decode(acc);
}

namespace {

FpMatrix transfer_matrix(const CentralizerTransfer& ct, const FrattiniQuotient& a) {
  FpMatrix m(ct.target_dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vec col = ct.value(a.section.basis[j]);
    for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

}  // namespace

ReducedTransfer reduced_transfer(const Group& g, const FrattiniQuotient& a, Elem x) {
  CentralizerTransfer ct(g, x, a.prime());
  return {a.section.coords(x), x, transfer_matrix(ct, a)};
}

// -- TransferSummary ---------------------------------------------------------------

namespace {

const Group& within_graph_caps(const Group& g) {
  if (g.order() > kGraphOrderCap)
    fail(ErrorKind::CapExceeded, "graph pipeline is limited to order " +
                                     std::to_string(kGraphOrderCap) + ", got " +
                                     std::to_string(g.order()));
  return g;
}

}  // namespace

TransferSummary::TransferSummary(const Group& g, unsigned p)
    : g_(within_graph_caps(g)), a_(frattini_quotient(g, p)), classes_(conjugacy_classes(g)) {
  const Fp field(p);
  const std::size_t d = a_.dim();
  if (d > kGraphDimCap)
    fail(ErrorKind::CapExceeded, "Frattini quotient dimension " + std::to_string(d) +
                                     " exceeds cap " + std::to_string(kGraphDimCap));
  h_.assign(a_.vertex_count(), FpSubspace(field, d));
  // T_x only depends on C_G(x)
  std::map<std::vector<Elem>, FpMatrix> by_centralizer;
  for (const auto& cls : classes_) {
    const Elem x = cls.front();
    Subgroup c = centralizer(g, x);
    std::vector<Elem> key(c.members().begin(), c.members().end());
    auto it = by_centralizer.find(key);
    if (it == by_centralizer.end()) {
      CentralizerTransfer ct(g, x, p);
      it = by_centralizer.emplace(std::move(key), transfer_matrix(ct, a_)).first;
    }
    ReducedTransfer rt{a_.section.coords(x), x, it->second};
    FpSubspace& h = h_[a_.vertex_of(x)];
    for (std::size_t r = 0; r < rt.matrix.rows(); ++r) h.insert(rt.matrix.row(r));
    transfers_.push_back(std::move(rt));
  }
}

HComponent h_component(const Group& g, unsigned p, std::span<const Scalar> vertex) {
  const FrattiniQuotient a = frattini_quotient(g, p);
  const std::size_t target = a.codec().encode(vertex);
  FpSubspace space(Fp(p), a.dim());
  for (const auto& cls : conjugacy_classes(g)) {
    if (a.vertex_of(cls.front()) != target) continue;
    auto rt = reduced_transfer(g, a, cls.front());
    for (std::size_t r = 0; r < rt.matrix.rows(); ++r) space.insert(rt.matrix.row(r));
  }
  return {Vec(vertex.begin(), vertex.end()), std::move(space)};
}

std::pair<Elem, Elem> product_transfer_check(const Group& p1, const Group& p2, Elem x, Elem y,
                                             Elem a, Elem b) {
  const Transfer t1(p1, centralizer(p1, x));
  const Transfer t2(p2, centralizer(p2, y));
  const auto class_size = [](const Group& g, Elem z) {
    return g.order() / centralizer(g, z).order();
  };
  const long long e1 = static_cast<long long>(class_size(p2, y));
  const long long e2 = static_cast<long long>(class_size(p1, x));
  return {t1.abelianization().pow(t1(a), e1), t2.abelianization().pow(t2(b), e2)};
}

}  // namespace hh1
