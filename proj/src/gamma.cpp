#include "hh1/gamma.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace hh1 {

// -- DiGraph -------------------------------------------------------------------

void DiGraph::add_edge(std::size_t a, std::size_t b) {
  auto& succ = out_.at(a);
  if (b >= out_.size()) fail(ErrorKind::Precondition, "edge target out of range");
  auto it = std::lower_bound(succ.begin(), succ.end(), b);
  if (it != succ.end() && *it == b) return;
  succ.insert(it, b);
  ++edges_;
}

bool DiGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto& succ = out_.at(a);
  return std::binary_search(succ.begin(), succ.end(), b);
}

std::vector<std::pair<std::size_t, std::size_t>> DiGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t a = 0; a < out_.size(); ++a)
    for (std::size_t b : out_[a]) out.emplace_back(a, b);
  return out;
}

std::vector<std::size_t> DiGraph::loops() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < out_.size(); ++a)
    if (has_edge(a, a)) out.push_back(a);
  return out;
}

// -- graph construction ------------------------------------------------------------

GammaGraph build_gamma(const TransferSummary& summary) {
  const auto& a = summary.quotient();
  const VertexCodec codec = a.codec();
  const Fp field(a.prime());
  GammaGraph gamma{a.prime(), a.dim(), DiGraph(codec.size()), {}};
  gamma.h_dims.resize(codec.size());
  std::vector<Vec> coords(codec.size());
  for (std::size_t v = 0; v < codec.size(); ++v) coords[v] = codec.decode(v);
  for (std::size_t v = 0; v < codec.size(); ++v) {
    const FpSubspace& h = summary.h_component(v);
    gamma.h_dims[v] = h.dim();
    if (h.empty()) continue;
    const auto rows = h.basis();
    // a -> b iff some functional in h_a is nonzero at b
    for (std::size_t b = 0; b < codec.size(); ++b)
      for (const auto& phi : rows)
        if (field.dot(phi, coords[b]) != 0) {
          gamma.graph.add_edge(v, b);
          break;
        }
  }
  return gamma;
}

GammaGraph build_gamma(const Group& g, unsigned p) { return build_gamma(TransferSummary(g, p)); }

GammaGraph reduce_gamma(const GammaGraph& gamma) {
  GammaGraph out{gamma.prime, gamma.dim, DiGraph(gamma.graph.vertex_count()), gamma.h_dims};
  for (auto [a, b] : gamma.graph.edges())
    if (gamma.h_dims[b] > 0) out.graph.add_edge(a, b);
  return out;
}

GammaGraph build_gamma2(const GammaGraph& gamma) {
  if (gamma.prime != 2) fail(ErrorKind::Precondition, "the auxiliary graph is only defined for p = 2");
  const VertexCodec codec = gamma.codec();
  GammaGraph out{gamma.prime, gamma.dim, DiGraph(gamma.graph.vertex_count()), gamma.h_dims};
  for (auto [a, b] : gamma.graph.edges())
    if (a != 0 && gamma.graph.has_edge(a, codec.add(a, b))) out.graph.add_edge(a, b);
  return out;
}

// -- queries -----------------------------------------------------------------------

namespace {

/// Tarjan's SCC, iterative. Returns the component id per vertex.
std::vector<std::size_t> strongly_connected(const DiGraph& g, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next successor position)
  std::size_t next_index = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        std::size_t w = succ[pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_cycle(const DiGraph& g) {
  const auto loops = g.loops();
  if (!loops.empty()) return std::vector<std::size_t>{loops.front()};

  std::size_t ncomp = 0;
  const auto comp = strongly_connected(g, ncomp);
  std::vector<std::size_t> comp_size(ncomp, 0);
  for (std::size_t c : comp) ++comp_size[c];

  const std::size_t n = g.vertex_count();
  std::optional<std::vector<std::size_t>> best;
  std::vector<std::size_t> dist(n), parent(n);
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < n; ++s) {
    if (comp_size[comp[s]] < 2) continue;
    // BFS inside the component for the shortest cycle through s
    std::fill(dist.begin(), dist.end(), unseen);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    std::optional<std::size_t> closing;
    while (!queue.empty() && !closing) {
      std::size_t v = queue.front();
      queue.pop_front();
      if (best && dist[v] + 1 >= best->size()) break;
      for (std::size_t w : g.successors(v)) {
        if (comp[w] != comp[s]) continue;
        if (w == s) {
          closing = v;
          break;
        }
        if (dist[w] == unseen) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (!closing) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = *closing; v != s; v = parent[v]) cycle.push_back(v);
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    if (!best || cycle.size() < best->size()) best = std::move(cycle);
    if (best->size() == 2) break;
  }
  return best;
}

Length longest_path(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : g.successors(a)) ++indegree[b];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::vector<std::size_t> depth(n, 0);  // longest path ending at v
  std::size_t processed = 0, best = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++processed;
    best = std::max(best, depth[v]);
    for (std::size_t w : g.successors(v)) {
      depth[w] = std::max(depth[w], depth[v] + 1);
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (processed != n) return Length::infinite();
  return Length::finite(best);
}

std::vector<std::vector<std::size_t>> layering(const DiGraph& g, std::size_t max_layers) {
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> current(g.vertex_count());
  for (std::size_t v = 0; v < current.size(); ++v) current[v] = v;
  while (layers.size() < max_layers) {
    layers.push_back(current);
    if (current.empty()) break;
    std::vector<bool> mark(g.vertex_count(), false);
    for (std::size_t a : current)
      for (std::size_t b : g.successors(a)) mark[b] = true;
    std::vector<std::size_t> next;
    for (std::size_t v = 0; v < mark.size(); ++v)
      if (mark[v]) next.push_back(v);
    current = std::move(next);
  }
  return layers;
}

// -- DOT ---------------------------------------------------------------------------

std::string vertex_label(std::span<const Scalar> coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "g" + std::to_string(i + 1);
    if (coords[i] > 1) out += "^" + std::to_string(unsigned(coords[i]));
  }
  return out.empty() ? "e" : out;
}

std::vector<std::string> vertex_labels(const VertexCodec& codec) {
  std::vector<std::string> labels;
  labels.reserve(codec.size());
  for (std::size_t v = 0; v < codec.size(); ++v) labels.push_back(vertex_label(codec.decode(v)));
  return labels;
}

std::string to_dot(const DiGraph& g, const std::vector<std::string>& labels,
                   const std::string& name) {
  if (labels.size() != g.vertex_count())
    fail(ErrorKind::Precondition, "one label per vertex is required");
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& l : labels) os << "  \"" << l << "\";\n";
  for (auto [a, b] : g.edges()) os << "  \"" << labels[a] << "\" -> \"" << labels[b] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hh1
