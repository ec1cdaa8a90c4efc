#include "hh1/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hh1/derivations.hpp"
#include "hh1/error.hpp"
#include "hh1/lie.hpp"
#include "hh1/loewy.hpp"
#include "hh1/transfer.hpp"

namespace hh1 {

namespace {

using nlohmann::ordered_json;

bool prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GraphSummary summarize(const DiGraph& g, const std::vector<std::string>& labels) {
  GraphSummary s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  if (auto cycle = find_cycle(g)) {
    s.acyclic = false;
    for (auto v : *cycle) s.witness_cycle.push_back(labels[v]);
  }
  s.longest_path = longest_path(g);
  for (auto v : g.loops()) s.loops.push_back(labels[v]);
  return s;
}

bool mentions(const GroupSpec& s, const std::string& name) {
  if (s.kind == GroupSpec::Kind::Catalog) return s.name == name;
  return std::any_of(s.factors.begin(), s.factors.end(),
                     [&](const GroupSpec& f) { return mentions(f, name); });
}

ordered_json length_json(const Length& l) {
  if (l.is_finite()) return l.value();
  return "inf";
}

ordered_json graph_json(const GraphSummary& g) {
  ordered_json j;
  j["vertices"] = g.vertex_count;
  j["edges"] = g.edge_count;
  j["acyclic"] = g.acyclic;
  j["witness_cycle"] = g.acyclic ? ordered_json(nullptr) : ordered_json(g.witness_cycle);
  j["longest_path"] = length_json(g.longest_path);
  j["loops"] = g.loops;
  return j;
}

ordered_json range_json(const std::optional<LengthRange>& r) {
  if (!r) return nullptr;
  return ordered_json::array({r->lo, r->hi ? ordered_json(*r->hi) : ordered_json(nullptr)});
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Solvable: return "SOLVABLE";
    case Verdict::NotSolvable: return "NOT_SOLVABLE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Report analyze(const Group& g, unsigned p, const AnalyzeOptions& options,
               const std::string& description) {
  if (!prime(p) || p > 255)
    fail(ErrorKind::InvalidInput, "prime must be a prime below 256, got " + std::to_string(p));

  Report r;
  r.group_description = description;
  r.prime = p;
  r.group_order = g.order();
  r.is_p_group = is_p_group(g, p);

  const TransferSummary summary(g, p);
  r.gamma_graph = build_gamma(summary);
  r.frattini_dim = r.gamma_graph.dim;
  r.labels = vertex_labels(r.gamma_graph.codec());
  r.gamma = summarize(r.gamma_graph.graph, r.labels);
  r.gamma_reduced_graph = reduce_gamma(r.gamma_graph);
  r.gamma_reduced = summarize(r.gamma_reduced_graph.graph, r.labels);
  if (p == 2) {
    r.gamma2_graph = build_gamma2(r.gamma_graph);
    r.gamma2 = summarize(r.gamma2_graph->graph, r.labels);
  }

  const GradedLieBasis h = build_h(summary);
  r.h.total_dim = h.dim();
  for (std::size_t v = 0; v < r.labels.size(); ++v)
    r.h.component_dims.emplace_back(r.labels[v], h.dim_at(v));
  if (h.dim() <= kHSeriesCap) {
    const Series s = derived_series(h);
    r.h.series_computed = true;
    r.h.derived_series = s.dims;
    r.h.derived_length = s.length();
    r.h.ss_rank = ss_rank(h);
  } else {
    r.notes.push_back("image algebra has dimension " + std::to_string(h.dim()) +
                      "; its series are not computed above " + std::to_string(kHSeriesCap));
  }

  if (r.is_p_group) {
    if (g.order() <= kLoewyCap) {
      r.loewy_length = loewy(g, p).loewy_length;
    } else {
      r.loewy_length = jennings_loewy_length(g, p);
      r.notes.push_back("Loewy length taken from the Jennings series (order above " +
                        std::to_string(kLoewyCap) + ")");
    }
  }

  // Verdict from the graphs.
  if (p % 2 == 1) {
    if (r.is_p_group) {
      r.verdict = r.gamma.acyclic ? Verdict::Solvable : Verdict::NotSolvable;
      r.verdict_basis = "graph-criterion";
      if (r.gamma.acyclic) {
        const std::size_t lg = r.gamma.longest_path.value();
        r.ss_rank_range = LengthRange{lg == 0 ? 0 : lg - 1, lg};
        LengthRange dl{lg, std::nullopt};
        if (r.h.series_computed && r.h.derived_length.is_finite())
          dl.lo = r.h.derived_length.value();
        if (r.loewy_length && *r.loewy_length >= 2) {
          r.dl_upper_bound = dl_upper_bound(*r.loewy_length, lg);
          dl.hi = std::size_t(std::floor(*r.dl_upper_bound + 1e-9));
        }
        r.dl_range = dl;
      }
    } else if (!r.gamma.acyclic) {
      r.verdict = Verdict::NotSolvable;
      r.verdict_basis = "image-criterion";
    } else {
      r.verdict = Verdict::Inconclusive;
      r.verdict_basis = "image-solvable";
      r.notes.push_back("the image algebra is solvable; for groups that are not p-groups "
                        "this does not decide HH^1");
    }
  } else if (!r.gamma2->acyclic) {
    r.verdict = Verdict::NotSolvable;
    r.verdict_basis = "gamma2-cycle";
  } else {
    r.verdict = Verdict::Inconclusive;
    r.verdict_basis = "gamma2-acyclic";
  }

  if (options.full_oracle) {
    if (g.order() <= kDerivationOracleCap) {
      const DerivationSpace d = full_der_algebra(g, p);
      const QuotientSolvability q = hh1_quotient_solvable(d);
      OracleSummary o;
      o.der_dim = d.der_dim();
      o.inner_dim = d.inner_dim();
      o.hh1_dim = d.hh1_dim();
      o.solvable = q.solvable;
      o.derived_length = q.derived_length;
      o.quotient_series = q.dims;
      if (r.verdict != Verdict::Inconclusive) {
        o.agrees_with_graphs = o.solvable == (r.verdict == Verdict::Solvable);
        if (!*o.agrees_with_graphs)
          r.notes.push_back("full oracle disagrees with the graph verdict");
      } else if (p == 2) {
        r.verdict = o.solvable ? Verdict::Solvable : Verdict::NotSolvable;
        r.verdict_basis = "full-oracle";
      }
      r.full_oracle = o;
    } else {
      r.notes.push_back("full oracle skipped: order " + std::to_string(g.order()) +
                        " exceeds " + std::to_string(kDerivationOracleCap));
    }
  }
  return r;
}

std::vector<std::string> spec_assumptions(const GroupSpec& spec) {
  std::vector<std::string> out;
  if (mentions(spec, "c9_rtimes_c9"))
    out.push_back(
        "c9_rtimes_c9 (b a b^-1 = a^4) is taken to be SmallGroup(81,4); the identifier is not "
        "checked against a small-groups library");
  return out;
}

Report analyze(const Group& g, const GroupSpec& spec, unsigned p, const AnalyzeOptions& options) {
  Report r = analyze(g, p, options, spec.describe());
  r.assumptions = spec_assumptions(spec);
  return r;
}

Report analyze(const GroupSpec& spec, unsigned p, const AnalyzeOptions& options) {
  return analyze(build_group(spec), spec, p, options);
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["prime"] = r.prime;
  j["group_order"] = r.group_order;
  j["is_p_group"] = r.is_p_group;
  j["frattini_dim"] = r.frattini_dim;
  j["gamma"] = graph_json(r.gamma);
  j["gamma_reduced"] = graph_json(r.gamma_reduced);
  j["gamma2"] = r.gamma2 ? graph_json(*r.gamma2) : ordered_json(nullptr);

  ordered_json h;
  ordered_json dims = ordered_json::object();
  for (const auto& [label, dim] : r.h.component_dims) dims[label] = dim;
  h["component_dims"] = dims;
  h["total_dim"] = r.h.total_dim;
  if (r.h.series_computed) {
    h["derived_series"] = r.h.derived_series;
    h["derived_length"] = length_json(r.h.derived_length);
    h["ss_rank"] = length_json(r.h.ss_rank);
  } else {
    h["derived_series"] = nullptr;
    h["derived_length"] = nullptr;
    h["ss_rank"] = nullptr;
  }
  j["h"] = h;

  j["loewy_length"] = r.loewy_length ? ordered_json(*r.loewy_length) : ordered_json(nullptr);
  j["dl_upper_bound"] = r.dl_upper_bound ? ordered_json(*r.dl_upper_bound) : ordered_json(nullptr);
  j["verdict"] = verdict_name(r.verdict);
  j["verdict_basis"] = r.verdict_basis;

  ordered_json ranges;
  ranges["ss_rank_hh1"] = range_json(r.ss_rank_range);
  ranges["derived_length_hh1"] = range_json(r.dl_range);
  j["ranges"] = ranges;

  if (r.full_oracle) {
    const auto& o = *r.full_oracle;
    ordered_json oj;
    oj["der_dim"] = o.der_dim;
    oj["inner_dim"] = o.inner_dim;
    oj["hh1_dim"] = o.hh1_dim;
    oj["solvable"] = o.solvable;
    oj["derived_length"] = length_json(o.derived_length);
    oj["quotient_series"] = o.quotient_series;
    oj["agrees_with_graphs"] =
        o.agrees_with_graphs ? ordered_json(*o.agrees_with_graphs) : ordered_json(nullptr);
    j["full_oracle"] = oj;
  } else {
    j["full_oracle"] = nullptr;
  }
  j["notes"] = r.notes;

  ordered_json meta;
  meta["group"] = r.group_description;
  meta["assumptions"] = r.assumptions;
  j["metadata"] = meta;
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  auto graph = [&](const char* name, const GraphSummary& g) {
    out << name << ": " << g.vertex_count << " vertices, " << g.edge_count << " edges, "
        << (g.acyclic ? "acyclic" : "cyclic") << ", longest path " << g.longest_path.str() << "\n";
    if (!g.acyclic) out << "  cycle: " << join(g.witness_cycle, " -> ") << "\n";
    if (!g.loops.empty()) out << "  loops: " << join(g.loops, ", ") << "\n";
  };
  if (!r.group_description.empty()) out << "group: " << r.group_description << "\n";
  out << "prime: " << r.prime << "\n";
  out << "order: " << r.group_order << (r.is_p_group ? " (p-group)" : "") << "\n";
  out << "frattini quotient dimension: " << r.frattini_dim << "\n";
  graph("gamma", r.gamma);
  graph("gamma reduced", r.gamma_reduced);
  if (r.gamma2) graph("gamma2", *r.gamma2);

  out << "h: dimension " << r.h.total_dim;
  std::vector<std::string> parts;
  for (const auto& [label, dim] : r.h.component_dims)
    if (dim) parts.push_back(label + ":" + std::to_string(dim));
  if (!parts.empty()) out << " (" << join(parts, ", ") << ")";
  out << "\n";
  if (r.h.series_computed)
    out << "  derived series: " << join(r.h.derived_series, ", ") << "; derived length "
        << r.h.derived_length.str() << "; ss-rank " << r.h.ss_rank.str() << "\n";

  if (r.loewy_length) out << "loewy length: " << *r.loewy_length << "\n";
  if (r.dl_upper_bound) {
    std::ostringstream b;
    b.precision(6);
    b << *r.dl_upper_bound;
    out << "derived length bound: " << b.str() << "\n";
  }
  auto range = [&](const char* name, const std::optional<LengthRange>& rg) {
    if (!rg) return;
    out << name << ": [" << rg->lo << ", " << (rg->hi ? std::to_string(*rg->hi) : "?") << "]\n";
  };
  range("ss-rank of HH^1", r.ss_rank_range);
  range("derived length of HH^1", r.dl_range);
  if (r.full_oracle) {
    const auto& o = *r.full_oracle;
    out << "full oracle: dim Der " << o.der_dim << ", dim Inn " << o.inner_dim << ", dim HH^1 "
        << o.hh1_dim << ", " << (o.solvable ? "solvable" : "not solvable") << ", derived length "
        << o.derived_length.str();
    if (o.agrees_with_graphs) out << (*o.agrees_with_graphs ? ", agrees" : ", DISAGREES");
    out << "\n";
  }
  out << "verdict: " << verdict_name(r.verdict) << " (" << r.verdict_basis << ")\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& a : r.assumptions) out << "assumption: " << a << "\n";
  return out.str();
}

std::map<std::string, std::string> dot_files(const Report& r) {
  std::map<std::string, std::string> out;
  out["gamma.dot"] = to_dot(r.gamma_graph.graph, r.labels, "gamma");
  out["gamma_reduced.dot"] = to_dot(r.gamma_reduced_graph.graph, r.labels, "gamma_reduced");
  if (r.gamma2_graph) out["gamma2.dot"] = to_dot(r.gamma2_graph->graph, r.labels, "gamma2");
  return out;
}

void write_dot_files(const Report& r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create directory " + dir + ": " + ec.message());
  for (const auto& [name, text] : dot_files(r)) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) fail(ErrorKind::Io, "cannot write " + path.string());
  }
}

}  // namespace hh1
