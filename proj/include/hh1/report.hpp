#pragma once

// End-to-end analysis of one group at one prime: graphs, image algebra,
// Loewy length, verdict, and the serializations used by the CLI.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hh1/gamma.hpp"
#include "hh1/group.hpp"
#include "hh1/input.hpp"

namespace hh1 {

/// Derived and lower central series of the image algebra are skipped above
/// this total dimension.
inline constexpr std::size_t kHSeriesCap = 2048;

struct AnalyzeOptions {
  bool full_oracle = false;
};

enum class Verdict { Solvable, NotSolvable, Inconclusive };
const char* verdict_name(Verdict v);

struct GraphSummary {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool acyclic = true;
  std::vector<std::string> witness_cycle;  // vertex labels, empty if acyclic
  Length longest_path = Length::finite(0);
  std::vector<std::string> loops;
};

struct HSummary {
  std::vector<std::pair<std::string, std::size_t>> component_dims;  // every vertex, index order
  std::size_t total_dim = 0;
  bool series_computed = false;
  std::vector<std::size_t> derived_series;
  Length derived_length = Length::infinite();
  Length ss_rank = Length::infinite();
};

struct OracleSummary {
  std::size_t der_dim = 0;
  std::size_t inner_dim = 0;
  std::size_t hh1_dim = 0;
  bool solvable = false;
  Length derived_length = Length::infinite();
  std::vector<std::size_t> quotient_series;
  std::optional<bool> agrees_with_graphs;  // set when the graphs gave a verdict
};

/// Closed integer interval; `hi` is unset when no upper bound is available.
struct LengthRange {
  std::size_t lo = 0;
  std::optional<std::size_t> hi;
};

struct Report {
  std::string group_description;
  unsigned prime = 0;
  std::size_t group_order = 0;
  bool is_p_group = false;
  std::size_t frattini_dim = 0;
  GraphSummary gamma;
  GraphSummary gamma_reduced;
  std::optional<GraphSummary> gamma2;  // p = 2 only
  HSummary h;
  std::optional<std::size_t> loewy_length;
  std::optional<double> dl_upper_bound;
  Verdict verdict = Verdict::Inconclusive;
  std::string verdict_basis;
  std::optional<LengthRange> ss_rank_range;  // for HH^1, odd p-groups with acyclic graph
  std::optional<LengthRange> dl_range;       // for HH^1, same condition
  std::optional<OracleSummary> full_oracle;
  std::vector<std::string> notes;
  std::vector<std::string> assumptions;

  // Graphs behind the summaries, for DOT output.
  GammaGraph gamma_graph;
  GammaGraph gamma_reduced_graph;
  std::optional<GammaGraph> gamma2_graph;
  std::vector<std::string> labels;
};

Report analyze(const Group& g, unsigned p, const AnalyzeOptions& options = {},
               const std::string& description = "");
Report analyze(const GroupSpec& spec, unsigned p, const AnalyzeOptions& options = {});
/// As above for a group already built from `spec`.
Report analyze(const Group& g, const GroupSpec& spec, unsigned p,
               const AnalyzeOptions& options = {});
/// Modelling assumptions attached to catalog entries used in `spec`.
std::vector<std::string> spec_assumptions(const GroupSpec& spec);

/// Canonical JSON with a fixed field order, newline-terminated.
std::string to_json(const Report& r);
std::string to_text(const Report& r);
/// File name -> DOT text: gamma.dot, gamma_reduced.dot and (p = 2) gamma2.dot.
std::map<std::string, std::string> dot_files(const Report& r);
/// Writes dot_files(r) into `dir`, creating it if needed.
void write_dot_files(const Report& r, const std::string& dir);

}  // namespace hh1
