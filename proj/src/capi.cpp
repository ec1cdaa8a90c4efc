#include "hh1/hh1.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hh1/error.hpp"
#include "hh1/input.hpp"
#include "hh1/report.hpp"

struct hh1_group {
  hh1::Group group;
  hh1::GroupSpec spec;
};

struct hh1_report {
  hh1::Report report;
};

namespace {

thread_local std::string last_error;

hh1_status status_of(hh1::ErrorKind k) {
  switch (k) {
    case hh1::ErrorKind::InvalidInput: return HH1_ERR_INPUT;
    case hh1::ErrorKind::CapExceeded: return HH1_ERR_CAP;
    case hh1::ErrorKind::Precondition: return HH1_ERR_PRECONDITION;
    case hh1::ErrorKind::Io: return HH1_ERR_IO;
  }
  return HH1_ERR_INTERNAL;
}

template <class F>
hh1_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return HH1_OK;
  } catch (const hh1::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HH1_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HH1_ERR_INTERNAL;
  }
}

hh1_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return HH1_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* hh1_last_error(void) { return last_error.c_str(); }

const char* hh1_version(void) { return HH1_VERSION; }

hh1_status hh1_group_from_json(const char* text, hh1_group** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    hh1::GroupSpec spec = hh1::parse_group_spec(text);
    hh1::Group g = hh1::build_group(spec);
    *out = new hh1_group{std::move(g), std::move(spec)};
  });
}

hh1_status hh1_group_order(const hh1_group* g, size_t* out) {
  if (!g) return null_argument("g");
  if (!out) return null_argument("out");
  *out = g->group.order();
  last_error.clear();
  return HH1_OK;
}

void hh1_group_free(hh1_group* g) { delete g; }

hh1_status hh1_analyze(const hh1_group* g, unsigned prime, int full_oracle, hh1_report** out) {
  if (!g) return null_argument("g");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    hh1::AnalyzeOptions options;
    options.full_oracle = full_oracle != 0;
    *out = new hh1_report{hh1::analyze(g->group, g->spec, prime, options)};
  });
}

hh1_status hh1_report_verdict(const hh1_report* r, hh1_verdict* out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  switch (r->report.verdict) {
    case hh1::Verdict::Solvable: *out = HH1_SOLVABLE; break;
    case hh1::Verdict::NotSolvable: *out = HH1_NOT_SOLVABLE; break;
    case hh1::Verdict::Inconclusive: *out = HH1_INCONCLUSIVE; break;
  }
  last_error.clear();
  return HH1_OK;
}

hh1_status hh1_report_gamma_edges(const hh1_report* r, size_t* out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  *out = r->report.gamma.edge_count;
  last_error.clear();
  return HH1_OK;
}

hh1_status hh1_report_serialize(const hh1_report* r, hh1_format format, char** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  if (format != HH1_FORMAT_JSON && format != HH1_FORMAT_TEXT) {
    last_error = "unknown format";
    return HH1_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(format == HH1_FORMAT_JSON ? hh1::to_json(r->report)
                                                 : hh1::to_text(r->report));
  });
}

hh1_status hh1_report_dot(const hh1_report* r, const char* name, char** out) {
  if (!r) return null_argument("r");
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto files = hh1::dot_files(r->report);
    auto it = files.find(std::string(name) + ".dot");
    if (it == files.end())
      hh1::fail(hh1::ErrorKind::InvalidInput, std::string("no graph named ") + name);
    *out = copy_string(it->second);
  });
}

hh1_status hh1_report_write_dot(const hh1_report* r, const char* dir) {
  if (!r) return null_argument("r");
  if (!dir) return null_argument("dir");
  return guarded([&] { hh1::write_dot_files(r->report, dir); });
}

void hh1_report_free(hh1_report* r) { delete r; }

void hh1_string_free(char* s) { std::free(s); }

}  // extern "C"
