// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hh1/hh1.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitOther = 1;

int exit_code(hh1_status s) {
  switch (s) {
    case HH1_OK: return kExitOk;
    case HH1_ERR_INPUT:
    case HH1_ERR_ARGUMENT:
    case HH1_ERR_IO: return kExitInput;
    case HH1_ERR_CAP: return kExitCap;
    default: return kExitOther;
  }
}

int report_failure(hh1_status s) {
  std::cerr << "error: " << hh1_last_error() << "\n";
  return exit_code(s);
}

struct Owned {
  hh1_group* group = nullptr;
  hh1_report* report = nullptr;
  char* text = nullptr;
  ~Owned() {
    hh1_string_free(text);
    hh1_report_free(report);
    hh1_group_free(group);
  }
};

int run_analyze(const std::string& input, unsigned prime, bool full_oracle,
                const std::string& dot_dir, const std::string& format) {
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Owned o;
  if (auto s = hh1_group_from_json(buf.str().c_str(), &o.group); s != HH1_OK)
    return report_failure(s);
  if (auto s = hh1_analyze(o.group, prime, full_oracle ? 1 : 0, &o.report); s != HH1_OK)
    return report_failure(s);
  if (!dot_dir.empty())
    if (auto s = hh1_report_write_dot(o.report, dot_dir.c_str()); s != HH1_OK)
      return report_failure(s);
  const hh1_format f = format == "text" ? HH1_FORMAT_TEXT : HH1_FORMAT_JSON;
  if (auto s = hh1_report_serialize(o.report, f, &o.text); s != HH1_OK) return report_failure(s);
  std::cout << o.text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvability of HH^1 of modular group algebras via transfer graphs"};
  app.set_version_flag("--version", std::string(hh1_version()));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze one group at one prime");
  std::string input, dot_dir, format = "json";
  unsigned prime = 0;
  bool full_oracle = false;
  analyze->add_option("--input", input, "JSON group description")->required();
  analyze->add_option("--prime", prime, "Characteristic of the field")->required();
  analyze->add_flag("--full-oracle", full_oracle,
                    "Also solve for all derivations of kG (order <= 32)");
  analyze->add_option("--emit-dot", dot_dir, "Write gamma*.dot into this directory");
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  return run_analyze(input, prime, full_oracle, dot_dir, format);
}
