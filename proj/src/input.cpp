#include "hh1/input.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "hh1/catalog.hpp"
#include "hh1/error.hpp"

namespace hh1 {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::InvalidInput, msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<long long>();
}

std::vector<std::uint32_t> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of integers");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    long long x = integer(v, where);
    if (x < 0 || x > 0xffffffffLL) bad(where + ": entry " + std::to_string(x) + " out of range");
    out.push_back(std::uint32_t(x));
  }
  return out;
}

GroupSpec parse_node(const json& j, std::size_t depth, const std::string& where) {
  if (depth > kMaxSpecDepth)
    bad(where + ": nesting deeper than " + std::to_string(kMaxSpecDepth) + " levels");
  if (!j.is_object()) bad(where + ": expected an object");
  const json& type = field(j, "type", where);
  if (!type.is_string()) bad(where + ": \"type\" must be a string");
  const std::string t = type.get<std::string>();

  GroupSpec s;
  if (t == "catalog") {
    s.kind = GroupSpec::Kind::Catalog;
    const json& name = field(j, "name", where);
    if (!name.is_string()) bad(where + ": \"name\" must be a string");
    s.name = name.get<std::string>();
    const auto& entries = catalog_entries();
    auto entry = std::find_if(entries.begin(), entries.end(),
                              [&](const auto& e) { return e.first == s.name; });
    if (entry == entries.end()) bad(where + ": unknown catalog group \"" + s.name + "\"");
    json params = j.value("params", json::object());
    if (!params.is_object()) bad(where + ": \"params\" must be an object");
    for (const auto& [key, value] : params.items()) {
      if (std::find(entry->second.begin(), entry->second.end(), key) == entry->second.end())
        bad(where + ": catalog group \"" + s.name + "\" has no parameter \"" + key + "\"");
      s.params[key] = integer(value, where + ".params." + key);
    }
    for (const auto& key : entry->second)
      if (!s.params.count(key))
        bad(where + ": catalog group \"" + s.name + "\" needs parameter \"" + key + "\"");
  } else if (t == "permutation") {
    s.kind = GroupSpec::Kind::Permutation;
    long long deg = integer(field(j, "degree", where), where + ".degree");
    if (deg < 1) bad(where + ": degree must be positive");
    s.degree = std::size_t(deg);
    const json& gens = field(j, "generators", where);
    if (!gens.is_array()) bad(where + ": \"generators\" must be an array");
    for (std::size_t k = 0; k < gens.size(); ++k)
      s.generators.push_back(index_list(gens[k], where + ".generators[" + std::to_string(k) + "]"));
  } else if (t == "cayley") {
    s.kind = GroupSpec::Kind::Cayley;
    const json& rows = field(j, "table", where);
    if (!rows.is_array()) bad(where + ": \"table\" must be an array of rows");
    for (std::size_t r = 0; r < rows.size(); ++r)
      s.table.push_back(index_list(rows[r], where + ".table[" + std::to_string(r) + "]"));
  } else if (t == "product") {
    s.kind = GroupSpec::Kind::Product;
    const json& factors = field(j, "factors", where);
    if (!factors.is_array() || factors.empty()) bad(where + ": \"factors\" must be a nonempty array");
    for (std::size_t k = 0; k < factors.size(); ++k)
      s.factors.push_back(
          parse_node(factors[k], depth + 1, where + ".factors[" + std::to_string(k) + "]"));
  } else {
    bad(where + ": unknown type \"" + t + "\"");
  }
  return s;
}

unsigned small_prime_param(const GroupSpec& s, const char* key) {
  long long v = s.params.at(key);
  if (v < 2 || v > 255) bad(s.name + ": parameter " + key + " must be a prime below 256");
  return unsigned(v);
}

std::size_t size_param(const GroupSpec& s, const char* key) {
  long long v = s.params.at(key);
  if (v < 0 || v > (long long)kClosureCap)
    fail(v < 0 ? ErrorKind::InvalidInput : ErrorKind::CapExceeded,
         s.name + ": parameter " + key + " = " + std::to_string(v) + " out of range");
  return std::size_t(v);
}

Group build_catalog(const GroupSpec& s) {
  const std::string& n = s.name;
  if (n == "cyclic") return catalog::cyclic(size_param(s, "n"));
  if (n == "elem_ab") return catalog::elem_ab(small_prime_param(s, "p"), size_param(s, "n"));
  if (n == "heisenberg") return catalog::heisenberg(small_prime_param(s, "p"));
  if (n == "modular") return catalog::modular(small_prime_param(s, "p"));
  if (n == "c9_rtimes_c9") return catalog::c9_rtimes_c9();
  if (n == "dihedral") return catalog::dihedral(size_param(s, "order"));
  if (n == "quaternion8") return catalog::quaternion8();
  if (n == "sl23") return catalog::sl23();
  if (n == "wreath_cp_cp") return catalog::wreath_cp_cp(small_prime_param(s, "p"));
  bad("unknown catalog group \"" + n + "\"");
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<std::string>>>& catalog_entries() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> entries{
      {"cyclic", {"n"}},       {"elem_ab", {"p", "n"}}, {"heisenberg", {"p"}},
      {"modular", {"p"}},      {"c9_rtimes_c9", {}},    {"dihedral", {"order"}},
      {"quaternion8", {}},     {"sl23", {}},            {"wreath_cp_cp", {"p"}},
  };
  return entries;
}

std::string GroupSpec::describe() const {
  switch (kind) {
    case Kind::Catalog: {
      std::string out = name;
      if (!params.empty()) {
        out += "(";
        bool first = true;
        for (const auto& [k, v] : params) {
          out += (first ? "" : ", ") + k + "=" + std::to_string(v);
          first = false;
        }
        out += ")";
      }
      return out;
    }
    case Kind::Permutation:
      return "permutation group of degree " + std::to_string(degree) + " on " +
             std::to_string(generators.size()) + " generators";
    case Kind::Cayley:
      return "Cayley table of order " + std::to_string(table.size());
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        std::string part = f.describe();
        if (f.kind == Kind::Product) part = "(" + part + ")";
        out += (i ? " x " : "") + part;
      }
      return out;
    }
  }
  return {};
}

GroupSpec parse_group_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return parse_node(j, 1, "group");
}

Group build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Catalog:
      return build_catalog(spec);
    case GroupSpec::Kind::Permutation:
      return Group::from_permutations(spec.degree, spec.generators);
    case GroupSpec::Kind::Cayley:
      return Group::from_cayley(spec.table);
    case GroupSpec::Kind::Product: {
      Group acc = build_group(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = direct_product(acc, build_group(spec.factors[i])).group;
      return acc;
    }
  }
  bad("unreachable group kind");
}

}  // namespace hh1
