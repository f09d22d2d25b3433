#include "vandal/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vandal/errors.hpp"

namespace vandal {

namespace {

void write_indent(std::string& out, int indent, int level) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent * level), ' ');
}

void emit(std::string& out, const Json& v, int indent, int level) {
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        write_indent(out, indent, level + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        emit(out, item, indent, level + 1);
      }
      write_indent(out, indent, level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // arrays of scalars stay on one line
      const bool flat = std::none_of(v.begin(), v.end(),
                                     [](const Json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) write_indent(out, indent, level + 1);
        emit(out, item, indent, level + 1);
      }
      if (!flat) write_indent(out, indent, level);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      out += std::isfinite(x) ? format_number(x, 17) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  emit(out, value, indent, 0);
  return out;
}

Json to_json(const NodeSet& nodes) {
  Json j;
  j["dim"] = nodes.dim();
  Json list = Json::array();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto t = nodes.node(k);
    list.push_back(Json(std::vector<double>(t.begin(), t.end())));
  }
  j["nodes"] = std::move(list);
  if (auto q = nodes.cached_separation()) {
    j["separation"] = *q;
  } else {
    j["separation"] = nullptr;
  }
  return j;
}

Json to_json(const SpectralResult& result) {
  Json j;
  j["sigma_min"] = result.sigma_min;
  j["sigma_max"] = result.sigma_max;
  if (result.cond_infinite()) {
    j["cond"] = nullptr;
  } else {
    j["cond"] = result.cond;
  }
  j["path"] = std::string(to_string(result.path));
  j["residual"] = result.residual;
  j["cross_checked"] = result.cross_checked;
  j["clamped"] = result.clamped;
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["theorem"] = std::string(to_string(report.theorem));
  j["applicable"] = report.applicable;
  j["condition_lhs"] = report.condition_lhs;
  j["condition_rhs"] = report.condition_rhs;
  j["bound"] = report.bound ? Json(*report.bound) : Json(nullptr);
  j["normalized"] = report.normalized ? Json(*report.normalized) : Json(nullptr);
  j["target"] = std::string(to_string(report.target));
  j["form"] = std::string(to_string(report.form));
  j["strict"] = report.strict;
  if (report.theorem == TheoremId::small_r) j["r"] = report.r;
  return j;
}

Json to_json(const PoissonDiagnostic& diagnostic) {
  Json j;
  j["lhs"] = diagnostic.lhs;
  j["mid"] = diagnostic.mid;
  j["rhs"] = diagnostic.rhs;
  j["sandwich"] = diagnostic.sandwich;
  j["truncation"] = diagnostic.truncation;
  return j;
}

NodeSet nodeset_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("dim") || !value.contains("nodes")) {
    throw InvalidInput("node set JSON needs \"dim\" and \"nodes\"");
  }
  if (!value["dim"].is_number_integer() || value["dim"].get<long long>() < 1) {
    throw InvalidInput("node set JSON: \"dim\" must be a positive integer");
  }
  const auto dim = value["dim"].get<std::size_t>();
  const auto& list = value["nodes"];
  if (!list.is_array()) throw InvalidInput("node set JSON: \"nodes\" must be an array");
  std::vector<double> coords;
  coords.reserve(list.size() * dim);
  for (const auto& node : list) {
    if (!node.is_array() || node.size() != dim) {
      throw InvalidInput("node set JSON: every node needs exactly dim coordinates");
    }
    for (const auto& c : node) {
      if (!c.is_number()) throw InvalidInput("node set JSON: coordinates must be numbers");
      coords.push_back(c.get<double>());
    }
  }
  return NodeSet(dim, std::move(coords));
}

std::string nodeset_to_text(const NodeSet& nodes) {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto t = nodes.node(k);
    for (std::size_t s = 0; s < t.size(); ++s) {
      if (s) out += ' ';
      out += format_number(t[s], 17);
    }
    out += '\n';
  }
  return out;
}

NodeSet parse_nodeset(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw InvalidInput("node set input is empty");
  if (text[start] == '{') {
    Json value;
    try {
      value = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("node set JSON does not parse: ") + e.what());
    }
    return nodeset_from_json(value);
  }
  std::vector<double> coords;
  std::size_t dim = 0;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::size_t count = 0;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw InvalidInput("node set text, line " + std::to_string(lineno) + ": bad number '" +
                           token + "'");
      }
      coords.push_back(x);
      ++count;
    }
    if (dim == 0) dim = count;
    if (count != dim) {
      throw InvalidInput("node set text, line " + std::to_string(lineno) + ": expected " +
                         std::to_string(dim) + " coordinates, got " + std::to_string(count));
    }
  }
  if (dim == 0) throw InvalidInput("node set input has no nodes");
  return NodeSet(dim, std::move(coords));
}

NodeSet read_nodeset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open node file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_nodeset(buf.str());
}

}  // namespace vandal
