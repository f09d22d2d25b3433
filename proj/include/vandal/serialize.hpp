#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "vandal/bounds.hpp"
#include "vandal/localizer.hpp"
#include "vandal/torus_nodes.hpp"
#include "vandal/vandermonde.hpp"

namespace vandal {

using Json = nlohmann::ordered_json;

/// printf-style %.{digits}g; nonfinite values become "inf", "-inf" or "nan".
std::string format_number(double x, int digits);

/// JSON text with every floating-point number printed to 17 significant digits.
/// indent < 0 gives a single line.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(const NodeSet& nodes);
Json to_json(const SpectralResult& result);
Json to_json(const BoundReport& report);
Json to_json(const PoissonDiagnostic& diagnostic);

/// Accepts {"dim": d, "nodes": [[...], ...]}; throws InvalidInput on malformed input.
NodeSet nodeset_from_json(const Json& value);

/// One node per line, coordinates separated by whitespace, 17 significant digits.
std::string nodeset_to_text(const NodeSet& nodes);

/// Parses either the JSON or the plain-text form (detected by a leading '{').
/// Blank lines and lines starting with '#' are ignored in the text form.
NodeSet parse_nodeset(std::string_view text);

NodeSet read_nodeset_file(const std::string& path);

}  // namespace vandal
