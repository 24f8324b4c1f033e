#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "modorb/modular_datum.hpp"
#include "modorb/perm_orbifold.hpp"
#include "modorb/restricted_smatrix.hpp"
#include "modorb/validation.hpp"

// JSON documents:
//   datum:      {"central_charge": "p/q", "modules": [{"label", "h"}], "S": [[{"re","im"}]]}
//   restricted: {"group": [n_1, ...], "orbits": [{"label", "twist", "stabilizer",
//                "characters": [{"dim", "values"}]}], "transversals": [{"i","j","C"}],
//                "blocks": [{"i","j","kappa","S"}]}
// Complex entries are {"re": "<decimal>", "im": "<decimal>"}; a bare decimal
// string is read as a real entry.
namespace modorb::io {

using nlohmann::json;

// Throws InputError for malformed documents and every ModularDatum shape error.
ModularDatum parse_modular_datum(const std::string& text);
ModularDatum datum_from_json(const json& doc);

restricted::RestrictedInput parse_restricted_input(const std::string& text);
restricted::RestrictedInput restricted_from_json(const json& doc);
json to_json(const restricted::RestrictedInput& input);

// Throws InputError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

// Shortest round-trippable-at-long-double decimal with "-0" folded to "0".
std::string format_real(Real x);
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);
json matrix_to_json(const ComplexMatrix& m);

json to_json(const ModularDatum& d);
json to_json(const ValidationReport& report);
// Datum schema plus "k", "source_rank", "convention" and per-module
// "label_kind" with its parameters.
json to_json(const perm::OrbifoldDatum& orbifold);
json to_json(const restricted::RestrictedSMatrix& result, const restricted::RestrictedInput& input);

// Serialization with two-space indentation and a trailing newline.
std::string dump(const json& doc);

}  // namespace modorb::io
