#pragma once

#include <string>
#include <vector>

#include "modorb/modular_datum.hpp"
#include "modorb/validation.hpp"

namespace modorb::render {

enum class Format { kPretty, kJson, kCsv };

// Throws InputError unless text is "pretty", "json" or "csv".
Format parse_format(const std::string& text);

// Quoted "re+im*i" with 12 significant digits.
std::string csv_complex(const Complex& z);

std::string report(const ValidationReport& r, Format format);

// One line per unordered pair i <= j: "a × b = c + 2·d". Pairs with an empty
// product render as "0".
std::string fusion_table(const FusionTensor& n, const std::vector<std::string>& labels);

// Pretty form is fusion_table; csv has one row per nonzero N_ij^m.
std::string fusion(const FusionResult& result, const std::vector<std::string>& labels, Format format);

std::string t_matrix(const ModularDatum& d, Format format);

std::string quantum_dimensions(const ModularDatum& d, Format format);

}  // namespace modorb::render
