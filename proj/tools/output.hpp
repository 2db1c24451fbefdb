#pragma once

#include <string>

#include "surfel/figures.hpp"

namespace surfel::cli {

// 17 significant digits, '.' decimal point, no locale involvement.
std::string format_number(double v);

std::string to_csv(const Table& t);

// Writes next to the target and renames over it, so readers never see a
// partial file.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace surfel::cli
