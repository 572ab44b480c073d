#pragma once

#include <ostream>
#include <string>

#include "fpsearch/experiments.hpp"

namespace fpsearch {

// 12 significant digits, '.' decimal point, negative zeros canonicalized.
std::string format_number(double value);

// UTF-8, comma separator, header row, '\n' newlines. Identical tables
// serialize to identical bytes.
void write_csv(const SweepTable& table, std::ostream& out);

}  // namespace fpsearch
