#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fanodelta/catalog.hpp"

namespace fano {

// Exit status: 0 success, 1 usage or input error, 2 verification mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Aligned table, one row per report, with a status marker per row.
std::string emit_table(const std::vector<Report>& reports);

}  // namespace fano
