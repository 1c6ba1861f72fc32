#pragma once

#include <string>
#include <vector>

#include "eacws/checkmatrix.hpp"
#include "eacws/record.hpp"

namespace eacws {

// Resolution order: explicit dir argument, EACWS_FIXTURES environment
// variable, ./data/fixtures, then the build-time source directory.
std::string fixture_dir(const std::string& override_dir = "");
std::vector<std::string> fixture_names(const std::string& override_dir = "");

// name + ".json" under the fixture dir, e.g. "paper-7-9-3-2".
CodeRecord load_fixture_record(const std::string& name, const std::string& override_dir = "");
// name + ".txt", e.g. "bowen-5-1-3".
CheckMatrix load_fixture_check_matrix(const std::string& name, const std::string& override_dir = "");

}  // namespace eacws
