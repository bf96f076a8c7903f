#pragma once

#include <string>
#include <string_view>

#include "coxkit/coxeter.hpp"

namespace coxkit {

/// Parse a system document: {"generators": [...], "matrix": [[...]...]}, 0 = infinity.
SystemPtr parse_system(std::string_view json_text, Limits limits = {});
SystemPtr load_system(const std::string& path, Limits limits = {});
std::string system_to_json(const CoxeterSystem& system);

}  // namespace coxkit
