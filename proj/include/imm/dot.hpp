#pragma once

#include <filesystem>
#include <string>

#include "imm/poset.hpp"

namespace imm {

/// DOT text for a cover relation: one node per partition labeled "[...]" in
/// canonical order, one directed edge lower -> upper per cover pair.
/// `c` must already be a cover relation (see covers()).
std::string dot_string(const PosetRelation& c);

/// Writes dot_string(c) to a file; throws std::runtime_error on I/O failure.
void emit_dot(const PosetRelation& c, const std::filesystem::path& out);

} // namespace imm
