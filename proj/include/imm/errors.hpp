#pragma once

#include <stdexcept>
#include <string>

namespace imm {

// A computation was asked to exceed the configured size limit (default n <= 40
// for partition generation, smaller for table builds).
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An inverse map (psi0/psi1) was applied to a tableau outside the image of the
// corresponding forward map. Distinct from a shape-precondition violation,
// which is reported as std::invalid_argument.
struct not_in_image_error : std::runtime_error {
    explicit not_in_image_error(const std::string& what) : std::runtime_error(what) {}
};

// On-disk cache is missing, locked, or fails its checksum.
struct cache_error : std::runtime_error {
    explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace imm
