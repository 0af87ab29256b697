// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tshape {

// Malformed textual input (shape notation, equation tokens, spec files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& detail) : std::runtime_error(detail) {}
};

// A structurally well-formed request that violates a domain rule, e.g. a
// lattice path leaving its band or a blow-up missing a full block at a
// bottom gap.  `kind` is a stable machine-readable slug.
struct DomainError : std::runtime_error {
    std::string kind;
    DomainError(std::string kind_, const std::string& detail)
        : std::runtime_error(detail), kind(std::move(kind_)) {}
};

}  // namespace tshape
