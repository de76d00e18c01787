#ifndef TREESQ_ERRORS_HPP
#define TREESQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treesq {

// Malformed or out-of-contract input (bad edge list, non-tree where a tree
// is required, zero ideal, ...). CLI exit code 2.
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap was exceeded. CLI exit code 3.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace treesq

#endif
