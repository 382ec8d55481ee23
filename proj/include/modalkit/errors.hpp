#pragma once

#include <stdexcept>
#include <string>

namespace modalkit {

// Thrown on malformed or out-of-range caller input. CLI maps this to exit 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request exceeds a configured enumeration budget or cap.
// CLI maps this to exit 3.
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two routes that must agree do not, or a numerical residue
// exceeds its threshold. CLI maps this to exit 4.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modalkit
