#pragma once

#include <stdexcept>
#include <string>

namespace secmimo {

// Bad inputs: dimensions, ranges, malformed configs. CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Problem size exceeds a hard enumeration cap (e.g. 2^n subset expansions).
class capacity_error : public validation_error {
public:
    explicit capacity_error(const std::string& what) : validation_error(what) {}
};

// An algorithm failed to converge or produced an out-of-range result. Exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// File/stream failures. Exit code 4.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace secmimo
