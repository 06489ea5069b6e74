// errors.hpp: exception types mapped to the CLI exit-code contract.
//   std::invalid_argument -> exit 2 (bad input)
//   PropertyFalsified     -> exit 1 (a checked claim failed on concrete data)
//   ResourceLimitError    -> exit 3 (configured cap exceeded)
#pragma once

#include <stdexcept>
#include <string>

namespace twofold {

// A verification routine found a concrete counterexample to a property it
// was asked to certify. Never swallowed: callers either report it or abort.
class PropertyFalsified : public std::runtime_error {
public:
    explicit PropertyFalsified(const std::string& what) : std::runtime_error(what) {}
};

// A configured bound was exceeded (brute-force size, element-enumeration cap,
// 64-bit order overflow). Distinct from bad input: the input may be fine, the
// requested computation is just out of budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace twofold
