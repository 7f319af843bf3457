#pragma once

#include <stdexcept>
#include <string>

namespace piecewise {

// Bad user input: unknown symbols, words over the wrong alphabet,
// violated operation preconditions. Maps to CLI exit code 2.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation would exceed its memory budget (brute-force subword
// enumeration, oversized materialized powers). Maps to CLI exit code 3.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace piecewise
