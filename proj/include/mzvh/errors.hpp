#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzvh {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tau/delta applied to a term containing ez
struct ez_not_allowed : error {
    using error::error;
};

// family block index below zero
struct negative_index : error {
    using error::error;
};

// F-family with s < 1
struct bad_s : error {
    using error::error;
};

// out-of-range parameters (theorem indices, tolerances, z sign, ...)
struct bad_params : error {
    using error::error;
};

// word is not of the form e1 e0^{k1-1} ... e1 e0^{kd-1}
struct not_mzv_word : error {
    using error::error;
};

// index or word rejected where convergence is required
struct inadmissible_input : error {
    using error::error;
};

// expression contains ez but no z was supplied
struct missing_z : error {
    using error::error;
};

// evaluation budget exhausted before reaching the requested tolerance
struct tolerance_unreachable : error {
    using error::error;
};

struct parse_error : error {
    std::size_t offset;
    std::string expected;

    parse_error(std::size_t at, std::string expected_tokens)
        : error("parse error at offset " + std::to_string(at) + ": expected " +
                expected_tokens),
          offset(at),
          expected(std::move(expected_tokens)) {}
};

}  // namespace mzvh
