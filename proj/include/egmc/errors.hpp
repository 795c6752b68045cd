#ifndef EGMC_ERRORS_HPP
#define EGMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace egmc {

struct field_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct no_solution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bounded-distance decoding found no codeword within radius.
struct decoding_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Post-decryption consistency check failed (tampered or malformed input).
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct rank_too_high_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace egmc

#endif
