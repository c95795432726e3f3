#pragma once

#include <stdexcept>
#include <string>

namespace quadric {

enum class Errc {
    division_by_zero,
    field_mismatch,
    invalid_field,
    dimension_mismatch,
    ambient_mismatch,
    index_out_of_range,
    containment_violated,
    unsupported_dimension,
    not_central,
    not_regular_certificate,
    not_quantum_polynomial,
    relation_dependence,
    no_stable_central,
    not_semisimple,
    non_split,
    additivity_violated,
    not_isolated,
    parse_error,
};

const char* to_string(Errc code);

/// Every failure in the library is reported through this type; `code()` names the condition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace quadric
