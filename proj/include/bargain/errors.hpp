#pragma once

#include <stdexcept>
#include <string>

namespace bargain {

// Machine-checkable failure reasons. Every throwing operation in the library
// raises Error with one of these codes; messages are for humans only.
enum class Errc {
    empty_input,
    non_finite,
    not_convex,
    empty_intersection,
    degenerate_frontier,
    not_decreasing,
    not_concave,
    bad_domain,
    bad_parameter,
    out_of_domain,
    out_of_range,
    zero_samples,
    empty_cloud,
    syntax_error,
    schema_error,
    validation_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace bargain
