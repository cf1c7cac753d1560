#ifndef HYPERDENSE_ERRORS_HPP
#define HYPERDENSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperdense {

/// Input could not be parsed or violates the documented schema.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A splitting-field or closure construction exceeded the configured degree cap.
struct degree_cap_error : std::runtime_error {
    explicit degree_cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// The hyperplane set is not stable under the Galois action over the base field.
struct not_defined_over_k_error : std::runtime_error {
    explicit not_defined_over_k_error(const std::string& what) : std::runtime_error(what) {}
};

/// A defining polynomial expected to be irreducible is not; carries the factor found.
struct reducible_error : std::runtime_error {
    reducible_error(const std::string& what, std::string factor_found)
        : std::runtime_error(what), factor(std::move(factor_found)) {}
    std::string factor;
};

}  // namespace hyperdense

#endif
