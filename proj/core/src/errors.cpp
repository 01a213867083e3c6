#include "bcsee/errors.hpp"

namespace bcsee {

NumericalError::NumericalError(const std::string& what, double partial_value,
                               double partial_error)
    : std::runtime_error(what), partial_value_(partial_value), partial_error_(partial_error) {}

}  // namespace bcsee
