#pragma once

#include <stdexcept>
#include <string>

namespace qd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct NotBellDiagonalError : ValidationError {
    using ValidationError::ValidationError;
};

struct ZeroProbabilityError : Error {
    using Error::Error;
};

struct OptimizerError : Error {
    using Error::Error;
};

} // namespace qd
