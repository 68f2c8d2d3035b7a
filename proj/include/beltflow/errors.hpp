#pragma once

#include <stdexcept>
#include <string>

namespace beltflow {

/// Base class for all beltflow failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or network description.
struct ConfigError : Error {
    using Error::Error;
};

/// Time step rejected by the CFL bound. Carries the largest admissible step.
struct CflError : Error {
    CflError(const std::string& msg, double required)
        : Error(msg), required_dt(required) {}
    double required_dt;
};

/// Non-finite value or broken max principle detected during time stepping.
struct NumericError : Error {
    using Error::Error;
};

} // namespace beltflow
