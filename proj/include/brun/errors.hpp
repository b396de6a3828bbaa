// Error taxonomy shared by every module. All conditions that abort an
// operation are reported as exceptions derived from Error; the CLI maps
// them onto process exit codes (config 2, data/resource 3, domain/constraint 4).

#ifndef BRUN_ERRORS_HPP
#define BRUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brun {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation
// (log of a nonpositive interval, division by an interval containing zero, ...).
struct DomainError : Error {
    using Error::Error;
};

// A validity constraint of a bound was violated (e.g. z >= x^(1/4) where the
// error-term estimate does not apply). Never silently clamped.
struct ConstraintError : Error {
    using Error::Error;
};

// A table lookup past the covered region; the caller must switch branches.
struct OutOfRangeError : Error {
    using Error::Error;
};

// Storage/allocation failure while building tables.
struct ResourceError : Error {
    using Error::Error;
};

// Persisted data is missing, corrupt, or fails its checksum.
struct DataError : Error {
    using Error::Error;
};

// Invalid run configuration.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace brun

#endif
