#ifndef AITCHISON_ERRORS_HPP
#define AITCHISON_ERRORS_HPP

// Exception types thrown across the library. Domain violations (inputs
// outside the open state space, unit-trace or hermiticity failures) are
// kept distinct from structural errors (shape mismatches, bad labels) so
// callers such as the CLI can map them to different exit codes.

#include <stdexcept>
#include <string>

namespace aitchison {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotHermitian : std::invalid_argument {
    explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPositiveDefinite : std::domain_error {
    explicit NotPositiveDefinite(const std::string& what) : std::domain_error(what) {}
};

struct NotUnitTrace : std::domain_error {
    explicit NotUnitTrace(const std::string& what) : std::domain_error(what) {}
};

struct NotUnitary : std::invalid_argument {
    explicit NotUnitary(const std::string& what) : std::invalid_argument(what) {}
};

struct NotTraceless : std::domain_error {
    explicit NotTraceless(const std::string& what) : std::domain_error(what) {}
};

struct OutsideBall : std::domain_error {
    explicit OutsideBall(const std::string& what) : std::domain_error(what) {}
};

struct WrongDimension : std::invalid_argument {
    explicit WrongDimension(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidLabel : std::invalid_argument {
    explicit InvalidLabel(const std::string& what) : std::invalid_argument(what) {}
};

struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Jacobi sweep cap exceeded; signals pathological input.
struct EigNonConvergence : std::runtime_error {
    explicit EigNonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// File-level failures (missing file, malformed JSON, schema violations).
struct FileFormatError : std::runtime_error {
    explicit FileFormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace aitchison

#endif
