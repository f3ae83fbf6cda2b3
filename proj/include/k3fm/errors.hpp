#pragma once

#include <stdexcept>
#include <string>

namespace k3fm {

// Base of every library error. Each failure mode gets its own type so that
// callers (and tests) can catch exactly the condition they expect.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define K3FM_DEFINE_ERROR(Name)                  \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

// scalar
K3FM_DEFINE_ERROR(NonUnitDivisor);
K3FM_DEFINE_ERROR(PoleAtSample);
// harmonic
K3FM_DEFINE_ERROR(NotInImage);
// linalg
K3FM_DEFINE_ERROR(NotAGraph);
K3FM_DEFINE_ERROR(SingularMatrix);
K3FM_DEFINE_ERROR(DimensionMismatch);
// gcs / spinor
K3FM_DEFINE_ERROR(DegenerateForm);
K3FM_DEFINE_ERROR(WrongDegree);
K3FM_DEFINE_ERROR(PoleAtZero);
K3FM_DEFINE_ERROR(ZeroSpinor);
// mirror
K3FM_DEFINE_ERROR(DegeneratePeriod);
K3FM_DEFINE_ERROR(NonUnitNormalizer);
K3FM_DEFINE_ERROR(UnderdeterminedNormalization);
K3FM_DEFINE_ERROR(InconsistentNormalization);
K3FM_DEFINE_ERROR(MissingSlot);
// cli
K3FM_DEFINE_ERROR(UnknownSymbol);
K3FM_DEFINE_ERROR(ConfigError);

#undef K3FM_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace k3fm
