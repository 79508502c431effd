#ifndef RINGGB_ERROR_HPP
#define RINGGB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ringgb {

enum class Errc {
    DimensionMismatch,
    RingMismatch,
    ZeroPolynomial,
    UnsupportedRing,
    NotCertified,
    NotShortReduced,
    NotMonic,
    NotFree,
    CapRequired,
    InfiniteBasis,
    InfiniteQuotient,
    OrderIdealMismatch,
    EmptySet,
    NotDivisorClosed,
    CountMismatch,
    BadSupport,
    MissingBorderTerm,
    ProbeNotInIdeal,
    ZeroVector,
    SyntaxError,
    UnknownVariable,
    CoefficientOutOfRing,
    IoError,
    Internal,
};

const char* errc_name(Errc c);

// true for input-text problems (CLI exit 1), false for domain errors (exit 2)
bool errc_is_parse(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

    Errc code() const { return code_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Errc code_;
    int line_;
    int column_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message, int line = 0, int column = 0) {
    throw Error(code, message, line, column);
}

} // namespace ringgb

#endif
