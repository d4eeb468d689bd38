#ifndef CYCLEX_ERROR_HPP
#define CYCLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cyclex {

enum class Errc {
    NotPrime,
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    BothZero,
    ZeroConstantTerm,
    ZeroGenerator,
    LengthMismatch,
    InformationTooLong,
    DegreeTooLarge,
    ZeroDimensional,
    CapExceeded,
    ParseError,
    Overflow,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace cyclex

#endif
