#ifndef INTEGRABILIS_ERRORS_HPP
#define INTEGRABILIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace integrabilis {

enum class Errc {
    DivisionByZero,
    OrderMismatch,
    OrderIncompatible,
    NotDivisible,
    DescriptorMismatch,
    ZeroDivisor,
    InternalInvariant,
    DegenerateG,
    GammaZero,
    NotInEllLine,
    InsufficientTruncation,
    ZeroSeries,
    ZeroLeading,
    NotAUnitOfRequiredForm,
    Syntax,
    Context,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

// Parse errors carry a 1-based source column.
class SyntaxError : public Error {
public:
    SyntaxError(int column, const std::string& msg)
        : Error(Errc::Syntax, msg + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace integrabilis

#endif
