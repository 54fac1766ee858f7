#ifndef ZETADIV_ERRORS_HPP
#define ZETADIV_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetadiv {

// Error taxonomy drives the CLI exit-code contract:
//   input   -> exit 2 (bad file, bad expression, bad parameters)
//   compute -> exit 3 (budget, stabilization, numeric falsification)
//   internal-> exit 3 (defensive self-checks; should be unreachable)
enum class ErrorKind { input, compute, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(std::uint64_t p)
        : Error(ErrorKind::input, "not a prime: " + std::to_string(p)) {}
};

struct NoModulusFoundError : Error {
    NoModulusFoundError()
        : Error(ErrorKind::internal, "no irreducible modulus found") {}
};

struct DegreeTooLargeError : Error {
    explicit DegreeTooLargeError(const std::string& msg)
        : Error(ErrorKind::input, msg) {}
};

struct FieldTooLargeError : Error {
    explicit FieldTooLargeError(const std::string& msg)
        : Error(ErrorKind::input, msg) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error(ErrorKind::input, "division by zero field element") {}
};

struct FieldMismatchError : Error {
    FieldMismatchError() : Error(ErrorKind::input, "operands belong to different fields") {}
};

struct ParseError : Error {
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::input,
                "syntax error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

struct UnknownVariableError : Error {
    UnknownVariableError(std::size_t position, const std::string& name)
        : Error(ErrorKind::input,
                "unknown variable '" + name + "' at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

struct NonHomogeneousError : Error {
    explicit NonHomogeneousError(const std::string& msg) : Error(ErrorKind::input, msg) {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& msg) : Error(ErrorKind::input, msg) {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(const std::string& msg) : Error(ErrorKind::input, msg) {}
};

struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& msg) : Error(ErrorKind::input, msg) {}
};

struct BudgetExceededError : Error {
    BudgetExceededError(std::uint32_t completed_k, const std::string& msg)
        : Error(ErrorKind::compute, msg), completed_k(completed_k) {}
    // Largest k for which a count was fully computed before the budget stop.
    std::uint32_t completed_k;
};

struct NonIntegralCoefficientError : Error {
    explicit NonIntegralCoefficientError(const std::string& msg)
        : Error(ErrorKind::compute, msg) {}
};

struct NegativeCoefficientError : Error {
    explicit NegativeCoefficientError(const std::string& msg)
        : Error(ErrorKind::compute, msg) {}
};

struct NoApproximantError : Error {
    explicit NoApproximantError(const std::string& msg) : Error(ErrorKind::compute, msg) {}
};

struct NonIntegerOutputError : Error {
    explicit NonIntegerOutputError(const std::string& msg) : Error(ErrorKind::compute, msg) {}
};

struct NotStabilizedError : Error {
    explicit NotStabilizedError(std::uint32_t bound)
        : Error(ErrorKind::compute,
                "zeta reconstruction did not stabilize within degree bound " +
                    std::to_string(bound)),
          bound(bound) {}
    std::uint32_t bound;
};

struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& msg)
        : Error(ErrorKind::internal, msg) {}
};

struct ZeroConstantTermError : Error {
    ZeroConstantTermError()
        : Error(ErrorKind::input, "constant term is zero; reciprocal roots undefined") {}
};

struct ImpureFactorError : Error {
    explicit ImpureFactorError(const std::string& msg) : Error(ErrorKind::compute, msg) {}
};

struct RootFindingFailedError : Error {
    explicit RootFindingFailedError(const std::string& msg) : Error(ErrorKind::compute, msg) {}
};

struct OddTopWeightError : Error {
    explicit OddTopWeightError(const std::string& msg) : Error(ErrorKind::compute, msg) {}
};

struct NotCompleteIntersectionError : Error {
    explicit NotCompleteIntersectionError(const std::string& msg)
        : Error(ErrorKind::compute, msg) {}
};

} // namespace zetadiv

#endif
