#ifndef MODNORM_ERRORS_HPP
#define MODNORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modnorm {

enum class Errc {
    ZeroDeterminant,
    NegativeDeterminant,
    NotExactDivisor,
    UnsupportedLevel,
    NotOnSnake,
    DegenerateBasis,
    Not25ExactDivisor,
    ClosureOverflow,
    NotSolvable,
    PreconditionViolation,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroDeterminant:       return "ZeroDeterminant";
        case Errc::NegativeDeterminant:   return "NegativeDeterminant";
        case Errc::NotExactDivisor:       return "NotExactDivisor";
        case Errc::UnsupportedLevel:      return "UnsupportedLevel";
        case Errc::NotOnSnake:            return "NotOnSnake";
        case Errc::DegenerateBasis:       return "DegenerateBasis";
        case Errc::Not25ExactDivisor:     return "Not25ExactDivisor";
        case Errc::ClosureOverflow:       return "ClosureOverflow";
        case Errc::NotSolvable:           return "NotSolvable";
        case Errc::PreconditionViolation: return "PreconditionViolation";
    }
    return "DomainError";
}

// Domain errors carry a machine-readable code; the CLI maps them to exit 2
// with a one-line diagnostic.
class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace modnorm

#endif
