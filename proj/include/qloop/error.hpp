#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QLOOP_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

QLOOP_DEFINE_ERROR(DivisionByZero);
QLOOP_DEFINE_ERROR(ContextMismatch);
QLOOP_DEFINE_ERROR(DenominatorVanishesAtRootOfUnity);
QLOOP_DEFINE_ERROR(FractionalExponentLeak);
QLOOP_DEFINE_ERROR(ZeroSpectralParameter);
QLOOP_DEFINE_ERROR(NotSplitOverField);
QLOOP_DEFINE_ERROR(FlavorMismatch);
QLOOP_DEFINE_ERROR(InconclusiveRandomized);
QLOOP_DEFINE_ERROR(SingularIntertwinerSystem);
QLOOP_DEFINE_ERROR(ResonantDenominator);
QLOOP_DEFINE_ERROR(NonIntegralEntry);
QLOOP_DEFINE_ERROR(ParseError);
QLOOP_DEFINE_ERROR(InvalidRank);
QLOOP_DEFINE_ERROR(UnsatisfiablePrecondition);
QLOOP_DEFINE_ERROR(CalibrationFailure);

#undef QLOOP_DEFINE_ERROR

}  // namespace qloop
