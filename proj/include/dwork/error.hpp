#pragma once

#include <stdexcept>
#include <string>

namespace dwork {

// Failure classes; the CLI maps them to exit codes.
enum class FailureKind { Computational, Verification, Usage };

class Error : public std::runtime_error {
public:
    Error(std::string name, FailureKind kind, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)), kind_(kind) {}
    const std::string& name() const noexcept { return name_; }
    FailureKind kind() const noexcept { return kind_; }

private:
    std::string name_;
    FailureKind kind_;
};

#define DWORK_ERROR(Name, Kind)                                                   \
    class Name : public Error {                                                   \
    public:                                                                       \
        explicit Name(const std::string& what) : Error(#Name, FailureKind::Kind, what) {} \
    };

// computational
DWORK_ERROR(CapExceeded, Computational)
DWORK_ERROR(WorkCapExceeded, Computational)
DWORK_ERROR(OrbitFieldCapExceeded, Computational)
DWORK_ERROR(FactoringTooHard, Computational)
DWORK_ERROR(PrecisionLoss, Computational)
DWORK_ERROR(EigenvaluePrecisionLoss, Computational)
DWORK_ERROR(NonConvergence, Computational)
DWORK_ERROR(SingularSystem, Computational)
DWORK_ERROR(NoTable, Computational)

// verification: a contract from the mathematics did not hold
DWORK_ERROR(MismatchBeyondOrder, Verification)
DWORK_ERROR(InconsistentDet, Verification)
DWORK_ERROR(NoFunctionalEquation, Verification)
DWORK_ERROR(PurityViolation, Verification)
DWORK_ERROR(MethodMismatch, Verification)
DWORK_ERROR(NegativeDegree, Verification)
DWORK_ERROR(HalfIntegerPower, Verification)
DWORK_ERROR(CongruenceFailure, Verification)
DWORK_ERROR(NotAPerfectPower, Verification)
DWORK_ERROR(Mismatch, Verification)

// bad input
DWORK_ERROR(NotADivisor, Usage)
DWORK_ERROR(ZeroElement, Usage)
DWORK_ERROR(NotCoprime, Usage)
DWORK_ERROR(HypothesisViolated, Usage)
DWORK_ERROR(InvalidArgument, Usage)

#undef DWORK_ERROR

}  // namespace dwork
