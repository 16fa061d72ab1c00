#pragma once

#include <stdexcept>
#include <string>

namespace lagr {

/// Base class of every library error.  `kind()` is a stable machine
/// readable name that the CLI forwards into its JSON reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define LAGR_DEFINE_ERROR(Name)                                 \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& what)                  \
            : Error(#Name, what) {}                             \
    }

LAGR_DEFINE_ERROR(DimensionMismatch);
LAGR_DEFINE_ERROR(EpsilonMismatch);
LAGR_DEFINE_ERROR(WrongDimension);
LAGR_DEFINE_ERROR(NotIsotropic);
LAGR_DEFINE_ERROR(SymmetryViolation);
LAGR_DEFINE_ERROR(NotTransversal);
LAGR_DEFINE_ERROR(NotTransversalToLstar);
LAGR_DEFINE_ERROR(NotInvertible);
LAGR_DEFINE_ERROR(NotTransversalTriple);
LAGR_DEFINE_ERROR(SamplingTooCoarse);
LAGR_DEFINE_ERROR(NotClosed);
LAGR_DEFINE_ERROR(InvalidArgument);

// cli-side errors
LAGR_DEFINE_ERROR(IoError);
LAGR_DEFINE_ERROR(SchemaError);
LAGR_DEFINE_ERROR(ValidationError);
LAGR_DEFINE_ERROR(UnknownName);
LAGR_DEFINE_ERROR(ContractViolation);

#undef LAGR_DEFINE_ERROR

} // namespace lagr
