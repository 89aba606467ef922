#pragma once

#include <stdexcept>
#include <string>

namespace hml {

// every library failure carries a stable kind string; the cli maps it to JSON
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + (msg.empty() ? "" : ": " + msg)), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define HML_DEFINE_ERROR(Name)                                              \
    struct Name : Error {                                                   \
        explicit Name(const std::string& msg = "") : Error(#Name, msg) {}   \
    };

HML_DEFINE_ERROR(UnsupportedDiscriminant)
HML_DEFINE_ERROR(NotSplit)
HML_DEFINE_ERROR(PrecisionUnderflow)
HML_DEFINE_ERROR(InsufficientPrecision)
HML_DEFINE_ERROR(ParityMismatch)
HML_DEFINE_ERROR(UnsupportedWeight)
HML_DEFINE_ERROR(SaturationFailure)
HML_DEFINE_ERROR(NotDiagonalizable)
HML_DEFINE_ERROR(NotNewform)
HML_DEFINE_ERROR(NotOrdinary)
HML_DEFINE_ERROR(EmbeddingAmbiguity)
HML_DEFINE_ERROR(NotInSpan)
HML_DEFINE_ERROR(SingularMatrix)
HML_DEFINE_ERROR(LevelMismatch)
HML_DEFINE_ERROR(NotPlusSpace)
HML_DEFINE_ERROR(PrerequisiteFailed)
HML_DEFINE_ERROR(ZeroIndex)
HML_DEFINE_ERROR(InsufficientAlphaCap)
HML_DEFINE_ERROR(BadLevel)
HML_DEFINE_ERROR(OutOfRange)
HML_DEFINE_ERROR(DivisibleByP)
HML_DEFINE_ERROR(NoBranch)
HML_DEFINE_ERROR(AmbiguousBranch)
HML_DEFINE_ERROR(CrossCheckFailure)
HML_DEFINE_ERROR(SchemaViolation)
HML_DEFINE_ERROR(ConfigError)
HML_DEFINE_ERROR(FieldMismatch)
HML_DEFINE_ERROR(NotInvertible)

#undef HML_DEFINE_ERROR

} // namespace hml
