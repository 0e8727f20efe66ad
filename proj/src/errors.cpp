#include "quasihom/errors.hpp"

namespace qh {

int status_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::BadInput:
        case ErrorKind::DimensionMismatch:
            return 1;
        case ErrorKind::NotContracting:
        case ErrorKind::SingularLinearPart:
            return 2;
        case ErrorKind::IrrationalSpectrum:
            return 3;
        case ErrorKind::NotInvariant:
        case ErrorKind::NotInImage:
        case ErrorKind::ZeroExtractedGenerator:
        case ErrorKind::EigenvalueNotInSpectrumImage:
            return 4;
        case ErrorKind::VerifyFailed:
            return 6;
        case ErrorKind::Internal:
            return 5;
    }
    return 5;
}

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotContracting: return "NotContracting";
        case ErrorKind::SingularLinearPart: return "SingularLinearPart";
        case ErrorKind::IrrationalSpectrum: return "IrrationalSpectrum";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::NotInImage: return "NotInImage";
        case ErrorKind::ZeroExtractedGenerator: return "ZeroExtractedGenerator";
        case ErrorKind::EigenvalueNotInSpectrumImage: return "EigenvalueNotInSpectrumImage";
        case ErrorKind::VerifyFailed: return "VerifyFailed";
        case ErrorKind::Internal: return "Internal";
    }
    return "Internal";
}

}  // namespace qh
