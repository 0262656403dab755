#include "rootorbits/error.hpp"

namespace rootorbits {

const char* err_name(Err code) {
    switch (code) {
        case Err::NotGCM: return "NotGCM";
        case Err::NotSymmetrizable: return "NotSymmetrizable";
        case Err::UnknownLabel: return "UnknownLabel";
        case Err::RankOutOfRange: return "RankOutOfRange";
        case Err::InvalidAffChoice: return "InvalidAffChoice";
        case Err::NotAffine: return "NotAffine";
        case Err::NotFiniteType: return "NotFiniteType";
        case Err::FiniteType: return "FiniteType";
        case Err::NotIrreducible: return "NotIrreducible";
        case Err::NotPermutation: return "NotPermutation";
        case Err::NotInitialOrFinal: return "NotInitialOrFinal";
        case Err::NotTypeACycle: return "NotTypeACycle";
        case Err::NotRealRoot: return "NotRealRoot";
        case Err::BoundTooSmall: return "BoundTooSmall";
        case Err::WindowExceeded: return "WindowExceeded";
        case Err::WindowTooSmall: return "WindowTooSmall";
        case Err::SolveFailed: return "SolveFailed";
        case Err::OrderBoundExceeded: return "OrderBoundExceeded";
        case Err::NotProportional: return "NotProportional";
        case Err::NotNegative: return "NotNegative";
        case Err::OrderingFailed: return "OrderingFailed";
        case Err::KappaNotFound: return "KappaNotFound";
        case Err::RankNot3: return "RankNot3";
        case Err::Overflow: return "Overflow";
        case Err::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace rootorbits
