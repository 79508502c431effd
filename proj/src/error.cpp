#include "ringgb/error.hpp"

namespace ringgb {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::UnsupportedRing: return "UnsupportedRing";
    case Errc::NotCertified: return "NotCertified";
    case Errc::NotShortReduced: return "NotShortReduced";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotFree: return "NotFree";
    case Errc::CapRequired: return "CapRequired";
    case Errc::InfiniteBasis: return "InfiniteBasis";
    case Errc::InfiniteQuotient: return "InfiniteQuotient";
    case Errc::OrderIdealMismatch: return "OrderIdealMismatch";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotDivisorClosed: return "NotDivisorClosed";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::BadSupport: return "BadSupport";
    case Errc::MissingBorderTerm: return "MissingBorderTerm";
    case Errc::ProbeNotInIdeal: return "ProbeNotInIdeal";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::CoefficientOutOfRing: return "CoefficientOutOfRing";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

bool errc_is_parse(Errc c) {
    switch (c) {
    case Errc::SyntaxError:
    case Errc::UnknownVariable:
    case Errc::CoefficientOutOfRing:
    case Errc::IoError:
        return true;
    default:
        return false;
    }
}

} // namespace ringgb
