#include "trisect/error.hpp"

namespace trisect {

const char* to_string(Err e) {
    switch (e) {
        case Err::NotCubic: return "NotCubic";
        case Err::NotConnected: return "NotConnected";
        case Err::NotTaitColored: return "NotTaitColored";
        case Err::SelfLoop: return "SelfLoop";
        case Err::ParallelEdge: return "ParallelEdge";
        case Err::ThetaGraph: return "ThetaGraph";
        case Err::OddVertexCount: return "OddVertexCount";
        case Err::NotOnePatch: return "NotOnePatch";
        case Err::NotOrientable: return "NotOrientable";
        case Err::PairNotStandard: return "PairNotStandard";
        case Err::ArcsNotOnSameCurve: return "ArcsNotOnSameCurve";
        case Err::ArcsOnSameCurve: return "ArcsOnSameCurve";
        case Err::NotAFace: return "NotAFace";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::SameComponent: return "SameComponent";
        case Err::NoRoute: return "NoRoute";
        case Err::ColorMismatch: return "ColorMismatch";
        case Err::StandardizationFailed: return "StandardizationFailed";
        case Err::MoveRealizationFailed: return "MoveRealizationFailed";
        case Err::OutOfRange: return "OutOfRange";
        case Err::ParityMismatch: return "ParityMismatch";
        case Err::DisconnectedSkeleton: return "DisconnectedSkeleton";
        case Err::InvalidDiagram: return "InvalidDiagram";
        case Err::ParseError: return "ParseError";
        case Err::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace trisect
