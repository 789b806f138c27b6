#pragma once

#include <stdexcept>
#include <string>

namespace trisect {

// Machine-readable failure kinds. Everything a caller can act on programmatically
// is an Err; the message carries human detail.
enum class Err {
    NotCubic,
    NotConnected,
    NotTaitColored,
    SelfLoop,
    ParallelEdge,
    ThetaGraph,
    OddVertexCount,
    NotOnePatch,
    NotOrientable,
    PairNotStandard,
    ArcsNotOnSameCurve,
    ArcsOnSameCurve,
    NotAFace,
    PreconditionViolated,
    SameComponent,
    NoRoute,
    ColorMismatch,
    StandardizationFailed,
    MoveRealizationFailed,
    OutOfRange,
    ParityMismatch,
    DisconnectedSkeleton,
    InvalidDiagram,
    ParseError,
    IoError,
};

const char* to_string(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    Err kind() const { return kind_; }

  private:
    Err kind_;
};

// True for failures caused by malformed input files rather than domain math.
inline bool is_io_error(Err e) { return e == Err::ParseError || e == Err::IoError; }

}  // namespace trisect
