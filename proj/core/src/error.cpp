#include "flagkit/error.hpp"

namespace flagkit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadParameter: return "BadParameter";
    case Errc::FaceNotPresent: return "FaceNotPresent";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NotPure: return "NotPure";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::OddDegree: return "OddDegree";
    case Errc::NotGraded: return "NotGraded";
    case Errc::NonBooleanIntervals: return "NonBooleanIntervals";
    case Errc::BadOrder: return "BadOrder";
    case Errc::CellVertexMismatch: return "CellVertexMismatch";
    case Errc::MixedComplexes: return "MixedComplexes";
    case Errc::NotBalanced: return "NotBalanced";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::BadPartition: return "BadPartition";
    case Errc::NotAnFVector: return "NotAnFVector";
    case Errc::IncompatibleDecompositions: return "IncompatibleDecompositions";
    case Errc::GammaMismatch: return "GammaMismatch";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ConfigOutOfBounds: return "ConfigOutOfBounds";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace flagkit
