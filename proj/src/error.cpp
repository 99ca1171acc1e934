#include "ramsey/error.hpp"

namespace ramsey {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::CycleTooShort: return "CycleTooShort";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::TargetTooLarge: return "TargetTooLarge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::EvenCycleLength: return "EvenCycleLength";
    case Errc::OddCycleLength: return "OddCycleLength";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::NotACounterexample: return "NotACounterexample";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ramsey
