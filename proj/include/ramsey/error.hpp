#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey {

enum class Errc {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  CycleTooShort,
  ColorOutOfRange,
  TargetTooLarge,
  InvalidParams,
  EvenCycleLength,
  OddCycleLength,
  ParamOutOfRange,
  NotACounterexample,
  ParseError,
};

std::string_view to_string(Errc code);

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ramsey
