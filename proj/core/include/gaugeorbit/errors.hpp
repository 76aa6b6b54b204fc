#pragma once

#include <stdexcept>

namespace gaugeorbit {

// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUnitInput : Error { using Error::Error; };
struct NotGeneric : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct InvalidPath : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct WitnessVerificationFailed : Error { using Error::Error; };
struct UnknownStratum : Error { using Error::Error; };
struct OutOfChart : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct PathLeftGenericStratum : Error { using Error::Error; };

// Thrown by the serialization layer on malformed or incomplete input.
struct ParseError : Error { using Error::Error; };

}  // namespace gaugeorbit
