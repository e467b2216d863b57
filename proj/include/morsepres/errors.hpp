#pragma once

#include <stdexcept>
#include <string>

namespace morsepres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// words
struct GeneratorNotUnique : Error {
  using Error::Error;
};
struct SelfReference : Error {
  using Error::Error;
};

// presentations
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};
struct UnknownGenerator : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct OverflowError : Error {
  using Error::Error;
};

// complex
struct EmptyRelator : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct RegularityViolation : Error {
  using Error::Error;
};

// matching / morse
struct NotAMatching : Error {
  using Error::Error;
};
struct CyclicMatching : Error {
  using Error::Error;
};
struct NotASpanningTree : Error {
  using Error::Error;
};
struct OccurrenceViolation : Error {
  using Error::Error;
};

// search
struct UnknownFamily : Error {
  using Error::Error;
};
struct BadParams : Error {
  using Error::Error;
};
struct StaleCertificate : Error {
  using Error::Error;
};
struct ValidationFailure : Error {
  using Error::Error;
};

}  // namespace morsepres
