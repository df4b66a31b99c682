#pragma once

#include <stdexcept>
#include <string>

namespace howec {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid field parameters: composite p, k = 0, reducible modulus, bad digits.
struct FieldError : Error {
  using Error::Error;
};

// Two operands live over different field handles (content compare, not pointer).
struct HandleMismatchError : Error {
  using Error::Error;
};

// Domain violations on polynomial operations (zero divisor, non-exact division,
// exponent overflow in the packed monomial key, ...).
struct PolyError : Error {
  using Error::Error;
};

// A prime exceeded the configured symbolic cap for trivariate expansion.
struct SymbolicCapError : Error {
  using Error::Error;
};

// The Hasse polynomial failed to split over F_{p^2} (would contradict the
// supersingularity theory; treated as a hard error, never silently truncated).
struct SplittingError : Error {
  using Error::Error;
};

// Malformed certificate input (hostile JSON, bad modulus, out-of-range digits).
struct CertificateParseError : Error {
  using Error::Error;
};

}  // namespace howec
