#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

// Base for every domain error raised by the library. `name()` is the stable
// machine-readable identifier (the CLI prints it and maps it to exit code 2);
// what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define CATALAN_DEFINE_ERROR(NAME)                        \
  struct NAME : Error {                                   \
    explicit NAME(const std::string& message)             \
        : Error(#NAME, message) {}                        \
  }

// Valuation of zero requested (e.g. vp(0, p), or an identically-zero sum).
CATALAN_DEFINE_ERROR(InfiniteValuation);
// A modulus that must be prime is not.
CATALAN_DEFINE_ERROR(InvalidPrime);
// A lifting-the-exponent hypothesis failed; the message names which one.
CATALAN_DEFINE_ERROR(HypothesisViolated);
// a^p - b^p is not an exact q-th power.
CATALAN_DEFINE_ERROR(NotAQthPower);
// The extracted q-th root is divisible by p, so the transfer does not apply.
CATALAN_DEFINE_ERROR(DivisibleByP);
// Both exponents are 2 where at least one must be odd.
CATALAN_DEFINE_ERROR(BothTwo);
// gcd(0, 0) requested.
CATALAN_DEFINE_ERROR(BothZero);
// Exponent must be an odd prime.
CATALAN_DEFINE_ERROR(InvalidExponent);
// The requested sum has no terms (p = 3 leaves an empty tail).
CATALAN_DEFINE_ERROR(EmptySum);
// Pell discriminant is a perfect square.
CATALAN_DEFINE_ERROR(SquareDiscriminant);
// The triple fails the quartic-form equation.
CATALAN_DEFINE_ERROR(NotASolution);
// A named structural precondition failed; the message names it.
CATALAN_DEFINE_ERROR(PreconditionFailed);
// Tuple exponents are not prime (run normalize_tuple first).
CATALAN_DEFINE_ERROR(NotNormalized);
// The requested rule's hypothesis does not hold for the tuple.
CATALAN_DEFINE_ERROR(HypothesisNotSatisfied);
// The endgame table only covers p in {3, 5}.
CATALAN_DEFINE_ERROR(OutOfScope);

#undef CATALAN_DEFINE_ERROR

}  // namespace catalan
