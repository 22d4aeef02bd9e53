#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rabin {

// Base class for everything this library throws on bad input or bad data.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs that make the requested operation meaningless (both gcd arguments
// zero, message sharing a factor with the modulus, equal key primes, ...).
// When the offending gcd is what triggered the error it is carried along:
// for a Rabin modulus that gcd is a prime factor, which callers may want.
struct DegenerateInputError : Error {
  explicit DegenerateInputError(const std::string& what, mpz_class gcd = 0)
      : Error(what), gcd(std::move(gcd)) {}
  mpz_class gcd;
};

struct NotInvertibleError : Error {
  NotInvertibleError(const std::string& what, mpz_class gcd)
      : Error(what), gcd(std::move(gcd)) {}
  mpz_class gcd;
};

struct InvalidModulusError : Error {
  using Error::Error;
};

struct NonResidueError : Error {
  using Error::Error;
};

struct CoprimalityError : Error {
  using Error::Error;
};

// Operation requires the other key class (Blum vs non-Blum).
struct WrongKeyClassError : Error {
  using Error::Error;
};

// A stated precondition does not hold (wrong residue class, bad range, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Ciphertext or identification bits are inconsistent with the key.
struct IntegrityError : Error {
  using Error::Error;
};

// Deliberately desk-scale operation asked to run beyond its size bound.
struct ScaleLimitError : Error {
  using Error::Error;
};

// Root pair (or unity root) that yields only the trivial divisors 1 and N.
struct TrivialPairError : Error {
  using Error::Error;
};

// Malformed key/ciphertext file; message names the offending line.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace rabin
