#pragma once

#include <stdexcept>
#include <string>

namespace twolevel {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression text does not conform to the grammar.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t byte_offset, std::string expected_tok)
      : Error(msg + " at offset " + std::to_string(byte_offset) +
              (expected_tok.empty() ? "" : ", expected " + expected_tok)),
        offset(byte_offset),
        expected(std::move(expected_tok)) {}
  std::size_t offset = 0;
  std::string expected;
};

// A zero or pole of the generating function is not simple.
struct SimplicityViolation : Error {
  using Error::Error;
};

// A critical point has B outside {0, -1}, or another regularity gate failed.
struct RegularityError : Error {
  using Error::Error;
};

// Predicted node counts coincide: no potential with two distinct levels exists.
struct OscillationError : Error {
  using Error::Error;
};

// xi'' vanishes at a zero of xi' so the B exponent is undefined.
struct DegenerateCritical : Error {
  using Error::Error;
};

// Determinant c1*d2 - c2*d1 of a linear-fractional map is (nearly) zero.
struct DegenerateMobius : Error {
  using Error::Error;
};

// Canonical deformation coefficients do not encode the requested level gap.
struct InconsistentLevels : Error {
  using Error::Error;
};

// Catalog parameters violate an entry's validity predicate.
struct ValidityError : Error {
  using Error::Error;
};

// Synthesized wave function fails the boundary-growth normalizability test.
struct NonNormalizable : Error {
  using Error::Error;
};

// Sampled potential is not finite at an interior grid point.
struct NonFinitePotential : Error {
  using Error::Error;
};

// Eigensolver failed to converge; message carries diagnostics.
struct ConvergenceFailure : Error {
  using Error::Error;
};

// Radial spec with deltaE = 0 and l1 = l2.
struct DegenerateSpec : Error {
  using Error::Error;
};

}  // namespace twolevel
