#pragma once

#include <stdexcept>
#include <string>

namespace krullkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad poset, bad table, unparsable text, arity mismatch.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size or search cap would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not available for this structure.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A certificate (input or produced) failed exact re-verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// A lattice law fails on a concrete triple of element indices.
class LatticeAxiomError : public InvalidInput {
 public:
  LatticeAxiomError(std::string law, std::size_t a, std::size_t b, std::size_t c)
      : InvalidInput("lattice law '" + law + "' fails on (" + std::to_string(a) + ", " +
                     std::to_string(b) + ", " + std::to_string(c) + ")"),
        law_(std::move(law)),
        a_(a),
        b_(b),
        c_(c) {}

  const std::string& law() const noexcept { return law_; }
  std::size_t a() const noexcept { return a_; }
  std::size_t b() const noexcept { return b_; }
  std::size_t c() const noexcept { return c_; }

 private:
  std::string law_;
  std::size_t a_, b_, c_;
};

}  // namespace krullkit
