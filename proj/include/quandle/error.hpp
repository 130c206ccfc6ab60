#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandle {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto exit codes, so keep the hierarchy shallow.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input shape: non-square table, out-of-range entry, bad subset.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, std::vector<std::uint32_t> witness);

  int axiom() const noexcept { return axiom_; }
  std::vector<std::uint32_t> const& witness() const noexcept {
    return witness_;
  }

 private:
  int axiom_;
  std::vector<std::uint32_t> witness_;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  NotClosed(std::string const& what, std::vector<std::uint32_t> witness)
      : Error(what), witness_(std::move(witness)) {}
  std::vector<std::uint32_t> const& witness() const noexcept {
    return witness_;
  }

 private:
  std::vector<std::uint32_t> witness_;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::string const& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class WorkCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class DepthCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

// Two routes that must compute the same quantity disagreed. Always a bug.
class InconsistentCharacterizations : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace quandle
