#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace v1ss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("polynomials over different alphabets") {}
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidMonomial : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class InvalidWindow : public Error {
 public:
  using Error::Error;
};

/// A computation needed data outside the exact part of a truncation window.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Raised when boundaries are not contained in cycles (d^2 != 0 upstream).
class NotASubspace : public Error {
 public:
  using Error::Error;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPage : public Error {
 public:
  using Error::Error;
};

class PageMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace v1ss
