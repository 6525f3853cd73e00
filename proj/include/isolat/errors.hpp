#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isolat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class SubgroupCountCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotBounded : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  using Error::Error;
};

class Unresolvable : public Error {
 public:
  using Error::Error;
};

class SquareFreeOrder : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class CatalogIncomplete : public Error {
 public:
  using Error::Error;
};

class CorruptEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace isolat
