#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epistle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset()` is the byte position of the failure.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class DeadWorld : public Error {
 public:
  using Error::Error;
};

class ContradictoryPremise : public Error {
 public:
  ContradictoryPremise() : Error("premise announcements are contradictory") {}
};

class StoreCapacity : public Error {
 public:
  explicit StoreCapacity(std::size_t capacity)
      : Error("decision diagram store exceeded " + std::to_string(capacity) +
              " nodes") {}
};

class GenerationStall : public Error {
 public:
  using Error::Error;
};

/// Raised when explicit and symbolic labels disagree under Backend::both.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace epistle
