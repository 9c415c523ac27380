#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cayley {

/// Base class of every validation and analysis error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DuplicateLabelError : public Error {
public:
  explicit DuplicateLabelError(std::int64_t label)
      : Error("duplicate label " + std::to_string(label)), label_(label) {}
  std::int64_t label() const { return label_; }

private:
  std::int64_t label_;
};

class ShapeMismatchError : public Error {
public:
  using Error::Error;
};

/// A product fell outside the carrier. Carries the offending pair so the
/// report can be re-verified against the ambient operation.
class NotClosedError : public Error {
public:
  NotClosedError(std::int64_t left, std::int64_t right, std::int64_t product)
      : Error("not closed: " + std::to_string(left) + " * " + std::to_string(right) +
              " = " + std::to_string(product) + " is outside the carrier"),
        left_(left), right_(right), product_(product) {}
  std::int64_t left() const { return left_; }
  std::int64_t right() const { return right_; }
  std::int64_t product() const { return product_; }

private:
  std::int64_t left_, right_, product_;
};

class EmptySubsetError : public Error {
public:
  EmptySubsetError() : Error("subset is empty") {}
};

class UnknownLabelError : public Error {
public:
  explicit UnknownLabelError(std::int64_t label)
      : Error("label " + std::to_string(label) + " is not in the carrier"), label_(label) {}
  std::int64_t label() const { return label_; }

private:
  std::int64_t label_;
};

class NotAssociativeError : public Error {
public:
  using Error::Error;
  NotAssociativeError() : Error("operation is not associative") {}
};

class NotIdempotentError : public Error {
public:
  explicit NotIdempotentError(std::int64_t label, std::int64_t square)
      : Error("element " + std::to_string(label) + " is not idempotent (" +
              std::to_string(label) + " * " + std::to_string(label) + " = " +
              std::to_string(square) + ")") {}
};

class NotMonoidError : public Error {
public:
  NotMonoidError() : Error("table has no two-sided identity") {}
};

class TooLargeError : public Error {
public:
  using Error::Error;
};

class AddNotAbelianGroupError : public Error {
public:
  using Error::Error;
};

class MulNotAssociativeError : public Error {
public:
  using Error::Error;
};

/// Distributivity failure with the counterexample triple; `left_side` tells
/// which law broke: x*(y+z) = x*y + x*z (left) or (y+z)*x = y*x + z*x (right).
class NotDistributiveError : public Error {
public:
  NotDistributiveError(std::int64_t x, std::int64_t y, std::int64_t z, bool left_side)
      : Error(std::string("not distributive (") + (left_side ? "left" : "right") +
              "): counterexample x=" + std::to_string(x) + " y=" + std::to_string(y) +
              " z=" + std::to_string(z)),
        x_(x), y_(y), z_(z), left_side_(left_side) {}
  std::int64_t x() const { return x_; }
  std::int64_t y() const { return y_; }
  std::int64_t z() const { return z_; }
  bool left_side() const { return left_side_; }

private:
  std::int64_t x_, y_, z_;
  bool left_side_;
};

class InvalidSpecError : public Error {
public:
  using Error::Error;
};

class SinkFailureError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace cayley
