#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palinwidth {

// Base for everything this library throws on bad input or broken invariants.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Group enumeration hit the element cap; partial_count is how many elements
// had been found when the cap tripped.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t cap, std::size_t partial_count)
      : Error("group order exceeds cap " + std::to_string(cap) + " (" +
              std::to_string(partial_count) + " elements enumerated)"),
        cap_(cap),
        partial_count_(partial_count) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t cap_;
  std::size_t partial_count_;
};

// A mathematical guarantee failed to hold on a concrete computation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace palinwidth
