#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vertexfreq {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {
std::string join_indices(const std::vector<std::size_t>& indices);
}  // namespace detail

/// Raised when a translation operator is singular at the requested tolerance.
class NotInvertible : public Error {
 public:
  NotInvertible(std::size_t vertex, std::vector<std::size_t> vanishing)
      : Error("translation at vertex " + std::to_string(vertex) +
              " is not invertible; eigenvectors vanish at indices " +
              detail::join_indices(vanishing)),
        vertex_(vertex),
        vanishing_(std::move(vanishing)) {}

  std::size_t vertex() const noexcept { return vertex_; }
  const std::vector<std::size_t>& vanishing_indices() const noexcept { return vanishing_; }

 private:
  std::size_t vertex_;
  std::vector<std::size_t> vanishing_;
};

/// Raised when a Fourier multiplier symbol has (near-)zero entries.
class NonInvertibleSymbol : public Error {
 public:
  explicit NonInvertibleSymbol(std::vector<std::size_t> zeros)
      : Error("multiplier symbol vanishes at indices " + detail::join_indices(zeros)),
        zeros_(std::move(zeros)) {}

  const std::vector<std::size_t>& zero_indices() const noexcept { return zeros_; }

 private:
  std::vector<std::size_t> zeros_;
};

}  // namespace vertexfreq
