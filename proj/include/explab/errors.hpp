#pragma once

#include <stdexcept>
#include <string>

namespace explab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad word, wrong rank, s <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Isometric circles of a proposed Schottky generating set overlap.
class CertificateFailed : public Error {
 public:
  using Error::Error;
};

/// Pressure never became negative on the search grid.
class NoSignChange : public Error {
 public:
  using Error::Error;
};

/// Counting regression found no orbit points in the radius window.
class EmptyWindow : public Error {
 public:
  using Error::Error;
};

/// No non-identity kernel element within the enumerated ball.
class EmptyKernel : public Error {
 public:
  using Error::Error;
};

/// Subgroup generators are not a free basis (decorated folding found a relation).
class NotFree : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration; the CLI maps this to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace explab
