#pragma once

#include <stdexcept>
#include <string>

namespace codmeans {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = -1)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Every term was pruned while building a vocabulary.
class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

// A document label falls outside the declared taxonomy.
class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

// Cannot-link constraints need at least two clusters.
class SingleClusterError : public Error {
 public:
  using Error::Error;
};

// Centroid update over an empty cluster (zero denominator).
class EmptyClusterError : public Error {
 public:
  using Error::Error;
};

// Cluster quality measure evaluated on a degenerate input
// (empty cluster, empty pool, or zero inter-distance).
class MetricDomainError : public Error {
 public:
  using Error::Error;
};

// A document shows up in both the removal and the relabel list.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// Invalid solver or experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Thrown by experiment runners when the underlying solver failed;
// annotated with the sweep point that was running.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace codmeans
