#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace susyqm {

// Units throughout: hbar = 2m = 1, so H = -d^2/dx^2 + V(x).

using RealFunction = std::function<double(double)>;

enum class Sector { Minus, Plus };
enum class Parity { Even, Odd };

inline std::string_view to_string(Sector s) { return s == Sector::Minus ? "minus" : "plus"; }
inline std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Sign in front of W' in V = W^2 + s W': -1 for the minus sector, +1 for plus.
inline double riccati_sign(Sector s) { return s == Sector::Minus ? -1.0 : 1.0; }

inline Parity parity_of_level(int level) { return level % 2 == 0 ? Parity::Even : Parity::Odd; }

// Sign function with eps(0) = 0.
inline double sign_eps(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Carries the best estimate reached before giving up.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

class ConditioningError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

class BrokenSusyError : public Error {
 public:
  using Error::Error;
};

class NoPartnerError : public Error {
 public:
  using Error::Error;
};

class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class SubThresholdError : public Error {
 public:
  using Error::Error;
};

class UnsupportedBaselineError : public Error {
 public:
  using Error::Error;
};

class BrokenTruncationError : public Error {
 public:
  using Error::Error;
};

class MislabeledLevelError : public Error {
 public:
  MislabeledLevelError(const std::string& what, int measured_nodes)
      : Error(what), measured_nodes_(measured_nodes) {}
  int measured_nodes() const noexcept { return measured_nodes_; }

 private:
  int measured_nodes_;
};

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace susyqm
