#pragma once

#include <stdexcept>
#include <string>

namespace qprobe {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or local dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operator failed the validation of its declared role
/// (density matrix, channel, Choi matrix, filter).
class InvalidOperator : public Error {
 public:
  using Error::Error;
};

/// A decomposition did not converge or produced non-finite output.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// The realigned probe is singular, so the probe cannot support
/// ancilla-assisted tomography.
class UnfaithfulProbe : public Error {
 public:
  UnfaithfulProbe(double sigma_min, double sigma_max)
      : Error("probe is not faithful: sigma_min=" + std::to_string(sigma_min) +
              " sigma_max=" + std::to_string(sigma_max)),
        sigma_min_(sigma_min),
        sigma_max_(sigma_max) {}

  double sigma_min() const noexcept { return sigma_min_; }
  double sigma_max() const noexcept { return sigma_max_; }

 private:
  double sigma_min_;
  double sigma_max_;
};

/// A local filter mapped the state to (numerically) zero.
class AnnihilatedState : public Error {
 public:
  explicit AnnihilatedState(double weight)
      : Error("filter annihilates the state: Tr=" + std::to_string(weight)),
        weight_(weight) {}

  double weight() const noexcept { return weight_; }

 private:
  double weight_;
};

}  // namespace qprobe
