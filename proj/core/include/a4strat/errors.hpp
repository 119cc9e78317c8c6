#pragma once

#include <stdexcept>
#include <string>

namespace a4strat {

/// Violated precondition or malformed input (wrong genus, odd tuple entry, bad string).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Cγ+D is too close to singular for the Siegel action to be trusted.
class SingularTransformError : public DomainError {
 public:
  SingularTransformError(const std::string& what, double abs_det)
      : DomainError(what), abs_det_(abs_det) {}
  double abs_det() const noexcept { return abs_det_; }

 private:
  double abs_det_;
};

/// A hard resource cap was hit: truncation radius, BFS orbit size or search node budget.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace a4strat
