#pragma once

#include <stdexcept>
#include <string>

namespace mckibben {

// Input outside the model's domain (bad angle, non-positive length, wall
// thicker than the radius, ...). The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical procedure failed to reach its requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace mckibben
