#ifndef NBVB_ERRORS_HPP
#define NBVB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nbvb {

// Thrown when a linear-algebra step fails (non-SPD system, singular solve).
// `index` identifies the failing iteration (batch) or observation (online).
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, long index)
      : std::runtime_error(what + " [index " + std::to_string(index) + "]"),
        index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

// Thrown when a persisted model snapshot cannot be used (wrong format tag,
// unsupported version, missing sections).
class IncompatibleSnapshot : public std::runtime_error {
 public:
  explicit IncompatibleSnapshot(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace nbvb

#endif
