#ifndef PURELAB_ERRORS_HPP
#define PURELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace purelab {

/// Malformed or law-violating input data (bad tables, unresolved ids, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Request that is beyond what finite enumeration can deliver
/// (hom-size guard exceeded, enumeration of an interval quantale, ...).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Default ceiling on enumerated element counts. Overridable per call site
// and through the PURITY_GUARD environment variable in the CLI.
inline constexpr std::size_t kDefaultGuard = 20000;

}  // namespace purelab

#endif
