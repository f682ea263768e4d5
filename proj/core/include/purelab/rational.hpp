#ifndef PURELAB_RATIONAL_HPP
#define PURELAB_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <string>

#include "purelab/errors.hpp"

namespace purelab {

/// Exact nonnegative rational extended with a distinguished infinity.
///
/// Finite values are kept in lowest terms; infinity is a tag, never a
/// large number. Addition saturates at infinity.
class ExtRat {
 public:
  ExtRat() : num_(0), den_(1), inf_(false) {}
  ExtRat(std::int64_t num, std::int64_t den);

  static ExtRat infinity() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }
  static ExtRat zero() { return ExtRat(); }

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && num_ == 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  ExtRat operator+(const ExtRat& o) const;
  /// Truncated difference: a - b when a >= b are finite, else validation error.
  ExtRat minus(const ExtRat& o) const;
  ExtRat half() const;

  static ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
  static ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

  std::string str() const;
  /// Parses "p/q", "p", or "inf".
  static ExtRat parse(const std::string& text);

 private:
  std::int64_t num_;
  std::int64_t den_;  // >= 1, gcd(num, den) == 1
  bool inf_;
};

}  // namespace purelab

#endif
