#include "purelab/rational.hpp"

#include <numeric>

namespace purelab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapabilityError("rational overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapabilityError("rational overflow in addition");
  return r;
}

}  // namespace

ExtRat::ExtRat(std::int64_t num, std::int64_t den) : inf_(false) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw ValidationError("negative rational not allowed");
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ && b.inf_) return std::strong_ordering::equal;
  if (a.inf_) return std::strong_ordering::greater;
  if (b.inf_) return std::strong_ordering::less;
  // Cross-multiply; operands stay in lowest terms so this rarely grows.
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (inf_ || o.inf_) return infinity();
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t l = checked_mul(den_ / g, o.den_);
  std::int64_t n = checked_add(checked_mul(num_, o.den_ / g),
                               checked_mul(o.num_, den_ / g));
  return ExtRat(n, l);
}

ExtRat ExtRat::minus(const ExtRat& o) const {
  if (o.inf_) throw ValidationError("cannot subtract infinity");
  if (inf_) return infinity();
  if (*this < o) throw ValidationError("negative difference of rationals");
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t l = checked_mul(den_ / g, o.den_);
  std::int64_t n = checked_mul(num_, o.den_ / g) - checked_mul(o.num_, den_ / g);
  return ExtRat(n, l);
}

ExtRat ExtRat::half() const {
  if (inf_) return infinity();
  return ExtRat(num_, checked_mul(den_, 2));
}

std::string ExtRat::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExtRat ExtRat::parse(const std::string& text) {
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExtRat(std::stoll(text), 1);
    return ExtRat(std::stoll(text.substr(0, slash)),
                  std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ValidationError("cannot parse rational: '" + text + "'");
  }
}

}  // namespace purelab
