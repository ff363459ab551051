#include "dsop/interval.hpp"

#include <algorithm>

#include "dsop/errors.hpp"

namespace dsop {

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

bool operator<(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.is_finite() && a.value_ < b.value_;
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::minus_infinity: return "-∞";
    case Kind::plus_infinity: return "∞";
    case Kind::finite: break;
  }
  return dsop::to_string(value_);
}

ExtInterval ExtInterval::closed(const ExtReal& lo, const ExtReal& hi) {
  if (hi < lo) throw PreconditionError("interval with lo > hi");
  if (lo.kind() == ExtReal::Kind::plus_infinity || hi.kind() == ExtReal::Kind::minus_infinity)
    throw PreconditionError("interval endpoint at the wrong infinity");
  ExtInterval out;
  out.empty_ = false;
  out.lo_ = lo;
  out.hi_ = hi;
  return out;
}

ExtInterval ExtInterval::hull_of(std::span<const Rational> points) {
  if (points.empty()) return {};
  const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
  return closed(*lo, *hi);
}

bool ExtInterval::contains(const Rational& x) const {
  if (empty_) return false;
  const ExtReal v(x);
  return lo_ <= v && v <= hi_;
}

bool ExtInterval::interior_contains(const Rational& x) const {
  if (empty_) return false;
  const ExtReal v(x);
  return lo_ < v && v < hi_;
}

ExtInterval ExtInterval::hull_with(const ExtInterval& other) const {
  if (empty_) return other;
  if (other.empty_) return *this;
  return closed(std::min(lo_, other.lo_), std::max(hi_, other.hi_));
}

bool ExtInterval::meets_interior_of(const ExtInterval& other) const {
  if (empty_ || other.has_empty_interior()) return false;
  // [a, b] ∩ (L, H) is nonempty iff a < H and b > L.
  return lo_ < other.hi_ && other.lo_ < hi_;
}

bool ExtInterval::inside_interior_of(const ExtInterval& other) const {
  if (empty_) return true;
  if (other.has_empty_interior()) return false;
  return other.lo_ < lo_ && hi_ < other.hi_;
}

bool operator==(const ExtInterval& a, const ExtInterval& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
  return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

std::string ExtInterval::to_string() const {
  if (empty_) return "∅";
  if (is_singleton()) return "{" + lo_.to_string() + "}";
  const std::string open = lo_.is_finite() ? "[" : "(";
  const std::string close = hi_.is_finite() ? "]" : ")";
  return open + lo_.to_string() + ", " + hi_.to_string() + close;
}

}  // namespace dsop
