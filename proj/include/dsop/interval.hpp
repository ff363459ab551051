#pragma once

#include <span>
#include <string>

#include "dsop/rational.hpp"

namespace dsop {

/// A rational or one of the two infinities.
class ExtReal {
 public:
  enum class Kind { minus_infinity, finite, plus_infinity };

  ExtReal(const Rational& v) : kind_(Kind::finite), value_(v) {}  // NOLINT: implicit by intent
  static ExtReal minus_infinity() { return ExtReal(Kind::minus_infinity); }
  static ExtReal plus_infinity() { return ExtReal(Kind::plus_infinity); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  /// Only meaningful for finite values.
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend bool operator<(const ExtReal& a, const ExtReal& b);
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }

  std::string to_string() const;

 private:
  explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Interval of the extended real line. Finite endpoints belong to the set;
/// interior() is the open interval (lo, hi), empty for singletons.
class ExtInterval {
 public:
  ExtInterval() = default;  // empty

  static ExtInterval empty() { return {}; }
  /// Throws PreconditionError unless lo <= hi.
  static ExtInterval closed(const ExtReal& lo, const ExtReal& hi);
  static ExtInterval point(const Rational& r) { return closed(r, r); }
  static ExtInterval real_line() { return closed(ExtReal::minus_infinity(), ExtReal::plus_infinity()); }
  static ExtInterval hull_of(std::span<const Rational> points);

  bool is_empty() const noexcept { return empty_; }
  bool is_singleton() const noexcept { return !empty_ && lo_ == hi_; }
  bool is_bounded() const noexcept { return empty_ || (lo_.is_finite() && hi_.is_finite()); }
  bool has_empty_interior() const noexcept { return empty_ || lo_ == hi_; }

  const ExtReal& lo() const noexcept { return lo_; }
  const ExtReal& hi() const noexcept { return hi_; }

  bool contains(const Rational& x) const;
  bool interior_contains(const Rational& x) const;

  /// Convex hull of the union.
  ExtInterval hull_with(const ExtInterval& other) const;

  /// this ∩ int(other) != ∅
  bool meets_interior_of(const ExtInterval& other) const;

  /// this ⊂ int(other); the empty set is a subset of everything.
  bool inside_interior_of(const ExtInterval& other) const;

  friend bool operator==(const ExtInterval& a, const ExtInterval& b);

  /// "∅", "{a}", "[a, b]", "[a, ∞)", "(-∞, b]".
  std::string to_string() const;

 private:
  bool empty_ = true;
  ExtReal lo_ = ExtReal::plus_infinity();
  ExtReal hi_ = ExtReal::minus_infinity();
};

}  // namespace dsop
