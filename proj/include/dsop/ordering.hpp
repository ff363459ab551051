#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsop/interval.hpp"
#include "dsop/poly.hpp"
#include "dsop/sobolev.hpp"

namespace dsop {

/// Δ_0 = ch(supp μ ∪ {c_j : λ_{j,0} > 0}), Δ_k = ch({c_j : λ_{j,k} > 0}) for
/// k = 1..d_N.
struct DeltaSystem {
  std::vector<ExtInterval> intervals;
};

DeltaSystem delta_system(const SobolevSpec& spec);

/// Result of checking I_k ∩ int(ch(I_0 ∪ … ∪ I_{k-1})) = ∅ for k >= 1.
struct OrderCheck {
  bool ordered = true;
  /// First violating k, with Δ_k and the hull of the earlier intervals.
  std::optional<std::size_t> violating_k;
  ExtInterval offending;
  ExtInterval prior_hull;

  /// "k=2: {-9} ⊂ int([-15, ∞))" or "sequentially ordered".
  std::string describe() const;
};

/// Empty intervals pass vacuously.
OrderCheck check_sequential_order(std::span<const ExtInterval> intervals);

OrderCheck is_sequentially_ordered(const SobolevSpec& spec);

struct VanishPair {
  Rational r;
  std::size_t nu = 0;

  friend bool operator==(const VanishPair&, const VanishPair&) = default;
};

/// Conditions U^{(ν_i)}(r_i) = 0, kept sorted by (ν, r).
class VanishSpec {
 public:
  /// Throws ValidationError when empty or when a pair repeats.
  explicit VanishSpec(std::vector<VanishPair> pairs);

  const std::vector<VanishPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  std::size_t max_nu() const noexcept { return pairs_.back().nu; }

  /// I_k = ch({r_i : ν_i = k}), k = 0..ν_M.
  std::vector<ExtInterval> order_hulls() const;
  bool is_sequentially_ordered() const;

 private:
  std::vector<VanishPair> pairs_;
};

/// The unique monic polynomial of least degree meeting every condition.
/// Degrees 0..M are tried in turn with exact linear algebra; at the first
/// consistent degree the constraint matrix must have full column rank,
/// which is the uniqueness statement (Error otherwise).
QPoly minimal_vanishing_poly(const VanishSpec& v);

/// min({i : ν_i >= i} ∪ {M+1}) - 1, with i counted from 1.
std::size_t predicted_degree(const VanishSpec& v);

struct RolleReport {
  /// N_z(P; J) + N_c(P; I_0 \ J) + Σ_{i>=1} N_c(P^{(i)}; I_i)
  std::size_t lhs = 0;
  std::size_t degree = 0;
  /// N_z(P^{(m)}; J) + N_c(P^{(m)}; ch(∪ I_i) \ J) + m
  std::size_t general_rhs = 0;
  bool pass = false;
};

/// Evaluates both counting inequalities. Preconditions (each raises
/// PreconditionError naming the failed one): the intervals are sequentially
/// ordered, J is closed and inside int(I_0), deg P >= m.
RolleReport rolle_bound_check(const QPoly& p, std::span<const ExtInterval> intervals, const ExtInterval& j);

}  // namespace dsop
