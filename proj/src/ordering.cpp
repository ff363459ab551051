#include "dsop/ordering.hpp"

#include <algorithm>

#include "dsop/errors.hpp"
#include "dsop/linalg.hpp"
#include "dsop/sturm.hpp"

namespace dsop {

DeltaSystem delta_system(const SobolevSpec& spec) {
  DeltaSystem out;
  out.intervals.assign(spec.max_order() + 1, ExtInterval::empty());
  out.intervals[0] = spec.support_hull();
  for (const auto& m : spec.masses()) {
    auto& slot = out.intervals[m.order];
    slot = slot.hull_with(ExtInterval::point(m.c));
  }
  return out;
}

std::string OrderCheck::describe() const {
  if (ordered) return "sequentially ordered";
  const std::string relation = offending.inside_interior_of(prior_hull) ? " ⊂ int(" : " ∩ int(";
  std::string text = "k=" + std::to_string(*violating_k) + ": " + offending.to_string() + relation +
                     prior_hull.to_string() + ")";
  if (relation == " ∩ int(") text += " ≠ ∅";
  return text;
}

OrderCheck check_sequential_order(std::span<const ExtInterval> intervals) {
  OrderCheck out;
  if (intervals.empty()) return out;
  ExtInterval hull = intervals[0];
  for (std::size_t k = 1; k < intervals.size(); ++k) {
    if (intervals[k].meets_interior_of(hull)) {
      out.ordered = false;
      out.violating_k = k;
      out.offending = intervals[k];
      out.prior_hull = hull;
      return out;
    }
    hull = hull.hull_with(intervals[k]);
  }
  return out;
}

OrderCheck is_sequentially_ordered(const SobolevSpec& spec) {
  return check_sequential_order(delta_system(spec).intervals);
}

VanishSpec::VanishSpec(std::vector<VanishPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw ValidationError("vanishing conditions must be nonempty");
  std::sort(pairs_.begin(), pairs_.end(),
            [](const VanishPair& a, const VanishPair& b) { return a.nu < b.nu || (a.nu == b.nu && a.r < b.r); });
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
    throw ValidationError("vanishing conditions must be distinct");
}

std::vector<ExtInterval> VanishSpec::order_hulls() const {
  std::vector<ExtInterval> out(max_nu() + 1, ExtInterval::empty());
  for (const auto& p : pairs_) out[p.nu] = out[p.nu].hull_with(ExtInterval::point(p.r));
  return out;
}

bool VanishSpec::is_sequentially_ordered() const { return check_sequential_order(order_hulls()).ordered; }

namespace {

// D^nu(x^m)(r)
Rational monomial_derivative(std::size_t m, std::size_t nu, const Rational& r) {
  if (nu > m) return 0;
  return Rational(falling_factorial(m, nu)) * pow(r, m - nu);
}

}  // namespace

QPoly minimal_vanishing_poly(const VanishSpec& v) {
  const auto& pairs = v.pairs();
  const std::size_t rows = pairs.size();
  for (std::size_t g = 0; g <= rows; ++g) {
    Matrix<Rational> a(rows, g);
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t m = 0; m < g; ++m) a(i, m) = monomial_derivative(m, pairs[i].nu, pairs[i].r);
      b[i] = -monomial_derivative(g, pairs[i].nu, pairs[i].r);
    }
    ExactSolveResult sol = solve_exact(std::move(a), std::move(b));
    if (!sol.consistent) continue;
    if (sol.rank != g) throw Error("minimal vanishing polynomial is not unique at degree " + std::to_string(g));
    sol.x.push_back(Rational(1));
    return QPoly(std::move(sol.x));
  }
  throw Error("no monic polynomial of degree <= M meets the vanishing conditions");
}

std::size_t predicted_degree(const VanishSpec& v) {
  const auto& pairs = v.pairs();
  for (std::size_t i = 1; i <= pairs.size(); ++i)
    if (pairs[i - 1].nu >= i) return i - 1;
  return pairs.size();
}

RolleReport rolle_bound_check(const QPoly& p, std::span<const ExtInterval> intervals, const ExtInterval& j) {
  if (intervals.empty()) throw PreconditionError("at least the interval I_0 is required");
  const std::size_t m = intervals.size() - 1;
  const OrderCheck order = check_sequential_order(intervals);
  if (!order.ordered) throw PreconditionError("intervals are not sequentially ordered: " + order.describe());
  if (!j.is_empty() && !j.is_bounded()) throw PreconditionError("J must be a closed bounded interval");
  if (!j.inside_interior_of(intervals[0])) throw PreconditionError("J must lie inside int(I_0)");
  if (p.is_zero() || p.degree() < m) throw PreconditionError("deg P must be at least m");

  ExtInterval all = intervals[0];
  for (const auto& i : intervals) all = all.hull_with(i);

  // J ⊂ A in both uses, so N_c(Q; A \ J) = N_c(Q; A) - N_c(Q; J).
  auto count_outside = [&](const QPoly& q, const ExtInterval& a) { return sturm_count(q, a) - sturm_count(q, j); };

  RolleReport out;
  out.degree = p.degree();
  out.lhs = zeros_total_count(p, j) + count_outside(p, intervals[0]);
  for (std::size_t i = 1; i <= m; ++i) out.lhs += sturm_count(p.derivative(i), intervals[i]);
  const QPoly pm = p.derivative(m);
  out.general_rhs = zeros_total_count(pm, j) + count_outside(pm, all) + m;
  out.pass = out.lhs <= out.degree && out.lhs <= out.general_rhs;
  return out;
}

}  // namespace dsop
