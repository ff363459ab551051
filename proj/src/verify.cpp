#include "dsop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "dsop/errors.hpp"
#include "dsop/ordering.hpp"
#include "dsop/sturm.hpp"

namespace dsop {

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::pass: return "PASS";
    case BoundStatus::fail: return "FAIL";
    case BoundStatus::not_applicable: return "N/A";
  }
  return "?";
}

namespace {

ZeroReport count_changes(std::size_t n, const SobolevSpec& spec, bool ordered, Exec exec) {
  ZeroReport r;
  r.n = n;
  r.d_star = spec.d_star();
  r.bound = n > r.d_star ? n - r.d_star : 0;
  const QPoly s = sobolev_poly_exact(n, spec, exec);
  r.sign_changes = s.degree() == 0 ? 0 : sign_change_count(s, spec.support_hull());
  r.pass = r.sign_changes >= r.bound;
  r.status = !ordered ? BoundStatus::not_applicable : (r.pass ? BoundStatus::pass : BoundStatus::fail);
  return r;
}

}  // namespace

ZeroReport theorem1_check(std::size_t n, const SobolevSpec& spec, Exec exec) {
  const OrderCheck order = is_sequentially_ordered(spec);
  if (!order.ordered) throw HypothesisError("inner product is not sequentially ordered: " + order.describe());
  return count_changes(n, spec, true, exec);
}

ZeroReport theorem1_evaluate(std::size_t n, const SobolevSpec& spec, Exec exec) {
  return count_changes(n, spec, is_sequentially_ordered(spec).ordered, exec);
}

std::vector<ZeroReport> theorem1_sweep(std::size_t n_max, const SobolevSpec& spec, Exec exec) {
  const bool ordered = is_sequentially_ordered(spec).ordered;
  std::vector<ZeroReport> out(n_max);
  const long count = static_cast<long>(n_max);
  if (exec == Exec::parallel) {
    std::vector<std::optional<std::string>> errors(n_max);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = count_changes(static_cast<std::size_t>(i) + 1, spec, ordered, Exec::serial);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
    for (const auto& e : errors)
      if (e) throw Error(*e);
  } else {
    for (long i = 0; i < count; ++i) out[i] = count_changes(static_cast<std::size_t>(i) + 1, spec, ordered, exec);
  }
  return out;
}

ZeroReport attraction_check(std::size_t n, const SobolevSpec& spec, double radius, const RootOptions& options) {
  if (!spec.is_laguerre()) throw PreconditionError("attraction check needs a Laguerre measure");
  const auto points = spec.points();
  if (points.size() != spec.masses().size())
    throw PreconditionError("attraction check needs one derivative order per mass point");
  const OrderCheck order = is_sequentially_ordered(spec);
  if (!order.ordered) throw HypothesisError("inner product is not sequentially ordered: " + order.describe());
  if (!(radius > 0)) throw PreconditionError("radius must be positive");

  ZeroReport r;
  r.n = n;
  r.d_star = spec.d_star();
  r.bound = n > r.d_star ? n - r.d_star : 0;
  const QPoly s = sobolev_poly_via_kernel(n, spec, options.exec);
  r.sign_changes = n == 0 ? 0 : sign_change_count(s, spec.support_hull());
  r.pass = r.sign_changes >= r.bound;
  r.status = r.pass ? BoundStatus::pass : BoundStatus::fail;
  if (n == 0) return r;

  r.roots = all_roots_float(s, options);
  for (const auto& c : points) {
    const std::complex<double> cz(to_double(c), 0.0);
    NearestRoot best{c, std::numeric_limits<double>::infinity(), {}};
    for (const auto& z : r.roots) {
      const double d = std::abs(z - cz);
      if (d < best.distance) best = {c, d, z};
    }
    r.per_mass_nearest.push_back(best);
  }
  for (const auto& z : r.roots) {
    bool near_mass = false;
    for (const auto& c : points) near_mass = near_mass || std::abs(z - std::complex<double>(to_double(c), 0.0)) < radius;
    if (near_mass) ++r.within_radius;
    if (z.real() > 0 && std::abs(z.imag()) < 1e-6 * (1.0 + std::abs(z.real()))) ++r.positive_real;
    const double to_half_line = z.real() > 0 ? std::abs(z.imag()) : std::abs(z);
    r.max_distance_to_half_line = std::max(r.max_distance_to_half_line, to_half_line);
  }
  r.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < r.roots.size(); ++a)
    for (std::size_t b = a + 1; b < r.roots.size(); ++b)
      r.min_separation = std::min(r.min_separation, std::abs(r.roots[a] - r.roots[b]));
  return r;
}

std::string summary_line(const ZeroReport& r) {
  return "n=" + std::to_string(r.n) + " changes=" + std::to_string(r.sign_changes) +
         " bound=" + std::to_string(r.bound) + " " + to_string(r.status);
}

}  // namespace dsop
