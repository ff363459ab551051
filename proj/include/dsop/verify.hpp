#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dsop/parallel.hpp"
#include "dsop/poly.hpp"
#include "dsop/roots.hpp"
#include "dsop/sobolev.hpp"

namespace dsop {

enum class BoundStatus { pass, fail, not_applicable };

std::string to_string(BoundStatus s);

struct NearestRoot {
  Rational c;
  double distance = 0.0;
  std::complex<double> root;
};

struct ZeroReport {
  std::size_t n = 0;
  std::size_t d_star = 0;
  /// Sign changes of S_n inside int(ch(supp μ)), counted exactly.
  std::size_t sign_changes = 0;
  /// n - d*, clamped at zero.
  std::size_t bound = 0;
  BoundStatus status = BoundStatus::not_applicable;
  bool pass = false;

  // Filled by attraction_check only.
  std::vector<std::complex<double>> roots;
  std::vector<NearestRoot> per_mass_nearest;
  std::size_t within_radius = 0;
  std::size_t positive_real = 0;
  double max_distance_to_half_line = 0.0;
  double min_separation = 0.0;
};

/// Sign-change bound: S_n has at least n - d* sign changes on (a, b).
/// Throws HypothesisError when the inner product is not sequentially ordered.
ZeroReport theorem1_check(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// As theorem1_check, but a spec outside the hypothesis is reported with
/// status not_applicable instead of throwing.
ZeroReport theorem1_evaluate(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// theorem1_evaluate for n = 1..n_max, independent checks run in parallel.
std::vector<ZeroReport> theorem1_sweep(std::size_t n_max, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// Float roots of the exact S_n and their geometry relative to the mass
/// points. A root counts as real positive when Re > 0 and
/// |Im| < 1e-6 (1 + |Re|). Requires a Laguerre measure with one derivative
/// order per mass point and a sequentially ordered spec.
ZeroReport attraction_check(std::size_t n, const SobolevSpec& spec, double radius,
                            const RootOptions& options = {});

/// Single-line summary, e.g. "n=5 changes=1 bound=1 PASS".
std::string summary_line(const ZeroReport& r);

std::string to_json(const ZeroReport& r);
std::string csv_header();
std::string to_csv_row(const ZeroReport& r);

}  // namespace dsop
