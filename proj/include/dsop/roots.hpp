#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dsop/errors.hpp"
#include "dsop/parallel.hpp"
#include "dsop/poly.hpp"

namespace dsop {

struct RootOptions {
  /// Iteration budget per working precision.
  std::size_t max_iterations = 500;
  /// Required |p(z)| / sum |a_k| |z|^k at every returned root.
  double residual_tolerance = 1e-10;
  /// Two successive precisions must agree to this relative distance.
  double agreement_tolerance = 1e-12;
  unsigned initial_bits = 64;
  unsigned max_bits = 1U << 15;
  Exec exec = Exec::parallel;
};

/// Raised when the iteration does not settle; carries the best iterate.
class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, std::vector<std::complex<double>> best)
      : Error(what), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }

 private:
  std::vector<std::complex<double>> best_;
};

/// All deg(p) complex roots, with multiplicity, sorted by (real, imag).
///
/// Aberth–Ehrlich simultaneous iteration in MPFR arithmetic. Starting points
/// are rotated roots of unity around the root centroid, scaled by the
/// Fujiwara bound of the recentred polynomial. The working precision doubles
/// until two consecutive precisions agree, so ill-conditioned polynomials of
/// high degree come out accurate to the agreement tolerance.
std::vector<std::complex<double>> all_roots_float(const QPoly& p, const RootOptions& options = {});
std::vector<std::complex<double>> all_roots_float(const FPoly& p, const RootOptions& options = {});

}  // namespace dsop
