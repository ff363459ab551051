#include "dsop/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "bigfloat.hpp"

namespace dsop {
namespace {

using detail::BigComplex;
using detail::BigFloat;

/// Scratch values for one root update; one per thread.
struct Scratch {
  explicit Scratch(mpfr_prec_t prec)
      : t1(prec), t2(prec), t3(prec), t4(prec), p(prec), dp(prec), s(prec), denom(prec), delta(prec), ptilde(prec),
        az(prec) {}
  BigFloat t1, t2, t3, t4;
  BigComplex p, dp, s, denom, delta;
  BigFloat ptilde, az;
};

// out = a * b; out may alias a or b.
void cmul(BigComplex& out, const BigComplex& a, const BigComplex& b, Scratch& w) {
  mpfr_mul(w.t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(w.t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(w.t3.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(w.t4.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.re.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), w.t3.get(), w.t4.get(), MPFR_RNDN);
}

// out = a / b; out must not alias b.
void cdiv(BigComplex& out, const BigComplex& a, const BigComplex& b, Scratch& w) {
  mpfr_sqr(w.t1.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(w.t2.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(w.t1.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);  // |b|^2
  mpfr_mul(w.t2.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(w.t3.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(w.t2.get(), w.t2.get(), w.t3.get(), MPFR_RNDN);
  mpfr_mul(w.t3.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(w.t4.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(w.t3.get(), w.t3.get(), w.t4.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), w.t2.get(), w.t1.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), w.t3.get(), w.t1.get(), MPFR_RNDN);
}

/// 2 max_k |a_{n-k}/a_n|^{1/k}, the last term using a_0/2.
double fujiwara_bound(const std::vector<Rational>& a) {
  const std::size_t n = a.size() - 1;
  const double lead = log_abs(a[n]);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational& c = a[n - k];
    if (c == 0) continue;
    double l = log_abs(c) - lead;
    if (k == n) l -= std::log(2.0);
    best = std::max(best, l / static_cast<double>(k));
  }
  return 2.0 * std::exp(best);
}

enum class LevelOutcome { settled, stalled, budget_exhausted };

class AberthSolver {
 public:
  AberthSolver(std::vector<Rational> coeffs, const RootOptions& options)
      : exact_(std::move(coeffs)), n_(exact_.size() - 1), options_(options) {}

  void start(mpfr_prec_t prec, double radius) {
    set_precision(prec);
    z_.clear();
    for (std::size_t k = 0; k < n_; ++k) {
      // Rotated so the start set is not symmetric about the real axis.
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_) +
                           std::numbers::pi / (2.0 * static_cast<double>(n_));
      BigComplex z(prec_);
      z.re.set(radius * std::cos(theta));
      z.im.set(radius * std::sin(theta));
      z_.push_back(std::move(z));
    }
  }

  void set_precision(mpfr_prec_t prec) {
    prec_ = prec;
    a_.clear();
    abs_a_.clear();
    for (const auto& c : exact_) {
      BigFloat v(prec);
      v.set(c);
      BigFloat av(prec);
      mpfr_abs(av.get(), v.get(), MPFR_RNDN);
      a_.push_back(std::move(v));
      abs_a_.push_back(std::move(av));
    }
    for (auto& z : z_) {
      z.re.set_precision(prec);
      z.im.set_precision(prec);
    }
  }

  /// Iterates until every root settles. With escalate set, a level whose
  /// unsettled count has not dropped for kStallSweeps sweeps ends early so
  /// the caller can raise the precision.
  LevelOutcome run_level(std::size_t& iterations_used, bool escalate) {
    constexpr std::size_t kStallSweeps = 25;
    std::vector<char> settled(n_, 0);
    std::vector<BigComplex> next = z_;
    std::size_t best_unsettled = n_ + 1, last_progress = 0;
    for (iterations_used = 0; iterations_used < options_.max_iterations; ++iterations_used) {
      const auto unsettled = static_cast<std::size_t>(std::count(settled.begin(), settled.end(), 0));
      if (unsettled == 0) return LevelOutcome::settled;
      if (unsettled < best_unsettled) {
        best_unsettled = unsettled;
        last_progress = iterations_used;
      } else if (escalate && unsettled < n_ && iterations_used - last_progress >= kStallSweeps) {
        return LevelOutcome::stalled;
      }
      sweep(settled, next);
      for (std::size_t i = 0; i < n_; ++i)
        if (next_moved_[i]) std::swap(z_[i], next[i]);
    }
    return std::all_of(settled.begin(), settled.end(), [](char s) { return s != 0; }) ? LevelOutcome::settled
                                                                                       : LevelOutcome::budget_exhausted;
  }

  /// Current iterate moved back by the exact shift before rounding, so roots
  /// near zero keep their relative accuracy.
  std::vector<std::complex<double>> current(const Rational& shift) const {
    std::vector<std::complex<double>> out;
    out.reserve(n_);
    BigFloat s(prec_), re(prec_);
    s.set(shift);
    for (const auto& z : z_) {
      mpfr_add(re.get(), z.re.get(), s.get(), MPFR_RNDN);
      out.emplace_back(re.to_double(), z.im.to_double());
    }
    return out;
  }

  /// |p(z)| / sum |a_k| |z|^k at the current iterate.
  double relative_residual(std::size_t i) const {
    Scratch w(prec_);
    evaluate(z_[i], w);
    if (mpfr_zero_p(w.ptilde.get())) return 0.0;
    mpfr_hypot(w.t1.get(), w.p.re.get(), w.p.im.get(), MPFR_RNDN);
    mpfr_div(w.t1.get(), w.t1.get(), w.ptilde.get(), MPFR_RNDN);
    return w.t1.to_double();
  }

  std::size_t degree() const { return n_; }

 private:
  // Horner for p, p' and the magnitude bound sum |a_k| |z|^k.
  void evaluate(const BigComplex& z, Scratch& w) const {
    mpfr_set(w.p.re.get(), a_[n_].get(), MPFR_RNDN);
    mpfr_set_zero(w.p.im.get(), 1);
    mpfr_set_zero(w.dp.re.get(), 1);
    mpfr_set_zero(w.dp.im.get(), 1);
    mpfr_set(w.ptilde.get(), abs_a_[n_].get(), MPFR_RNDN);
    mpfr_hypot(w.az.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    for (std::size_t k = n_; k-- > 0;) {
      cmul(w.dp, w.dp, z, w);
      mpfr_add(w.dp.re.get(), w.dp.re.get(), w.p.re.get(), MPFR_RNDN);
      mpfr_add(w.dp.im.get(), w.dp.im.get(), w.p.im.get(), MPFR_RNDN);
      cmul(w.p, w.p, z, w);
      mpfr_add(w.p.re.get(), w.p.re.get(), a_[k].get(), MPFR_RNDN);
      mpfr_mul(w.ptilde.get(), w.ptilde.get(), w.az.get(), MPFR_RNDN);
      mpfr_add(w.ptilde.get(), w.ptilde.get(), abs_a_[k].get(), MPFR_RNDN);
    }
  }

  // Computes next[i] for one root; returns true when the root is settled.
  bool update(std::size_t i, BigComplex& out, Scratch& w) const {
    const BigComplex& zi = z_[i];
    evaluate(zi, w);
    // Rounding-noise floor of the Horner evaluation at this precision.
    mpfr_hypot(w.t1.get(), w.p.re.get(), w.p.im.get(), MPFR_RNDN);
    mpfr_mul_ui(w.t2.get(), w.ptilde.get(), 8 * (n_ + 1), MPFR_RNDN);
    mpfr_div_2ui(w.t2.get(), w.t2.get(), static_cast<unsigned long>(prec_), MPFR_RNDN);
    if (mpfr_lessequal_p(w.t1.get(), w.t2.get())) {
      out = zi;
      return true;
    }
    // s = sum_{j != i} 1 / (z_i - z_j)
    mpfr_set_zero(w.s.re.get(), 1);
    mpfr_set_zero(w.s.im.get(), 1);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      mpfr_sub(w.t1.get(), zi.re.get(), z_[j].re.get(), MPFR_RNDN);
      mpfr_sub(w.t2.get(), zi.im.get(), z_[j].im.get(), MPFR_RNDN);
      mpfr_sqr(w.t3.get(), w.t1.get(), MPFR_RNDN);
      mpfr_sqr(w.t4.get(), w.t2.get(), MPFR_RNDN);
      mpfr_add(w.t3.get(), w.t3.get(), w.t4.get(), MPFR_RNDN);
      if (mpfr_zero_p(w.t3.get())) continue;
      mpfr_div(w.t1.get(), w.t1.get(), w.t3.get(), MPFR_RNDN);
      mpfr_div(w.t2.get(), w.t2.get(), w.t3.get(), MPFR_RNDN);
      mpfr_add(w.s.re.get(), w.s.re.get(), w.t1.get(), MPFR_RNDN);
      mpfr_sub(w.s.im.get(), w.s.im.get(), w.t2.get(), MPFR_RNDN);
    }
    // delta = p / (p' - p s)
    cmul(w.denom, w.p, w.s, w);
    mpfr_sub(w.denom.re.get(), w.dp.re.get(), w.denom.re.get(), MPFR_RNDN);
    mpfr_sub(w.denom.im.get(), w.dp.im.get(), w.denom.im.get(), MPFR_RNDN);
    if (mpfr_zero_p(w.denom.re.get()) && mpfr_zero_p(w.denom.im.get())) {
      out = zi;
      return false;
    }
    cdiv(w.delta, w.p, w.denom, w);
    mpfr_sub(out.re.get(), zi.re.get(), w.delta.re.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), zi.im.get(), w.delta.im.get(), MPFR_RNDN);
    mpfr_hypot(w.t1.get(), w.delta.re.get(), w.delta.im.get(), MPFR_RNDN);
    mpfr_add_ui(w.t2.get(), w.az.get(), 1, MPFR_RNDN);
    mpfr_div_2ui(w.t2.get(), w.t2.get(), static_cast<unsigned long>(prec_ - 4), MPFR_RNDN);
    return mpfr_lessequal_p(w.t1.get(), w.t2.get()) != 0;
  }

  void sweep(std::vector<char>& settled, std::vector<BigComplex>& next) {
    next_moved_.assign(n_, 0);
    const auto n = static_cast<long>(n_);
    if (options_.exec == Exec::parallel) {
#pragma omp parallel
      {
        Scratch w(prec_);
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < n; ++i) sweep_one(static_cast<std::size_t>(i), settled, next, w);
      }
    } else {
      Scratch w(prec_);
      for (long i = 0; i < n; ++i) sweep_one(static_cast<std::size_t>(i), settled, next, w);
    }
  }

  void sweep_one(std::size_t i, std::vector<char>& settled, std::vector<BigComplex>& next, Scratch& w) {
    if (settled[i]) return;
    settled[i] = update(i, next[i], w) ? 1 : 0;
    next_moved_[i] = 1;
  }

  std::vector<Rational> exact_;
  std::size_t n_;
  RootOptions options_;
  mpfr_prec_t prec_ = 64;
  std::vector<BigFloat> a_;
  std::vector<BigFloat> abs_a_;
  std::vector<BigComplex> z_;
  std::vector<char> next_moved_;
};

double max_relative_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]) / (1.0 + std::abs(b[i])));
  return worst;
}

void sort_roots(std::vector<std::complex<double>>& roots) {
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

}  // namespace

std::vector<std::complex<double>> all_roots_float(const QPoly& p, const RootOptions& options) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("root finding needs a polynomial of degree >= 1");
  // Exact zero roots first: no residual test can certify a float root at 0.
  std::size_t at_zero = 0;
  while (p.coeff(at_zero) == 0) ++at_zero;
  if (at_zero > 0) {
    std::vector<std::complex<double>> roots(at_zero);
    if (at_zero < p.degree()) {
      const auto rest = all_roots_float(
          QPoly(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(at_zero), p.coeffs().end())), options);
      roots.insert(roots.end(), rest.begin(), rest.end());
    }
    sort_roots(roots);
    return roots;
  }
  const std::size_t n = p.degree();
  // Recentre on the root centroid; roots sitting exactly there are split off.
  const Rational centroid = -p.coeff(n - 1) / (p.leading() * Rational(static_cast<long>(n)));
  const QPoly q = taylor_shift(p, centroid);
  std::size_t at_centroid = 0;
  while (q.coeff(at_centroid) == 0) ++at_centroid;
  const double c = to_double(centroid);
  std::vector<std::complex<double>> roots(at_centroid, std::complex<double>(c, 0.0));
  if (at_centroid == n) return roots;

  std::vector<Rational> reduced(q.coeffs().begin() + static_cast<long>(at_centroid), q.coeffs().end());
  if (reduced.size() == 2) {
    roots.emplace_back(to_double(centroid - reduced[0] / reduced[1]), 0.0);
    sort_roots(roots);
    return roots;
  }

  AberthSolver solver(reduced, options);
  solver.start(options.initial_bits, fujiwara_bound(reduced));
  std::optional<std::vector<std::complex<double>>> previous;
  std::vector<std::complex<double>> best;
  for (unsigned bits = options.initial_bits; bits <= options.max_bits; bits *= 2) {
    if (bits != options.initial_bits) solver.set_precision(bits);
    std::size_t used = 0;
    const LevelOutcome outcome = solver.run_level(used, bits * 2 <= options.max_bits);
    best = solver.current(centroid);
    if (outcome == LevelOutcome::budget_exhausted) {
      throw RootFindingError("root iteration did not converge within " + std::to_string(options.max_iterations) +
                                 " iterations at " + std::to_string(bits) + " bits",
                             best);
    }
    if (outcome == LevelOutcome::stalled) {
      previous.reset();
      continue;
    }
    if (previous && max_relative_distance(*previous, best) <= options.agreement_tolerance) {
      for (std::size_t i = 0; i < solver.degree(); ++i)
        if (solver.relative_residual(i) > options.residual_tolerance) {
          throw RootFindingError("root residual above tolerance", best);
        }
      roots.insert(roots.end(), best.begin(), best.end());
      sort_roots(roots);
      return roots;
    }
    previous = best;
  }
  throw RootFindingError("root precision ladder exhausted without agreement", best);
}

std::vector<std::complex<double>> all_roots_float(const FPoly& p, const RootOptions& options) {
  return all_roots_float(to_exact(p), options);
}

}  // namespace dsop
