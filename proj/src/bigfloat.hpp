#pragma once

// Minimal RAII handles over MPFR with an explicit per-value precision.

#include <mpfr.h>

#include <gmpxx.h>

namespace dsop::detail {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  /// Rounds (or extends) in place to a new precision.
  void set_precision(mpfr_prec_t prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }
  void set(const mpq_class& q) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  void set(double d) { mpfr_set_d(v_, d, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct BigComplex {
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigFloat re;
  BigFloat im;
};

}  // namespace dsop::detail
