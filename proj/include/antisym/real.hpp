#pragma once

// Thin RAII wrapper over MPFR with a per-thread working precision.
//
// Every value created while a PrecisionGuard is alive is allocated at the
// guard's precision; results of arithmetic take the current working precision
// of the calling thread. Worker threads start at kDefaultDigits.

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace antisym::hp {

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 10;
inline constexpr int kMaxDigits = 10000;

/// Sentinel for "use the calling thread's working precision".
inline constexpr int kInherit = 0;

int working_digits() noexcept;

/// Throws std::invalid_argument when digits is outside [kMinDigits, kMaxDigits].
void check_digits(int digits);

class PrecisionGuard {
 public:
  /// kInherit leaves the current precision untouched.
  explicit PrecisionGuard(int digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  int saved_;
};

class Real {
 public:
  Real();
  template <std::integral I>
  Real(I v) : Real() {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  Real(double v);  // NOLINT(google-explicit-constructor)
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  /// Parses a decimal string; throws std::invalid_argument on malformed input.
  explicit Real(std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] long precision_bits() const { return static_cast<long>(mpfr_get_prec(v_)); }

  /// %g-style rendering with exactly `significant` significant digits
  /// (trailing zeros kept), e.g. str(17) of 0.5 is "0.50000000000000000".
  [[nodiscard]] std::string str(int significant = 17) const;

  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Real pi();
Real e();
Real abs(const Real& x);
Real sqrt(const Real& x);
/// Real k-th root; x must be nonnegative.
Real root(const Real& x, unsigned long k);
Real pow(const Real& x, const Real& y);
Real exp(const Real& x);
Real log(const Real& x);
/// log Γ(x) for x > 0.
Real lgamma(const Real& x);
Real gamma(const Real& x);
Real max(const Real& a, const Real& b);

/// |a - b| / max(|a|, |b|), or 0 when both are zero.
Real relative_difference(const Real& a, const Real& b);

}  // namespace antisym::hp
