#include "antisym/real.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace antisym::hp {
namespace {

thread_local int t_digits = kDefaultDigits;

mpfr_prec_t bits_for(int digits) {
  // 3.3219... bits per decimal digit plus guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

mpfr_prec_t working_bits() { return bits_for(t_digits); }

}  // namespace

int working_digits() noexcept { return t_digits; }

void check_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw std::invalid_argument("precision must be between " + std::to_string(kMinDigits) +
                                " and " + std::to_string(kMaxDigits) + " decimal digits, got " +
                                std::to_string(digits));
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(t_digits) {
  if (digits == kInherit) return;
  check_digits(digits);
  t_digits = digits;
}

PrecisionGuard::~PrecisionGuard() { t_digits = saved_; }

Real::Real() {
  mpfr_init2(v_, working_bits());
  mpfr_set_zero(v_, 1);
}

Real::Real(double v) : Real() { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const mpz_class& v) : Real() { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const mpq_class& v) : Real() { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }

Real::Real(std::string_view decimal) : Real() {
  const std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size())
    throw std::invalid_argument("not a decimal number: '" + s + "'");
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {

// Re-rounds the left operand to the working precision before a binary op so
// results never silently carry a lower precision than requested.
void widen(mpfr_ptr v) {
  const mpfr_prec_t want = working_bits();
  if (mpfr_get_prec(v) < want) mpfr_prec_round(v, want, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::str(int significant) const {
  char* buf = nullptr;
  const int n = mpfr_asprintf(&buf, "%#.*Rg", significant, v_);
  if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf, static_cast<std::size_t>(n));
  mpfr_free_str(buf);
  // %#g keeps a trailing '.' for integral values with no fractional digits.
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real e() {
  Real r(1);
  mpfr_exp(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real root(const Real& x, unsigned long k) {
  if (x.sign() < 0) throw std::domain_error("root of a negative number");
  Real r;
#if MPFR_VERSION >= MPFR_VERSION_NUM(4, 0, 0)
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
#else
  mpfr_root(r.get(), x.get(), k, MPFR_RNDN);
#endif
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r;
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r;
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real lgamma(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("lgamma requires a positive argument");
  Real r;
  mpfr_lngamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real gamma(const Real& x) {
  Real r;
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real relative_difference(const Real& a, const Real& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

}  // namespace antisym::hp
