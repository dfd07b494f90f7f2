#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "translie/errors.hpp"

namespace translie {

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Accepts [+-]digits[/digits]; the result is canonical.
inline mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

inline std::string rational_string(const mpq_class& q) {
  // mpq_class::get_str prints "n" or "n/d" for canonical values.
  return q.get_str();
}

}  // namespace detail

/// Exact Gaussian rational re + im*i. Both parts are kept canonical, so
/// structural equality is mathematical equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    re_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    re_.canonicalize();
  }
  explicit Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.is_real()) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) {
    Scalar r;
    r.re_ = -a.re_;
    r.im_ = -a.im_;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Formats as "3/4", "-2i", "1/2+5i", "-1-i".
  std::string to_string() const {
    if (sgn(im_) == 0) return detail::rational_string(re_);
    std::string imag;
    if (im_ == 1)
      imag = "i";
    else if (im_ == -1)
      imag = "-i";
    else
      imag = detail::rational_string(im_) + "i";
    if (sgn(re_) == 0) return imag;
    std::string out = detail::rational_string(re_);
    if (imag.front() != '-') out += '+';
    return out + imag;
  }

  /// Inverse of to_string; also accepts a leading '+' and whitespace-free
  /// forms like "i", "+i", "2/3-4i".
  static Scalar parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return Scalar(detail::parse_rational(text));
    std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if (body[i] == '+' || body[i] == '-') {
        split = i;
        break;
      }
    }
    std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
    mpq_class im;
    if (imag_part.empty() || imag_part == "+")
      im = 1;
    else if (imag_part == "-")
      im = -1;
    else
      im = detail::parse_rational(imag_part);
    mpq_class re = real_part.empty() ? mpq_class(0) : detail::parse_rational(real_part);
    return Scalar(std::move(re), std::move(im));
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace translie
