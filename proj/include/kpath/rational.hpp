#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kpath {

namespace detail {
__extension__ typedef __int128 int128;
}

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits stay inline and use
/// 128-bit intermediates; anything larger moves to a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) {  // NOLINT(google-explicit-constructor)
    if (value == std::numeric_limits<long long>::min()) {
      reduce_small(value, 1);
    } else {
      num_ = value;
    }
  }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Accepts "p" or "p/q" with optional sign.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  /// Floor, for integral checks and rounding in reports.
  mpz_class floor() const;
  mpq_class to_mpq() const;
  double to_double() const;
  /// "p" for integers, otherwise "p/q".
  std::string str() const;

 private:
  void reduce_small(detail::int128 num, detail::int128 den);
  void assign_big(mpq_class value);

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;  // engaged only when the value does not fit inline
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

}  // namespace kpath
