#include "kpath/rational.hpp"

#include <limits>
#include <stdexcept>

#include "kpath/error.hpp"

namespace kpath {

namespace {

using i128 = detail::int128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kSmallMax = std::numeric_limits<long long>::max();

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 value) {
  const bool negative = value < 0;
  u128 magnitude = negative ? static_cast<u128>(-(value + 1)) + 1 : static_cast<u128>(value);
  mpz_class result(static_cast<unsigned long>(magnitude >> 64));
  result <<= 64;
  result += mpz_class(static_cast<unsigned long>(magnitude & ~std::uint64_t{0}));
  return negative ? mpz_class(-result) : result;
}

bool fits_small(const mpz_class& z) {
  return z.fits_slong_p() && z != mpz_class(std::numeric_limits<long>::min());
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  reduce_small(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  assign_big(std::move(copy));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::reduce_small(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
    big_.reset();
    return;
  }
  assign_big(mpq_class(to_mpz(num), to_mpz(den)));
}

void Rational::assign_big(mpq_class value) {
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty rational");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool digits = false, slash = false, den_digits = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digits || (slash && !den_digits)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  std::string body(text[0] == '+' ? text.substr(1) : text);
  mpq_class value(body, 10);
  if (value.get_den() == 0) throw InvalidInput("rational with zero denominator");
  return Rational(value);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    reduce_small(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                 static_cast<i128>(den_) * rhs.den_);
  } else {
    assign_big(to_mpq() + rhs.to_mpq());
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    reduce_small(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                 static_cast<i128>(den_) * rhs.den_);
  } else {
    assign_big(to_mpq() - rhs.to_mpq());
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    reduce_small(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  } else {
    assign_big(to_mpq() * rhs.to_mpq());
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !rhs.big_) {
    reduce_small(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  } else {
    assign_big(to_mpq() / rhs.to_mpq());
  }
  return *this;
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpz_class Rational::floor() const {
  if (!big_) {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return mpz_class(static_cast<long>(q));
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.str(); }

}  // namespace kpath
