#include "nary/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace nary {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= UINT64_MAX && b <= UINT64_MAX) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

mpz_class mpz_from_i128(i128 v) {
  const bool negative = v < 0;
  u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) : num_(0), den_(1) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(static_cast<u128>(n < 0 ? -n : n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits64(n) && fits64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
  }
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  release();
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
  } else {
    num_ = from_ptr(new mpq_class(std::move(value)));
    den_ = 0;
  }
}

mpq_class Rational::to_mpq() const {
  if (is_big()) return *big();
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

void Rational::add_slow(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    u128 g = gcd128(static_cast<u128>(n < 0 ? -n : n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      if (num_ == 0) den_ = 1;
      return;
    }
    assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
    return;
  }
  assign_big(to_mpq() + rhs.to_mpq());
}

void Rational::mul_slow(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    i128 n = static_cast<i128>(num_) * rhs.num_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    u128 g = gcd128(static_cast<u128>(n < 0 ? -n : n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return;
    }
    assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
    return;
  }
  assign_big(to_mpq() * rhs.to_mpq());
}

Rational Rational::operator-() const {
  if (!is_big() && num_ != INT64_MIN) {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!rhs.is_big() && rhs.num_ != INT64_MIN) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool Rational::is_integer() const {
  if (!is_big()) return den_ == 1;
  return big()->get_den() == 1;
}

int Rational::sign() const {
  if (!is_big()) return (num_ > 0) - (num_ < 0);
  return sgn(*big());
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big()) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::string Rational::to_string() const {
  if (is_big()) return big()->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&](const char* why) {
    return std::invalid_argument("invalid rational literal '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) throw bad("missing numerator digits");
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad("unexpected character");
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) throw bad("malformed denominator");
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw bad("unparsable");
  if (q.get_den() == 0) throw bad("zero denominator");
  Rational out(q);
  if (out.to_string() != text) throw bad("not in canonical reduced form");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace nary
