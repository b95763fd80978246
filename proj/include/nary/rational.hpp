#pragma once

#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nary {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills to a heap-allocated GMP rational. The spill is
/// canonical: a value is big only if it cannot be represented inline, so
/// equality never needs to compare across representations.
class Rational {
public:
  Rational() noexcept : num_(0), den_(1) {}

  template <std::integral I>
  Rational(I value) : num_(static_cast<std::int64_t>(value)), den_(1) {
    static_assert(sizeof(I) <= sizeof(std::int64_t));
    if constexpr (std::is_unsigned_v<I> && sizeof(I) == sizeof(std::int64_t)) {
      if (value > static_cast<I>(INT64_MAX)) {
        num_ = 0;
        assign_big(mpq_class(mpz_class(std::to_string(value))));
      }
    }
  }

  /// Throws std::domain_error on a zero denominator.
  Rational(std::int64_t numerator, std::int64_t denominator);

  explicit Rational(const mpq_class& value) : num_(0), den_(1) { assign_big(value); }

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.is_big()) num_ = from_ptr(new mpq_class(*other.big()));
  }
  Rational(Rational&& other) noexcept : num_(other.num_), den_(other.den_) {
    other.num_ = 0;
    other.den_ = 1;
  }
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      Rational tmp(other);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    if (this != &other) {
      release();
      num_ = other.num_;
      den_ = other.den_;
      other.num_ = 0;
      other.den_ = 1;
    }
    return *this;
  }
  ~Rational() { release(); }

  void swap(Rational& other) noexcept {
    std::swap(num_, other.num_);
    std::swap(den_, other.den_);
  }

  /// Parses "p" or "p/q". Only canonical literals are accepted: no sign on q,
  /// no leading zeros, lowest terms. Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_big() const noexcept { return den_ == 0; }

  /// Inline numerator/denominator; only meaningful when !is_big().
  [[nodiscard]] std::int64_t small_numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t small_denominator() const noexcept { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  /// this += a * b without an intermediate temporary on the inline path.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.is_big() && !b.is_big()) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.is_big() != b.is_big()) return false;
    return *a.big() == *b.big();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// True iff a + b == 0, without allocating on the inline path.
  friend bool sums_to_zero(const Rational& a, const Rational& b);

private:
  static std::int64_t from_ptr(mpq_class* p) noexcept { return std::bit_cast<std::int64_t>(p); }
  [[nodiscard]] mpq_class* big() const noexcept { return std::bit_cast<mpq_class*>(num_); }

  void release() noexcept {
    if (is_big()) {
      delete big();
      num_ = 0;
      den_ = 1;
    }
  }
  void assign_big(mpq_class value);
  void add_slow(const Rational& rhs);
  void mul_slow(const Rational& rhs);

  // Inline: num_/den_ with den_ > 0. Big: den_ == 0 and num_ holds the
  // bit pattern of an owning mpq_class pointer.
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Integer fast paths; everything else goes through the out-of-line slow path.

inline Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t sum;
    if (!__builtin_add_overflow(num_, rhs.num_, &sum)) {
      num_ = sum;
      return *this;
    }
  }
  add_slow(rhs);
  return *this;
}

inline Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Rational();
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t prod;
    if (!__builtin_mul_overflow(num_, rhs.num_, &prod)) {
      num_ = prod;
      return *this;
    }
  }
  mul_slow(rhs);
  return *this;
}

inline void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t prod, sum;
    if (!__builtin_mul_overflow(a.num_, b.num_, &prod) &&
        !__builtin_add_overflow(num_, prod, &sum)) {
      num_ = sum;
      return;
    }
  }
  *this += a * b;
}

inline bool sums_to_zero(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big()) {
    return a.den_ == b.den_ && a.num_ != INT64_MIN && a.num_ == -b.num_;
  }
  return (a + b).is_zero();
}

}  // namespace nary
