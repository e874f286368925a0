#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwloc {

/// Exact rational number backed by GMP.
///
/// Every value is kept in lowest terms with a positive denominator; all
/// constructors canonicalize and GMP arithmetic preserves canonical form.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : v_(static_cast<long>(value)) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& value) : v_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "a", "-a" or "a/b" with decimal digits; throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    /// "num" when integral, otherwise "num/den".
    std::string to_string() const;

    Rational inverse() const;
    /// Integer power; negative exponents invert (zero base throws).
    Rational pow(std::int64_t exponent) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_{0};
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace gwloc
