#include "gwloc/rational.hpp"

#include <cctype>
#include <ostream>

namespace gwloc {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return mpz_class(s, 10);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_.get_num() = num;
    v_.get_den() = den;
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(num, parse_integer(den_text, text));
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num, den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), e);
    Rational out;
    out.v_.get_num() = num;
    out.v_.get_den() = den;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace gwloc
