#include "axbsolve/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace axbsolve {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");

    // mpz_class rejects a leading '+'.
    const std::string num_str = num.front() == '+' ? std::string(digits) : std::string(num);
    const mpz_class n(num_str, 10);
    const mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

void add_product(Rational& acc, const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    acc.value_ += tmp;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace axbsolve
