#include "minlink/rational.hpp"

#include <stdexcept>

namespace minlink {

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(to_mpz(num), mpz_class(1));
    }
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class d = to_mpz(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(to_mpz(num), d);
}

std::string Rational::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace minlink
