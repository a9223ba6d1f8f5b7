#include "tabula/rational.hpp"

#include <cctype>
#include <ostream>

namespace tabula {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw Error("division by zero");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::string Rational::fraction_str() const {
    return num_.str() + "/" + den_.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    bool negative = !num_part.empty() && num_part.front() == '-';
    std::string_view digits = negative ? num_part.substr(1) : num_part;
    if (!all_digits(digits) || (!den_part.empty() && !all_digits(den_part)) ||
        (den_part.empty() && text.find('/') != std::string_view::npos)) {
        throw Error("bad rational \"" + std::string(text) + "\"");
    }
    BigInt num(std::string(num_part));
    BigInt den = den_part.empty() ? BigInt(1) : BigInt(std::string(den_part));
    return Rational(std::move(num), std::move(den));
}

bool Rational::is_canonical_text(std::string_view text) {
    try {
        return Rational::parse(text).str() == text;
    } catch (const Error&) {
        return false;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw Error("division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tabula
