#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tabula {

/// Error type for all domain-level failures. The message is the contract:
/// callers (and the CLI) match on it, so messages stay short and stable.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction. Always stored in lowest terms with a positive
/// denominator; the canonical zero is 0/1. All table arithmetic is exact,
/// so there is no floating-point constructor.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Canonical text: integers without "/1" ("2", "-3", "0"),
    /// everything else as "p/q" with q > 1.
    std::string str() const;

    /// Explicit fraction text, always "p/q" (so 1 renders "1/1").
    /// This is how the historical figures print unit fractions.
    std::string fraction_str() const;

    /// Parse "p", "p/q" or "-p/q"; normalizes to canonical form.
    /// Throws Error("division by zero") on a zero denominator and
    /// Error("bad rational ...") on anything else.
    static Rational parse(std::string_view text);

    /// True iff `text` is exactly the canonical rendering of some rational,
    /// i.e. parse() followed by str() reproduces it byte for byte.
    static bool is_canonical_text(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0
};

/// Factory matching the library-wide error contract.
inline Rational make_rational(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

}  // namespace tabula
