#pragma once

// Exact field elements: residues modulo a prime p, or arbitrary-precision
// rationals when the characteristic is 0.

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace lie_ideal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// Characteristic of the base field: 0 (rationals) or a prime below 2^32.
class Characteristic {
public:
    static constexpr std::uint64_t max_prime = std::numeric_limits<std::uint32_t>::max();

    constexpr Characteristic() = default;

    explicit constexpr Characteristic(std::uint64_t value) : value_(value) {
        if (value == 0) return;
        if (value > max_prime)
            throw InvalidCharacteristic("characteristic " + std::to_string(value) +
                                        " exceeds the supported range (< 2^32)");
        if (!detail::is_prime(value))
            throw InvalidCharacteristic("characteristic " + std::to_string(value) +
                                        " is neither 0 nor prime");
    }

    constexpr std::uint64_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    constexpr bool operator==(const Characteristic&) const = default;

    friend std::ostream& operator<<(std::ostream& os, Characteristic c) {
        return os << c.value_;
    }

private:
    std::uint64_t value_ = 0;
};

/// An element of F_p or Q. Immutable in spirit: every operation returns a
/// freshly normalized value, residues live in [0, p), rationals are in
/// lowest terms with positive denominator.
class Scalar {
public:
    /// Zero of characteristic 0.
    Scalar() : value_(Rational(0)) {}

    /// The image of an integer in the field of characteristic `ch`.
    Scalar(Characteristic ch, long long n) : Scalar(ch, BigInt(n)) {}

    Scalar(Characteristic ch, const BigInt& n) : ch_(ch) {
        if (ch.is_zero()) {
            value_ = Rational(n);
        } else {
            BigInt r = n % ch.value();
            if (r < 0) r += ch.value();
            value_ = r.convert_to<std::uint64_t>();
        }
    }

    /// num/den in characteristic 0.
    static Scalar fraction(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ZeroDivision("zero denominator");
        Scalar s;
        // Boost 1.74's rational_adaptor rejects negative denominators.
        s.value_ = den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
        return s;
    }

    static Scalar zero(Characteristic ch) { return Scalar(ch, 0LL); }
    static Scalar one(Characteristic ch) { return Scalar(ch, 1LL); }

    Characteristic characteristic() const noexcept { return ch_; }

    bool is_zero() const {
        if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
        return std::get<Rational>(value_) == 0;
    }

    bool is_one() const {
        if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
        return std::get<Rational>(value_) == 1;
    }

    /// Residue in [0, p); only valid for prime characteristic.
    std::uint64_t residue() const {
        if (ch_.is_zero()) throw CharacteristicMismatch("residue() on a characteristic-0 scalar");
        return std::get<std::uint64_t>(value_);
    }

    /// Exact rational value; only valid for characteristic 0.
    const Rational& rational() const {
        if (!ch_.is_zero()) throw CharacteristicMismatch("rational() on a prime-field scalar");
        return std::get<Rational>(value_);
    }

    /// True when the value is negative as a rational. Residues are never negative.
    bool is_negative() const {
        if (ch_.is_zero()) return std::get<Rational>(value_) < 0;
        return false;
    }

    /// Re-applies the representation invariants; the identity on any valid Scalar.
    Scalar normalized() const {
        if (ch_.is_zero()) {
            const Rational& q = std::get<Rational>(value_);
            const BigInt num = boost::multiprecision::numerator(q);
            const BigInt den = boost::multiprecision::denominator(q);
            return fraction(num, den);
        }
        return Scalar(ch_, BigInt(std::get<std::uint64_t>(value_)));
    }

    Scalar inverse() const {
        if (is_zero()) throw ZeroDivision("inverse of zero");
        if (ch_.is_zero()) {
            const Rational& q = std::get<Rational>(value_);
            const BigInt num = boost::multiprecision::numerator(q);
            const BigInt den = boost::multiprecision::denominator(q);
            return fraction(den, num);
        }
        // Extended Euclid on (residue, p).
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(ch_.value());
        std::int64_t new_r = static_cast<std::int64_t>(residue());
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return Scalar(ch_, static_cast<long long>(t));
    }

    Scalar operator-() const {
        if (ch_.is_zero()) return from_rational(-std::get<Rational>(value_));
        std::uint64_t r = residue();
        return from_residue(ch_, r == 0 ? 0 : ch_.value() - r);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        if (a.ch_.is_zero()) return from_rational(a.rational() + b.rational());
        return from_residue(a.ch_, (a.residue() + b.residue()) % a.ch_.value());
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        if (a.ch_.is_zero()) return from_rational(a.rational() * b.rational());
        return from_residue(a.ch_, (a.residue() * b.residue()) % a.ch_.value());
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        return a * b.inverse();
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.ch_ == b.ch_ && a.value_ == b.value_;
    }

    /// "3" for residues; "5/6" or "-2" for rationals.
    std::string to_string() const {
        if (ch_.is_zero()) return std::get<Rational>(value_).str();
        return std::to_string(std::get<std::uint64_t>(value_));
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.to_string();
    }

private:
    static Scalar from_rational(Rational q) {
        Scalar s;
        s.value_ = std::move(q);
        return s;
    }

    static Scalar from_residue(Characteristic ch, std::uint64_t r) {
        Scalar s;
        s.ch_ = ch;
        s.value_ = r;
        return s;
    }

    static void check_same(const Scalar& a, const Scalar& b) {
        if (a.ch_ != b.ch_)
            throw CharacteristicMismatch("scalars of characteristic " + std::to_string(a.ch_.value()) +
                                         " and " + std::to_string(b.ch_.value()) + " cannot combine");
    }

    Characteristic ch_{};
    std::variant<std::uint64_t, Rational> value_;
};

}  // namespace lie_ideal
