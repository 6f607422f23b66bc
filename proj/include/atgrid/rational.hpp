#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "atgrid/eisenstein.hpp"
#include "atgrid/errors.hpp"

namespace atgrid {

/**
 * Exact rational with int64 storage and 128-bit intermediates. Always kept
 * reduced with a positive denominator; any result that does not fit back
 * into int64 throws std::overflow_error.
 */
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integral() const noexcept { return den_ == 1; }

    std::int64_t to_integer() const {
        if (den_ != 1)
            throw ExactnessError("rational " + std::to_string(num_) + "/" +
                                 std::to_string(den_) + " is not an integer");
        return num_;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return from_i128(static_cast<__int128>(x.num_) * y.den_ +
                             static_cast<__int128>(y.num_) * x.den_,
                         static_cast<__int128>(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return from_i128(static_cast<__int128>(x.num_) * y.den_ -
                             static_cast<__int128>(y.num_) * x.den_,
                         static_cast<__int128>(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from_i128(static_cast<__int128>(x.num_) * y.num_,
                         static_cast<__int128>(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw ExactnessError("rational division by zero");
        return from_i128(static_cast<__int128>(x.num_) * y.den_,
                         static_cast<__int128>(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }

    friend bool operator==(const Rational& x, const Rational& y) noexcept {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

  private:
    void assign(std::int64_t n, std::int64_t d) {
        *this = from_i128(n, d);
    }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw ExactnessError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
            throw std::overflow_error("rational component exceeds int64");
        return static_cast<std::int64_t>(v);
    }

    std::int64_t num_;
    std::int64_t den_;
};

/**
 * Element of Q(w) kept as an Eisenstein numerator over a positive rational
 * integer denominator, content-reduced. Division by a nonzero Eisenstein
 * integer multiplies by its conjugate and divides by its (integer) norm, so
 * quotients stay in this shape exactly.
 */
class EisensteinFrac {
  public:
    EisensteinFrac() : num_(0, 0), den_(1) {}
    EisensteinFrac(const EisensteinInt& x) : num_(x), den_(1) {}  // NOLINT: implicit by design
    EisensteinFrac(const EisensteinInt& num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw ExactnessError("Eisenstein fraction with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    const EisensteinInt& num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integral() const noexcept { return den_ == 1; }

    EisensteinInt to_eisenstein() const {
        if (den_ != 1)
            throw ExactnessError("Eisenstein fraction " + num_.to_string() + "/" +
                                 std::to_string(den_) + " is not integral");
        return num_;
    }

    friend EisensteinFrac operator+(const EisensteinFrac& x, const EisensteinFrac& y) {
        const std::int64_t g = std::gcd(x.den_, y.den_);
        const std::int64_t xs = y.den_ / g;
        const std::int64_t ys = x.den_ / g;
        const EisensteinInt num = x.num_ * EisensteinInt(xs, 0) + y.num_ * EisensteinInt(ys, 0);
        return {num, checked_mul(x.den_, xs)};
    }

    friend EisensteinFrac operator*(const EisensteinFrac& x, const EisensteinInt& y) {
        return {x.num_ * y, x.den_};
    }

    // x / y for Eisenstein y != 0.
    friend EisensteinFrac operator/(const EisensteinFrac& x, const EisensteinInt& y) {
        if (y.is_zero()) throw ExactnessError("division by zero in Q(w)");
        return {x.num_ * y.conj(), checked_mul(x.den_, y.norm())};
    }

    EisensteinFrac& operator+=(const EisensteinFrac& y) { return *this = *this + y; }

    friend bool operator==(const EisensteinFrac& x, const EisensteinFrac& y) noexcept {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

  private:
    void reduce() {
        const std::int64_t ca = num_.a() < 0 ? -num_.a() : num_.a();
        const std::int64_t cb = num_.b() < 0 ? -num_.b() : num_.b();
        const std::int64_t g = std::gcd(std::gcd(ca, cb), den_);
        if (g > 1) {
            num_ = EisensteinInt(num_.a() / g, num_.b() / g);
            den_ /= g;
        }
        if (num_.is_zero()) den_ = 1;
    }

    EisensteinInt num_;
    std::int64_t den_;
};

}  // namespace atgrid
