#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "atgrid/checked.hpp"

namespace atgrid {

enum class RealityClass { zero, real, purely_imaginary, generic };

/**
 * EisensteinInt: exact elements a + b*w of the ring Z[w], where w is the
 * primitive cube root of unity with w^2 = -w - 1.
 *
 * The basis is always {1, w}. Components are overflow-checked 64-bit
 * integers; arithmetic throws std::overflow_error instead of wrapping.
 */
class EisensteinInt {
  public:
    constexpr EisensteinInt() noexcept : a_(0), b_(0) {}
    constexpr EisensteinInt(std::int64_t a, std::int64_t b) noexcept : a_(a), b_(b) {}

    static constexpr EisensteinInt zero() noexcept { return {0, 0}; }
    static constexpr EisensteinInt one() noexcept { return {1, 0}; }
    static constexpr EisensteinInt omega() noexcept { return {0, 1}; }

    // w^(j mod 3); j may be negative.
    static EisensteinInt unit_root(std::int64_t j) noexcept {
        switch (((j % 3) + 3) % 3) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            default: return {-1, -1};
        }
    }

    constexpr std::int64_t a() const noexcept { return a_; }
    constexpr std::int64_t b() const noexcept { return b_; }

    constexpr bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
        return {checked_add(x.a_, y.a_), checked_add(x.b_, y.b_)};
    }

    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
        return {checked_sub(x.a_, y.a_), checked_sub(x.b_, y.b_)};
    }

    EisensteinInt operator-() const { return {checked_neg(a_), checked_neg(b_)}; }

    // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w:
    //   real part a1 a2 - b1 b2, w part a1 b2 + b1 a2 - b1 b2.
    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
        const std::int64_t bb = checked_mul(x.b_, y.b_);
        const std::int64_t ra = checked_sub(checked_mul(x.a_, y.a_), bb);
        const std::int64_t rb =
            checked_sub(checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.a_)), bb);
        return {ra, rb};
    }

    EisensteinInt& operator+=(const EisensteinInt& y) { return *this = *this + y; }
    EisensteinInt& operator-=(const EisensteinInt& y) { return *this = *this - y; }
    EisensteinInt& operator*=(const EisensteinInt& y) { return *this = *this * y; }

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const EisensteinInt& x, const EisensteinInt& y) noexcept {
        return !(x == y);
    }

    // Complex conjugate: conj(a + b w) = a + b w^2 = (a - b) - b w.
    EisensteinInt conj() const { return {checked_sub(a_, b_), checked_neg(b_)}; }

    // x * conj(x) = a^2 - a b + b^2, a nonnegative rational integer.
    std::int64_t norm() const {
        return checked_add(checked_sub(checked_mul(a_, a_), checked_mul(a_, b_)),
                           checked_mul(b_, b_));
    }

    RealityClass reality_class() const noexcept {
        if (a_ == 0 && b_ == 0) return RealityClass::zero;
        if (b_ == 0) return RealityClass::real;
        if (2 * a_ == b_) return RealityClass::purely_imaginary;
        return RealityClass::generic;
    }

    bool is_real() const noexcept { return b_ == 0; }

    // Floating embedding (a - b/2, b*sqrt(3)/2). Diagnostics only; never
    // feeds an exact decision.
    std::pair<double, double> embed_complex() const noexcept;

    // Exact quotient in Z[w]; throws ExactnessError when y does not divide x.
    static EisensteinInt div_exact(const EisensteinInt& x, const EisensteinInt& y);

    std::string to_string() const;
    static EisensteinInt parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

  private:
    std::int64_t a_;
    std::int64_t b_;
};

}  // namespace atgrid
