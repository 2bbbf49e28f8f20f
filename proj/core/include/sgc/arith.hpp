#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgc {

using Int = std::int64_t;

// Checked 64-bit helpers; throw ArithmeticOverflow instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b) noexcept;
Int lcm(Int a, Int b);

// Floor division and non-negative remainder for a positive modulus.
Int floor_div(Int a, Int b);
Int mod_rem(Int x, Int k);
Int circ_dist(Int x, Int k);

// Multiplicative inverse of `a` modulo `k`; requires gcd(a, k) = 1.
Int mod_inverse(Int a, Int k);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Ordering uses 128-bit cross multiplication.
class Ratio {
public:
    constexpr Ratio() noexcept = default;
    Ratio(Int value) noexcept : num_(value) {} // NOLINT: implicit on purpose
    Ratio(Int num, Int den);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    Int floor() const;

    Ratio operator-() const;
    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b);
    Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
    Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
    Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
    Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

    friend bool operator==(const Ratio& a, const Ratio& b) noexcept = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

    // "num/den", always with the denominator (e.g. "5/1").
    std::string to_string() const;
    // Integers print bare ("5"), everything else as "num/den".
    std::string to_pretty() const;
    // Accepts "num/den" or a bare integer; reduces.
    static Ratio parse(std::string_view text);

private:
    static Ratio raw(std::pair<Int, Int> nd) noexcept;

    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

// [x]_r: the representative of x modulo r in [0, r).
Ratio mod_rem(const Ratio& x, const Ratio& r);
// |x|_r = min([x]_r, [-x]_r).
Ratio circ_dist(const Ratio& x, const Ratio& r);

// {[x + i d]_k : 0 <= i < k}, ascending.
std::vector<Int> residue_orbit(Int x, Int d, Int k);

/// A point of the circle of circumference `modulus`, stored in [0, modulus).
class CircPoint {
public:
    CircPoint(const Ratio& value, const Ratio& modulus);

    const Ratio& value() const noexcept { return value_; }
    const Ratio& modulus() const noexcept { return modulus_; }

    // The antipodal-under-negation point r - a.
    CircPoint inverse() const { return CircPoint(-value_, modulus_); }
    Ratio distance(const CircPoint& o) const { return circ_dist(value_ - o.value_, modulus_); }

    friend bool operator==(const CircPoint&, const CircPoint&) = default;

private:
    Ratio value_;
    Ratio modulus_;
};

} // namespace sgc
