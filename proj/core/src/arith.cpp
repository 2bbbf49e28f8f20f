#include "sgc/arith.hpp"

#include "sgc/errors.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <tuple>
#include <utility>

namespace sgc {

namespace {

__extension__ using Wide = __int128;

Int narrow(Wide v, const char* what)
{
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw ArithmeticOverflow(std::string("64-bit overflow in ") + what);
    return static_cast<Int>(v);
}

Wide wide_gcd(Wide a, Wide b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::pair<Int, Int> reduce(Wide num, Wide den, const char* what)
{
    if (den == 0) throw Error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {narrow(num, what), narrow(den, what)};
}

Int parse_int(std::string_view s)
{
    Int v = 0;
    auto first = s.data();
    auto last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw Error("malformed integer '" + std::string(s) + "'");
    return v;
}

} // namespace

Int checked_add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("64-bit overflow in add");
    return out;
}

Int checked_sub(Int a, Int b)
{
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("64-bit overflow in sub");
    return out;
}

Int checked_mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("64-bit overflow in mul");
    return out;
}

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0) return 0;
    Int g = std::gcd(a, b);
    Int r = checked_mul(a / g, b);
    return r < 0 ? -r : r;
}

Int floor_div(Int a, Int b)
{
    if (b == 0) throw Error("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_rem(Int x, Int k)
{
    if (k <= 0) throw InvalidModulus("modulus must be positive, got " + std::to_string(k));
    Int r = x % k;
    return r < 0 ? r + k : r;
}

Int circ_dist(Int x, Int k)
{
    Int a = mod_rem(x, k);
    Int b = k - a;
    return a == 0 ? 0 : (a < b ? a : b);
}

Int mod_inverse(Int a, Int k)
{
    if (k <= 0) throw InvalidModulus("modulus must be positive, got " + std::to_string(k));
    // extended Euclid on (a mod k, k)
    Int old_r = mod_rem(a, k), r = k;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1 && k != 1) throw Error("no inverse of " + std::to_string(a) + " modulo " + std::to_string(k));
    return mod_rem(old_s, k);
}

Ratio::Ratio(Int num, Int den)
{
    std::tie(num_, den_) = reduce(num, den, "Ratio");
}

Ratio Ratio::raw(std::pair<Int, Int> nd) noexcept
{
    Ratio r;
    r.num_ = nd.first;
    r.den_ = nd.second;
    return r;
}

Int Ratio::floor() const { return floor_div(num_, den_); }

Ratio Ratio::operator-() const { return Ratio::raw(reduce(-Wide(num_), den_, "negate")); }

Ratio operator+(const Ratio& a, const Ratio& b)
{
    return Ratio::raw(reduce(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_, "add"));
}

Ratio operator-(const Ratio& a, const Ratio& b)
{
    return Ratio::raw(reduce(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_, "sub"));
}

Ratio operator*(const Ratio& a, const Ratio& b)
{
    return Ratio::raw(reduce(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_, "mul"));
}

Ratio operator/(const Ratio& a, const Ratio& b)
{
    if (b.num_ == 0) throw Error("division by zero");
    return Ratio::raw(reduce(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_, "div"));
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept
{
    return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::string Ratio::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Ratio::to_pretty() const { return den_ == 1 ? std::to_string(num_) : to_string(); }

Ratio Ratio::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Ratio(parse_int(text));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Ratio(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

Ratio mod_rem(const Ratio& x, const Ratio& r)
{
    if (r <= Ratio(0)) throw InvalidModulus("modulus must be positive, got " + r.to_string());
    Int q = (x / r).floor();
    return x - Ratio(q) * r;
}

Ratio circ_dist(const Ratio& x, const Ratio& r)
{
    Ratio a = mod_rem(x, r);
    Ratio b = mod_rem(-x, r);
    return a < b ? a : b;
}

std::vector<Int> residue_orbit(Int x, Int d, Int k)
{
    if (k <= 0) throw InvalidModulus("modulus must be positive, got " + std::to_string(k));
    std::vector<char> hit(static_cast<std::size_t>(k), 0);
    Int step = mod_rem(d, k);
    Int cur = mod_rem(x, k);
    for (Int i = 0; i < k; ++i) {
        hit[static_cast<std::size_t>(cur)] = 1;
        cur += step;
        if (cur >= k) cur -= k;
    }
    std::vector<Int> out;
    for (Int c = 0; c < k; ++c)
        if (hit[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

CircPoint::CircPoint(const Ratio& value, const Ratio& modulus)
    : value_(mod_rem(value, modulus)), modulus_(modulus)
{
}

} // namespace sgc
