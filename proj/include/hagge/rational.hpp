#ifndef HAGGE_RATIONAL_HPP
#define HAGGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "hagge/error.hpp"

namespace hagge {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the backing type canonicalizes on every operation).
class Rat {
public:
    Rat() = default;
    Rat(long long n) : v_(n) {}  // NOLINT: implicit by design
    explicit Rat(Int n) : v_(std::move(n)) {}
    Rat(const Int& num, const Int& den);

    // Parses "num", "num/den" or "-num/den". Throws InputError otherwise.
    static Rat parse(std::string_view text);

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // "5/6", "-7" — compact form for diagnostics.
    std::string str() const { return v_.str(); }
    // "5/6", "-7/1" — denominator always present, used in JSON output.
    std::string json_str() const;

    double to_double() const { return v_.convert_to<double>(); }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rat::Rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw DivideByZeroError(num.str() + " / 0");
    // The backing constructor insists on canonical input, so reduce here.
    Int g = boost::multiprecision::gcd(num, den);
    Int n = num / g;
    Int d = den / g;
    if (d.sign() < 0) { n = -n; d = -d; }
    v_ = boost::multiprecision::cpp_rational(n, d);
}

inline Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

inline Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivideByZeroError(str() + " / " + o.str());
    v_ /= o.v_;
    return *this;
}

inline std::string Rat::json_str() const {
    return numerator().str() + "/" + denominator().str();
}

inline Rat Rat::parse(std::string_view text) {
    auto bad = [&] { throw InputError("not a rational: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) -> Int {
        if (s.empty()) bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') bad();
        return Int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den.is_zero()) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

// gcd of absolute values; gcd(0, 0) = 0.
inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace hagge

#endif
