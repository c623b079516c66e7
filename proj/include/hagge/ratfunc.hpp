#ifndef HAGGE_RATFUNC_HPP
#define HAGGE_RATFUNC_HPP

#include <span>
#include <string>
#include <utility>

#include "hagge/error.hpp"
#include "hagge/polynomial.hpp"

namespace hagge {

// Rational function in the six indeterminates: a reduced fraction of integer
// polynomials whose denominator has a positive leading coefficient. Equality
// of canonical forms is exact equality in the field.
class RatFunc {
public:
    RatFunc() : den_(Poly::from_int(1)) {}
    RatFunc(long long n) : num_(Poly::from_int(n)), den_(Poly::from_int(1)) {}  // NOLINT: implicit by design
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::from_int(1)) {}
    RatFunc(Poly num, Poly den) { assign_reduced(std::move(num), std::move(den)); }

    static RatFunc variable(int index) { return RatFunc(Poly::variable(index)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Cross-reduce before multiplying to keep the gcds small.
        Poly g1 = Poly::gcd(a.num_, b.den_);
        Poly g2 = Poly::gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = (g1.is_one() ? a.num_ : a.num_.divexact(g1)) *
                 (g2.is_one() ? b.num_ : b.num_.divexact(g2));
        r.den_ = (g2.is_one() ? a.den_ : a.den_.divexact(g2)) *
                 (g1.is_one() ? b.den_ : b.den_.divexact(g1));
        r.normalize_sign();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivideByZeroError("(" + a.str() + ") / (" + b.str() + ")");
        RatFunc inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.normalize_sign();
        return a * inv;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rat evaluate(std::span<const Rat> values) const {
        Rat d = den_.evaluate(values);
        if (d.is_zero()) throw DivideByZeroError("(" + str() + ") at a zero of the denominator");
        return num_.evaluate(values) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void assign_reduced(Poly num, Poly den) {
        if (den.is_zero()) throw DivideByZeroError("(" + num.str() + ") / 0");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly::from_int(1);
            return;
        }
        if (!den.is_one()) {
            Poly g = Poly::gcd(num, den);
            if (!g.is_one()) {
                num = num.divexact(g);
                den = den.divexact(g);
            }
        }
        num_ = std::move(num);
        den_ = std::move(den);
        normalize_sign();
    }

    void normalize_sign() {
        if (!den_.is_zero() && den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Poly num_;
    Poly den_{Poly::from_int(1)};
};

}  // namespace hagge

#endif
