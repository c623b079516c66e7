#ifndef HAGGE_SCALAR_HPP
#define HAGGE_SCALAR_HPP

#include <array>
#include <string>

#include "hagge/ratfunc.hpp"
#include "hagge/rational.hpp"

namespace hagge {

// The geometry is written once over an exact field K. Two realizations:
// Rat (numeric instances) and RatFunc (symbolic proof over the function
// field). The trait also owns triple canonicalization, the one place where
// the two need different strategies to stay small.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static constexpr const char* kRealization = "rational";
    static constexpr bool kOrdered = true;

    static Rat zero() { return 0; }
    static Rat one() { return 1; }
    static Rat from_int(long long n) { return n; }
    static bool is_zero(const Rat& x) { return x.is_zero(); }
    static int sign(const Rat& x) { return x.sign(); }
    static std::string str(const Rat& x) { return x.str(); }
    static std::string json_str(const Rat& x) { return x.json_str(); }

    // Scale a homogeneous triple to coprime integers, first nonzero positive.
    static void canonicalize(std::array<Rat, 3>& t) {
        Int l = 1;
        for (const auto& x : t)
            if (!x.is_zero()) l = int_lcm(l, x.denominator());
        Int g = 0;
        std::array<Int, 3> nums;
        for (int i = 0; i < 3; ++i) {
            nums[i] = t[i].numerator() * (l / t[i].denominator());
            g = int_gcd(g, nums[i]);
        }
        if (g.is_zero()) return;
        int lead = 0;
        while (nums[lead].is_zero()) ++lead;
        if (nums[lead] < 0) g = -g;
        for (int i = 0; i < 3; ++i) t[i] = Rat(nums[i] / g);
    }
};

template <>
struct ScalarOps<RatFunc> {
    static constexpr const char* kRealization = "symbolic";
    static constexpr bool kOrdered = false;

    static RatFunc zero() { return {}; }
    static RatFunc one() { return 1; }
    static RatFunc from_int(long long n) { return n; }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static std::string str(const RatFunc& x) { return x.str(); }
    static std::string json_str(const RatFunc& x) { return x.str(); }

    // Clear denominators and strip the common polynomial factor, so that
    // point and line coordinates stay polynomial across the construction.
    static void canonicalize(std::array<RatFunc, 3>& t) {
        Poly l = Poly::from_int(1);
        for (const auto& x : t)
            if (!x.is_zero()) l = lcm(l, x.den());
        std::array<Poly, 3> nums;
        Poly g;
        for (int i = 0; i < 3; ++i) {
            nums[i] = t[i].num() * l.divexact(t[i].den());
            g = Poly::gcd(g, nums[i]);
        }
        if (g.is_zero()) return;
        int lead = 0;
        while (nums[lead].is_zero()) ++lead;
        if (nums[lead].leading_coefficient() < 0) g = -g;
        for (int i = 0; i < 3; ++i) t[i] = RatFunc(nums[i].divexact(g));
    }

private:
    static Poly lcm(const Poly& a, const Poly& b) {
        Poly g = Poly::gcd(a, b);
        return a.divexact(g) * b;
    }
};

}  // namespace hagge

#endif
