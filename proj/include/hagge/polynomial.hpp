#ifndef HAGGE_POLYNOMIAL_HPP
#define HAGGE_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hagge/rational.hpp"

namespace hagge {

// Indeterminates: the squared side lengths of the reference triangle and the
// three coordinates of a generic starting point.
inline constexpr int kVarCount = 6;
inline constexpr std::array<const char*, kVarCount> kVarNames = {"sa", "sb", "sc", "l", "m", "n"};

enum Var : int { VarSa = 0, VarSb = 1, VarSc = 2, VarL = 3, VarM = 4, VarN = 5 };

struct Monomial {
    std::array<std::uint16_t, kVarCount> e{};

    int total_degree() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order: total degree first, then lex with sa > sb > ... > n.
bool grlex_less(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Terms are kept grlex-descending with nonzero coefficients;
// zero is the empty term list.
class Poly {
public:
    using Term = std::pair<Monomial, Int>;

    Poly() = default;
    static Poly constant(Int c);
    static Poly from_int(long long c) { return constant(Int(c)); }
    static Poly variable(int index);
    // From arbitrary term data: sorts, combines, drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for zero
    int degree_in(int var) const;
    std::uint32_t variables_mask() const;
    const std::vector<Term>& terms() const { return terms_; }

    const Int& leading_coefficient() const { return terms_.front().second; }
    const Monomial& leading_monomial() const { return terms_.front().first; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly mul_int(const Int& c) const;
    Poly pow(unsigned k) const;

    // Positive gcd of all coefficients; 0 for the zero polynomial.
    Int int_content() const;
    // Componentwise minimum exponent vector over all terms.
    Monomial monomial_content() const;

    // Exact division; throws DegenerateError if the divisor does not divide
    // *this over the integers.
    Poly divexact(const Poly& divisor) const;

    // Greatest common divisor, positive leading coefficient. Content
    // extraction plus a primitive PRS in a chosen main variable.
    static Poly gcd(const Poly& a, const Poly& b);

    Rat evaluate(std::span<const Rat> values) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Work budget: a cap on the cumulative number of monomial operations (term
// by term products, charged before each multiplication or exact-division
// step) performed while a budget scope is active. Zero means unlimited.
// Exceeding the budget throws BudgetError, which callers treat as "too large
// to decide within resources", never as a verdict. Charging up front makes
// oversized computations abort before they grind, so a budgeted run always
// terminates promptly.
std::size_t work_budget();
std::size_t work_used();
void set_work_budget(std::size_t budget);
void set_work_used(std::size_t used);

struct WorkBudgetScope {
    explicit WorkBudgetScope(std::size_t budget)
        : saved_budget_(work_budget()), saved_used_(work_used()) {
        set_work_budget(budget);
        set_work_used(0);
    }
    ~WorkBudgetScope() {
        set_work_budget(saved_budget_);
        set_work_used(saved_used_);
    }
    WorkBudgetScope(const WorkBudgetScope&) = delete;
    WorkBudgetScope& operator=(const WorkBudgetScope&) = delete;

private:
    std::size_t saved_budget_;
    std::size_t saved_used_;
};

}  // namespace hagge

#endif
