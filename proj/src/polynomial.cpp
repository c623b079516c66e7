// Sparse multivariate polynomial arithmetic over the integers, with the
// content-and-primitive-PRS gcd used to keep rational functions reduced.

#include "hagge/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hagge/error.hpp"

namespace hagge {

namespace {

thread_local std::size_t g_work_budget = 0;
thread_local std::size_t g_work_used = 0;

void charge(std::size_t units) {
    if (g_work_budget == 0) return;
    g_work_used += units;
    if (g_work_used > g_work_budget)
        throw BudgetError("work budget exceeded (" + std::to_string(g_work_used) + " > " +
                          std::to_string(g_work_budget) + " monomial operations)");
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace

std::size_t work_budget() { return g_work_budget; }
std::size_t work_used() { return g_work_used; }
void set_work_budget(std::size_t budget) { g_work_budget = budget; }
void set_work_used(std::size_t used) { g_work_used = used; }

bool grlex_less(const Monomial& a, const Monomial& b) {
    int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    for (int i = 0; i < kVarCount; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    for (int i = 0; i < kVarCount; ++i)
        if (d.e[i] > m.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
}

Poly Poly::constant(Int c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
}

Poly Poly::variable(int index) {
    Poly p;
    Monomial m;
    m.e[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace_back(m, Int(1));
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::map<Monomial, Int, GrlexGreater> acc;
    for (auto& [m, c] : terms) acc[m] += c;
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.front().first.total_degree();  // grlex leader has max degree
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[static_cast<std::size_t>(var)]));
    return terms_.empty() ? -1 : d;
}

std::uint32_t Poly::variables_mask() const {
    std::uint32_t mask = 0;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kVarCount; ++i)
            if (m.e[i] != 0) mask |= (1u << i);
    return mask;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

// Merge of two sorted term lists.
static std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                           const std::vector<Poly::Term>& b, bool subtract) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            Int c = subtract ? Int(a[i].second - b[j].second) : Int(a[i].second + b[j].second);
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        } else if (grlex_less(b[j].first, a[i].first)) {
            out.push_back(a[i++]);
        } else {
            out.emplace_back(b[j].first, subtract ? Int(-b[j].second) : b[j].second);
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, subtract ? Int(-b[j].second) : b[j].second);
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.terms_ = merge_terms(a.terms_, b.terms_, false);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.terms_ = merge_terms(a.terms_, b.terms_, true);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    charge(a.terms_.size() * b.terms_.size());
    std::map<Monomial, Int, GrlexGreater> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[mono_mul(ma, mb)] += ca * cb;
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    return r;
}

Poly Poly::mul_int(const Int& c) const {
    if (c.is_zero()) return {};
    Poly r(*this);
    for (auto& [m, coef] : r.terms_) coef *= c;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result = Poly::constant(Int(1));
    Poly base = *this;
    for (; k != 0; k >>= 1) {
        if (k & 1u) result = result * base;
        if (k > 1u) base = base * base;
    }
    return result;
}

Int Poly::int_content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial r = terms_.front().first;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kVarCount; ++i) r.e[i] = std::min(r.e[i], m.e[i]);
    return r;
}

Poly Poly::divexact(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivideByZeroError(str() + " / 0");
    if (is_zero()) return {};
    std::vector<Term> quotient;
    Poly rem = *this;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.terms_.front();
        const auto& [dm, dc] = divisor.terms_.front();
        if (!mono_divides(dm, lm) || lc % dc != 0)
            throw DegenerateError("inexact polynomial division: (" + str() + ") / (" + divisor.str() + ")");
        Monomial qm = mono_div(lm, dm);
        Int qc = lc / dc;
        Poly t;
        t.terms_.emplace_back(qm, qc);
        quotient.emplace_back(qm, std::move(qc));
        rem = rem - t * divisor;
    }
    // Quotient terms are produced in strictly decreasing grlex order.
    Poly q;
    q.terms_ = std::move(quotient);
    return q;
}

Rat Poly::evaluate(std::span<const Rat> values) const {
    auto rat_pow = [](const Rat& x, unsigned k) {
        using boost::multiprecision::pow;
        return Rat(pow(x.numerator(), k), pow(x.denominator(), k));
    };
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat term(c);
        for (int i = 0; i < kVarCount; ++i)
            if (m.e[i] != 0) term *= rat_pow(values[static_cast<std::size_t>(i)], m.e[i]);
        total += term;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = !(m == Monomial{});
        if (a != 1 || !has_vars) out << a.str();
        bool printed = (a != 1 || !has_vars);
        for (int i = 0; i < kVarCount; ++i) {
            if (m.e[i] == 0) continue;
            if (printed) out << "*";
            out << kVarNames[static_cast<std::size_t>(i)];
            if (m.e[i] > 1) out << "^" << m.e[i];
            printed = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// gcd: integer and monomial content are split off, then a primitive PRS runs
// in one main variable with recursively computed coefficient contents.

namespace {

Poly shift_var(const Poly& p, int var, int k) {
    std::vector<Poly::Term> out = p.terms();
    for (auto& [m, c] : out) m.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(m.e[var] + k);
    return Poly::from_terms(std::move(out));
}

// Coefficient of var^k, as a polynomial in the remaining variables.
Poly coeff_of(const Poly& p, int var, int k) {
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (m.e[static_cast<std::size_t>(var)] != static_cast<std::uint16_t>(k)) continue;
        Monomial stripped = m;
        stripped.e[static_cast<std::size_t>(var)] = 0;
        out.emplace_back(stripped, c);
    }
    return Poly::from_terms(std::move(out));
}

Poly positive_leading(const Poly& p) {
    if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
    return p;
}

// gcd of the coefficients of p viewed as univariate in var.
Poly content_in(const Poly& p, int var) {
    Poly g;
    for (int k = p.degree_in(var); k >= 0; --k) {
        Poly c = coeff_of(p, var, k);
        if (c.is_zero()) continue;
        g = Poly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of f by g in var: lc(g)^(df-dg+1) * f mod g, degree-reduced.
Poly pseudo_rem(const Poly& f, const Poly& g, int var) {
    Poly r = f;
    const int dg = g.degree_in(var);
    Poly lg = coeff_of(g, var, dg);
    int dr = r.degree_in(var);
    while (!r.is_zero() && dr >= dg) {
        Poly lr = coeff_of(r, var, dr);
        r = lg * r - shift_var(lr * g, var, dr - dg);
        int next = r.degree_in(var);
        // Each step cancels the leading term, so the degree must drop.
        if (!r.is_zero() && next >= dr)
            throw DegenerateError("pseudo-division failed to reduce degree");
        dr = next;
    }
    return r;
}

Poly primitive_in(const Poly& p, int var, Poly* content_out = nullptr) {
    Poly c = content_in(p, var);
    if (content_out) *content_out = c;
    if (c.is_zero() || c.is_one()) return p;
    return p.divexact(c);
}

// Primitive PRS gcd of a, b, both free of integer and monomial content.
Poly gcd_core(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) {
        // Contents were removed, so a constant operand forces a constant gcd.
        return Poly::constant(int_gcd(a.is_zero() ? Int(0) : a.int_content(),
                                      b.is_zero() ? Int(0) : b.int_content()));
    }
    std::uint32_t shared = a.variables_mask() & b.variables_mask();
    if (shared == 0) return Poly::constant(Int(1));

    // Main variable: the shared one with the smallest larger degree.
    int var = -1, best = 0;
    for (int i = 0; i < kVarCount; ++i) {
        if (!(shared & (1u << i))) continue;
        int d = std::max(a.degree_in(i), b.degree_in(i));
        if (var < 0 || d < best) var = i, best = d;
    }

    Poly ca, cb;
    Poly pa = primitive_in(a, var, &ca);
    Poly pb = primitive_in(b, var, &cb);
    Poly cg = Poly::gcd(ca, cb);

    Poly f = pa, g = pb;
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    Poly result;
    while (true) {
        Poly r = pseudo_rem(f, g, var);
        if (r.is_zero()) { result = g; break; }
        if (r.degree_in(var) == 0) { result = Poly::constant(Int(1)); break; }
        f = std::move(g);
        // Keep the remainder primitive to contain coefficient growth.
        Int ic = r.int_content();
        if (ic > 1) r = r.divexact(Poly::constant(ic));
        g = primitive_in(r, var);
    }
    return positive_leading(cg * result);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return positive_leading(b);
    if (b.is_zero()) return positive_leading(a);

    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg;
    for (int i = 0; i < kVarCount; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);

    Int ia = a.int_content(), ib = b.int_content();
    Int ig = int_gcd(ia, ib);

    Poly pa = a, pb = b;
    if (!(ma == Monomial{})) {
        Poly mono;
        mono = Poly::from_terms({{ma, Int(1)}});
        pa = pa.divexact(mono);
    }
    if (!(mb == Monomial{})) {
        Poly mono = Poly::from_terms({{mb, Int(1)}});
        pb = pb.divexact(mono);
    }
    if (ia != 1) pa = pa.divexact(Poly::constant(ia));
    if (ib != 1) pb = pb.divexact(Poly::constant(ib));

    Poly core = gcd_core(pa, pb);
    Poly result = core.mul_int(ig);
    if (!(mg == Monomial{})) result = result * Poly::from_terms({{mg, Int(1)}});
    return positive_leading(result);
}

}  // namespace hagge
