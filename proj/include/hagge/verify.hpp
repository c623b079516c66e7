#ifndef HAGGE_VERIFY_HPP
#define HAGGE_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hagge/closed_forms.hpp"
#include "hagge/construct.hpp"

namespace hagge {

// The theorem checklist. Every claim is an exact predicate over a
// Construction; a failing check captures the nonzero residue verbatim.
// Failures are data, never exceptions: a check body that throws is recorded
// as a failure (or as skipped, for a resource-budget stop).

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

struct CheckRecord {
    std::string id;
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

struct CheckReport {
    std::string sa, sb, sc, point, realization;
    std::vector<CheckRecord> checks;

    int count(CheckStatus s) const {
        int n = 0;
        for (const auto& r : checks)
            if (r.status == s) ++n;
        return n;
    }
    bool all_ok() const { return count(CheckStatus::Fail) == 0; }
};

namespace verify_detail {

// Outcome of one check body: pass flag plus residue/note text.
using Outcome = std::pair<bool, std::string>;

template <class Body>
CheckRecord guarded(std::string id, std::string name, Body&& body) {
    CheckRecord rec{std::move(id), std::move(name), CheckStatus::Skipped, ""};
    try {
        Outcome out = body();
        rec.status = out.first ? CheckStatus::Pass : CheckStatus::Fail;
        rec.detail = std::move(out.second);
    } catch (const BudgetError& e) {
        rec.status = CheckStatus::Skipped;
        rec.detail = std::string("resource limit: ") + e.what();
    } catch (const Error& e) {
        rec.status = CheckStatus::Fail;
        rec.detail = std::string("error: ") + e.what();
    }
    return rec;
}

inline CheckRecord skipped(std::string id, std::string name, std::string why) {
    return CheckRecord{std::move(id), std::move(name), CheckStatus::Skipped, std::move(why)};
}

template <class K>
std::string residue(const char* label, const K& value) {
    return std::string(label) + " = " + ScalarOps<K>::str(value);
}

// All four points on one line: every 3-subset determinant vanishes (robust
// even if two of the points coincide).
template <class K>
Outcome collinear4(const Point<K>& p, const Point<K>& q, const Point<K>& r, const Point<K>& s) {
    using S = ScalarOps<K>;
    const Point<K>* pts[4] = {&p, &q, &r, &s};
    for (int skip = 0; skip < 4; ++skip) {
        const Point<K>* tri[3];
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) tri[k++] = pts[i];
        K d = collinearity_det(*tri[0], *tri[1], *tri[2]);
        if (!S::is_zero(d)) return {false, residue("determinant", d)};
    }
    return {true, ""};
}

template <class K>
Outcome circle_members(const Triangle<K>& t, const Circle<K>& c,
                       std::initializer_list<const Point<K>*> pts) {
    using S = ScalarOps<K>;
    for (const Point<K>* p : pts) {
        K v = circle_value(t, c, *p);
        if (!S::is_zero(v)) return {false, "at " + p->str() + ": " + residue("residue", v)};
    }
    return {true, ""};
}

}  // namespace verify_detail

// Perspector of triangles a1a2a3 and b1b2b3 if the vertex joins concur.
template <class K>
std::optional<Point<K>> check_perspective(const Point<K>& a1, const Point<K>& a2, const Point<K>& a3,
                                          const Point<K>& b1, const Point<K>& b2, const Point<K>& b3) {
    Line<K> j1 = join(a1, b1);
    Line<K> j2 = join(a2, b2);
    Line<K> j3 = join(a3, b3);
    if (!concurrent(j1, j2, j3)) return std::nullopt;
    return meet(j1, j2);
}

namespace verify_detail {

template <class K>
Outcome perspective_with(const Construction<K>& c, const Point<K>& b1, const Point<K>& b2,
                         const Point<K>& b3, const Point<K>& expected, const char* label) {
    auto persp = check_perspective(c.A, c.B, c.C, b1, b2, b3);
    if (!persp) return {false, std::string(label) + ": vertex joins not concurrent"};
    if (!(*persp == expected))
        return {false, std::string(label) + ": perspector " + persp->str() + " differs from " +
                           expected.str()};
    return {true, ""};
}

template <class K>
CheckRecord check_t1(const Construction<K>& c) {
    return guarded("T1", "DA, EB, FC concurrent at Q", [&]() -> Outcome {
        using S = ScalarOps<K>;
        K det = concurrency_det(c.line_da, c.line_eb, c.line_fc);
        if (!S::is_zero(det)) return {false, residue("determinant", det)};
        K inc = incidence_value(c.Q, c.line_fc);
        if (!S::is_zero(inc)) return {false, residue("Q on FC", inc)};
        return {incident(c.Q, c.line_da) && incident(c.Q, c.line_eb), ""};
    });
}

template <class K>
CheckRecord check_t2(const Construction<K>& c) {
    return guarded("T2", "P1, P2, P3 collinear on the polar of Q", [&]() -> Outcome {
        using S = ScalarOps<K>;
        K det = collinearity_det(c.P1, c.P2, c.P3);
        if (!S::is_zero(det)) return {false, residue("determinant", det)};
        for (const Point<K>* p : {&c.P1, &c.P2, &c.P3}) {
            K inc = incidence_value(*p, c.polar_q);
            if (!S::is_zero(inc))
                return {false, "at " + p->str() + ": " + residue("incidence", inc)};
        }
        return {true, ""};
    });
}

template <class K>
CheckRecord check_hagge_contains_h(const char* id, const char* name, const Construction<K>& c,
                                   const Circle<K>* circle) {
    return guarded(id, name, [&, circle]() -> Outcome {
        if (!circle) return {false, "circle not constructed (degenerate)"};
        return circle_members(c.tri, *circle, {&c.H});
    });
}

template <class K>
CheckRecord check_t8(const Construction<K>& c) {
    return guarded("T8", "circle BHC contains U, U', U2, U3", [&]() -> Outcome {
        return circle_members(c.tri, c.bhc, {&c.U, &c.Up, &c.U2, &c.U3});
    });
}

template <class K>
CheckRecord check_t9(const Construction<K>& c) {
    return guarded("T9", "circle CHA contains V, V', V3, V1", [&]() -> Outcome {
        return circle_members(c.tri, c.cha, {&c.V, &c.Vp, &c.V3, &c.V1});
    });
}

template <class K>
CheckRecord check_t10(const Construction<K>& c) {
    return guarded("T10", "circle AHB contains W, W', W1, W2", [&]() -> Outcome {
        return circle_members(c.tri, c.ahb, {&c.W, &c.Wp, &c.W1, &c.W2});
    });
}

template <class K>
CheckRecord check_t11(const Construction<K>& c) {
    return guarded("T11", "U', V1, W1, H collinear", [&]() -> Outcome {
        return collinear4(c.Up, c.V1, c.W1, c.H);
    });
}

template <class K>
CheckRecord check_t12(const Construction<K>& c) {
    return guarded("T12", "V', W2, U2, H collinear", [&]() -> Outcome {
        return collinear4(c.Vp, c.W2, c.U2, c.H);
    });
}

template <class K>
CheckRecord check_t13(const Construction<K>& c) {
    return guarded("T13", "W', U3, V3, H collinear", [&]() -> Outcome {
        return collinear4(c.Wp, c.U3, c.V3, c.H);
    });
}

template <class K>
CheckRecord check_t14(const Construction<K>& c) {
    return guarded("T14", "ABC in perspective with LMN, L'M'N', LN'M', N'ML', M'L'N",
                   [&]() -> Outcome {
                       Outcome o = perspective_with(c, c.L, c.M, c.N, c.P, "LMN");
                       if (!o.first) return o;
                       o = perspective_with(c, c.Lp, c.Mp, c.Np, c.Q, "L'M'N'");
                       if (!o.first) return o;
                       o = perspective_with(c, c.L, c.Np, c.Mp, c.P1, "LN'M'");
                       if (!o.first) return o;
                       o = perspective_with(c, c.Np, c.M, c.Lp, c.P2, "N'ML'");
                       if (!o.first) return o;
                       return perspective_with(c, c.Mp, c.Lp, c.N, c.P3, "M'L'N");
                   });
}

template <class K>
CheckRecord check_t15(const Construction<K>& c) {
    return guarded("T15",
                   "isogonal of Q is the anticomplement of the isogonal of P "
                   "(the isotomic of H for the centroid start)",
                   [&]() -> Outcome {
                       Point<K> lhs = isogonal(c.tri, c.Q);
                       Point<K> rhs = anticomplement(isogonal(c.tri, c.P));
                       if (!(lhs == rhs))
                           return {false, "isogonal(Q) = " + lhs.str() + " differs from " + rhs.str()};
                       if (c.kind == StartKind::Centroid) {
                           Point<K> iso_h = isotomic(c.H);
                           if (!(lhs == iso_h))
                               return {false,
                                       "isogonal(Q) = " + lhs.str() +
                                           " differs from isotomic(H) = " + iso_h.str()};
                           return {true, "isotomic-of-H form verified at the centroid"};
                       }
                       return {true, ""};
                   });
}

template <class K>
CheckRecord check_t16(const Construction<K>& c) {
    return guarded("T16", "orthocentre start: U, V, W coincide with H; the UVW circle is the point H",
                   [&]() -> Outcome {
                       if (!(c.U == c.H)) return {false, "U = " + c.U.str() + " differs from H"};
                       if (!(c.V == c.H)) return {false, "V = " + c.V.str() + " differs from H"};
                       if (!(c.W == c.H)) return {false, "W = " + c.W.str() + " differs from H"};
                       if (!c.uvw_is_point || c.hagge_g.has_value())
                           return {false, "UVW circle was not flagged as a point"};
                       return {true, ""};
                   });
}

template <class K>
CheckRecord check_t17(const Construction<K>& c) {
    return guarded(
        "T17",
        "symmedian start: L=L', M=M', N=N', Q=K, four distinct Hagge circles, quadruple perspective",
        [&]() -> Outcome {
            if (!(c.L == c.Lp)) return {false, "L = " + c.L.str() + " differs from L' = " + c.Lp.str()};
            if (!(c.M == c.Mp)) return {false, "M differs from M'"};
            if (!(c.N == c.Np)) return {false, "N differs from N'"};
            Point<K> k = symmedian(c.tri);
            if (!(c.Q == k)) return {false, "Q = " + c.Q.str() + " differs from K = " + k.str()};
            if (!c.hagge_g.has_value()) return {false, "UVW circle missing"};
            if (!(c.hagge_q && c.hagge_p1 && c.hagge_p2 && c.hagge_p3))
                return {false, "a companion Hagge circle degenerates to a point"};
            const Circle<K>* circles[5] = {&*c.hagge_g, &*c.hagge_q, &*c.hagge_p1, &*c.hagge_p2,
                                           &*c.hagge_p3};
            int distinct = 0;
            for (int i = 0; i < 5; ++i) {
                bool fresh = true;
                for (int j = 0; j < i; ++j)
                    if (*circles[i] == *circles[j]) fresh = false;
                if (fresh) ++distinct;
            }
            if (distinct != 4)
                return {false, "expected 4 distinct Hagge circles, found " + std::to_string(distinct)};
            Outcome o = perspective_with(c, c.L, c.M, c.N, c.Q, "LMN");
            if (!o.first) return o;
            o = perspective_with(c, c.L, c.N, c.M, c.P1, "LNM");
            if (!o.first) return o;
            o = perspective_with(c, c.N, c.M, c.L, c.P2, "NML");
            if (!o.first) return o;
            return perspective_with(c, c.M, c.L, c.N, c.P3, "MLN");
        });
}

template <class K>
CheckRecord check_t18(const Construction<K>& c) {
    return guarded("T18", "symmedian start: AB^DE, BC^EF, CA^FD lie on the polar of K = line P1P2P3",
                   [&]() -> Outcome {
                       using S = ScalarOps<K>;
                       Line<K> pk = polar(c.tri, symmedian(c.tri));
                       if (!(pk == c.polar_q))
                           return {false, "polar of K differs from polar of Q (Q should equal K)"};
                       for (const Point<K>* p : {&c.P1, &c.P2, &c.P3}) {
                           K inc = incidence_value(*p, pk);
                           if (!S::is_zero(inc))
                               return {false, "P-point " + p->str() + ": " + residue("incidence", inc)};
                       }
                       Point<K> x1 = meet(join(c.A, c.B), join(c.D, c.E));
                       Point<K> x2 = meet(join(c.B, c.C), join(c.E, c.F));
                       Point<K> x3 = meet(join(c.C, c.A), join(c.F, c.D));
                       for (const Point<K>* p : {&x1, &x2, &x3}) {
                           K inc = incidence_value(*p, pk);
                           if (!S::is_zero(inc))
                               return {false, "corner meet " + p->str() + ": " + residue("incidence", inc)};
                       }
                       return {true, ""};
                   });
}

template <class K>
void fill_instance(CheckReport& rep, const Construction<K>& c) {
    using S = ScalarOps<K>;
    rep.sa = S::json_str(c.tri.sa);
    rep.sb = S::json_str(c.tri.sb);
    rep.sc = S::json_str(c.tri.sc);
    rep.point = S::json_str(c.P.x()) + "," + S::json_str(c.P.y()) + "," + S::json_str(c.P.z());
    rep.realization = S::kRealization;
}

}  // namespace verify_detail

// T1-T15 evaluated for a generic or centroid start; the degenerate-start
// checks T16-T18 are reported as skipped so that every id appears exactly
// once.
template <class K>
CheckReport check_all(const Construction<K>& c) {
    namespace vd = verify_detail;
    CheckReport rep;
    vd::fill_instance(rep, c);
    rep.checks.push_back(vd::check_t1(c));
    rep.checks.push_back(vd::check_t2(c));
    rep.checks.push_back(vd::check_hagge_contains_h("T3", "Hagge circle UVW contains H", c,
                                                    c.hagge_g ? &*c.hagge_g : nullptr));
    rep.checks.push_back(vd::check_hagge_contains_h("T4", "Hagge circle U'V'W' contains H", c,
                                                    c.hagge_q ? &*c.hagge_q : nullptr));
    rep.checks.push_back(vd::check_hagge_contains_h("T5", "Hagge circle UV3W2 contains H", c,
                                                    c.hagge_p1 ? &*c.hagge_p1 : nullptr));
    rep.checks.push_back(vd::check_hagge_contains_h("T6", "Hagge circle U3VW1 contains H", c,
                                                    c.hagge_p2 ? &*c.hagge_p2 : nullptr));
    rep.checks.push_back(vd::check_hagge_contains_h("T7", "Hagge circle U2V1W contains H", c,
                                                    c.hagge_p3 ? &*c.hagge_p3 : nullptr));
    rep.checks.push_back(vd::check_t8(c));
    rep.checks.push_back(vd::check_t9(c));
    rep.checks.push_back(vd::check_t10(c));
    rep.checks.push_back(vd::check_t11(c));
    rep.checks.push_back(vd::check_t12(c));
    rep.checks.push_back(vd::check_t13(c));
    rep.checks.push_back(vd::check_t14(c));
    rep.checks.push_back(vd::check_t15(c));
    rep.checks.push_back(vd::skipped("T16", "orthocentre-start degeneracies",
                                     "requires the orthocentre start"));
    rep.checks.push_back(vd::skipped("T17", "symmedian-start degeneracies",
                                     "requires the symmedian start"));
    rep.checks.push_back(vd::skipped("T18", "symmedian-start polar incidences",
                                     "requires the symmedian start"));
    return rep;
}

template <class K>
CheckReport check_orthocentre_start(const Construction<K>& c) {
    if (c.kind != StartKind::OrthocentreDegenerate)
        throw InputError("orthocentre-start report requires the orthocentre start");
    CheckReport rep;
    verify_detail::fill_instance(rep, c);
    rep.checks.push_back(verify_detail::check_t16(c));
    return rep;
}

template <class K>
CheckReport check_symmedian_start(const Construction<K>& c) {
    if (c.kind != StartKind::SymmedianDegenerate)
        throw InputError("symmedian-start report requires the symmedian start");
    CheckReport rep;
    verify_detail::fill_instance(rep, c);
    rep.checks.push_back(verify_detail::check_t17(c));
    rep.checks.push_back(verify_detail::check_t18(c));
    return rep;
}

// Reproduction of the classical expanded equations and closed-form points.
// Meaningful for the centroid start (the closed forms are written for it);
// any other start yields skipped records.
template <class K>
std::vector<CheckRecord> check_equation_reproduction(const Construction<K>& c) {
    namespace vd = verify_detail;
    std::vector<CheckRecord> out;
    const bool centroid = c.kind == StartKind::Centroid;
    auto guard_centroid = [&](const char* id, const char* name, auto body) {
        if (!centroid) {
            out.push_back(vd::skipped(id, name, "requires the centroid start"));
            return;
        }
        out.push_back(vd::guarded(id, name, std::move(body)));
    };
    guard_centroid("E1", "Hagge circle of the centroid matches its classical expanded equation",
                   [&]() -> vd::Outcome {
                       if (!c.hagge_g) return {false, "circle not constructed"};
                       auto got = circle_sixform(c.tri, *c.hagge_g);
                       auto want = closed::hagge_centroid_sixform(c.tri);
                       return {sixform_proportional(got, want), ""};
                   });
    guard_centroid("E2", "Hagge circle of Q matches its classical expanded equation",
                   [&]() -> vd::Outcome {
                       if (!c.hagge_q) return {false, "circle not constructed"};
                       auto got = circle_sixform(c.tri, *c.hagge_q);
                       auto want = closed::hagge_q_sixform(c.tri);
                       return {sixform_proportional(got, want), ""};
                   });
    guard_centroid("E3", "circle CHA matches its classical expanded equation", [&]() -> vd::Outcome {
        auto got = circle_sixform(c.tri, c.cha);
        auto want = closed::circle_cha_sixform(c.tri);
        return {sixform_proportional(got, want),
                "v = " + ScalarOps<K>::str(c.cha.v)};
    });
    guard_centroid("E4", "V1 matches its classical closed form", [&]() -> vd::Outcome {
        Point<K> want = closed::V1(c.tri);
        if (!(c.V1 == want)) return {false, "V1 = " + c.V1.str() + " differs from " + want.str()};
        return {true, ""};
    });
    guard_centroid("E5", "V3 matches its classical closed form", [&]() -> vd::Outcome {
        Point<K> want = closed::V3(c.tri);
        if (!(c.V3 == want)) return {false, "V3 = " + c.V3.str() + " differs from " + want.str()};
        return {true, ""};
    });
    return out;
}

}  // namespace hagge

#endif
