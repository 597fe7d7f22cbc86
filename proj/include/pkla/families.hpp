#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pkla/blocks.hpp"
#include "pkla/lie_algebra.hpp"

namespace pkla {

/// A point in one of the seven constructed families g_0 .. g_6.
struct FamilyInstance {
    int family = 6;
    BlockType t;
    Scalar a = Scalar(0);   // family 0
    Scalar c1 = Scalar(0);  // family 4
    Scalar c2 = Scalar(0);  // family 1
    XtAssignment x;         // families 2 and 3
    int eps = 1;            // family 0 metric sign on the distinguished plane

    friend bool operator==(const FamilyInstance& p, const FamilyInstance& q) {
        return p.family == q.family && p.t == q.t && p.a == q.a && p.c1 == q.c1 && p.c2 == q.c2 && p.x == q.x &&
               p.eps == q.eps;
    }
};

/// An almost abelian algebra with an adapted pseudo-Kaehler candidate pair.
struct PKStructure {
    int dim = 0;
    RMat D;  // derivation on the abelian ideal spanned by e_1..e_{dim-1}
    RMat J;
    RMat g;
    bool isotropic = false;

    LieAlgebra algebra() const { return almost_abelian(D); }
};

namespace detail {

/// w^flat = w^T g_V as a row.
inline RMat flat(const RMat& w, const RMat& gv) { return w.transpose() * gv; }

inline RMat assemble_isotropic_D(const Realization& r, const RMat& v, const Scalar& a, const Scalar& c1,
                                 const Scalar& c2) {
    int dv = r.dimV;
    int m = dv + 3;
    RMat d(m, m);
    d(0, 0) = -a;
    d(1, 1) = -a;
    d(m - 1, m - 1) = a;
    RMat fv = flat(v, r.g);
    RMat fjv = flat(r.J * v, r.g);
    for (int k = 0; k < dv; ++k) {
        d(0, 2 + k) = -fjv(0, k);
        d(1, 2 + k) = fv(0, k);
        d(2 + k, m - 1) = v(k, 0);
    }
    d.set_block(2, 2, r.A);
    d(0, m - 1) = c1;
    d(1, m - 1) = c2;
    return d;
}

inline RMat isotropic_metric(const Realization& r) {
    int dim = r.dimV + 4;
    RMat g(dim, dim);
    g(0, dim - 1) = rat(1);
    g(dim - 1, 0) = rat(1);
    g(1, dim - 2) = rat(-1);
    g(dim - 2, 1) = rat(-1);
    g.set_block(2, 2, r.g);
    return g;
}

}  // namespace detail

inline PKStructure build_family(const FamilyInstance& p) {
    if (p.family < 0 || p.family > 6) throw InvalidFamilyParams("family index must be 0..6");
    if (p.eps != 1 && p.eps != -1) throw InvalidFamilyParams("metric sign must be +-1");
    Realization r = realize(p.t);
    auto forbid = [&](bool used_a, bool used_c1, bool used_c2, bool used_x) {
        if (!used_a && !is_zero(p.a)) throw InvalidFamilyParams("parameter a is not accepted by this family");
        if (!used_c1 && !is_zero(p.c1)) throw InvalidFamilyParams("parameter c1 is not accepted by this family");
        if (!used_c2 && !is_zero(p.c2)) throw InvalidFamilyParams("parameter c2 is not accepted by this family");
        if (!used_x && !p.x.empty()) throw InvalidFamilyParams("assignment x is not accepted by this family");
    };

    PKStructure s;
    if (p.family == 0) {
        forbid(true, false, false, false);
        s.dim = r.dimV + 2;
        s.isotropic = false;
        s.D = RMat(r.dimV + 1, r.dimV + 1);
        s.D.set_block(0, 0, r.A);
        s.D(r.dimV, r.dimV) = p.a;
        s.J = standard_J(s.dim);
        s.g = RMat(s.dim, s.dim);
        s.g.set_block(0, 0, r.g);
        s.g(s.dim - 2, s.dim - 2) = rat(p.eps);
        s.g(s.dim - 1, s.dim - 1) = rat(p.eps);
        return s;
    }

    Scalar a(0), c1(0), c2(0);
    RMat v(r.dimV, 1);
    switch (p.family) {
        case 1:
            forbid(false, false, true, false);
            a = rat(1);
            c2 = p.c2;
            break;
        case 2:
        case 3:
            forbid(false, false, false, true);
            v = v_of_x(p.t, p.x);
            if (v.is_zero_matrix()) throw InvalidFamilyParams("families 2 and 3 require a nonzero vector v");
            if (p.family == 3) c2 = rat(1);
            break;
        case 4:
            forbid(false, true, false, false);
            c1 = p.c1;
            c2 = rat(1);
            break;
        case 5:
            forbid(false, false, false, false);
            c1 = rat(1);
            break;
        case 6:
            forbid(false, false, false, false);
            break;
    }
    s.dim = r.dimV + 4;
    s.isotropic = true;
    s.D = detail::assemble_isotropic_D(r, v, a, c1, c2);
    s.J = standard_J(s.dim);
    s.g = detail::isotropic_metric(r);
    return s;
}

/// Nijenhuis tensor N_J(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y].
inline RMat nijenhuis(const LieAlgebra& l, const RMat& j, const RMat& x, const RMat& y) {
    return l.bracket(j * x, j * y) - j * l.bracket(j * x, y) - j * l.bracket(x, j * y) - l.bracket(x, y);
}

/// Exterior derivative of omega(X,Y) = g(JX,Y) on a Lie algebra, evaluated on
/// basis triples.
inline Scalar d_omega(const LieAlgebra& l, const RMat& j, const RMat& g, int a, int b, int c) {
    auto omega = [&](const RMat& x, const RMat& y) { return (x.transpose() * j.transpose() * g * y)(0, 0); };
    RMat ea(l.dim, 1), eb(l.dim, 1), ec(l.dim, 1);
    ea(a, 0) = rat(1);
    eb(b, 0) = rat(1);
    ec(c, 0) = rat(1);
    return -omega(l.basis_bracket(a, b), ec) - omega(l.basis_bracket(b, c), ea) - omega(l.basis_bracket(c, a), eb);
}

struct PKReport {
    bool almost_complex = false;   // J^2 = -Id
    bool metric = false;           // g symmetric nondegenerate, J-compatible
    bool integrable = false;       // Nijenhuis tensor vanishes
    bool closed = false;           // d omega = 0
    std::string witness;           // first failing check, empty when all pass

    bool ok() const { return almost_complex && metric && integrable && closed; }
};

inline PKReport verify_pk(const LieAlgebra& l, const RMat& j, const RMat& g) {
    PKReport rep;
    int n = l.dim;
    rep.almost_complex = (j * j == rat(-1) * RMat::identity(n));
    if (!rep.almost_complex) rep.witness = "J^2 != -Id";
    rep.metric = (g == g.transpose()) && !is_zero(det(g)) && (j.transpose() * g * j == g);
    if (rep.witness.empty() && !rep.metric) rep.witness = "metric not symmetric nondegenerate J-invariant";
    rep.integrable = true;
    for (int a = 0; a < n && rep.integrable; ++a)
        for (int b = a + 1; b < n && rep.integrable; ++b) {
            RMat ea(n, 1), eb(n, 1);
            ea(a, 0) = rat(1);
            eb(b, 0) = rat(1);
            if (!nijenhuis(l, j, ea, eb).is_zero_matrix()) {
                rep.integrable = false;
                if (rep.witness.empty())
                    rep.witness = "Nijenhuis tensor nonzero on (e" + std::to_string(a + 1) + ",e" +
                                  std::to_string(b + 1) + ")";
            }
        }
    rep.closed = true;
    for (int a = 0; a < n && rep.closed; ++a)
        for (int b = a + 1; b < n && rep.closed; ++b)
            for (int c = b + 1; c < n && rep.closed; ++c)
                if (!is_zero(d_omega(l, j, g, a, b, c))) {
                    rep.closed = false;
                    if (rep.witness.empty())
                        rep.witness = "d omega nonzero on (e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1) +
                                      ",e" + std::to_string(c + 1) + ")";
                }
    return rep;
}

inline PKReport verify_pk(const PKStructure& s) { return verify_pk(s.algebra(), s.J, s.g); }

/// The data recovered from an adapted derivation.
struct Characterization {
    bool isotropic = false;
    RMat A;       // endomorphism of V
    RMat v;       // isotropic case
    Scalar a = Scalar(0);
    Scalar c1 = Scalar(0), c2 = Scalar(0);  // isotropic case
    int eps = 1;                            // non-isotropic case
};

inline Characterization characterize(const PKStructure& s) {
    int dim = s.dim;
    if (dim < 4 || dim % 2 != 0 || s.D.rows() != dim - 1) throw NotStandardBasis("dimension must be even, >= 4");
    if (s.J != standard_J(dim)) throw NotStandardBasis("J is not the standard complex structure");
    if (s.g != s.g.transpose()) throw NotStandardBasis("metric is not symmetric");

    // Decide the metric pattern.
    bool iso = is_zero(s.g(dim - 1, dim - 1)) && s.g(0, dim - 1) == rat(1);
    Characterization c;
    if (!iso) {
        Scalar e = s.g(dim - 1, dim - 1);
        if (!(e == rat(1) || e == rat(-1))) throw NotStandardBasis("distinguished plane is not unit-normalized");
        RMat want(dim, dim);
        want.set_block(0, 0, s.g.block(0, 0, dim - 2, dim - 2));
        want(dim - 2, dim - 2) = e;
        want(dim - 1, dim - 1) = e;
        if (s.g != want) throw NotStandardBasis("metric does not split off the distinguished plane");
        c.isotropic = false;
        c.eps = (sgn(e) > 0) ? 1 : -1;
        int dv = dim - 2;
        c.A = s.D.block(0, 0, dv, dv);
        c.a = s.D(dv, dv);
        RMat want_d(dv + 1, dv + 1);
        want_d.set_block(0, 0, c.A);
        want_d(dv, dv) = c.a;
        if (s.D != want_d) throw ShapeViolation("derivation does not split as A plus a scalar");
        return c;
    }

    int dv = dim - 4;
    RMat gv = s.g.block(2, 2, dv, dv);
    RMat want(dim, dim);
    want(0, dim - 1) = rat(1);
    want(dim - 1, 0) = rat(1);
    want(1, dim - 2) = rat(-1);
    want(dim - 2, 1) = rat(-1);
    want.set_block(2, 2, gv);
    if (s.g != want) throw NotStandardBasis("metric is not in the isotropic adapted form");
    if (is_zero(det(gv)) && dv > 0) throw NotStandardBasis("restricted metric is degenerate");

    c.isotropic = true;
    c.A = s.D.block(2, 2, dv, dv);
    c.v = s.D.block(2, dim - 2, dv, 1);
    c.a = s.D(dim - 2, dim - 2);
    c.c1 = s.D(0, dim - 2);
    c.c2 = s.D(1, dim - 2);
    // Rebuild and compare: everything outside the pattern must vanish and the
    // first two rows must be induced by v.
    Realization r;
    r.dimV = dv;
    r.A = c.A;
    r.J = standard_J(dv);
    r.g = gv;
    RMat want_d = detail::assemble_isotropic_D(r, c.v, c.a, c.c1, c.c2);
    if (s.D != want_d) throw ShapeViolation("derivation entries fall outside the isotropic pattern");
    return c;
}

/// Parameters of the structure-preserving group element acting on an isotropic
/// instance: the scale x != 0, the shear y, a unitary C on V, and u in V.
struct StabilizerElement {
    Scalar x = Scalar(1);
    Scalar y = Scalar(0);
    RMat C;  // dv x dv, must satisfy C^T g_V C = g_V and CJ_V = J_V C
    RMat u;  // dv x 1
};

inline RMat stabilizer_matrix(const Realization& r, const StabilizerElement& el) {
    if (is_zero(el.x)) throw PreconditionError("InvalidStabilizer", "scale must be nonzero");
    int dv = r.dimV;
    int dim = dv + 4;
    RMat m(dim, dim);
    RMat cinvu = solve(el.C, el.u);
    RMat f_jcu = detail::flat(r.J * cinvu, r.g);
    RMat f_cu = detail::flat(cinvu, r.g);
    Scalar guu = (el.u.transpose() * r.g * el.u)(0, 0);
    m(0, 0) = el.x;
    m(1, 1) = el.x;
    for (int k = 0; k < dv; ++k) {
        m(0, 2 + k) = -el.x * f_jcu(0, k);
        m(1, 2 + k) = el.x * f_cu(0, k);
        m(2 + k, dim - 2) = el.u(k, 0);
        m(2 + k, dim - 1) = (r.J * el.u)(k, 0);
    }
    m(0, dim - 2) = el.y;
    m(0, dim - 1) = -el.x * guu / 2;
    m(1, dim - 2) = el.x * guu / 2;
    m(1, dim - 1) = el.y;
    m.set_block(2, 2, el.C);
    m(dim - 2, dim - 2) = Scalar(1) / el.x;
    m(dim - 1, dim - 1) = Scalar(1) / el.x;
    return m;
}

/// Transformed isotropic data under the stabilizer element, by the closed
/// formulas.
inline Characterization stabilizer_transform(const Realization& r, const Characterization& c,
                                             const StabilizerElement& el) {
    if (!c.isotropic) throw PreconditionError("InvalidStabilizer", "transform applies to isotropic data");
    const Scalar& x = el.x;
    Characterization out;
    out.isotropic = true;
    out.a = c.a / x;
    out.c2 = c.c2 / (x * x * x);
    RMat jv = r.J * c.v;
    Scalar g_jv_u = (jv.transpose() * r.g * el.u)(0, 0);
    Scalar g_ju_au = ((r.J * el.u).transpose() * r.g * (c.A * el.u))(0, 0);
    out.c1 = c.c1 / (x * x * x) - rat(2) * c.a * el.y / (x * x) - rat(2) * g_jv_u / (x * x) + g_ju_au / x;
    RMat au = c.A * el.u;
    out.v = (Scalar(1) / x) * solve(el.C, au) + (Scalar(1) / (x * x)) * solve(el.C, c.v) -
            (c.a / x) * solve(el.C, el.u);
    out.A = (Scalar(1) / x) * solve(el.C, c.A * el.C);
    return out;
}

/// Jordan type of the realified canonical endomorphism, by per-block formulas.
inline JordanType realified_jordan_type(const BlockType& t) {
    JordanType j;
    for (const auto& [b, mult] : t.items) {
        if (!b.pair) {
            if (is_zero(b.zeta.im))
                j.add_j(b.m, Scalar(0), 2 * mult);
            else
                j.add_c(b.m, Gauss(rat(0), abs(b.zeta.im)), mult);
        } else if (is_zero(b.zeta.im)) {
            j.add_j(b.m, b.zeta.re, 2 * mult);
            j.add_j(b.m, -b.zeta.re, 2 * mult);
        } else {
            Scalar lam = abs(b.zeta.im);
            j.add_c(b.m, Gauss(b.zeta.re, lam), mult);
            j.add_c(b.m, Gauss(-b.zeta.re, lam), mult);
        }
    }
    return j;
}

/// Jordan type of the family derivation by closed formulas (no matrix work).
inline JordanType family_jordan_type(const FamilyInstance& p) {
    JordanType j = realified_jordan_type(p.t);
    switch (p.family) {
        case 0:
            j.add_j(0, p.a);
            break;
        case 1:
            j.add_j(0, Scalar(1));
            j.add_j(0, Scalar(-1), 2);
            break;
        case 2:
        case 3: {
            validate_assignment(p.t, p.x);
            int m = -1;
            bool both = false;
            for (const auto& [key, val] : p.x)
                if (!is_zero(val) && key.first > m) m = key.first;
            if (m < 0) throw InvalidFamilyParams("families 2 and 3 require a nonzero vector v");
            bool plus = false, minus = false;
            for (const auto& [key, val] : p.x)
                if (key.first == m && !is_zero(val)) (key.second > 0 ? plus : minus) = true;
            both = plus && minus;
            std::optional<JordanType> rest;
            JordanType removed;
            if (both) {
                removed.add_j(m, Scalar(0), 4);
                rest = j.subtract(removed);
                if (!rest) throw InvalidFamilyParams("assignment inconsistent with the type");
                j = *rest;
                j.add_j(m, Scalar(0));
                j.add_j(m + 1, Scalar(0), 3);
            } else {
                removed.add_j(m, Scalar(0), 2);
                rest = j.subtract(removed);
                if (!rest) throw InvalidFamilyParams("assignment inconsistent with the type");
                j = *rest;
                j.add_j(m + 1, Scalar(0));
                j.add_j(m + 2, Scalar(0));
            }
            break;
        }
        case 4:
        case 5:
            j.add_j(1, Scalar(0));
            j.add_j(0, Scalar(0));
            break;
        case 6:
            j.add_j(0, Scalar(0), 3);
            break;
        default:
            throw InvalidFamilyParams("family index must be 0..6");
    }
    return j;
}

namespace detail {

/// Square root of a nonnegative rational when it exists.
inline std::optional<Scalar> rational_sqrt(const Scalar& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (is_zero(q)) return Scalar(0);
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    if (sn * sn != num) return std::nullopt;
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (sd * sd != den) return std::nullopt;
    return Scalar(mpq_class(sn, sd));
}

/// Candidate scales k for A(t) = k A(t').
inline std::vector<Scalar> scale_candidates(const BlockType& t, const BlockType& tp, const XtAssignment& x,
                                            const XtAssignment& xp) {
    std::vector<Scalar> out = {Scalar(1), Scalar(-1)};
    std::vector<Scalar> num, den;
    for (const auto& [b, mult] : t.items) {
        if (!is_zero(b.zeta.re)) num.push_back(abs(b.zeta.re));
        if (!is_zero(b.zeta.im)) num.push_back(abs(b.zeta.im));
    }
    for (const auto& [b, mult] : tp.items) {
        if (!is_zero(b.zeta.re)) den.push_back(abs(b.zeta.re));
        if (!is_zero(b.zeta.im)) den.push_back(abs(b.zeta.im));
    }
    for (const Scalar& n : num)
        for (const Scalar& d : den) {
            out.push_back(n / d);
            out.push_back(-n / d);
        }
    for (const auto& [k1, v1] : x)
        for (const auto& [k2, v2] : xp)
            if (!is_zero(v1) && !is_zero(v2))
                if (auto r = rational_sqrt(v1 / v2)) {
                    out.push_back(*r);
                    out.push_back(-*r);
                }
    return out;
}

/// Does scaling the canonical model of tp by k yield exactly t?
inline bool scaled_type_equals(const BlockType& t, const BlockType& tp, const Scalar& k) {
    if (is_zero(k)) return false;
    ComplexRealization c = complex_realization(tp);
    return decompose(Gauss(k) * c.A, c.H) == t;
}

/// Key map for x under scaling by k: block (m, eps) of tp corresponds to
/// (m, eps * sgn(k)^m) of t.
inline bool scaled_assignment_equals(const XtAssignment& x, const XtAssignment& xp, const Scalar& k) {
    auto normalized = [](const XtAssignment& a) {
        XtAssignment r;
        for (const auto& [key, val] : a)
            if (!is_zero(val)) r[key] = val;
        return r;
    };
    XtAssignment mapped;
    int s = sgn(k) > 0 ? 1 : -1;
    for (const auto& [key, val] : xp) {
        if (is_zero(val)) continue;
        int eps = (key.first % 2 == 0) ? key.second : key.second * s;
        mapped[{key.first, eps}] = k * k * val;
    }
    return normalized(x) == mapped;
}

}  // namespace detail

/// Decides unitary equivalence of two family instances: identical data, or one
/// of the known coincidences between distinct parameter points.
inline bool unitary_equivalent(const FamilyInstance& p, const FamilyInstance& q) {
    // Abelian coincidence: zero derivations of equal dimension and signature.
    PKStructure sp = build_family(p), sq = build_family(q);
    if (sp.D.is_zero_matrix() && sq.D.is_zero_matrix())
        return sp.dim == sq.dim && inertia(sp.g) == inertia(sq.g);
    if (p.family != q.family) return false;
    if (p == q) return true;
    switch (p.family) {
        case 0:
            return p.eps == q.eps && p.a == -q.a && p.t == reflect(q.t);
        case 2:
        case 3:
            if (p.family == 3 && p.c2 != q.c2) return false;
            for (const Scalar& k : detail::scale_candidates(p.t, q.t, p.x, q.x))
                if (detail::scaled_assignment_equals(p.x, q.x, k) && detail::scaled_type_equals(p.t, q.t, k))
                    return true;
            return false;
        case 6:
            for (const Scalar& k : detail::scale_candidates(p.t, q.t, {}, {}))
                if (detail::scaled_type_equals(p.t, q.t, k)) return true;
            return false;
        default:
            return false;
    }
}

/// Deterministic sweep of instances across all families over small types and
/// parameter grids; used by the verification campaigns.
inline std::vector<FamilyInstance> instance_sweep() {
    std::vector<FamilyInstance> out;
    auto gi = [](long re, long im) { return Gauss(rat(re), rat(im)); };

    std::vector<BlockType> types;
    std::vector<Gauss> pm_zetas = {gi(0, 0), gi(0, 1), gi(0, -1), gi(0, 2)};
    std::vector<Block> dim2;
    for (int eps : {1, -1})
        for (const Gauss& z : pm_zetas) dim2.push_back(pm_block(0, eps, z));
    for (const Block& b : dim2) {
        BlockType t;
        t.add(b);
        types.push_back(t);
    }
    for (size_t i = 0; i < dim2.size(); ++i)
        for (size_t j = i; j < dim2.size(); ++j) {
            BlockType t;
            t.add(dim2[i]);
            t.add(dim2[j]);
            types.push_back(t);
        }
    for (int eps : {1, -1})
        for (const Gauss& z : pm_zetas) {
            BlockType t;
            t.add(pm_block(1, eps, z));
            types.push_back(t);
        }
    for (const Scalar& rho : {rat(1, 2), rat(1), rat(2)})
        for (long lam : {0L, 1L}) {
            BlockType t;
            t.add(pair_block(0, Gauss(rho, rat(lam))));
            types.push_back(t);
        }

    std::vector<Scalar> grid = {rat(-2), rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1), rat(2)};
    std::vector<Scalar> xgrid = {rat(1, 2), rat(1), rat(2)};

    for (const BlockType& t : types) {
        for (const Scalar& a : grid)
            for (int eps : {1, -1}) {
                FamilyInstance p;
                p.family = 0;
                p.t = t;
                p.a = a;
                p.eps = eps;
                out.push_back(p);
            }
        for (const Scalar& c2 : grid) {
            FamilyInstance p;
            p.family = 1;
            p.t = t;
            p.c2 = c2;
            out.push_back(p);
        }
        for (const Scalar& c1 : grid) {
            FamilyInstance p;
            p.family = 4;
            p.t = t;
            p.c1 = c1;
            out.push_back(p);
        }
        {
            FamilyInstance p;
            p.family = 5;
            p.t = t;
            out.push_back(p);
            p.family = 6;
            out.push_back(p);
        }
        // Families 2 and 3: one nonzero x per nilpotent block, plus the
        // both-signs-one combination when available.
        std::vector<std::pair<int, int>> nilpotent;
        for (const auto& [b, mult] : t.items)
            if (!b.pair && is_zero(b.zeta.im)) nilpotent.emplace_back(b.m, b.eps);
        std::vector<XtAssignment> assignments;
        for (const auto& key : nilpotent)
            for (const Scalar& xv : xgrid) {
                XtAssignment x;
                x[key] = xv;
                assignments.push_back(x);
            }
        std::map<int, std::set<int>> by_m;
        for (const auto& key : nilpotent) by_m[key.first].insert(key.second);
        for (const auto& [m, signs] : by_m)
            if (signs.size() == 2) {
                XtAssignment x;
                x[{m, 1}] = rat(1);
                x[{m, -1}] = rat(1);
                assignments.push_back(x);
            }
        for (const XtAssignment& x : assignments)
            for (int fam : {2, 3}) {
                FamilyInstance p;
                p.family = fam;
                p.t = t;
                p.x = x;
                out.push_back(p);
            }
    }
    return out;
}

}  // namespace pkla
