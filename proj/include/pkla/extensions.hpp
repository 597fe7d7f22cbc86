#pragma once

#include <optional>
#include <vector>

#include "pkla/curvature.hpp"
#include "pkla/families.hpp"

namespace pkla {

/// Structural test for derivations of an almost abelian algebra h x|_D R:
/// writing E = [[K, u], [alpha, k]] in the split basis, E is a derivation iff
/// [K, D] = k D and either alpha = 0 or (Im D in ker alpha and
/// ker alpha in ker D).
inline bool almost_abelian_derivation_form(const RMat& d, const RMat& e) {
    int m = d.rows();
    RMat k = e.block(0, 0, m, m);
    RMat alpha = e.block(m, 0, 1, m);
    Scalar kk = e(m, m);
    if (k * d - d * k != kk * d) return false;
    if (alpha.is_zero_matrix()) return true;
    // Im D in ker alpha.
    if (!(alpha * d).is_zero_matrix()) return false;
    // ker alpha in ker D: D must factor through alpha, i.e. D = c * alpha
    // rowwise for some column c.
    for (std::vector<RMat> kb = kernel_basis(alpha); const RMat& v : kb)
        if (!(d * v).is_zero_matrix()) return false;
    return true;
}

/// Template for admissible extension derivations of an isotropic nilpotent
/// instance: parameters (d11, d12, d15, d51, z, w, Q) with P = Id + Q.
struct ExtensionParams {
    Scalar d11 = Scalar(0), d12 = Scalar(0), d15 = Scalar(0), d51 = Scalar(0);
    RMat z, w, Q;  // z, w in V; Q in u(V) commuting with A
};

inline RMat extension_derivation_matrix(const PKStructure& s, const ExtensionParams& par) {
    int n = s.dim;
    int dv = n - 4;
    RMat gv = s.g.block(2, 2, dv, dv);
    RMat jv = standard_J(dv);
    RMat m(n, n);
    RMat fz = detail::flat(par.z, gv);
    RMat fjz = detail::flat(jv * par.z, gv);
    RMat fw = detail::flat(par.w, gv);
    RMat fjw = detail::flat(jv * par.w, gv);
    m(0, 0) = rat(1) + par.d11;
    m(0, 1) = par.d12;
    m(1, 0) = -par.d12;
    m(1, 1) = rat(1) + par.d11;
    for (int k = 0; k < dv; ++k) {
        m(0, 2 + k) = -fjz(0, k);
        m(1, 2 + k) = fz(0, k);
        m(2 + k, 0) = par.w(k, 0);
        m(2 + k, 1) = (jv * par.w)(k, 0);
        m(n - 2, 2 + k) = fjw(0, k);
        m(n - 1, 2 + k) = -fw(0, k);
        m(2 + k, n - 2) = par.z(k, 0);
        m(2 + k, n - 1) = (jv * par.z)(k, 0);
    }
    m(0, n - 2) = par.d15;
    m(1, n - 1) = par.d15;
    m.set_block(2, 2, RMat::identity(dv) + par.Q);
    m(n - 2, 0) = par.d51;
    m(n - 1, 1) = par.d51;
    m(n - 2, n - 2) = rat(1) - par.d11;
    m(n - 2, n - 1) = par.d12;
    m(n - 1, n - 2) = -par.d12;
    m(n - 1, n - 1) = rat(1) - par.d11;
    return m;
}

/// Solution space of admissible extension derivations.
struct ExtensionSpace {
    bool exists = false;
    RMat basepoint;               // the identity-based template (all params 0)
    std::vector<RMat> directions;  // basis of the admissible parameter space
};

namespace detail {

/// Basis of { Q : Q^T g + g Q = 0, Q J = J Q, Q A = A Q } on V.
inline std::vector<RMat> unitary_commutant_basis(const RMat& a, const RMat& gv, const RMat& jv) {
    int dv = gv.rows();
    if (dv == 0) return {};
    // Row-constraint matrix over the dv^2 entries of Q; coeff(i, j, r, s)
    // gives the coefficient of Q(r, s) in constraint entry (i, j).
    std::vector<RMat> rows;
    auto add_constraint_matrix = [&](auto coeff) {
        for (int i = 0; i < dv; ++i)
            for (int j = 0; j < dv; ++j) {
                RMat row(1, dv * dv);
                for (int r = 0; r < dv; ++r)
                    for (int sidx = 0; sidx < dv; ++sidx) row(0, r * dv + sidx) = coeff(i, j, r, sidx);
                rows.push_back(row);
            }
    };
    add_constraint_matrix([&](int i, int j, int r, int sidx) {
        // (Q^T g + g Q)(i,j) = sum_r Q(r,i) g(r,j) + g(i,r) Q(r,j)
        Scalar c(0);
        if (sidx == i) c += gv(r, j);
        if (sidx == j) c += gv(i, r);
        return c;
    });
    add_constraint_matrix([&](int i, int j, int r, int sidx) {
        // (Q J - J Q)(i,j) = sum Q(i,s) J(s,j) - J(i,r) Q(r,j)
        Scalar c(0);
        if (r == i) c += jv(sidx, j);
        if (sidx == j) c -= jv(i, r);
        return c;
    });
    add_constraint_matrix([&](int i, int j, int r, int sidx) {
        // (Q A - A Q)(i,j)
        Scalar c(0);
        if (r == i) c += a(sidx, j);
        if (sidx == j) c -= a(i, r);
        return c;
    });
    RMat m(static_cast<int>(rows.size()), dv * dv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < dv * dv; ++j) m(i, j) = rows[i](0, j);
    std::vector<RMat> out;
    for (const RMat& v : kernel_basis(m)) {
        RMat q(dv, dv);
        for (int r = 0; r < dv; ++r)
            for (int sidx = 0; sidx < dv; ++sidx) q(r, sidx) = v(r * dv + sidx, 0);
        out.push_back(q);
    }
    return out;
}

}  // namespace detail

namespace detail {

/// Stacks the derivation defect Ddot[e_i,e_j] - [Ddot e_i,e_j] - [e_i,Ddot e_j]
/// over all basis pairs into one column vector; linear in Ddot.
inline RMat derivation_defect(const LieAlgebra& l, const RMat& dd) {
    int n = l.dim;
    RMat out(n * n * (n - 1) / 2, 1);
    int at = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RMat w = dd * l.basis_bracket(i, j);
            for (int r = 0; r < n; ++r) {
                if (!is_zero(dd(r, i))) w = w - dd(r, i) * l.basis_bracket(r, j);
                if (!is_zero(dd(r, j))) w = w - dd(r, j) * l.basis_bracket(i, r);
            }
            for (int r = 0; r < n; ++r) out(at++, 0) = w(r, 0);
        }
    return out;
}

}  // namespace detail

inline ExtensionSpace solve_extension_derivations(const PKStructure& s) {
    LieAlgebra l = s.algebra();
    if (!is_nilpotent(l)) throw NotNilpotent();
    Characterization c = characterize(s);
    ExtensionSpace out;
    if (!c.isotropic) {
        if (!s.D.is_zero_matrix()) return out;  // non-isotropic non-abelian: none
        out.exists = true;
        out.basepoint = RMat::identity(s.dim);
        out.directions = detail::unitary_commutant_basis(RMat(s.dim, s.dim), s.g, s.J);
        return out;
    }
    int dv = s.dim - 4;
    RMat gv = s.g.block(2, 2, dv, dv);
    RMat jv = standard_J(dv);
    // The template with Q ranging over all of u(V) parametrizes exactly the
    // endomorphisms Id + (g-skew, J-commuting); it remains to cut out the
    // derivation condition, which is linear in the parameters.
    std::vector<RMat> qbasis = detail::unitary_commutant_basis(RMat(dv, dv), gv, jv);
    int np = 4 + 2 * dv + static_cast<int>(qbasis.size());
    ExtensionParams zero{Scalar(0), Scalar(0), Scalar(0), Scalar(0), RMat(dv, 1), RMat(dv, 1), RMat(dv, dv)};
    RMat base0 = extension_derivation_matrix(s, zero);
    auto unit_params = [&](int i) {
        ExtensionParams par = zero;
        if (i == 0)
            par.d11 = rat(1);
        else if (i == 1)
            par.d12 = rat(1);
        else if (i == 2)
            par.d15 = rat(1);
        else if (i == 3)
            par.d51 = rat(1);
        else if (i < 4 + dv)
            par.z(i - 4, 0) = rat(1);
        else if (i < 4 + 2 * dv)
            par.w(i - 4 - dv, 0) = rat(1);
        else
            par.Q = qbasis[static_cast<size_t>(i - 4 - 2 * dv)];
        return par;
    };
    std::vector<RMat> dirs;
    for (int i = 0; i < np; ++i) dirs.push_back(extension_derivation_matrix(s, unit_params(i)) - base0);

    RMat rhs = rat(-1) * detail::derivation_defect(l, base0);
    RMat m(rhs.rows(), np);
    for (int i = 0; i < np; ++i) {
        RMat col = detail::derivation_defect(l, dirs[i]);
        for (int r = 0; r < rhs.rows(); ++r) m(r, i) = col(r, 0);
    }
    RMat u0;
    try {
        u0 = solve(m, rhs);
    } catch (const PreconditionError&) {
        return out;  // no admissible derivation
    }
    auto matrix_from = [&](const RMat& u) {
        RMat dd = base0;
        for (int i = 0; i < np; ++i)
            if (!is_zero(u(i, 0))) dd = dd + u(i, 0) * dirs[i];
        return dd;
    };
    out.exists = true;
    out.basepoint = matrix_from(u0);
    for (const RMat& u : kernel_basis(m)) out.directions.push_back(matrix_from(u) - base0);
    return out;
}

/// The Einstein extension g~ = (g + R b) x| R e0 of a pseudo-Kaehler algebra.
struct EinsteinExtension {
    LieAlgebra algebra;  // dim = dim g + 2; ordering (e_1..e_{2n}, b, e0)
    RMat J;
    RMat g;
    Scalar einstein_constant;  // Ric = einstein_constant * g
};

inline EinsteinExtension einstein_extend(const LieAlgebra& l, const RMat& j, const RMat& g, const RMat& ddot) {
    int n = l.dim;
    int nt = n + 2;
    int bidx = n, e0 = n + 1;
    EinsteinExtension ext;
    ext.algebra.dim = nt;
    RMat omega = j.transpose() * g;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            RMat w = l.basis_bracket(a, b);
            for (int k = 0; k < n; ++k)
                if (!is_zero(w(k, 0))) ext.algebra.brackets.push_back({a, b, k, w(k, 0)});
            RMat ea(n, 1), eb(n, 1);
            ea(a, 0) = rat(1);
            eb(b, 0) = rat(1);
            Scalar om = (ea.transpose() * omega * eb)(0, 0);
            if (!is_zero(om)) ext.algebra.brackets.push_back({a, b, bidx, rat(2) * om});
        }
    // [X, e0] = -Ddot X and [b, e0] = -2b.
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
            if (!is_zero(ddot(k, a))) ext.algebra.brackets.push_back({a, e0, k, -ddot(k, a)});
    ext.algebra.brackets.push_back({bidx, e0, bidx, rat(-2)});

    ext.J = RMat(nt, nt);
    ext.J.set_block(0, 0, j);
    ext.J(e0, bidx) = rat(1);   // J b = e0
    ext.J(bidx, e0) = rat(-1);  // J e0 = -b
    ext.g = RMat(nt, nt);
    ext.g.set_block(0, 0, g);
    ext.g(bidx, bidx) = rat(-1);
    ext.g(e0, e0) = rat(-1);

    if (!jacobi_defect(ext.algebra).is_zero)
        throw InvalidDerivation("extension does not satisfy the Jacobi identity");
    if (!verify_pk(ext.algebra, ext.J, ext.g).ok())
        throw InvalidDerivation("extension is not pseudo-Kaehler");
    CurvatureData cd = curvature(ext.algebra, ext.g);
    // Ric must be proportional to the metric.
    Scalar lambda = cd.ricci(e0, e0) / ext.g(e0, e0);
    if (cd.ricci != lambda * ext.g) throw InvalidDerivation("extension is not Einstein");
    ext.einstein_constant = lambda;
    return ext;
}

inline EinsteinExtension einstein_extend(const PKStructure& s, const RMat& ddot) {
    return einstein_extend(s.algebra(), s.J, s.g, ddot);
}

/// Classification of admissible extension derivations for the four
/// six-dimensional nilpotent isotropic bases.
struct SixDimExtensionClass {
    std::string base_name;
    FamilyInstance base;
    ExtensionSpace space;
};

inline std::vector<SixDimExtensionClass> classify_6d_extensions() {
    std::vector<SixDimExtensionClass> out;
    BlockType t;
    t.add(pm_block(0, 1));
    auto add = [&](const std::string& name, const FamilyInstance& p) {
        out.push_back({name, p, solve_extension_derivations(build_family(p))});
    };
    {
        FamilyInstance p;
        p.family = 2;
        p.t = t;
        p.x[{0, 1}] = rat(1);
        add("D2", p);
        p.family = 3;
        add("D3", p);
    }
    {
        FamilyInstance p;
        p.family = 4;
        p.t = t;
        p.c1 = rat(1);
        add("D4", p);
        FamilyInstance q;
        q.family = 5;
        q.t = t;
        add("D5", q);
    }
    return out;
}

}  // namespace pkla
