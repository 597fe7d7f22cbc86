#pragma once

#include <optional>
#include <vector>

#include "pkla/families.hpp"
#include "pkla/lie_algebra.hpp"

namespace pkla {

/// Levi-Civita connection of a left-invariant metric, as the family of
/// covariant derivative operators nabla[i] = matrix of nabla_{e_i}.
struct Connection {
    int dim = 0;
    std::vector<RMat> nabla;

    RMat nabla_x(const RMat& x) const {
        RMat m(dim, dim);
        for (int i = 0; i < dim; ++i)
            if (!is_zero(x(i, 0))) m = m + x(i, 0) * nabla[i];
        return m;
    }
};

inline Connection levi_civita(const LieAlgebra& l, const RMat& g) {
    int n = l.dim;
    if (g != g.transpose() || is_zero(det(g))) throw DegenerateMetric();
    RMat ginv = inverse(g);
    Connection c;
    c.dim = n;
    c.nabla.assign(n, RMat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RMat rhs(n, 1);
            RMat bij = l.basis_bracket(i, j);
            for (int k = 0; k < n; ++k) {
                RMat ek(n, 1);
                ek(k, 0) = rat(1);
                RMat bjk = l.basis_bracket(j, k);
                RMat bki = l.basis_bracket(k, i);
                Scalar val = (bij.transpose() * g * ek)(0, 0);
                RMat ei(n, 1), ej(n, 1);
                ei(i, 0) = rat(1);
                ej(j, 0) = rat(1);
                val -= (bjk.transpose() * g * ei)(0, 0);
                val += (bki.transpose() * g * ej)(0, 0);
                rhs(k, 0) = val / 2;
            }
            RMat w = ginv * rhs;
            for (int k = 0; k < n; ++k) c.nabla[i](k, j) = w(k, 0);
        }
    return c;
}

/// Riemann and Ricci curvature of a connection on a Lie algebra.
struct CurvatureData {
    int dim = 0;
    std::vector<std::vector<RMat>> R;  // R[i][j] = R(e_i, e_j), j > i used
    RMat ricci;                        // bilinear form Ric(e_i, e_j)
    RMat ric_op;                       // endomorphism with Ric = g(ric ., .)

    bool flat() const {
        for (const auto& row : R)
            for (const RMat& m : row)
                if (!m.is_zero_matrix()) return false;
        return true;
    }
    bool ricci_flat() const { return ricci.is_zero_matrix(); }
};

inline CurvatureData curvature(const LieAlgebra& l, const RMat& g, const Connection& c) {
    int n = l.dim;
    CurvatureData out;
    out.dim = n;
    out.R.assign(n, std::vector<RMat>(n, RMat(n, n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RMat r = c.nabla[i] * c.nabla[j] - c.nabla[j] * c.nabla[i] - c.nabla_x(l.basis_bracket(i, j));
            out.R[i][j] = r;
            out.R[j][i] = rat(-1) * r;
        }
    out.ricci = RMat(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Scalar tr(0);
            for (int i = 0; i < n; ++i) tr += out.R[i][j](i, k);
            out.ricci(j, k) = tr;
        }
    out.ric_op = inverse(g) * out.ricci;
    return out;
}

inline CurvatureData curvature(const LieAlgebra& l, const RMat& g) { return curvature(l, g, levi_civita(l, g)); }

inline bool is_flat(const LieAlgebra& l, const RMat& g) { return curvature(l, g).flat(); }
inline bool is_ricci_flat(const LieAlgebra& l, const RMat& g) { return curvature(l, g).ricci_flat(); }

/// Algebraic Ricci soliton data: ric = lambda Id + delta with delta a
/// derivation.
struct SolitonData {
    Scalar lambda;
    RMat delta;
};

inline std::optional<SolitonData> ricci_soliton(const LieAlgebra& l, const RMat& g) {
    CurvatureData cd = curvature(l, g);
    const RMat& ric = cd.ric_op;
    int n = l.dim;
    std::optional<Scalar> lambda;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RMat w = l.basis_bracket(i, j);
            RMat ei(n, 1), ej(n, 1);
            ei(i, 0) = rat(1);
            ej(j, 0) = rat(1);
            RMat rhs = l.bracket(ric * ei, ej) + l.bracket(ei, ric * ej) - ric * w;
            if (w.is_zero_matrix()) {
                if (!rhs.is_zero_matrix()) return std::nullopt;
                continue;
            }
            // lambda * w = rhs must hold exactly.
            Scalar cand(0);
            for (int k = 0; k < n; ++k)
                if (!is_zero(w(k, 0))) {
                    cand = rhs(k, 0) / w(k, 0);
                    break;
                }
            if (rhs != cand * w) return std::nullopt;
            if (lambda && *lambda != cand) return std::nullopt;
            lambda = cand;
        }
    SolitonData out;
    // Unconstrained (e.g. abelian): pick the minimal-norm representative.
    out.lambda = lambda ? *lambda : ric.trace() / rat(n);
    out.delta = ric - out.lambda * RMat::identity(n);
    if (!is_derivation(l, out.delta)) return std::nullopt;
    return out;
}

/// Completeness of a flat left-invariant metric: every covariant derivative
/// operator is nilpotent and the family is simultaneously strictly
/// triangularizable (iterated images of the whole space reach zero).
inline bool flat_complete(const LieAlgebra& l, const RMat& g) {
    Connection c = levi_civita(l, g);
    if (!curvature(l, g, c).flat()) throw NotFlat();
    int n = l.dim;
    for (const RMat& m : c.nabla)
        if (!m.pow(n).is_zero_matrix()) return false;
    // W_{k+1} = sum_i nabla_i(W_k), starting from the whole space.
    RMat w = RMat::identity(n);
    int r = n;
    while (r > 0) {
        RMat next(n, n * w.cols());
        for (int i = 0; i < n; ++i) {
            RMat part = c.nabla[i] * w;
            next.set_block(0, i * w.cols(), part);
        }
        int r2 = rank(next);
        if (r2 == 0) return true;
        if (r2 >= r) return false;
        // Replace by a column basis of the image span.
        std::vector<RMat> basis;
        for (int col = 0; col < next.cols() && static_cast<int>(basis.size()) < r2; ++col) {
            std::vector<RMat> cand = basis;
            cand.push_back(next.col(col));
            if (rank(cols_to_matrix(cand, n)) > static_cast<int>(basis.size())) basis = cand;
        }
        w = cols_to_matrix(basis, n);
        r = r2;
    }
    return true;
}

/// Rank of the linear map X -> nabla_X.
inline int nabla_rank(const Connection& c) {
    int n = c.dim;
    RMat stacked(n * n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) stacked(r * n + s, i) = c.nabla[i](r, s);
    return rank(stacked);
}

namespace detail {

inline std::vector<RMat> predicted_nabla(const PKStructure& s, const Characterization& c) {
    int n = s.dim;
    std::vector<RMat> nabla(n, RMat(n, n));
    if (!c.isotropic) {
        int dv = n - 2;
        nabla[n - 2](n - 1, n - 2) = c.a;
        nabla[n - 2](n - 2, n - 1) = -c.a;
        nabla[n - 1].set_block(0, 0, c.A);
        (void)dv;
        return nabla;
    }
    int dv = n - 4;
    nabla[n - 2](0, n - 2) = -c.c2;
    nabla[n - 2](1, n - 1) = -c.c2;
    RMat& ne = nabla[n - 1];
    ne(0, 0) = -c.a;
    ne(1, 1) = -c.a;
    RMat gv = s.g.block(2, 2, dv, dv);
    RMat jv = standard_J(dv);
    RMat row_jx = c.v.transpose() * gv * jv;  // g(v, J e_k)
    RMat row_x = c.v.transpose() * gv;        // g(v, e_k)
    for (int k = 0; k < dv; ++k) {
        ne(0, 2 + k) = row_jx(0, k);
        ne(1, 2 + k) = row_x(0, k);
    }
    ne.set_block(2, 2, c.A);
    ne(0, n - 2) = c.c1;
    for (int k = 0; k < dv; ++k) ne(2 + k, n - 2) = c.v(k, 0);
    ne(n - 2, n - 2) = c.a;
    ne(1, n - 1) = c.c1;
    RMat jvv = jv * c.v;
    for (int k = 0; k < dv; ++k) ne(2 + k, n - 1) = jvv(k, 0);
    ne(n - 1, n - 1) = c.a;
    return nabla;
}

}  // namespace detail

/// Verifies the computed connection, curvature, and Ricci tensor against the
/// closed-form expressions for adapted structures.
inline bool closed_form_check(const PKStructure& s) {
    Characterization c = characterize(s);
    LieAlgebra l = s.algebra();
    Connection conn = levi_civita(l, s.g);
    CurvatureData cd = curvature(l, s.g, conn);
    int n = s.dim;

    std::vector<RMat> want = detail::predicted_nabla(s, c);
    for (int i = 0; i < n; ++i)
        if (conn.nabla[i] != want[i]) return false;

    // Curvature: only R(e_{2n-1}, e_{2n}) survives.
    Scalar factor = c.isotropic ? rat(3) * c.a : c.a;
    RMat want_r = factor * want[n - 2];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const RMat& expected = (i == n - 2 && j == n - 1) ? want_r : RMat(n, n);
            if (cd.R[i][j] != expected) return false;
        }

    // Ricci: zero in the isotropic case, -a^2 on the distinguished plane else.
    RMat want_ric(n, n);
    if (!c.isotropic) {
        want_ric(n - 2, n - 2) = -c.a * c.a;
        want_ric(n - 1, n - 1) = -c.a * c.a;
    }
    if (cd.ricci != want_ric) return false;

    // Flatness matches the parameter criterion.
    bool flat_pred = c.isotropic ? is_zero(c.a * c.c2) : is_zero(c.a);
    if (cd.flat() != flat_pred) return false;
    return true;
}

}  // namespace pkla
