#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pkla/jordan.hpp"
#include "pkla/matrix.hpp"

namespace pkla {

/// Finite-dimensional real Lie algebra by structure constants; brackets are
/// stored sparsely with i < j (0-based internally, 1-based in JSON).
struct LieAlgebra {
    struct Term {
        int i, j, k;
        Scalar c;  // [e_i, e_j] contains c * e_k
    };

    int dim = 0;
    std::vector<Term> brackets;

    /// [e_i, e_j] for arbitrary index order.
    RMat basis_bracket(int i, int j) const {
        RMat v(dim, 1);
        if (i == j) return v;
        int sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -1;
        }
        for (const Term& t : brackets)
            if (t.i == i && t.j == j) v(t.k, 0) += sign * t.c;
        return v;
    }

    RMat bracket(const RMat& x, const RMat& y) const {
        RMat v(dim, 1);
        for (const Term& t : brackets) {
            Scalar coef = x(t.i, 0) * y(t.j, 0) - x(t.j, 0) * y(t.i, 0);
            if (!is_zero(coef)) v(t.k, 0) += coef * t.c;
        }
        return v;
    }

    /// Matrix of ad(e_i).
    RMat ad(int i) const {
        RMat m(dim, dim);
        for (int j = 0; j < dim; ++j) {
            RMat v = basis_bracket(i, j);
            for (int k = 0; k < dim; ++k) m(k, j) = v(k, 0);
        }
        return m;
    }

    /// Matrix whose columns are all basis brackets (spans the derived algebra).
    RMat derived_span() const {
        RMat m(dim, dim * dim);
        int col = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j, ++col) {
                RMat v = basis_bracket(i, j);
                for (int k = 0; k < dim; ++k) m(k, col) = v(k, 0);
            }
        return m;
    }
};

/// Cyclic Jacobi sum over all basis triples; zero iff the constants define a
/// Lie algebra.
struct JacobiDefect {
    bool is_zero = true;
    Scalar max_abs = Scalar(0);
};

inline JacobiDefect jacobi_defect(const LieAlgebra& l) {
    JacobiDefect d;
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j)
            for (int k = j + 1; k < l.dim; ++k) {
                RMat ei(l.dim, 1), ej(l.dim, 1), ek(l.dim, 1);
                ei(i, 0) = rat(1);
                ej(j, 0) = rat(1);
                ek(k, 0) = rat(1);
                RMat sum = l.bracket(l.basis_bracket(i, j), ek) + l.bracket(l.basis_bracket(j, k), ei) +
                           l.bracket(l.basis_bracket(k, i), ej);
                for (int r = 0; r < l.dim; ++r) {
                    Scalar a = abs(sum(r, 0));
                    if (!is_zero(a)) {
                        d.is_zero = false;
                        if (a > d.max_abs) d.max_abs = a;
                    }
                }
            }
    return d;
}

/// Almost abelian presentation: g = h x|_D R with abelian ideal h spanned by
/// e_1..e_m and [e_{m+1}, X] = DX.
struct AlmostAbelianPresentation {
    RMat D;
    int n = 0;  // for pseudo-Kaehler shapes dim h = 2n-1; zero when not set

    LieAlgebra to_algebra() const {
        int m = D.rows();
        LieAlgebra l;
        l.dim = m + 1;
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (!is_zero(D(k, j))) l.brackets.push_back({j, m, k, -D(k, j)});
        return l;
    }
};

inline LieAlgebra almost_abelian(const RMat& d) { return AlmostAbelianPresentation{d, 0}.to_algebra(); }

inline int b1(const LieAlgebra& l) { return l.dim - rank(l.derived_span()); }

inline bool is_unimodular(const LieAlgebra& l) {
    for (int i = 0; i < l.dim; ++i)
        if (!is_zero(l.ad(i).trace())) return false;
    return true;
}

inline bool is_nilpotent(const LieAlgebra& l) {
    // Lower central series via spanning column sets.
    RMat current = l.derived_span();
    int r = rank(current);
    while (r > 0) {
        // [g, current]
        RMat next(l.dim, l.dim * current.cols());
        int col = 0;
        for (int i = 0; i < l.dim; ++i) {
            RMat ei(l.dim, 1);
            ei(i, 0) = rat(1);
            for (int c = 0; c < current.cols(); ++c, ++col) {
                RMat v = l.bracket(ei, current.col(c));
                for (int k = 0; k < l.dim; ++k) next(k, col) = v(k, 0);
            }
        }
        int r2 = rank(next);
        if (r2 == 0) return true;
        if (r2 >= r) return false;  // series stalled above zero
        current = next;
        r = r2;
    }
    return true;
}

/// Checks the derivation identity E[x,y] = [Ex,y] + [x,Ey] on basis pairs.
inline bool is_derivation(const LieAlgebra& l, const RMat& e) {
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j) {
            RMat ei(l.dim, 1), ej(l.dim, 1);
            ei(i, 0) = rat(1);
            ej(j, 0) = rat(1);
            RMat lhs = e * l.basis_bracket(i, j);
            RMat rhs = l.bracket(e * ei, ej) + l.bracket(ei, e * ej);
            if (lhs != rhs) return false;
        }
    return true;
}

/// Canonical descriptor of an almost abelian algebra: Jordan type of D up to
/// nonzero rational scale (lexicographically minimal normalization) plus
/// structural flags.
struct IsoFingerprint {
    int dim = 0;
    bool abelian = false;
    bool heisenberg = false;  // heis_3 + R^k: D nilpotent of rank one
    JordanType type;          // normalized

    friend bool operator==(const IsoFingerprint& a, const IsoFingerprint& b) {
        return a.dim == b.dim && a.abelian == b.abelian && a.heisenberg == b.heisenberg && a.type == b.type;
    }
};

namespace detail {

inline JordanType scale_type(const JordanType& t, const Scalar& k) {
    JordanType r;
    for (const auto& b : t.blocks) {
        if (!b.complex_pair) {
            r.add_j(b.m, k * b.value.re, b.mult);
        } else {
            Gauss z(k * b.value.re, k * b.value.im);
            if (sgn(z.im) < 0) z = z.conj();  // keep the upper-half-plane representative
            r.add_c(b.m, z, b.mult);
        }
    }
    return r;
}

}  // namespace detail

inline IsoFingerprint iso_fingerprint(const AlmostAbelianPresentation& p) {
    IsoFingerprint f;
    f.dim = p.D.rows() + 1;
    f.abelian = p.D.is_zero_matrix();
    f.heisenberg = !f.abelian && rank(p.D) == 1 && (p.D * p.D).is_zero_matrix();
    JordanType t = jordan_type(p.D);
    // Candidate scales: +-1/c over every nonzero eigenvalue component.
    std::vector<Scalar> comps;
    for (const auto& b : t.blocks) {
        if (!is_zero(b.value.re)) comps.push_back(abs(b.value.re));
        if (!is_zero(b.value.im)) comps.push_back(abs(b.value.im));
    }
    if (comps.empty()) {
        f.type = t;  // nilpotent: scaling does not change the type
        return f;
    }
    std::optional<JordanType> best;
    for (const Scalar& c : comps)
        for (int s : {1, -1}) {
            JordanType cand = detail::scale_type(t, Scalar(s) / c);
            if (!best || cand < *best) best = cand;
        }
    f.type = *best;
    return f;
}

/// Built-in comparison algebras, shipped as almost abelian presentations.
struct NamedAlgebra {
    std::string name;
    RMat D;
};

inline std::vector<NamedAlgebra> named_catalog(const Scalar& delta = Scalar(1)) {
    auto z = [] { return rat(0); };
    std::vector<NamedAlgebra> cat;
    // heis_3 + R: rank-one nilpotent derivation on R^3.
    cat.push_back({"rh3", {{z(), rat(1), z()}, {z(), z(), z()}, {z(), z(), z()}}});
    cat.push_back({"rr3_0", {{rat(1), z(), z()}, {z(), z(), z()}, {z(), z(), z()}}});
    cat.push_back({"rr'3_0", {{z(), rat(-1), z()}, {rat(1), z(), z()}, {z(), z(), z()}}});
    cat.push_back({"r4_-1_-1", {{rat(1), z(), z()}, {z(), rat(-1), z()}, {z(), z(), rat(-1)}}});
    cat.push_back({"r'4_0_delta", {{z(), rat(-1), z()}, {rat(1), z(), z()}, {z(), z(), delta}}});
    {
        // h6: the u(1,1) block with a one-dimensional kernel appended.
        RMat a = {{z(), rat(1), rat(1), z()},
                  {rat(-1), z(), z(), rat(1)},
                  {rat(1), z(), z(), rat(-1)},
                  {z(), rat(1), rat(1), z()}};
        RMat d(5, 5);
        d.set_block(0, 0, a);
        cat.push_back({"h6", d});
    }
    {
        RMat d(5, 5);  // h8: J_1(0) + 3 J_0(0)
        d(0, 1) = rat(1);
        cat.push_back({"h8", d});
    }
    {
        RMat d(5, 5);  // h10: J_2(0) + J_1(0)
        d(0, 1) = rat(1);
        d(1, 2) = rat(1);
        d(3, 4) = rat(1);
        cat.push_back({"h10", d});
    }
    return cat;
}

/// Matches a presentation against the named catalog by fingerprint; the
/// r'4_0_delta entry is a continuous family, matched with the input's own
/// scale-invariant ratio.
inline std::optional<std::string> named_match(const AlmostAbelianPresentation& p) {
    IsoFingerprint f = iso_fingerprint(p);
    // Extract a delta candidate from the normalized type: the scale-invariant
    // ratio |real eigenvalue| / |rotation speed| of a J + C pattern.
    Scalar delta(1), jmag(0), cim(0);
    for (const auto& b : f.type.blocks) {
        if (!b.complex_pair && !is_zero(b.value.re)) jmag = abs(b.value.re);
        if (b.complex_pair && !is_zero(b.value.im)) cim = abs(b.value.im);
    }
    if (!is_zero(jmag)) delta = is_zero(cim) ? jmag : jmag / cim;
    for (const auto& named : named_catalog(delta)) {
        AlmostAbelianPresentation q{named.D, 0};
        if (iso_fingerprint(q) == f) return named.name;
    }
    return std::nullopt;
}

}  // namespace pkla
