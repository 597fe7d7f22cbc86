#pragma once

#include <optional>
#include <tuple>

#include "pkla/families.hpp"

namespace pkla {

namespace detail {

/// Deterministic total order used to pick canonical representatives.
inline bool instance_less(const FamilyInstance& p, const FamilyInstance& q) {
    auto key = [](const FamilyInstance& f) {
        return std::tie(f.family, f.t.items, f.a, f.c1, f.c2, f.x, f.eps);
    };
    return key(p) < key(q);
}

/// Recovers the x-assignment with v_of_x(t, x) == v; nullopt when v is not of
/// that shape.
inline std::optional<XtAssignment> assignment_of_v(const BlockType& t, const RMat& v) {
    XtAssignment x;
    for (const auto& [b, mult] : t.items) {
        if (b.pair || !is_zero(b.zeta)) continue;
        XtAssignment probe;
        probe[{b.m, b.eps}] = rat(1);
        RMat u = v_of_x(t, probe);
        for (int i = 0; i < u.rows(); ++i)
            if (!is_zero(u(i, 0)) && !is_zero(v(i, 0))) x[{b.m, b.eps}] = v(i, 0);
    }
    for (auto it = x.begin(); it != x.end();) {
        if (sgn(it->second) <= 0) return std::nullopt;  // admissible values are positive
        ++it;
    }
    try {
        validate_assignment(t, x);
    } catch (const InvalidAssignment&) {
        return std::nullopt;
    }
    if (x.empty() || v_of_x(t, x) != v) return std::nullopt;
    return x;
}

}  // namespace detail

/// Matches an adapted-basis structure against the seven exact family shapes
/// and returns the producing instance; NotCanonicalShape otherwise.
inline FamilyInstance classify_instance(const PKStructure& s) {
    Characterization c = characterize(s);
    FamilyInstance p;
    if (!c.isotropic) {
        int dv = s.dim - 2;
        p.family = 0;
        p.t = decompose(c.A, s.g.block(0, 0, dv, dv));
        p.a = c.a;
        p.eps = c.eps;
    } else {
        int dv = s.dim - 4;
        p.t = decompose(c.A, s.g.block(2, 2, dv, dv));
        bool v_zero = c.v.is_zero_matrix();
        if (c.a == rat(1) && v_zero && is_zero(c.c1)) {
            p.family = 1;
            p.c2 = c.c2;
        } else if (is_zero(c.a) && !v_zero && is_zero(c.c1) && (is_zero(c.c2) || c.c2 == rat(1))) {
            p.family = is_zero(c.c2) ? 2 : 3;
            auto x = detail::assignment_of_v(p.t, c.v);
            if (!x) throw NotCanonicalShape("the v column is not an admissible x-assignment");
            p.x = *x;
        } else if (is_zero(c.a) && v_zero && c.c2 == rat(1)) {
            p.family = 4;
            p.c1 = c.c1;
        } else if (is_zero(c.a) && v_zero && is_zero(c.c2) && c.c1 == rat(1)) {
            p.family = 5;
        } else if (is_zero(c.a) && v_zero && is_zero(c.c1) && is_zero(c.c2)) {
            p.family = 6;
        } else {
            throw NotCanonicalShape();
        }
    }
    PKStructure rebuilt = build_family(p);
    if (rebuilt.D != s.D || rebuilt.J != s.J || rebuilt.g != s.g) throw NotCanonicalShape();
    return p;
}

namespace detail {

/// Image of a family-2/3/6 instance under the unitary rescaling by k != 0
/// (the type is divided by k, x-values by k^2, odd-m keys pick up sgn k);
/// nullopt when the scaled data leave the admissible set.
inline std::optional<FamilyInstance> scaled_instance(const FamilyInstance& f, const Scalar& k) {
    if (is_zero(k)) return std::nullopt;
    FamilyInstance q = f;
    ComplexRealization c = complex_realization(f.t);
    try {
        q.t = decompose(Gauss(rat(1) / k) * c.A, c.H);
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
    q.x.clear();
    int sg = sgn(k) > 0 ? 1 : -1;
    for (const auto& [key, val] : f.x) {
        if (is_zero(val)) continue;
        if (sgn(val) < 0) return std::nullopt;
        int eps = (key.first % 2 == 0) ? key.second : key.second * sg;
        q.x[{key.first, eps}] = val / (k * k);
    }
    return q;
}

}  // namespace detail

/// Canonical representative of the unitary-equivalence class within a family:
/// reflection for family 0 (the lexicographically smaller of the pair), and
/// for families 2, 3, 6 the scale-normalized instance — the first nonzero
/// x-value (when its square root is rational), else the first nonzero zeta
/// component, is rescaled to 1; ties in the residual sign are broken
/// lexicographically.  Orbit-invariant for rational rescalings, idempotent.
inline FamilyInstance canonical_representative(const FamilyInstance& p) {
    FamilyInstance best = p;
    switch (p.family) {
        case 0: {
            FamilyInstance q = p;
            q.t = reflect(p.t);
            q.a = -p.a;
            if (detail::instance_less(q, best) && unitary_equivalent(p, q)) best = q;
            break;
        }
        case 2:
        case 3:
        case 6: {
            // Designated magnitude to normalize: the first nonzero x-value
            // with rational square root (its rationality is constant along
            // the rational-rescaling orbit), else the first nonzero zeta
            // component of the first block with zeta != 0.
            Scalar k0(1);
            bool found = false;
            for (const auto& [key, val] : p.x) {
                if (is_zero(val)) continue;
                if (auto r = detail::rational_sqrt(val)) {
                    k0 = *r;
                    found = true;
                }
                break;
            }
            if (!found)
                for (const auto& [b, mult] : p.t.items) {
                    if (!is_zero(b.zeta.re)) {
                        k0 = abs(b.zeta.re);
                        found = true;
                        break;
                    }
                    if (!is_zero(b.zeta.im)) {
                        k0 = abs(b.zeta.im);
                        found = true;
                        break;
                    }
                }
            if (found && k0 != rat(1))
                if (auto q = detail::scaled_instance(p, k0); q && unitary_equivalent(p, *q)) best = *q;
            // Residual sign freedom: compare with the k = -1 image.
            if (auto q = detail::scaled_instance(best, rat(-1));
                q && detail::instance_less(*q, best) && unitary_equivalent(p, *q))
                best = *q;
            break;
        }
        default:
            break;
    }
    return best;
}

}  // namespace pkla
