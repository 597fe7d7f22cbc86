#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "pkla/matrix.hpp"
#include "pkla/spectrum.hpp"

namespace pkla {

/// One canonical-form block: Delta_m^eps(zeta) with zeta imaginary (pm kind),
/// or Delta_m(zeta, -conj zeta) with Re zeta > 0 (pair kind).
struct Block {
    bool pair = false;
    int m = 0;
    int eps = 1;  // pm kind only; fixed +1 for pair blocks
    Gauss zeta;

    friend bool operator==(const Block& a, const Block& b) {
        return a.pair == b.pair && a.m == b.m && a.eps == b.eps && a.zeta == b.zeta;
    }
    friend bool operator<(const Block& a, const Block& b) {
        return std::tie(a.pair, a.m, a.eps, a.zeta) < std::tie(b.pair, b.m, b.eps, b.zeta);
    }

    int complex_dim() const { return pair ? 2 * (m + 1) : (m + 1); }
    int real_dim() const { return 2 * complex_dim(); }
};

inline Block pm_block(int m, int eps, const Gauss& zeta = Gauss()) {
    if (!zeta.is_imaginary()) throw PreconditionError("InvalidBlock", "pm block eigenvalue must be imaginary");
    if (eps != 1 && eps != -1) throw PreconditionError("InvalidBlock", "pm block sign must be +-1");
    return {false, m, eps, zeta};
}

inline Block pair_block(int m, const Gauss& zeta) {
    if (sgn(zeta.re) <= 0) throw PreconditionError("InvalidBlock", "pair block eigenvalue must have positive real part");
    return {true, m, 1, zeta};
}

/// Element of the free abelian semigroup on blocks: canonical sorted multiset.
struct BlockType {
    std::vector<std::pair<Block, int>> items;

    void add(const Block& b, int mult = 1) {
        for (auto& [blk, m] : items)
            if (blk == b) {
                m += mult;
                items.erase(std::remove_if(items.begin(), items.end(), [](const auto& it) { return it.second == 0; }),
                            items.end());
                std::sort(items.begin(), items.end());
                return;
            }
        items.emplace_back(b, mult);
        std::sort(items.begin(), items.end());
    }

    int real_dim() const {
        int d = 0;
        for (const auto& [b, m] : items) d += m * b.real_dim();
        return d;
    }
    int complex_dim() const { return real_dim() / 2; }

    friend bool operator==(const BlockType& a, const BlockType& b) { return a.items == b.items; }
    friend bool operator!=(const BlockType& a, const BlockType& b) { return !(a == b); }
    friend bool operator<(const BlockType& a, const BlockType& b) { return a.items < b.items; }
};

/// The displayed antidiagonal Hermitian form h_m on C^{m+1}.
inline CMat hermitian_form_matrix(int m) {
    CMat h(m + 1, m + 1);
    for (int j = 0; j <= m; ++j) {
        Scalar sign = (j % 2 == 0) ? rat(1) : rat(-1);
        h(j, m - j) = (m % 2 == 0) ? Gauss(sign, rat(0)) : Gauss(rat(0), sign);
    }
    return h;
}

/// Upper bidiagonal Jordan block A_{zeta,m} of size m+1.
inline CMat jordan_block_c(const Gauss& zeta, int m) {
    CMat a(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) {
        a(i, i) = zeta;
        if (i < m) a(i, i + 1) = Gauss(rat(1));
    }
    return a;
}

/// Complex-side model of a type: block-diagonal (A, H) in the canonical order.
struct ComplexRealization {
    CMat A;
    CMat H;
};

inline ComplexRealization complex_realization(const BlockType& t) {
    int n = t.complex_dim();
    CMat a(n, n), h(n, n);
    int off = 0;
    for (const auto& [b, mult] : t.items) {
        for (int copy = 0; copy < mult; ++copy) {
            if (!b.pair) {
                a.set_block(off, off, jordan_block_c(b.zeta, b.m));
                CMat hb = hermitian_form_matrix(b.m);
                if (b.eps < 0) hb = Gauss(rat(-1)) * hb;
                h.set_block(off, off, hb);
                off += b.m + 1;
            } else {
                a.set_block(off, off, jordan_block_c(b.zeta, b.m));
                a.set_block(off + b.m + 1, off + b.m + 1, jordan_block_c(-b.zeta.conj(), b.m));
                h.set_block(off, off, hermitian_form_matrix(2 * b.m + 1));
                off += 2 * (b.m + 1);
            }
        }
    }
    return {a, h};
}

/// Real realization (V(t), A(t), J(t), g(t)).
struct Realization {
    int dimV = 0;
    RMat A;
    RMat J;
    RMat g;
};

/// Standard complex structure on R^{2n}: per-pair blocks with J e_{2i-1} = e_{2i}.
inline RMat standard_J(int dimV) {
    RMat j(dimV, dimV);
    for (int p = 0; p + 1 < dimV; p += 2) {
        j(p, p + 1) = rat(-1);
        j(p + 1, p) = rat(1);
    }
    return j;
}

inline Realization realize(const BlockType& t) {
    ComplexRealization c = complex_realization(t);
    Realization r;
    r.dimV = t.real_dim();
    r.A = realify(c.A);
    r.g = realify(c.H);
    r.J = standard_J(r.dimV);
    return r;
}

/// Signature (p, q) of the Hermitian form of a type, by the per-block formulas.
inline std::pair<int, int> signature(const BlockType& t) {
    int p = 0, q = 0;
    for (const auto& [b, mult] : t.items) {
        int bp, bq;
        if (b.pair) {
            bp = b.m + 1;
            bq = b.m + 1;
        } else if (b.m % 2 == 1) {
            int k = (b.m + 1) / 2;
            bp = k;
            bq = k;
        } else {
            int k = b.m / 2;
            int sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k
            if (sign == b.eps) {
                bp = k + 1;
                bq = k;
            } else {
                bp = k;
                bq = k + 1;
            }
        }
        p += mult * bp;
        q += mult * bq;
    }
    return {p, q};
}

/// The sign-reversal map r.
inline BlockType reflect(const BlockType& t) {
    BlockType r;
    for (const auto& [b, mult] : t.items) {
        if (!b.pair) {
            int eps = (b.m % 2 == 0) ? b.eps : -b.eps;
            r.add(pm_block(b.m, eps, -b.zeta), mult);
        } else {
            r.add(pair_block(b.m, b.zeta.conj()), mult);
        }
    }
    return r;
}

/// Assignment x on nilpotent pm blocks, keyed by (m, eps).
using XtAssignment = std::map<std::pair<int, int>, Scalar>;

inline void validate_assignment(const BlockType& t, const XtAssignment& x) {
    for (const auto& [key, val] : x) {
        if (sgn(val) < 0) throw InvalidAssignment("x values must be nonnegative");
        if (is_zero(val)) continue;
        bool present = false;
        for (const auto& [b, mult] : t.items)
            if (!b.pair && is_zero(b.zeta.im) && b.m == key.first && b.eps == key.second) present = true;
        if (!present) throw InvalidAssignment("x assigned to a block absent from the type");
    }
    // For every m: x+ * x- = 0 or both equal 1.
    std::map<int, std::pair<Scalar, Scalar>> by_m;
    for (const auto& [key, val] : x) {
        auto& e = by_m[key.first];
        if (key.second > 0)
            e.first = val;
        else
            e.second = val;
    }
    for (const auto& [m, pairv] : by_m) {
        const auto& [xp, xm] = pairv;
        bool product_zero = is_zero(xp * xm);
        bool both_one = (xp == rat(1) && xm == rat(1));
        if (!product_zero && !both_one) throw InvalidAssignment("x(+)x(-) must vanish unless both are 1");
    }
}

/// v(x): sum over nilpotent blocks of x(Delta) times the last standard complex
/// basis vector of the first copy of V(Delta), as a real vector.
inline RMat v_of_x(const BlockType& t, const XtAssignment& x) {
    validate_assignment(t, x);
    RMat v(t.real_dim(), 1);
    int off = 0;  // complex offset
    for (const auto& [b, mult] : t.items) {
        if (!b.pair && is_zero(b.zeta.im) && is_zero(b.zeta.re)) {
            auto it = x.find({b.m, b.eps});
            if (it != x.end() && !is_zero(it->second)) {
                int last_complex = off + b.m;      // last coordinate of the first copy
                v(2 * last_complex, 0) = it->second;  // real part coordinate
            }
        }
        off += mult * b.complex_dim();
    }
    return v;
}

namespace detail {

inline Gauss i_power(int k) {
    k = ((k % 4) + 4) % 4;
    switch (k) {
        case 0: return Gauss(rat(1));
        case 1: return Gauss::i_unit();
        case 2: return Gauss(rat(-1));
        default: return Gauss(rat(0), rat(-1));
    }
}

/// h(u, v) = u^H H v.
inline Gauss herm(const CMat& h, const CMat& u, const CMat& v) { return (u.conj_transpose() * (h * v))(0, 0); }

/// Sign of i^{-m} h_m(N^m e_{m+1}, e_{m+1}) on the canonical eps=+1 block;
/// used to translate extracted signs back to eps.
inline int model_sign(int m) {
    CMat h = hermitian_form_matrix(m);
    Gauss val = i_power(-m) * h(0, m);  // N^m e_{m+1} = e_1
    if (!is_zero(val.im) || is_zero(val.re))
        throw PreconditionError("InternalError", "model sign is not a nonzero real");
    return sgn(val.re) > 0 ? 1 : -1;
}

/// Recursive extraction of pm blocks from a nilpotent skew-Hermitian (N, h).
inline void extract_pm_blocks(const CMat& n, const CMat& h, const Gauss& zeta, BlockType& out) {
    int d = n.rows();
    if (d == 0) return;
    // Height of the nilpotent operator.
    std::vector<CMat> powers = {CMat::identity(d)};
    while (!powers.back().is_zero_matrix()) powers.push_back(powers.back() * n);
    int m = static_cast<int>(powers.size()) - 2;  // N^m != 0, N^{m+1} = 0
    const CMat& nm = powers[m];

    // Anisotropic max-height generator among e_i, e_i + e_j, e_i + i e_j.
    auto phi = [&](const CMat& v) { return i_power(-m) * herm(h, nm * v, v); };
    CMat gen(d, 1);
    bool found = false;
    std::vector<CMat> es;
    for (int i = 0; i < d; ++i) {
        CMat e(d, 1);
        e(i, 0) = Gauss(rat(1));
        es.push_back(e);
    }
    for (int i = 0; i < d && !found; ++i) {
        Gauss p = phi(es[i]);
        if (!is_zero(p.im)) throw PreconditionError("InternalError", "height pairing is not real");
        if (!is_zero(p)) {
            gen = es[i];
            found = true;
        }
    }
    for (int i = 0; i < d && !found; ++i)
        for (int j = i + 1; j < d && !found; ++j)
            for (int k = 0; k < 2 && !found; ++k) {
                CMat v = (k == 0) ? es[i] + es[j] : es[i] + Gauss::i_unit() * es[j];
                Gauss p = phi(v);
                if (!is_zero(p)) {
                    gen = v;
                    found = true;
                }
            }
    if (!found) throw DegenerateForm("no anisotropic generator: form degenerate on the block");

    Gauss p = phi(gen);
    int eps = (sgn(p.re) > 0 ? 1 : -1) * model_sign(m);
    out.add(pm_block(m, eps, zeta));

    // Chain span and its h-orthogonal complement.
    std::vector<CMat> chain;
    for (int k = 0; k <= m; ++k) chain.push_back(powers[k] * gen);
    CMat w = cols_to_matrix(chain, d);
    CMat gram = w.conj_transpose() * h;  // (m+1) x d; kernel = orthogonal complement
    std::vector<CMat> comp = kernel_basis(gram);
    if (comp.empty()) return;
    CMat c = cols_to_matrix(comp, d);
    CMat h2 = c.conj_transpose() * (h * c);
    CMat n2 = solve(c, n * c);
    extract_pm_blocks(n2, h2, zeta, out);
}

}  // namespace detail

/// Decomposition of a skew-Hermitian endomorphism into canonical blocks
/// (unique up to reordering; the stored order is canonical).
inline BlockType decompose(const CMat& a, const CMat& h) {
    int n = a.rows();
    if (h != h.conj_transpose()) throw DegenerateForm("form matrix is not Hermitian");
    if (is_zero(det(h))) throw DegenerateForm();
    if (!(h * a + a.conj_transpose() * h).is_zero_matrix()) throw NotSkewHermitian();

    BlockType out;
    for (const auto& [zeta, mult] : gaussian_spectrum(a)) {
        if (sgn(zeta.re) > 0) {
            for (const auto& chain : generalized_eigenchains(a, zeta))
                out.add(pair_block(static_cast<int>(chain.size()) - 1, zeta));
        } else if (is_zero(zeta.re)) {
            // Restrict to the generalized eigenspace and peel off pm blocks.
            CMat shifted = a;
            for (int i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) - zeta;
            std::vector<CMat> gcols = kernel_basis(shifted.pow(n));
            CMat b = cols_to_matrix(gcols, n);
            CMat hg = b.conj_transpose() * (h * b);
            CMat ng = solve(b, shifted * b);
            detail::extract_pm_blocks(ng, hg, zeta, out);
        }
        // Negative real part: handled by the positive partner.
    }
    return out;
}

/// Real-side decomposition of a realization-style triple.
inline BlockType decompose(const RMat& a, const RMat& g) { return decompose(complexify(a), complexify(g)); }

/// Exact Sylvester inertia (p, q, z) of a symmetric rational matrix by
/// congruence elimination.
inline std::tuple<int, int, int> inertia(RMat s) {
    assert(s.rows() == s.cols());
    int n = s.rows();
    int p = 0, q = 0, z = 0;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !is_zero(s(i, i))) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // Look for an off-diagonal entry among remaining rows.
            int oi = -1, oj = -1;
            for (int i = 0; i < n && oi < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (!is_zero(s(i, j))) {
                        oi = i;
                        oj = j;
                        break;
                    }
                }
            }
            if (oi < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++z;
                return {p, q, z};
            }
            // Congruence: add row/col oj to row/col oi to create a pivot.
            for (int k = 0; k < n; ++k) s(oi, k) += s(oj, k);
            for (int k = 0; k < n; ++k) s(k, oi) += s(k, oj);
            piv = oi;
        }
        Scalar d = s(piv, piv);
        if (sgn(d) > 0)
            ++p;
        else
            ++q;
        for (int i = 0; i < n; ++i) {
            if (i == piv || done[i]) continue;
            Scalar f = s(i, piv) / d;
            if (is_zero(f)) continue;
            for (int k = 0; k < n; ++k) s(i, k) -= f * s(piv, k);
            for (int k = 0; k < n; ++k) s(k, i) -= f * s(k, piv);
        }
        done[piv] = true;
    }
    return {p, q, z};
}

}  // namespace pkla
