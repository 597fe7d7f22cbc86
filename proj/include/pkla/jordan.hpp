#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pkla/spectrum.hpp"

namespace pkla {

/// One entry of a Jordan type: a real block J_m(alpha) of size m+1, or a
/// conjugate-pair block C_m(zeta) of size 2(m+1) with im(zeta) > 0 canonical.
struct JordanBlock {
    bool complex_pair = false;
    int m = 0;
    Gauss value;  // real for J blocks
    int mult = 1;

    friend bool operator==(const JordanBlock& a, const JordanBlock& b) {
        return a.complex_pair == b.complex_pair && a.m == b.m && a.value == b.value && a.mult == b.mult;
    }
    friend bool operator<(const JordanBlock& a, const JordanBlock& b) {
        return std::tie(a.complex_pair, a.m, a.value, a.mult) < std::tie(b.complex_pair, b.m, b.value, b.mult);
    }
};

/// Multiset of Jordan blocks in canonical sorted order.
struct JordanType {
    std::vector<JordanBlock> blocks;

    void add(bool complex_pair, int m, const Gauss& value, int mult = 1) {
        for (auto& b : blocks) {
            if (b.complex_pair == complex_pair && b.m == m && b.value == value) {
                b.mult += mult;
                if (b.mult == 0) {
                    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                                [&](const JordanBlock& x) { return x.mult == 0; }),
                                 blocks.end());
                }
                std::sort(blocks.begin(), blocks.end());
                return;
            }
        }
        blocks.push_back({complex_pair, m, value, mult});
        std::sort(blocks.begin(), blocks.end());
    }
    void add_j(int m, const Scalar& alpha, int mult = 1) { add(false, m, Gauss(alpha), mult); }
    void add_c(int m, const Gauss& zeta, int mult = 1) { add(true, m, zeta, mult); }

    int total_dim() const {
        int d = 0;
        for (const auto& b : blocks) d += b.mult * (b.complex_pair ? 2 * (b.m + 1) : (b.m + 1));
        return d;
    }
    int mult_of(bool complex_pair, int m, const Gauss& value) const {
        for (const auto& b : blocks)
            if (b.complex_pair == complex_pair && b.m == m && b.value == value) return b.mult;
        return 0;
    }

    friend bool operator==(const JordanType& a, const JordanType& b) { return a.blocks == b.blocks; }
    friend bool operator!=(const JordanType& a, const JordanType& b) { return !(a == b); }
    friend bool operator<(const JordanType& a, const JordanType& b) { return a.blocks < b.blocks; }

    JordanType operator+(const JordanType& other) const {
        JordanType r = *this;
        for (const auto& b : other.blocks) r.add(b.complex_pair, b.m, b.value, b.mult);
        return r;
    }

    /// Multiset difference; nullopt if some block of `other` is not contained.
    std::optional<JordanType> subtract(const JordanType& other) const {
        JordanType r = *this;
        for (const auto& b : other.blocks) {
            if (r.mult_of(b.complex_pair, b.m, b.value) < b.mult) return std::nullopt;
            r.add(b.complex_pair, b.m, b.value, -b.mult);
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& b : blocks) {
            if (!s.empty()) s += " + ";
            if (b.mult != 1) s += std::to_string(b.mult) + "*";
            s += (b.complex_pair ? "C_" : "J_") + std::to_string(b.m) + "(" + gauss_to_string(b.value) + ")";
        }
        return s.empty() ? "0" : s;
    }
};

/// Jordan type of a real matrix (requires Gaussian-rational spectrum).
inline JordanType jordan_type(const RMat& m) {
    JordanType t;
    for (const auto& [zeta, mult] : gaussian_spectrum(m)) {
        if (sgn(zeta.im) < 0) continue;  // conjugate handled by the im > 0 representative
        if (zeta.is_real()) {
            for (int size : jordan_sizes(m, zeta.re)) t.add_j(size - 1, zeta.re);
        } else {
            for (int size : jordan_sizes(to_gauss(m), zeta)) t.add_c(size - 1, zeta);
        }
    }
    return t;
}

enum class SemigroupId { GL_C, GL_SP, Q };

/// Membership in the three block semigroups (treated as monoids: the empty
/// type always belongs).
inline bool in_semigroup(const JordanType& j, SemigroupId s) {
    for (const auto& b : j.blocks) {
        if (!b.complex_pair) {
            const Scalar alpha = b.value.re;
            switch (s) {
                case SemigroupId::GL_C:
                    if (b.mult % 2 != 0) return false;
                    break;
                case SemigroupId::GL_SP:
                    if (is_zero(alpha)) {
                        // Generators 2 J_{2m}(0) and J_{2m+1}(0).
                        if (b.m % 2 == 0 && b.mult % 2 != 0) return false;
                    } else {
                        // Generator J_m(x) + J_m(-x).
                        if (b.mult != j.mult_of(false, b.m, Gauss(-alpha))) return false;
                    }
                    break;
                case SemigroupId::Q:
                    if (is_zero(alpha)) {
                        if (b.mult % 2 != 0) return false;  // generator 2 J_m(0)
                    } else {
                        // Generator 2 J_m(x) + 2 J_m(-x).
                        if (b.mult % 2 != 0) return false;
                        if (b.mult != j.mult_of(false, b.m, Gauss(-alpha))) return false;
                    }
                    break;
            }
        } else {
            const Gauss zeta = b.value;  // im > 0 canonical
            switch (s) {
                case SemigroupId::GL_C:
                    break;  // every C block is a generator
                case SemigroupId::GL_SP:
                case SemigroupId::Q:
                    if (zeta.is_imaginary()) break;  // generator C_m(zeta), zeta imaginary
                    // Generator C_m(zeta) + C_m(-conj(zeta)).
                    if (b.mult != j.mult_of(true, b.m, Gauss(-zeta.re, zeta.im))) return false;
                    break;
            }
        }
    }
    return true;
}

namespace detail {

/// Real eigenvalues occurring in j, plus zero.
inline std::vector<Scalar> real_candidates(const JordanType& j) {
    std::vector<Scalar> cands = {Scalar(0)};
    for (const auto& b : j.blocks)
        if (!b.complex_pair && !is_zero(b.value.re)) cands.push_back(b.value.re);
    return cands;
}

inline bool subtract_in(const JordanType& j, const JordanType& clause, SemigroupId s) {
    auto rest = j.subtract(clause);
    return rest && in_semigroup(*rest, s);
}

}  // namespace detail

/// Existence of a complex structure on R^{n-1} x|_D R with Jordan type j(D)=j.
inline bool admits_complex(const JordanType& j) {
    using detail::subtract_in;
    for (const Scalar& alpha : detail::real_candidates(j)) {
        JordanType one;
        one.add_j(0, alpha);
        if (subtract_in(j, one, SemigroupId::GL_C)) return true;
    }
    // Clause J_k(alpha) + J_{k+1}(alpha).
    for (const auto& b : j.blocks) {
        if (b.complex_pair) continue;
        JordanType pair;
        pair.add_j(b.m, b.value.re);
        pair.add_j(b.m + 1, b.value.re);
        if (subtract_in(j, pair, SemigroupId::GL_C)) return true;
    }
    return false;
}

inline bool admits_symplectic(const JordanType& j) {
    using detail::subtract_in;
    // Clause J_{2m}(0).
    for (const auto& b : j.blocks) {
        if (b.complex_pair || !is_zero(b.value.re) || b.m % 2 != 0) continue;
        JordanType c;
        c.add_j(b.m, Scalar(0));
        if (subtract_in(j, c, SemigroupId::GL_SP)) return true;
    }
    // Clause J_0(c), c != 0.
    for (const Scalar& c : detail::real_candidates(j)) {
        if (is_zero(c)) continue;
        JordanType cl;
        cl.add_j(0, c);
        if (subtract_in(j, cl, SemigroupId::GL_SP)) return true;
    }
    // Clause J_m(-c) + J_{m+1}(c), c != 0 (c must itself be an eigenvalue).
    int max_m = 0;
    for (const auto& b : j.blocks) max_m = std::max(max_m, b.m);
    for (const Scalar& c : detail::real_candidates(j)) {
        if (is_zero(c)) continue;
        for (int m = 0; m <= max_m; ++m) {
            JordanType cl;
            cl.add_j(m, -c);
            cl.add_j(m + 1, c);
            if (subtract_in(j, cl, SemigroupId::GL_SP)) return true;
        }
    }
    return false;
}

inline bool admits_pk(const JordanType& j) {
    using detail::subtract_in;
    // Clause J_0(alpha).
    for (const Scalar& alpha : detail::real_candidates(j)) {
        JordanType cl;
        cl.add_j(0, alpha);
        if (subtract_in(j, cl, SemigroupId::Q)) return true;
    }
    // Clause J_m(0) + J_{m+1}(0).
    for (const auto& b : j.blocks) {
        if (b.complex_pair || !is_zero(b.value.re)) continue;
        JordanType cl;
        cl.add_j(b.m, Scalar(0));
        cl.add_j(b.m + 1, Scalar(0));
        if (subtract_in(j, cl, SemigroupId::Q)) return true;
    }
    // Clause J_0(alpha) + 2 J_0(-alpha).
    for (const Scalar& alpha : detail::real_candidates(j)) {
        JordanType cl;
        cl.add_j(0, alpha);
        cl.add_j(0, -alpha, 2);
        if (subtract_in(j, cl, SemigroupId::Q)) return true;
    }
    return false;
}

/// Complex and symplectic structures exist but no pseudo-Kaehler one.
inline bool cs_not_pk(const JordanType& j) {
    using detail::subtract_in;
    for (const Scalar& c : detail::real_candidates(j)) {
        if (is_zero(c)) continue;
        int max_m = 0;
        for (const auto& b : j.blocks) max_m = std::max(max_m, b.m);
        for (int m = 0; m <= max_m; ++m) {
            JordanType cl;
            cl.add_j(m, -c, 2);
            cl.add_j(m, c);
            cl.add_j(m + 1, c);
            if (subtract_in(j, cl, SemigroupId::Q)) return true;
        }
    }
    return false;
}

}  // namespace pkla
