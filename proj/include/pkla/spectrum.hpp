#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "pkla/matrix.hpp"

namespace pkla {

namespace detail {

/// Polynomials are coefficient vectors in ascending degree order.
using QPoly = std::vector<Scalar>;
using ZPoly = std::vector<mpz_class>;

inline void trim(QPoly& p) {
    while (p.size() > 1 && is_zero(p.back())) p.pop_back();
}

inline Scalar eval(const QPoly& p, const Scalar& x) {
    Scalar acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

/// Divides p by the monic-normalized divisor d exactly; returns true and the
/// quotient when the remainder is zero.
inline bool try_divide(const QPoly& p, const QPoly& d, QPoly& quotient) {
    QPoly r = p;
    trim(r);
    int dd = static_cast<int>(d.size()) - 1;
    if (static_cast<int>(r.size()) - 1 < dd) return false;
    quotient.assign(r.size() - dd, Scalar(0));
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        Scalar q = r[k] / d[dd];
        quotient[k - dd] = q;
        if (is_zero(q)) continue;
        for (int j = 0; j <= dd; ++j) r[k - dd + j] -= q * d[j];
    }
    for (const Scalar& c : r)
        if (!is_zero(c)) return false;
    return true;
}

/// Clears denominators and content: returns the primitive integer polynomial
/// proportional to p (leading coefficient made positive).
inline ZPoly primitive_integer(const QPoly& p) {
    mpz_class l(1);
    for (const Scalar& c : p) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    ZPoly z;
    z.reserve(p.size());
    mpz_class content(0);
    for (const Scalar& c : p) {
        mpz_class v = c.get_num() * (l / c.get_den());
        z.push_back(v);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    if (content != 0)
        for (auto& v : z) v /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& v : z) v = -v;
    return z;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class d(2);
    while (d * d <= n) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    divs.push_back(1);
    for (const auto& [pr, e] : factors) {
        std::size_t sz = divs.size();
        mpz_class pw(1);
        for (int k = 1; k <= e; ++k) {
            pw *= pr;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline bool is_perfect_square(const mpz_class& n, mpz_class& root) {
    if (n < 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

}  // namespace detail

/// Canonically sorted eigenvalue multiset.
using Spectrum = std::vector<std::pair<Gauss, int>>;

inline void sort_spectrum(Spectrum& s) {
    std::sort(s.begin(), s.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

/// All roots (with multiplicity) of the characteristic polynomial of a real
/// matrix, provided it splits over the Gaussian rationals; otherwise throws
/// NonGaussianSpectrum.
inline Spectrum gaussian_spectrum(const RMat& m) {
    using namespace detail;
    assert(m.rows() == m.cols());
    std::map<std::pair<std::string, std::string>, std::pair<Gauss, int>> found;
    auto add = [&](const Gauss& z, int mult) {
        auto key = std::make_pair(scalar_to_string(z.re), scalar_to_string(z.im));
        auto it = found.find(key);
        if (it == found.end())
            found.emplace(key, std::make_pair(z, mult));
        else
            it->second.second += mult;
    };

    QPoly p = char_poly(m);
    // Strip zero roots.
    int zero_mult = 0;
    while (p.size() > 1 && is_zero(p.front())) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) add(Gauss(rat(0), rat(0)), zero_mult);

    // Rational roots by the rational-root theorem on the primitive polynomial.
    bool progressed = true;
    while (p.size() > 1 && progressed) {
        progressed = false;
        ZPoly z = primitive_integer(p);
        std::vector<mpz_class> nums = positive_divisors(z.front());
        std::vector<mpz_class> dens = positive_divisors(z.back());
        for (const mpz_class& num : nums) {
            for (const mpz_class& den : dens) {
                for (int s : {1, -1}) {
                    mpz_class signed_num = (s > 0) ? num : mpz_class(-num);
                    Scalar r(signed_num, den);
                    r.canonicalize();
                    if (!is_zero(eval(p, r))) continue;
                    int mult = 0;
                    QPoly lin = {-r, Scalar(1)};
                    QPoly q;
                    while (try_divide(p, lin, q)) {
                        p = q;
                        ++mult;
                    }
                    add(Gauss(r, rat(0)), mult);
                    progressed = true;
                }
            }
            if (p.size() <= 1) break;
        }
    }

    // Remaining factors: quadratics a X^2 + b X + c with negative square
    // discriminant (conjugate Gaussian root pairs).
    while (p.size() > 1) {
        if ((p.size() - 1) % 2 == 1) throw NonGaussianSpectrum();
        ZPoly z = primitive_integer(p);
        // Cauchy root bound for |Re zeta|: 1 + max|coeff| / lc.
        mpz_class maxc(0);
        for (const auto& c : z) {
            mpz_class ac = abs(c);
            if (ac > maxc) maxc = ac;
        }
        mpz_class lc = z.back();
        mpz_class bound_re = 1 + maxc / lc + 1;  // ceil margin
        bool found_factor = false;
        std::vector<mpz_class> as = positive_divisors(lc);
        std::vector<mpz_class> cs = positive_divisors(z.front());
        for (const mpz_class& a : as) {
            mpz_class bmax = 2 * a * bound_re;
            for (const mpz_class& c_abs : cs) {
                for (int cs_sign : {1, -1}) {
                    mpz_class c = (cs_sign > 0) ? c_abs : mpz_class(-c_abs);
                    for (mpz_class b(0); b <= bmax && !found_factor; b += 1) {
                        for (int bs : {1, -1}) {
                            if (b == 0 && bs < 0) continue;
                            mpz_class bb = (bs > 0) ? b : mpz_class(-b);
                            mpz_class disc = bb * bb - 4 * a * c;
                            mpz_class neg_disc = -disc;
                            mpz_class sq;
                            if (disc >= 0 || !is_perfect_square(neg_disc, sq)) continue;
                            QPoly quad = {Scalar(c), Scalar(bb), Scalar(a)};
                            QPoly q;
                            if (!try_divide(p, quad, q)) continue;
                            int mult = 0;
                            do {
                                p = q;
                                ++mult;
                            } while (try_divide(p, quad, q));
                            mpz_class two_a = 2 * a;
                            mpz_class neg_bb = -bb;
                            Scalar re(neg_bb, two_a);
                            Scalar im(sq, two_a);
                            re.canonicalize();
                            im.canonicalize();
                            add(Gauss(re, im), mult);
                            add(Gauss(re, -im), mult);
                            found_factor = true;
                            break;
                        }
                    }
                    if (found_factor) break;
                }
                if (found_factor) break;
            }
            if (found_factor) break;
        }
        if (!found_factor) throw NonGaussianSpectrum();
    }

    Spectrum out;
    for (auto& [k, v] : found) out.push_back(v);
    sort_spectrum(out);
    return out;
}

/// Spectrum of a Gaussian-rational matrix: candidate eigenvalues come from the
/// realified matrix; multiplicities from rank deficiency of (A - zeta)^n.
inline Spectrum gaussian_spectrum(const CMat& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return {};
    Spectrum real_side = gaussian_spectrum(realify(m));
    Spectrum out;
    int total = 0;
    for (const auto& [zeta, mult_unused] : real_side) {
        CMat shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) - zeta;
        int mult = n - rank(shifted.pow(n));
        if (mult > 0) {
            out.emplace_back(zeta, mult);
            total += mult;
        }
    }
    if (total != n) throw NonGaussianSpectrum();
    sort_spectrum(out);
    return out;
}

/// One Jordan chain: generator first, i.e. v, Nv, ..., N^{len-1} v.
template <class K>
using Chain = std::vector<Mat<K>>;

/// Jordan chains of M at the eigenvalue zeta: a basis of the generalized
/// eigenspace organized into chains whose lengths are the Jordan block sizes.
template <class K>
std::vector<Chain<K>> generalized_eigenchains(const Mat<K>& m, const K& zeta) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    Mat<K> nmat = m;
    for (int i = 0; i < n; ++i) nmat(i, i) = nmat(i, i) - zeta;
    std::vector<Mat<K>> gcols = kernel_basis(nmat.pow(n));
    if (gcols.empty()) throw NotAnEigenvalue();
    int d = static_cast<int>(gcols.size());
    Mat<K> b = cols_to_matrix(gcols, n);
    Mat<K> ng = solve(b, nmat * b);  // restriction of N to the generalized eigenspace

    // Powers of the nilpotent restriction and the height.
    std::vector<Mat<K>> powers = {Mat<K>::identity(d)};
    while (!powers.back().is_zero_matrix()) powers.push_back(powers.back() * ng);
    int height = static_cast<int>(powers.size()) - 1;

    struct Gen {
        Mat<K> v;
        int len;
    };
    std::vector<Gen> gens;
    for (int i = height; i >= 1; --i) {
        std::vector<Mat<K>> base = kernel_basis(powers[i - 1]);
        for (const Gen& g : gens)
            if (g.len > i) base.push_back(powers[g.len - i] * g.v);
        std::vector<Mat<K>> cands = kernel_basis(powers[i]);
        std::vector<int> accepted = extend_basis(base, cands, d);
        for (int idx : accepted) gens.push_back({cands[idx], i});
    }

    std::vector<Chain<K>> chains;
    for (const Gen& g : gens) {
        Chain<K> chain;
        for (int j = 0; j < g.len; ++j) chain.push_back(b * (powers[j] * g.v));
        chains.push_back(std::move(chain));
    }
    // Longest chains first for deterministic output.
    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain<K>& x, const Chain<K>& y) { return x.size() > y.size(); });
    return chains;
}

/// Real matrix at a possibly complex eigenvalue: complexifies when needed.
inline std::vector<Chain<Gauss>> generalized_eigenchains(const RMat& m, const Gauss& zeta) {
    return generalized_eigenchains(to_gauss(m), zeta);
}

/// Jordan block sizes at zeta as a descending partition.
template <class K>
std::vector<int> jordan_sizes(const Mat<K>& m, const K& zeta) {
    std::vector<int> sizes;
    for (const auto& chain : generalized_eigenchains(m, zeta)) sizes.push_back(static_cast<int>(chain.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

}  // namespace pkla
