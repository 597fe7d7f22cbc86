#pragma once

#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pkla/gaussian.hpp"
#include "pkla/rational.hpp"

namespace pkla {

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Scalar> {
    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static Scalar conj(const Scalar& a) { return a; }
};

template <>
struct FieldTraits<Gauss> {
    static Gauss zero() { return Gauss(); }
    static Gauss one() { return Gauss(rat(1)); }
    static Gauss conj(const Gauss& a) { return a.conj(); }
};

/// Dense exact matrix over a field K (rationals or Gaussian rationals).
template <class K>
class Mat {
   public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, FieldTraits<K>::zero()) {}
    Mat(std::initializer_list<std::initializer_list<K>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        a_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            assert(static_cast<int>(row.size()) == cols_);
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = FieldTraits<K>::one();
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Mat r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Mat r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - y.a_[k];
        return r;
    }
    friend Mat operator-(const Mat& x) {
        Mat r = x;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols_ == y.rows_);
        Mat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const K& xv = x(i, k);
                if (is_zero(xv)) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xv * y(k, j);
            }
        return r;
    }
    friend Mat operator*(const K& c, const Mat& x) {
        Mat r = x;
        for (auto& v : r.a_) v = c * v;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Mat conj_transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = FieldTraits<K>::conj((*this)(i, j));
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    K trace() const {
        assert(rows_ == cols_);
        K t = FieldTraits<K>::zero();
        for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    Mat pow(int e) const {
        assert(rows_ == cols_ && e >= 0);
        Mat r = identity(rows_);
        for (int k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    Mat col(int j) const {
        Mat r(rows_, 1);
        for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }
    Mat row(int i) const {
        Mat r(1, cols_);
        for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }
    void set_block(int i0, int j0, const Mat& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Mat block(int i0, int j0, int r, int c) const {
        Mat b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }
    /// Horizontal concatenation [this | other].
    Mat hcat(const Mat& other) const {
        assert(rows_ == other.rows_);
        Mat r(rows_, cols_ + other.cols_);
        r.set_block(0, 0, *this);
        r.set_block(0, cols_, other);
        return r;
    }

   private:
    int rows_, cols_;
    std::vector<K> a_;
};

using RMat = Mat<Scalar>;
using CMat = Mat<Gauss>;

/// Row-reduces M in place to reduced row echelon form; returns pivot columns.
template <class K>
std::vector<int> rref_in_place(Mat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = FieldTraits<K>::one() / m(r, c);
        for (int j = 0; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            K f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(const Mat<K>& m) {
    Mat<K> w = m;
    return static_cast<int>(rref_in_place(w).size());
}

/// Canonical kernel basis: one vector per free column, unit entry in the free
/// coordinate, negated RREF coefficients in the pivot coordinates.  This is
/// the reduced-column-echelon normal form of the kernel.
template <class K>
std::vector<Mat<K>> kernel_basis(const Mat<K>& m) {
    Mat<K> w = m;
    std::vector<int> pivots = rref_in_place(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Mat<K>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Mat<K> v(m.cols(), 1);
        v(c, 0) = FieldTraits<K>::one();
        for (std::size_t p = 0; p < pivots.size(); ++p) v(pivots[p], 0) = -w(static_cast<int>(p), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
struct RankKernel {
    int rank;
    std::vector<Mat<K>> kernel;
};

template <class K>
RankKernel<K> rank_kernel(const Mat<K>& m) {
    Mat<K> w = m;
    int r = static_cast<int>(rref_in_place(w).size());
    return {r, kernel_basis(m)};
}

/// Packs column vectors into a matrix (n x k); k may be zero.
template <class K>
Mat<K> cols_to_matrix(const std::vector<Mat<K>>& cols, int nrows) {
    Mat<K> m(nrows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < nrows; ++i) m(i, static_cast<int>(j)) = cols[j](i, 0);
    return m;
}

/// Solves A x = b exactly (any shape); throws if inconsistent, picks the
/// canonical solution with free variables zero.
template <class K>
Mat<K> solve(const Mat<K>& a, const Mat<K>& b) {
    assert(a.rows() == b.rows());
    Mat<K> aug = a.hcat(b);
    std::vector<int> pivots = rref_in_place(aug);
    for (int p : pivots)
        if (p >= a.cols()) throw PreconditionError("InconsistentSystem", "linear system has no solution");
    Mat<K> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
    return x;
}

template <class K>
Mat<K> inverse(const Mat<K>& a) {
    assert(a.rows() == a.cols());
    Mat<K> aug = a.hcat(Mat<K>::identity(a.rows()));
    std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != a.rows())
        throw PreconditionError("SingularMatrix", "matrix is not invertible");
    return aug.block(0, a.cols(), a.rows(), a.cols());
}

template <class K>
K det(const Mat<K>& a) {
    assert(a.rows() == a.cols());
    Mat<K> w = a;
    K d = FieldTraits<K>::one();
    int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(w(i, c))) {
                p = i;
                break;
            }
        if (p < 0) return FieldTraits<K>::zero();
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
            d = -d;
        }
        d = d * w(c, c);
        K inv = FieldTraits<K>::one() / w(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(w(i, c))) continue;
            K f = inv * w(i, c);
            for (int j = c; j < n; ++j) w(i, j) = w(i, j) - f * w(c, j);
        }
    }
    return d;
}

/// Characteristic polynomial of a square matrix by the Faddeev-LeVerrier
/// recursion; coefficients returned in ascending degree order, monic.
template <class K>
std::vector<K> char_poly(const Mat<K>& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    std::vector<K> c(static_cast<std::size_t>(n) + 1, FieldTraits<K>::zero());
    c[n] = FieldTraits<K>::one();
    Mat<K> m = Mat<K>::zero(n, n);
    K ck = FieldTraits<K>::one();
    for (int k = 1; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        Mat<K> t = m;
        for (int i = 0; i < n; ++i) t(i, i) = t(i, i) + ck;
        m = a * t;
        K tr = m.trace();
        // c_{n-k} = -tr(M_k)/k
        K kk = FieldTraits<K>::zero();
        for (int j = 0; j < k; ++j) kk = kk + FieldTraits<K>::one();
        ck = -(tr / kk);
        c[n - k] = ck;
    }
    return c;
}

/// Extends the column span of `base` by those candidate columns that increase
/// the rank; returns the indices of accepted candidates.
template <class K>
std::vector<int> extend_basis(std::vector<Mat<K>>& base, const std::vector<Mat<K>>& candidates, int nrows,
                              int target_dim = -1) {
    std::vector<int> accepted;
    int r = rank(cols_to_matrix(base, nrows));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (target_dim >= 0 && r >= target_dim) break;
        base.push_back(candidates[i]);
        int r2 = rank(cols_to_matrix(base, nrows));
        if (r2 > r) {
            r = r2;
            accepted.push_back(static_cast<int>(i));
        } else {
            base.pop_back();
        }
    }
    return accepted;
}

/// Complexification of a real matrix (entries become Gaussian with zero
/// imaginary part).
inline CMat to_gauss(const RMat& m) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Gauss(m(i, j));
    return r;
}

/// Realification with the frozen convention a+bi -> [[a,b],[-b,a]] per entry;
/// complex coordinate z_k occupies real coordinates (2k-1, 2k).
inline RMat realify(const CMat& m) {
    RMat r(2 * m.rows(), 2 * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Gauss& z = m(i, j);
            r(2 * i, 2 * j) = z.re;
            r(2 * i, 2 * j + 1) = z.im;
            r(2 * i + 1, 2 * j) = -z.im;
            r(2 * i + 1, 2 * j + 1) = z.re;
        }
    return r;
}

/// Inverse block extraction of `realify`; requires even dimensions.
inline CMat complexify(const RMat& m) {
    assert(m.rows() % 2 == 0 && m.cols() % 2 == 0);
    CMat r(m.rows() / 2, m.cols() / 2);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r(i, j) = Gauss(m(2 * i, 2 * j), m(2 * i, 2 * j + 1));
    return r;
}

}  // namespace pkla
