#pragma once

// Exact integer and rational linear algebra.
//
// Everything here works on arbitrary-precision values; there is no floating
// point.  Matrices are small and dense, stored row-major.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace clustermirror {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ValidationError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ValidationError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ValidationError("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw ValidationError("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

// ---------------------------------------------------------------------------
// Scalar and vector helpers

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> extended_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline Int content(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

/// True iff the gcd of the entries is 1.
inline bool is_primitive(const IntVec& v) {
    if (is_zero(v)) throw ValidationError("zero vector has no primitive test");
    return content(v) == 1;
}

/// Divide out the content; the zero vector is returned unchanged.
inline IntVec primitive_part(IntVec v) {
    Int g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw ValidationError("pairing of vectors with different lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ValidationError("pairing of vectors with different lengths");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec operator+(IntVec a, const IntVec& b) {
    if (a.size() != b.size()) throw ValidationError("vector sum length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline IntVec operator-(IntVec a, const IntVec& b) {
    if (a.size() != b.size()) throw ValidationError("vector difference length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline IntVec operator-(IntVec a) {
    for (auto& x : a) x = -x;
    return a;
}
inline IntVec operator*(const Int& s, IntVec a) {
    for (auto& x : a) x *= s;
    return a;
}

inline RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

/// Exact conversion back to integers; throws if any entry is fractional.
inline IntMat to_integer(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (denominator(m(i, j)) != 1) throw InvariantError("matrix entry is not integral");
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

inline IntVec to_integer(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw InvariantError("vector entry is not integral");
        r[i] = numerator(v[i]);
    }
    return r;
}

/// Oriented area form a1*b2 - a2*b1 on Z^2.
inline Int cross2(const IntVec& a, const IntVec& b) {
    if (a.size() != 2 || b.size() != 2) throw ValidationError("planar cross product needs length-2 vectors");
    return a[0] * b[1] - a[1] * b[0];
}

// ---------------------------------------------------------------------------
// Determinant, inverse

/// Fraction-free (Bareiss) determinant.
inline Int det(const IntMat& m) {
    if (!m.square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Gauss-Jordan inverse over any exact field; std::nullopt when singular.
template <class F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m) {
    if (!m.square()) throw ValidationError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == F(0)) ++p;
        if (p == n) return std::nullopt;
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        const F pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = a(c, j) / pivot;
            inv(c, j) = inv(c, j) / pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == F(0)) continue;
            const F f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(c, j);
                inv(i, j) = inv(i, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    auto inv = try_inverse(m);
    if (!inv) throw ValidationError("matrix is singular");
    return *inv;
}

/// Determinant over an exact field by elimination.
template <class F>
F field_det(const Matrix<F>& m) {
    if (!m.square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> a = m;
    F d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == F(0)) ++p;
        if (p == n) return F(0);
        if (p != c) {
            a.swap_rows(c, p);
            d = F(0) - d;
        }
        d = d * a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == F(0)) continue;
            const F f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
    }
    return d;
}

inline bool is_unimodular(const IntMat& m) {
    if (!m.square()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

inline IntMat inverse_unimodular(const IntMat& m) {
    if (!is_unimodular(m)) throw ValidationError("matrix is not unimodular");
    return to_integer(inverse(to_rational(m)));
}

inline bool is_skew_symmetric(const IntMat& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
    IntMat U;  // unimodular, rows x rows
    IntMat D;  // diagonal with d1 | d2 | ..., all entries >= 0
    IntMat V;  // unimodular, cols x cols
};

/// U * M * V = D.
inline SmithForm smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat D = m;
    IntMat U = IntMat::identity(rows);
    IntMat V = IntMat::identity(cols);
    const std::size_t steps = std::min(rows, cols);

    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {  // row dst -= q*row src
        for (std::size_t j = 0; j < cols; ++j) D(dst, j) -= q * D(src, j);
        for (std::size_t j = 0; j < rows; ++j) U(dst, j) -= q * U(src, j);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {  // col dst -= q*col src
        for (std::size_t i = 0; i < rows; ++i) D(i, dst) -= q * D(i, src);
        for (std::size_t i = 0; i < cols; ++i) V(i, dst) -= q * V(i, src);
    };

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Bring the smallest nonzero entry of the trailing block to (t, t).
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second))))
                        best = {i, j};
            if (!best) break;
            D.swap_rows(t, best->first);
            U.swap_rows(t, best->first);
            D.swap_cols(t, best->second);
            V.swap_cols(t, best->second);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0) continue;
                row_axpy(i, t, D(i, t) / D(t, t));
                if (D(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0) continue;
                col_axpy(j, t, D(t, j) / D(t, t));
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility: fold an offending row into row t and go again.
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < rows && !bad; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            row_axpy(t, *bad, Int(-1));
        }
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < rows; ++j) U(t, j) = -U(t, j);
        }
    }
    return {std::move(U), std::move(D), std::move(V)};
}

inline std::vector<Int> elementary_divisors(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.D(i, i) != 0) out.push_back(s.D(i, i));
    return out;
}

/// Structure of Z^n / <generators>: the order of the torsion subgroup and
/// the rank of the free part.
struct QuotientInfo {
    Int torsion_order;
    std::size_t free_rank;
    bool infinite() const { return free_rank > 0; }
};

inline QuotientInfo lattice_quotient(const std::vector<IntVec>& generators, std::size_t n) {
    if (generators.empty()) return {Int(1), n};
    IntMat m = IntMat::from_columns(generators, n);
    auto divisors = elementary_divisors(m);
    Int order = 1;
    for (const auto& d : divisors) order *= d;
    return {order, n - divisors.size()};
}

/// Order of the torsion subgroup of Z^n / <generators>.
inline Int torsion_order(const std::vector<IntVec>& generators, std::size_t n) {
    for (const auto& g : generators)
        if (g.size() != n) throw ValidationError("generator length differs from lattice rank");
    return lattice_quotient(generators, n).torsion_order;
}

/// Extend k primitive-spanning rows to an element of SL(n, Z) whose first
/// k rows are the given ones.  Throws if the rows do not span a saturated
/// sublattice (some elementary divisor > 1).
inline IntMat complete_to_unimodular(const IntMat& rows) {
    const std::size_t k = rows.rows(), n = rows.cols();
    if (k > n) throw ValidationError("more rows than columns");
    SmithForm s = smith_normal_form(rows);
    for (std::size_t i = 0; i < k; ++i)
        if (s.D(i, i) != 1) throw ValidationError("rows do not extend to a unimodular matrix");
    // rows = U^-1 [I 0] V^-1, so diag(U^-1, I) V^-1 starts with `rows`.
    IntMat uinv = inverse_unimodular(s.U);
    IntMat left = IntMat::identity(n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) left(i, j) = uinv(i, j);
    IntMat a = left * inverse_unimodular(s.V);
    if (det(a) < 0) {
        if (k == n) throw ValidationError("square matrix has determinant -1");
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = -a(n - 1, j);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Exact rational linear systems

struct SolutionSet {
    enum class Kind { Point, Affine, Infeasible };
    Kind kind = Kind::Infeasible;
    RatVec point;                // a particular solution (free variables zero)
    std::vector<RatVec> basis;   // direction basis of the solution space
    std::optional<std::size_t> inconsistent_row;  // first row proven inconsistent

    bool feasible() const { return kind != Kind::Infeasible; }
    std::size_t dimension() const { return basis.size(); }
};

/// Reduced row echelon solve of A x = b.
inline SolutionSet solve_rational(const RatMat& A, const RatVec& b) {
    if (A.rows() != b.size()) throw ValidationError("right-hand side length differs from row count");
    const std::size_t m = A.rows(), n = A.cols();
    RatMat aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> origin(m);  // which input row ended up where
    for (std::size_t i = 0; i < m; ++i) origin[i] = i;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && aug(p, c) == 0) ++p;
        if (p == m) continue;
        aug.swap_rows(r, p);
        std::swap(origin[r], origin[p]);
        const Rat pivot = aug(r, c);
        for (std::size_t j = c; j <= n; ++j) aug(r, j) /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            const Rat f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    SolutionSet out;
    for (std::size_t i = r; i < m; ++i)
        if (aug(i, n) != 0) {
            out.kind = SolutionSet::Kind::Infeasible;
            out.inconsistent_row = origin[i];
            return out;
        }
    out.point.assign(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) out.point[pivot_cols[i]] = aug(i, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec dir(n, Rat(0));
        dir[f] = 1;
        for (std::size_t i = 0; i < r; ++i) dir[pivot_cols[i]] = -aug(i, f);
        out.basis.push_back(std::move(dir));
    }
    out.kind = out.basis.empty() ? SolutionSet::Kind::Point : SolutionSet::Kind::Affine;
    return out;
}

} // namespace clustermirror
