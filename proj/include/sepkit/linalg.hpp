#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace sepkit {

template <class F>
using Vec = std::vector<typename F::Scalar>;

template <class F>
Vec<F> zero_vec(const F& field, std::size_t n) {
    return Vec<F>(n, field.zero());
}

template <class F>
Vec<F> unit_vec(const F& field, std::size_t n, std::size_t i) {
    Vec<F> v(n, field.zero());
    v.at(i) = field.one();
    return v;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class F>
Vec<F>& add_to(Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class F>
Vec<F>& sub_from(Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class F>
Vec<F> scaled(const Vec<F>& a, const typename F::Scalar& c) {
    Vec<F> r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Tensor of coordinate vectors, row-major: (a ⊗ b)[i*|b| + j] = a[i]*b[j].
template <class F>
Vec<F> tensor_vec(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
    return r;
}

// ---------------------------------------------------------------------------
// Dense row-major matrix over an exact field.

template <class F>
class Matrix {
public:
    using K = typename F::Scalar;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows) {
        if (rows.empty()) return Matrix(field, 0, 0);
        Matrix m(field, rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw dimension_mismatch("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
    const K& at(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }

    Vec<F> row(std::size_t i) const {
        Vec<F> r(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
        return r;
    }

    Vec<F> col(std::size_t j) const {
        Vec<F> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    void set_col(std::size_t j, const Vec<F>& v) {
        if (v.size() != rows_) throw dimension_mismatch("column size");
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw dimension_mismatch("matrix-vector size");
        Vec<F> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (field_ != o.field_) throw field_mismatch("matrix fields differ");
        if (cols_ != o.rows_) throw dimension_mismatch("matrix product shapes");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += a * o.at(k, j);
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix sum shapes");
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix diff shapes");
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    // Kronecker product, consistent with tensor_vec indexing.
    Matrix kron(const Matrix& o) const {
        Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < o.rows_; ++k)
                    for (std::size_t l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
            }
        return r;
    }

    bool is_zero() const { return is_zero_vec<F>(e_); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

// ---------------------------------------------------------------------------
// Reduced row echelon form. Unique for a given row space.

template <class F>
struct RrefResult {
    Matrix<F> matrix;
    std::vector<std::size_t> pivot_columns;
};

template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        auto inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            auto f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).pivot_columns.size();
}

// ---------------------------------------------------------------------------
// Solution set of a consistent linear system: particular + span(kernel_basis).

template <class F>
struct AffineSpace {
    F field;
    Vec<F> particular;
    std::vector<Vec<F>> kernel_basis;

    std::size_t ambient_dim() const { return particular.size(); }
    std::size_t kernel_dim() const { return kernel_basis.size(); }
};

// Solves a.x = b. Kernel basis vectors are indexed by the free (non-pivot)
// columns of rref(a), in increasing column order.
template <class F>
std::optional<AffineSpace<F>> solve_affine(const Matrix<F>& a, const Vec<F>& b) {
    if (a.rows() != b.size()) throw dimension_mismatch("solve_affine: rhs length");
    const F& field = a.field();
    const std::size_t n = a.cols();
    Matrix<F> aug(field, a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto red = rref(std::move(aug));
    const auto& pivots = red.pivot_columns;
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // rank jump: inconsistent

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    AffineSpace<F> sol{field, zero_vec(field, n), {}};
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = red.matrix.at(r, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec<F> k = zero_vec(field, n);
        k[c] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -red.matrix.at(r, c);
        sol.kernel_basis.push_back(std::move(k));
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Enumeration of a finite affine space, lexicographic in kernel coefficients
// (first basis vector most significant, coefficients 0..p-1).

template <class F>
std::uint64_t affine_space_size(const AffineSpace<F>& s, std::uint64_t limit) {
    if constexpr (!F::is_finite) {
        if (s.kernel_dim() > 0) throw infinite_field("affine space over Q is infinite");
        return 1;
    } else {
        const std::uint64_t p = s.field.order();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < s.kernel_dim(); ++i) {
            if (total > limit / p + 1) return limit + 1;
            total *= p;
            if (total > limit) return total;
        }
        return total;
    }
}

template <class F>
void enumerate_affine(const AffineSpace<F>& s, std::uint64_t limit,
                      const std::function<void(const Vec<F>&)>& visit) {
    if constexpr (!F::is_finite) {
        (void)limit;
        (void)visit;
        throw infinite_field("cannot enumerate affine space over Q");
    } else {
        if (affine_space_size(s, limit) > limit)
            throw limit_exceeded("affine space larger than limit " + std::to_string(limit));
        const std::uint64_t p = s.field.order();
        const std::size_t k = s.kernel_dim();
        std::vector<std::uint64_t> digits(k, 0);
        Vec<F> cur = s.particular;
        while (true) {
            visit(cur);
            // odometer: rightmost digit fastest, so tuples come out in
            // ascending lexicographic order
            std::size_t i = k;
            while (i > 0) {
                --i;
                ++digits[i];
                if (digits[i] < p) {
                    add_to<F>(cur, s.kernel_basis[i]);
                    break;
                }
                digits[i] = 0;
                // coefficient wraps p -> 0: subtract (p-1) copies
                auto back = scaled<F>(s.kernel_basis[i], s.field.from_integer(static_cast<long>(p - 1)));
                sub_from<F>(cur, back);
                if (i == 0) return;
            }
            if (k == 0) return;
        }
    }
}

template <class F>
std::vector<Vec<F>> enumerate_affine(const AffineSpace<F>& s, std::uint64_t limit) {
    std::vector<Vec<F>> out;
    enumerate_affine<F>(s, limit, [&](const Vec<F>& v) { out.push_back(v); });
    return out;
}

// Solution space of an affine condition map (residual must be affine in its
// argument; it is sampled on 0 and the unit vectors).
template <class F>
std::optional<AffineSpace<F>> solve_affine_conditions(
    const F& field, std::size_t unknowns,
    const std::function<Vec<F>(const Vec<F>&)>& residual) {
    Vec<F> c0 = residual(zero_vec(field, unknowns));
    Matrix<F> a(field, c0.size(), unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) {
        Vec<F> rj = residual(unit_vec(field, unknowns, j));
        sub_from<F>(rj, c0);
        a.set_col(j, rj);
    }
    Vec<F> b = c0;
    for (auto& x : b) x = -x;
    return solve_affine(a, b);
}

}  // namespace sepkit
