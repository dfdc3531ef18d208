#pragma once

// Shared structures for the test suites: small algebras, coalgebras, homs,
// and an elimination-free rank oracle independent of rref().

#include <set>

#include "sepkit/algebra.hpp"

namespace fixtures {

using namespace sepkit;

// Rank by fraction-free column elimination; independent of linalg::rref.
template <class F>
std::size_t naive_rank(const F& field, std::vector<Vec<F>> rows) {
    std::size_t r = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][c].is_zero()) { sel = i; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            // rows[i] := rows[r][c]*rows[i] - rows[i][c]*rows[r]
            auto a = rows[r][c], b = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = a * rows[i][j] - b * rows[r][j];
        }
        if (++r == rows.size()) break;
    }
    return r;
}

// Q(i): 1, i with i^2 = -1.
inline StructureAlgebra<RationalField> gaussian_rationals() {
    RationalField Q;
    return quadratic_algebra(Q, Q.from_integer(-1), Q.zero(), "i");
}

// GF(4) over GF(2): w^2 = w + 1.
inline StructureAlgebra<PrimeField> gf4() {
    PrimeField F2(2);
    return quadratic_algebra(F2, F2.one(), F2.one(), "w");
}

// GF(9) over GF(3): w^2 = -1.
inline StructureAlgebra<PrimeField> gf9() {
    PrimeField F3(3);
    return quadratic_algebra(F3, F3.from_integer(-1), F3.zero(), "w");
}

// phi: Q(i) -> M2(Q), 1 ↦ I, i ↦ [[0,-1],[1,0]].
inline AlgebraHom<RationalField> gaussian_into_m2() {
    RationalField Q;
    auto Qi = gaussian_rationals();
    auto M2 = matrix_algebra(Q, 2);
    auto map = make_map<RationalField>(Qi.space, M2.space, [&](std::size_t j) {
        if (j == 0) return M2.unit;
        Vec<RationalField> v = zero_vec(Q, 4);
        v[1] = -Q.one();  // E12
        v[2] = Q.one();   // E21
        return v;
    });
    return AlgebraHom<RationalField>(Qi, M2, std::move(map));
}

// alpha: M2(Q) -> Q(i), [[a,b],[c,d]] ↦ d - i b.
inline LinMap<RationalField> d_minus_ib() {
    RationalField Q;
    auto Qi = gaussian_rationals();
    auto M2 = matrix_algebra(Q, 2);
    return make_map<RationalField>(M2.space, Qi.space, [&](std::size_t j) {
        Vec<RationalField> v = zero_vec(Q, 2);
        if (j == 1) v[1] = -Q.one();  // E12 ↦ -i
        if (j == 3) v[0] = Q.one();   // E22 ↦ 1
        return v;
    });
}

// Row vectors k^n as a right M_n(k)-module: e_i · E_ab = delta_{ia} e_b.
template <class F>
RightModule<F> row_module(const StructureAlgebra<F>& mn, std::size_t n) {
    const F& field = mn.field();
    BasedSpace<F> sp(field, n);
    auto action = make_map<F>(tensor_space(sp, mn.space), sp, [&, n](std::size_t col) {
        std::size_t i = col / (n * n), e = col % (n * n);
        std::size_t a = e / n, b = e % n;
        Vec<F> v = zero_vec(field, n);
        if (i == a) v[b] = field.one();
        return v;
    });
    return RightModule<F>{mn, sp, std::move(action)};
}

// Column vectors k^n as a left M_n(k)-module: E_ab · e_j = delta_{jb} e_a.
template <class F>
LeftModule<F> column_module(const StructureAlgebra<F>& mn, std::size_t n) {
    const F& field = mn.field();
    BasedSpace<F> sp(field, n);
    auto action = make_map<F>(tensor_space(mn.space, sp), sp, [&, n](std::size_t col) {
        std::size_t e = col / n, j = col % n;
        std::size_t a = e / n, b = e % n;
        Vec<F> v = zero_vec(field, n);
        if (j == b) v[a] = field.one();
        return v;
    });
    return LeftModule<F>{mn, sp, std::move(action)};
}

template <class K>
std::vector<long> coords_of(const std::vector<K>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(static_cast<long>(x.value()));
    return out;
}

// All vectors of GF(p)^n as scalar vectors.
template <class F>
std::vector<Vec<F>> all_vectors(const F& field, std::size_t n) {
    std::vector<Vec<F>> out;
    AffineSpace<F> full{field, zero_vec(field, n), {}};
    for (std::size_t i = 0; i < n; ++i) full.kernel_basis.push_back(unit_vec(field, n, i));
    enumerate_affine<F>(full, 1u << 24, [&](const Vec<F>& v) { out.push_back(v); });
    return out;
}

}  // namespace fixtures
