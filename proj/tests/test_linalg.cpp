#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sepkit/linalg.hpp"

using namespace sepkit;

namespace {

template <class F>
Matrix<F> mat(const F& f, std::size_t r, std::size_t c, std::vector<long> entries) {
    Matrix<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_integer(entries[i * c + j]);
    return m;
}

// Every vector of GF(p)^n, as integer tuples; oracle for solver tests.
std::vector<std::vector<long>> all_gf_vectors(long p, std::size_t n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(n, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++cur[i] < p) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

}  // namespace

TEST_CASE("rref of identity is identity") {
    RationalField Q;
    auto m = Matrix<RationalField>::identity(Q, 2);
    auto r = rref(m);
    REQUIRE(r.matrix == m);
    REQUIRE(r.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of a rank-one matrix") {
    RationalField Q;
    auto r = rref(mat(Q, 2, 2, {2, 4, 1, 2}));
    REQUIRE(r.matrix == mat(Q, 2, 2, {1, 2, 0, 0}));
    REQUIRE(r.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rref of zero matrix") {
    RationalField Q;
    auto z = Matrix<RationalField>(Q, 3, 2);
    auto r = rref(z);
    REQUIRE(r.matrix == z);
    REQUIRE(r.pivot_columns.empty());
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937 rng(20240811);
    PrimeField F3(3);
    RationalField Q;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix<PrimeField> m(F3, r, c);
        Matrix<RationalField> q(Q, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                long v = static_cast<long>(rng() % 7) - 3;
                m.at(i, j) = F3.from_integer(v);
                q.at(i, j) = Q.from_integer(v);
            }
        auto rm = rref(m);
        REQUIRE(rref(rm.matrix).matrix == rm.matrix);
        auto rq = rref(q);
        REQUIRE(rref(rq.matrix).matrix == rq.matrix);
    }
}

TEST_CASE("solve_affine with identity matrix") {
    RationalField Q;
    auto sol = solve_affine(Matrix<RationalField>::identity(Q, 2),
                            {Q.from_integer(3), Q.from_integer(-1)});
    REQUIRE(sol.has_value());
    REQUIRE(sol->particular == Vec<RationalField>{Q.from_integer(3), Q.from_integer(-1)});
    REQUIRE(sol->kernel_basis.empty());
}

TEST_CASE("solve_affine detects inconsistency") {
    RationalField Q;
    auto sol = solve_affine(mat(Q, 1, 2, {0, 0}), {Q.one()});
    REQUIRE(!sol.has_value());
}

TEST_CASE("solve_affine over GF(2) matches brute force") {
    PrimeField F2(2);
    auto a = mat(F2, 1, 2, {1, 1});
    auto sol = solve_affine(a, {F2.one()});
    REQUIRE(sol.has_value());
    REQUIRE(sol->particular == Vec<PrimeField>{F2.one(), F2.zero()});
    REQUIRE(sol->kernel_basis.size() == 1);
    REQUIRE(sol->kernel_basis[0] == Vec<PrimeField>{F2.one(), F2.one()});
    // oracle: enumerate all 4 vectors of GF(2)^2
    std::set<std::vector<long>> expected, got;
    for (const auto& v : all_gf_vectors(2, 2))
        if ((v[0] + v[1]) % 2 == 1) expected.insert(v);
    for (const auto& v : enumerate_affine(*sol, 10))
        got.insert({v[0].value(), v[1].value()});
    REQUIRE(got == expected);
}

TEST_CASE("solve_affine solution sets equal brute force on random small systems") {
    std::mt19937 rng(97);
    PrimeField F2(2);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix<PrimeField> a(F2, r, c);
        Vec<PrimeField> b;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = F2.from_integer(rng() % 2);
            b.push_back(F2.from_integer(rng() % 2));
        }
        std::set<std::vector<long>> expected;
        for (const auto& v : all_gf_vectors(2, c)) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i) {
                long s = 0;
                for (std::size_t j = 0; j < c; ++j) s += a.at(i, j).value() * v[j];
                ok = (s % 2) == b[i].value();
            }
            if (ok) expected.insert(v);
        }
        auto sol = solve_affine(a, b);
        if (!sol) {
            REQUIRE(expected.empty());
            continue;
        }
        std::set<std::vector<long>> got;
        for (const auto& v : enumerate_affine(*sol, 100)) {
            std::vector<long> t;
            for (const auto& x : v) t.push_back(x.value());
            got.insert(t);
        }
        REQUIRE(got == expected);
        // kernel basis really is independent
        REQUIRE(rank(Matrix<PrimeField>::from_rows(F2, sol->kernel_basis)) ==
                sol->kernel_basis.size());
    }
}

TEST_CASE("enumerate_affine order and edge cases") {
    PrimeField F2(2);
    AffineSpace<PrimeField> s{F2, {F2.one(), F2.zero()}, {{F2.one(), F2.one()}}};
    auto got = enumerate_affine(s, 10);
    REQUIRE(got.size() == 2);
    REQUIRE(got[0] == Vec<PrimeField>{F2.one(), F2.zero()});
    REQUIRE(got[1] == Vec<PrimeField>{F2.zero(), F2.one()});

    AffineSpace<PrimeField> point{F2, {F2.one()}, {}};
    auto single = enumerate_affine(point, 10);
    REQUIRE(single.size() == 1);
    REQUIRE(single[0] == point.particular);

    AffineSpace<PrimeField> big{F2, zero_vec(F2, 20), {}};
    for (std::size_t i = 0; i < 20; ++i) big.kernel_basis.push_back(unit_vec(F2, 20, i));
    REQUIRE_THROWS_AS(enumerate_affine(big, 1000), limit_exceeded);
}

TEST_CASE("enumerate_affine over GF(3) is lexicographic in kernel coefficients") {
    PrimeField F3(3);
    AffineSpace<PrimeField> s{F3, zero_vec(F3, 2), {unit_vec(F3, 2, 0), unit_vec(F3, 2, 1)}};
    auto got = enumerate_affine(s, 100);
    REQUIRE(got.size() == 9);
    // coefficients (c0,c1) ascending: (0,0),(0,1),(0,2),(1,0),...
    std::vector<std::pair<long, long>> coords;
    for (const auto& v : got) coords.push_back({v[0].value(), v[1].value()});
    std::vector<std::pair<long, long>> want = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                               {1, 2}, {2, 0}, {2, 1}, {2, 2}};
    REQUIRE(coords == want);
}

TEST_CASE("enumerate_affine refuses rational scalars") {
    RationalField Q;
    AffineSpace<RationalField> point{Q, {Q.one()}, {}};
    REQUIRE_THROWS_AS(enumerate_affine(point, 10), infinite_field);
    AffineSpace<RationalField> line{Q, {Q.one()}, {{Q.one()}}};
    REQUIRE_THROWS_AS(enumerate_affine(line, 10), infinite_field);
}

TEST_CASE("solve_affine exact over Q with fractions") {
    RationalField Q;
    // x/2 + y/3 = 1, x - y = 0  =>  x = y = 6/5
    Matrix<RationalField> a(Q, 2, 2);
    a.at(0, 0) = Rational::from_string("1/2");
    a.at(0, 1) = Rational::from_string("1/3");
    a.at(1, 0) = Q.one();
    a.at(1, 1) = -Q.one();
    auto sol = solve_affine(a, {Q.one(), Q.zero()});
    REQUIRE(sol.has_value());
    REQUIRE(sol->particular[0] == Rational::from_string("6/5"));
    REQUIRE(sol->particular[1] == Rational::from_string("6/5"));
}
