#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sepkit/space.hpp"

using namespace sepkit;

namespace {

template <class F>
LinMap<F> random_map(const F& f, const BasedSpace<F>& dom, const BasedSpace<F>& cod,
                     std::mt19937& rng, long range) {
    Matrix<F> m(f, cod.dim, dom.dim);
    for (std::size_t i = 0; i < cod.dim; ++i)
        for (std::size_t j = 0; j < dom.dim; ++j)
            m.at(i, j) = f.from_integer(static_cast<long>(rng() % range));
    return LinMap<F>(dom, cod, std::move(m));
}

}  // namespace

TEST_CASE("tensor index convention") {
    RationalField Q;
    BasedSpace<RationalField> m(Q, 2), n(Q, 3);
    auto t = tensor_space(m, n);
    REQUIRE(t.dim == 6);
    // e_1 ⊗ f_2 sits at 1*3 + 2 = 5
    auto v = tensor_vec<RationalField>(unit_vec(Q, 2, 1), unit_vec(Q, 3, 2));
    REQUIRE(v == unit_vec(Q, 6, 5));

    REQUIRE(tensor_space(BasedSpace<RationalField>(Q, 1), BasedSpace<RationalField>(Q, 4)).dim == 4);
    REQUIRE(tensor_space(BasedSpace<RationalField>(Q, 0), BasedSpace<RationalField>(Q, 4)).dim == 0);
}

TEST_CASE("tensor_space rejects mixed fields at runtime") {
    PrimeField F2(2), F3(3);
    BasedSpace<PrimeField> a(F2, 2), b(F3, 2);
    REQUIRE_THROWS_AS(tensor_space(a, b), field_mismatch);
}

TEST_CASE("tensor_map of identities and scalars") {
    RationalField Q;
    BasedSpace<RationalField> two(Q, 2), three(Q, 3), one(Q, 1);
    REQUIRE(tensor_map(identity_map(two), identity_map(three)) ==
            identity_map(tensor_space(two, three)));

    Matrix<RationalField> f(Q, 1, 1), g(Q, 1, 1);
    f.at(0, 0) = Q.from_integer(2);
    g.at(0, 0) = Q.from_integer(3);
    auto fg = tensor_map(LinMap<RationalField>(one, one, f), LinMap<RationalField>(one, one, g));
    REQUIRE(fg.matrix.at(0, 0) == Q.from_integer(6));
}

TEST_CASE("tensor_map commutes with the swap on random maps over GF(3)") {
    PrimeField F3(3);
    std::mt19937 rng(1201);
    BasedSpace<PrimeField> v(F3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_map(F3, v, v, rng, 3);
        auto g = random_map(F3, v, v, rng, 3);
        auto lhs = compose(tensor_map(f, g), tensor_swap(v, v));
        auto rhs = compose(tensor_swap(v, v), tensor_map(g, f));
        REQUIRE(lhs.matrix == rhs.matrix);
    }
}

TEST_CASE("tensor_map is functorial") {
    PrimeField F3(3);
    std::mt19937 rng(7);
    BasedSpace<PrimeField> a(F3, 2), b(F3, 3), c(F3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_map(F3, b, c, rng, 3);
        auto fp = random_map(F3, a, b, rng, 3);
        auto g = random_map(F3, b, a, rng, 3);
        auto gp = random_map(F3, c, b, rng, 3);
        auto lhs = tensor_map(compose(f, fp), compose(g, gp));
        auto rhs = compose(tensor_map(f, g), tensor_map(fp, gp));
        REQUIRE(lhs.matrix == rhs.matrix);
    }
}

TEST_CASE("quotient by no relations is the identity") {
    RationalField Q;
    BasedSpace<RationalField> v(Q, 3);
    auto q = quotient_by(v, {});
    REQUIRE(q.space.dim == 3);
    REQUIRE(q.projection == identity_map(v));
    REQUIRE(q.section == identity_map(v));
}

TEST_CASE("rank one quotient identifies the two generators") {
    RationalField Q;
    BasedSpace<RationalField> v(Q, 2);
    auto q = quotient_by(v, {{Q.one(), -Q.one()}});
    REQUIRE(q.space.dim == 1);
    REQUIRE(q.project(unit_vec(Q, 2, 0)) == q.project(unit_vec(Q, 2, 1)));
    REQUIRE(q.project(unit_vec(Q, 2, 0)) == Vec<RationalField>{Q.one()});
}

TEST_CASE("quotient by a spanning set is zero") {
    PrimeField F2(2);
    BasedSpace<PrimeField> v(F2, 2);
    auto q = quotient_by(v, {unit_vec(F2, 2, 0), unit_vec(F2, 2, 1), {F2.one(), F2.one()}});
    REQUIRE(q.space.dim == 0);
}

TEST_CASE("quotient invariants on random relation sets") {
    PrimeField F2(2);
    std::mt19937 rng(3111);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 5;
        BasedSpace<PrimeField> v(F2, n);
        std::vector<Vec<PrimeField>> rels;
        std::size_t count = rng() % 5;
        for (std::size_t k = 0; k < count; ++k) {
            Vec<PrimeField> r;
            for (std::size_t i = 0; i < n; ++i) r.push_back(F2.from_integer(rng() % 2));
            rels.push_back(r);
        }
        auto q = quotient_by(v, rels);
        REQUIRE(compose(q.projection, q.section) == identity_map(q.space));
        for (const auto& r : rels) REQUIRE(is_zero_vec<PrimeField>(q.project(r)));
        REQUIRE(q.space.dim == n - rank(Matrix<PrimeField>::from_rows(F2, rels)));
    }
}

TEST_CASE("insert helpers build pure tensors") {
    RationalField Q;
    BasedSpace<RationalField> v(Q, 2), w(Q, 2);
    Vec<RationalField> x{Q.from_integer(2), Q.from_integer(5)};
    auto l = insert_left(v, w, x);
    REQUIRE(l.apply(unit_vec(Q, 2, 1)) == tensor_vec<RationalField>(x, unit_vec(Q, 2, 1)));
    auto r = insert_right(v, w, x);
    REQUIRE(r.apply(unit_vec(Q, 2, 1)) == tensor_vec<RationalField>(unit_vec(Q, 2, 1), x));
}
