#pragma once

#include "algebra.hpp"

namespace sepkit {

// Finite-dimensional coalgebra via comultiplication constants. The counit
// lands in the 1-dimensional scalar space.
template <class F>
struct StructureCoalgebra {
    BasedSpace<F> space;
    LinMap<F> comult;  // C -> C⊗C
    LinMap<F> counit;  // C -> k

    StructureCoalgebra(BasedSpace<F> sp, LinMap<F> cm, LinMap<F> cu)
        : space(std::move(sp)), comult(std::move(cm)), counit(std::move(cu)) {
        if (comult.domain.dim != space.dim || comult.codomain.dim != space.dim * space.dim)
            throw dimension_mismatch("coalgebra comult shape");
        if (counit.domain.dim != space.dim || counit.codomain.dim != 1)
            throw dimension_mismatch("coalgebra counit shape");
    }

    const F& field() const { return space.field; }
    std::size_t dim() const { return space.dim; }

    friend bool operator==(const StructureCoalgebra& a, const StructureCoalgebra& b) {
        return a.space == b.space && a.comult.matrix == b.comult.matrix &&
               a.counit.matrix == b.counit.matrix;
    }
    friend bool operator!=(const StructureCoalgebra& a, const StructureCoalgebra& b) {
        return !(a == b);
    }
};

template <class F>
Report check_coalgebra(const StructureCoalgebra<F>& c, const std::string& subject = "coalgebra") {
    Report rep;
    rep.subject = subject;
    const auto& sp = c.space;
    auto id = identity_map(sp);
    auto lhs = compose(tensor_map(c.comult, id), c.comult);
    auto rhs = compose(tensor_map(id, c.comult), c.comult);
    expect_equal_maps<F>(rep, "coassoc", lhs, rhs, {sp.dim}, {&sp});
    // (ε⊗1)∘Δ = id and (1⊗ε)∘Δ = id under the unitor identifications
    auto left = with_spaces(compose(tensor_map(c.counit, id), c.comult), sp, sp);
    auto right = with_spaces(compose(tensor_map(id, c.counit), c.comult), sp, sp);
    expect_equal_maps<F>(rep, "counit_left", left, id, {sp.dim}, {&sp});
    expect_equal_maps<F>(rep, "counit_right", right, id, {sp.dim}, {&sp});
    return rep;
}

// The base field as a coalgebra: Δ(1) = 1⊗1, ε = id.
template <class F>
StructureCoalgebra<F> trivial_coalgebra(const F& field) {
    BasedSpace<F> sp(field, 1, {"1"});
    auto one = scalar_space(field);
    return StructureCoalgebra<F>(
        sp, make_map<F>(sp, tensor_space(sp, sp), [&](std::size_t) { return Vec<F>{field.one()}; }),
        make_map<F>(sp, one, [&](std::size_t) { return Vec<F>{field.one()}; }));
}

// Grouplike coalgebra on n points: Δ(g) = g⊗g, ε(g) = 1.
template <class F>
StructureCoalgebra<F> grouplike_coalgebra(const F& field, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    BasedSpace<F> sp(field, n, names);
    auto comult = make_map<F>(sp, tensor_space(sp, sp), [&](std::size_t j) {
        return tensor_vec<F>(unit_vec(field, n, j), unit_vec(field, n, j));
    });
    auto counit =
        make_map<F>(sp, scalar_space(field), [&](std::size_t) { return Vec<F>{field.one()}; });
    return StructureCoalgebra<F>(sp, std::move(comult), std::move(counit));
}

// Comatrix coalgebra on basis e_{ab}: Δ(e_{ab}) = Σ_k e_{ak} ⊗ e_{kb},
// ε(e_{ab}) = δ_{ab}.
template <class F>
StructureCoalgebra<F> comatrix_coalgebra(const F& field, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            names.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
    BasedSpace<F> sp(field, n * n, names);
    auto comult = make_map<F>(sp, tensor_space(sp, sp), [&, n](std::size_t j) {
        std::size_t a = j / n, b = j % n;
        Vec<F> v = zero_vec(field, n * n * n * n);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t left = a * n + k, right = k * n + b;
            v[left * n * n + right] = field.one();
        }
        return v;
    });
    auto counit = make_map<F>(sp, scalar_space(field), [&, n](std::size_t j) {
        return Vec<F>{j / n == j % n ? field.one() : field.zero()};
    });
    return StructureCoalgebra<F>(sp, std::move(comult), std::move(counit));
}

// ---------------------------------------------------------------------------
// Right C-comodules.

template <class F>
struct Comodule {
    StructureCoalgebra<F> coalgebra;
    BasedSpace<F> space;
    LinMap<F> coaction;  // M -> M⊗C
};

template <class F>
Comodule<F> regular_comodule(const StructureCoalgebra<F>& c) {
    return Comodule<F>{c, c.space, c.comult};
}

template <class F>
Report check_comodule(const Comodule<F>& m, const std::string& subject = "comodule") {
    Report rep;
    rep.subject = subject;
    const auto& c = m.coalgebra;
    auto idm = identity_map(m.space);
    auto lhs = compose(tensor_map(m.coaction, identity_map(c.space)), m.coaction);
    auto rhs = compose(tensor_map(idm, c.comult), m.coaction);
    expect_equal_maps<F>(rep, "coassoc", lhs, rhs, {m.space.dim}, {&m.space});
    auto counital = with_spaces(compose(tensor_map(idm, c.counit), m.coaction), m.space, m.space);
    expect_equal_maps<F>(rep, "counital", counital, idm, {m.space.dim}, {&m.space});
    return rep;
}

}  // namespace sepkit
