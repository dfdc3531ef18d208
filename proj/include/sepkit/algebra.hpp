#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace sepkit {

// Finite-dimensional unital associative algebra, given by its structure
// constants (the multiplication map A⊗A → A) and a unit vector.
template <class F>
struct StructureAlgebra {
    BasedSpace<F> space;
    LinMap<F> mult;  // A⊗A -> A
    Vec<F> unit;

    StructureAlgebra(BasedSpace<F> sp, LinMap<F> m, Vec<F> u)
        : space(std::move(sp)), mult(std::move(m)), unit(std::move(u)) {
        if (mult.domain.dim != space.dim * space.dim || mult.codomain.dim != space.dim)
            throw dimension_mismatch("algebra mult shape");
        if (unit.size() != space.dim) throw dimension_mismatch("algebra unit length");
    }

    const F& field() const { return space.field; }
    std::size_t dim() const { return space.dim; }

    Vec<F> product(const Vec<F>& a, const Vec<F>& b) const {
        return mult.apply(tensor_vec<F>(a, b));
    }

    friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
        return a.space == b.space && a.mult.matrix == b.mult.matrix && a.unit == b.unit;
    }
    friend bool operator!=(const StructureAlgebra& a, const StructureAlgebra& b) {
        return !(a == b);
    }
};

template <class F>
StructureAlgebra<F> algebra_from_products(
    const BasedSpace<F>& space, const std::function<Vec<F>(std::size_t, std::size_t)>& prod,
    const Vec<F>& unit) {
    auto mult = make_map<F>(tensor_space(space, space), space, [&](std::size_t col) {
        return prod(col / space.dim, col % space.dim);
    });
    return StructureAlgebra<F>(space, std::move(mult), unit);
}

// The base field as a 1-dimensional algebra.
template <class F>
StructureAlgebra<F> field_algebra(const F& field) {
    BasedSpace<F> sp(field, 1, {"1"});
    return algebra_from_products<F>(
        sp, [&](std::size_t, std::size_t) { return Vec<F>{field.one()}; }, {field.one()});
}

// n x n matrix algebra on the matrix-unit basis E_{ab}, row-major.
template <class F>
StructureAlgebra<F> matrix_algebra(const F& field, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    BasedSpace<F> sp(field, n * n, names);
    Vec<F> unit = zero_vec(field, n * n);
    for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = field.one();
    return algebra_from_products<F>(
        sp,
        [&](std::size_t i, std::size_t j) {
            // E_{ab} E_{cd} = delta_{bc} E_{ad}
            std::size_t a = i / n, b = i % n, c = j / n, d = j % n;
            Vec<F> v = zero_vec(field, n * n);
            if (b == c) v[a * n + d] = field.one();
            return v;
        },
        unit);
}

// k[w]/(w^2 - c1 w - c0) on basis {1, w}. Covers Q(i), GF(4), GF(9), k[x]/(x^2).
template <class F>
StructureAlgebra<F> quadratic_algebra(const F& field, const typename F::Scalar& c0,
                                      const typename F::Scalar& c1,
                                      const std::string& gen_name = "w") {
    BasedSpace<F> sp(field, 2, {"1", gen_name});
    return algebra_from_products<F>(
        sp,
        [&](std::size_t i, std::size_t j) {
            Vec<F> v = zero_vec(field, 2);
            if (i == 0 && j == 0) v[0] = field.one();
            else if (i + j == 1) v[1] = field.one();
            else { v[0] = c0; v[1] = c1; }  // w*w = c0 + c1*w
            return v;
        },
        unit_vec(field, 2, 0));
}

// Direct product A x B (componentwise multiplication).
template <class F>
StructureAlgebra<F> product_algebra(const StructureAlgebra<F>& a, const StructureAlgebra<F>& b) {
    const F& field = a.field();
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < da; ++i) names.push_back(a.space.label(i) + "|0");
    for (std::size_t i = 0; i < db; ++i) names.push_back("0|" + b.space.label(i));
    BasedSpace<F> sp(field, da + db, names);
    Vec<F> unit = zero_vec(field, da + db);
    for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit[i];
    for (std::size_t i = 0; i < db; ++i) unit[da + i] = b.unit[i];
    return algebra_from_products<F>(
        sp,
        [&, da, db](std::size_t i, std::size_t j) {
            Vec<F> v = zero_vec(field, da + db);
            if (i < da && j < da) {
                auto p = a.mult.apply(tensor_vec<F>(unit_vec(field, da, i), unit_vec(field, da, j)));
                for (std::size_t t = 0; t < da; ++t) v[t] = p[t];
            } else if (i >= da && j >= da) {
                auto p = b.mult.apply(
                    tensor_vec<F>(unit_vec(field, db, i - da), unit_vec(field, db, j - da)));
                for (std::size_t t = 0; t < db; ++t) v[da + t] = p[t];
            }
            return v;
        },
        unit);
}

template <class F>
LinMap<F> unit_map(const StructureAlgebra<F>& a) {
    return make_map<F>(scalar_space(a.field()), a.space, [&](std::size_t) { return a.unit; });
}

// Left/right multiplication by a fixed element, as maps A -> A.
template <class F>
LinMap<F> left_mult(const StructureAlgebra<F>& a, const Vec<F>& x) {
    return compose(a.mult, insert_left(a.space, a.space, x));
}

template <class F>
LinMap<F> right_mult(const StructureAlgebra<F>& a, const Vec<F>& x) {
    return compose(a.mult, insert_right(a.space, a.space, x));
}

template <class F>
Report check_algebra(const StructureAlgebra<F>& a, const std::string& subject = "algebra") {
    Report rep;
    rep.subject = subject;
    const auto& sp = a.space;
    auto id = identity_map(sp);
    // mult ∘ (mult ⊗ id) = mult ∘ (id ⊗ mult) on A⊗A⊗A
    auto lhs = compose(a.mult, tensor_map(a.mult, id));
    auto rhs = compose(a.mult, tensor_map(id, a.mult));
    expect_equal_maps<F>(rep, "assoc", lhs, rhs, {sp.dim, sp.dim, sp.dim}, {&sp, &sp, &sp});
    auto lm = left_mult(a, a.unit);
    auto rm = right_mult(a, a.unit);
    expect_equal_maps<F>(rep, "unit_left", lm, id, {sp.dim}, {&sp});
    expect_equal_maps<F>(rep, "unit_right", rm, id, {sp.dim}, {&sp});
    return rep;
}

// ---------------------------------------------------------------------------
// Algebra homomorphisms (linear over the base field).

template <class F>
struct AlgebraHom {
    StructureAlgebra<F> source;
    StructureAlgebra<F> target;
    LinMap<F> map;

    AlgebraHom(StructureAlgebra<F> s, StructureAlgebra<F> t, LinMap<F> m)
        : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
        if (map.domain.dim != source.dim() || map.codomain.dim != target.dim())
            throw dimension_mismatch("hom map shape");
    }
};

template <class F>
AlgebraHom<F> identity_hom(const StructureAlgebra<F>& a) {
    return AlgebraHom<F>(a, a, identity_map(a.space));
}

// The unit map k -> A as a hom from the 1-dimensional field algebra.
template <class F>
AlgebraHom<F> unit_hom(const StructureAlgebra<F>& a) {
    auto k = field_algebra(a.field());
    return AlgebraHom<F>(k, a, make_map<F>(k.space, a.space, [&](std::size_t) { return a.unit; }));
}

template <class F>
Report check_hom(const AlgebraHom<F>& h, const std::string& subject = "hom") {
    Report rep;
    rep.subject = subject;
    expect_equal_vecs<F>(rep, "unital", h.map.apply(h.source.unit), h.target.unit, &h.target.space);
    auto lhs = compose(h.map, h.source.mult);
    auto rhs = compose(h.target.mult, tensor_map(h.map, h.map));
    expect_equal_maps<F>(rep, "multiplicative", lhs, rhs, {h.source.dim(), h.source.dim()},
                         {&h.source.space, &h.source.space});
    return rep;
}

// ---------------------------------------------------------------------------
// Modules over a StructureAlgebra.

template <class F>
struct RightModule {
    StructureAlgebra<F> algebra;
    BasedSpace<F> space;
    LinMap<F> action;  // M⊗A -> M
};

template <class F>
struct LeftModule {
    StructureAlgebra<F> algebra;
    BasedSpace<F> space;
    LinMap<F> action;  // A⊗M -> M
};

template <class F>
struct Bimodule {
    StructureAlgebra<F> left_algebra;
    StructureAlgebra<F> right_algebra;
    BasedSpace<F> space;
    LinMap<F> left_action;   // A⊗M -> M
    LinMap<F> right_action;  // M⊗B -> M
};

template <class F>
RightModule<F> regular_right_module(const StructureAlgebra<F>& a) {
    return RightModule<F>{a, a.space, a.mult};
}

template <class F>
LeftModule<F> regular_left_module(const StructureAlgebra<F>& a) {
    return LeftModule<F>{a, a.space, a.mult};
}

// Restriction of scalars along phi: R -> S turns an S-module into an R-module.
template <class F>
RightModule<F> restrict_right(const RightModule<F>& m, const AlgebraHom<F>& phi) {
    auto action = compose(m.action, tensor_map(identity_map(m.space), phi.map));
    return RightModule<F>{phi.source, m.space, std::move(action)};
}

template <class F>
LeftModule<F> restrict_left(const LeftModule<F>& m, const AlgebraHom<F>& phi) {
    auto action = compose(m.action, tensor_map(phi.map, identity_map(m.space)));
    return LeftModule<F>{phi.source, m.space, std::move(action)};
}

template <class F>
Report check_right_module(const RightModule<F>& m, const std::string& subject = "right module") {
    Report rep;
    rep.subject = subject;
    const auto& a = m.algebra;
    auto idm = identity_map(m.space);
    auto lhs = compose(m.action, tensor_map(m.action, identity_map(a.space)));
    auto rhs = compose(m.action, tensor_map(idm, a.mult));
    expect_equal_maps<F>(rep, "assoc", lhs, rhs, {m.space.dim, a.dim(), a.dim()},
                         {&m.space, &a.space, &a.space});
    auto unital = compose(m.action, insert_right(m.space, a.space, a.unit));
    expect_equal_maps<F>(rep, "unital", unital, idm, {m.space.dim}, {&m.space});
    return rep;
}

template <class F>
Report check_left_module(const LeftModule<F>& m, const std::string& subject = "left module") {
    Report rep;
    rep.subject = subject;
    const auto& a = m.algebra;
    auto idm = identity_map(m.space);
    auto lhs = compose(m.action, tensor_map(identity_map(a.space), m.action));
    auto rhs = compose(m.action, tensor_map(a.mult, idm));
    expect_equal_maps<F>(rep, "assoc", lhs, rhs, {a.dim(), a.dim(), m.space.dim},
                         {&a.space, &a.space, &m.space});
    auto unital = compose(m.action, insert_left(m.space, a.space, a.unit));
    expect_equal_maps<F>(rep, "unital", unital, idm, {m.space.dim}, {&m.space});
    return rep;
}

template <class F>
Report check_bimodule(const Bimodule<F>& m, const std::string& subject = "bimodule") {
    Report rep = check_left_module(LeftModule<F>{m.left_algebra, m.space, m.left_action}, subject);
    Report rr = check_right_module(RightModule<F>{m.right_algebra, m.space, m.right_action}, subject);
    for (auto& c : rr.conditions) {
        c.tag = "right_" + c.tag;
        rep.conditions.push_back(std::move(c));
    }
    for (auto& c : rep.conditions)
        if (c.tag == "assoc" || c.tag == "unital") c.tag = "left_" + c.tag;
    // the two actions commute: (a·m)·b = a·(m·b)
    auto ida = identity_map(m.left_algebra.space);
    auto idb = identity_map(m.right_algebra.space);
    auto lhs = compose(m.right_action, tensor_map(m.left_action, idb));
    auto rhs = compose(m.left_action, tensor_map(ida, m.right_action));
    expect_equal_maps<F>(rep, "commute", lhs, rhs,
                         {m.left_algebra.dim(), m.space.dim, m.right_algebra.dim()},
                         {&m.left_algebra.space, &m.space, &m.right_algebra.space});
    return rep;
}

// ---------------------------------------------------------------------------
// M ⊗_R N: the quotient of M⊗N by (m·r)⊗n - m⊗(r·n), relations enumerated
// over basis triples in lexicographic (m, r, n) order.

template <class F>
QuotientSpace<F> alg_tensor(const RightModule<F>& m, const LeftModule<F>& n) {
    if (m.algebra != n.algebra)
        throw dimension_mismatch("alg_tensor: modules over different algebras");
    const F& field = m.space.field;
    const std::size_t dm = m.space.dim, dr = m.algebra.dim(), dn = n.space.dim;
    auto ambient = tensor_space(m.space, n.space);
    std::vector<Vec<F>> relations;
    relations.reserve(dm * dr * dn);
    for (std::size_t i = 0; i < dm; ++i) {
        auto ei = unit_vec(field, dm, i);
        for (std::size_t j = 0; j < dr; ++j) {
            auto ej = unit_vec(field, dr, j);
            auto mi_rj = m.action.apply(tensor_vec<F>(ei, ej));
            for (std::size_t k = 0; k < dn; ++k) {
                auto ek = unit_vec(field, dn, k);
                auto rel = tensor_vec<F>(mi_rj, ek);
                sub_from<F>(rel, tensor_vec<F>(ei, n.action.apply(tensor_vec<F>(ej, ek))));
                relations.push_back(std::move(rel));
            }
        }
    }
    return quotient_by(ambient, relations);
}

}  // namespace sepkit
