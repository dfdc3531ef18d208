#pragma once

#include "coalgebra.hpp"
#include "separability.hpp"

namespace sepkit {

// An A-coring: an A-bimodule C with comultiplication landing (after
// projection) in C ⊗_A C and counit C -> A. The stored comult has codomain
// C⊗C; all equality checks on it happen in the quotient, so user input never
// has to pick section-dependent representatives.
template <class F>
struct Coring {
    StructureAlgebra<F> base;  // A
    BasedSpace<F> space;       // C
    LinMap<F> left_action;     // A⊗C -> C
    LinMap<F> right_action;    // C⊗A -> C
    LinMap<F> comult;          // C -> C⊗C
    LinMap<F> counit;          // C -> A
};

// C ⊗_A C as a quotient of C⊗C.
template <class F>
QuotientSpace<F> coring_tensor_square(const Coring<F>& c) {
    RightModule<F> m{c.base, c.space, c.right_action};
    LeftModule<F> n{c.base, c.space, c.left_action};
    return alg_tensor(m, n);
}

template <class F>
Report check_coring(const Coring<F>& c, const std::string& subject = "coring") {
    Report rep = check_bimodule(Bimodule<F>{c.base, c.base, c.space, c.left_action,
                                            c.right_action},
                                subject);
    const auto& A = c.base;
    auto id_a = identity_map(A.space);
    auto id_c = identity_map(c.space);

    // counit is A-bilinear
    expect_equal_maps<F>(rep, "counit_left_linear", compose(c.counit, c.left_action),
                         compose(A.mult, tensor_map(id_a, c.counit)), {A.dim(), c.space.dim},
                         {&A.space, &c.space});
    expect_equal_maps<F>(rep, "counit_right_linear", compose(c.counit, c.right_action),
                         compose(A.mult, tensor_map(c.counit, id_a)), {c.space.dim, A.dim()},
                         {&c.space, &A.space});

    // comult is A-bilinear after projecting into C ⊗_A C
    auto q1 = coring_tensor_square(c);
    auto lhs_l = compose(q1.projection, compose(c.comult, c.left_action));
    auto rhs_l = compose(q1.projection,
                         compose(tensor_map(c.left_action, id_c), tensor_map(id_a, c.comult)));
    expect_equal_maps<F>(rep, "comult_left_linear", lhs_l, rhs_l, {A.dim(), c.space.dim},
                         {&A.space, &c.space});
    auto lhs_r = compose(q1.projection, compose(c.comult, c.right_action));
    auto rhs_r = compose(q1.projection,
                         compose(tensor_map(id_c, c.right_action), tensor_map(c.comult, id_a)));
    expect_equal_maps<F>(rep, "comult_right_linear", lhs_r, rhs_r, {c.space.dim, A.dim()},
                         {&c.space, &A.space});

    // coassociativity in (C ⊗_A C) ⊗_A C
    auto act = compose(q1.projection,
                       compose(tensor_map(id_c, c.right_action),
                               tensor_map(q1.section, id_a)));
    RightModule<F> q1_mod{c.base, q1.space, act};
    LeftModule<F> n{c.base, c.space, c.left_action};
    auto q2 = alg_tensor(q1_mod, n);
    auto proj3 = compose(q2.projection, tensor_map(q1.projection, id_c));
    expect_equal_maps<F>(rep, "coassoc", compose(proj3, compose(tensor_map(c.comult, id_c), c.comult)),
                         compose(proj3, compose(tensor_map(id_c, c.comult), c.comult)),
                         {c.space.dim}, {&c.space});

    // counit laws through the actions
    expect_equal_maps<F>(rep, "counit_left",
                         compose(c.left_action, compose(tensor_map(c.counit, id_c), c.comult)),
                         id_c, {c.space.dim}, {&c.space});
    expect_equal_maps<F>(rep, "counit_right",
                         compose(c.right_action, compose(tensor_map(id_c, c.counit), c.comult)),
                         id_c, {c.space.dim}, {&c.space});
    return rep;
}

// A as a coring over itself: Δ(a) = a⊗1, ε = id.
template <class F>
Coring<F> trivial_coring(const StructureAlgebra<F>& a) {
    return Coring<F>{a,
                     a.space,
                     a.mult,
                     a.mult,
                     insert_right(a.space, a.space, a.unit),
                     identity_map(a.space)};
}

// A coalgebra over k is a coring over the 1-dimensional algebra.
template <class F>
Coring<F> coalgebra_as_coring(const StructureCoalgebra<F>& c) {
    auto k = field_algebra(c.field());
    const auto& sp = c.space;
    auto left = with_spaces(identity_map(sp), tensor_space(k.space, sp), sp);
    auto right = with_spaces(identity_map(sp), tensor_space(sp, k.space), sp);
    auto counit = with_spaces(c.counit, sp, k.space);
    return Coring<F>{k, sp, std::move(left), std::move(right), c.comult, std::move(counit)};
}

// The Sweedler coring S ⊗_R S of a ring map phi: R -> S, with
// s1 ⊗ s2 ↦ (s1 ⊗ 1) ⊗ (1 ⊗ s2) and counit s1 ⊗ s2 ↦ s1 s2. The carrier is
// the canonical quotient basis of TensorSquareContext(phi), so coordinates
// agree with separability-idempotent coordinates on the nose.
template <class F>
Coring<F> sweedler_coring(const AlgebraHom<F>& phi) {
    TensorSquareContext<F> ctx(phi);
    const auto& S = phi.target;
    auto id_s = identity_map(S.space);
    const auto& C = ctx.q1.space;

    auto left = compose(ctx.q1.projection,
                        compose(tensor_map(S.mult, id_s), tensor_map(id_s, ctx.q1.section)));
    auto right = compose(ctx.q1.projection,
                         compose(tensor_map(id_s, S.mult), tensor_map(ctx.q1.section, id_s)));
    auto to_left_leg = compose(ctx.q1.projection, insert_right(S.space, S.space, S.unit));
    auto to_right_leg = compose(ctx.q1.projection, insert_left(S.space, S.space, S.unit));
    auto comult = compose(tensor_map(to_left_leg, to_right_leg), ctx.q1.section);
    auto counit = compose(S.mult, ctx.q1.section);

    Coring<F> coring{S, C, std::move(left), std::move(right), std::move(comult), std::move(counit)};
    auto rep = check_coring(coring, "sweedler");
    if (!rep.passed()) throw axiom_failure("sweedler coring failed its axioms: " + rep.conditions.front().tag);
    return coring;
}

// ---------------------------------------------------------------------------
// Grouplike elements.

template <class F>
struct GrouplikeElement {
    Coring<F> coring;
    Vec<F> vector;  // coordinates in C
};

template <class F>
Report verify_grouplike(const GrouplikeElement<F>& g) {
    Report rep;
    rep.subject = "grouplike";
    const auto& c = g.coring;
    const auto& A = c.base;
    const F& field = A.field();
    if (g.vector.size() != c.space.dim) throw dimension_mismatch("grouplike coordinates");

    Condition& inv = rep.add("invariant");
    for (std::size_t a = 0; a < A.dim(); ++a) {
        auto ea = unit_vec(field, A.dim(), a);
        auto ax = c.left_action.apply(tensor_vec<F>(ea, g.vector));
        auto xa = c.right_action.apply(tensor_vec<F>(g.vector, ea));
        if (ax == xa) continue;
        inv.passed = false;
        if (inv.witnesses.size() < 8)
            inv.witnesses.push_back(Witness{{a}, "a = " + A.space.label(a)});
    }

    expect_equal_vecs<F>(rep, "counit_one", c.counit.apply(g.vector), A.unit, &A.space);

    Condition& grp = rep.add("grouplike");
    auto q1 = coring_tensor_square(c);
    auto lhs = q1.project(c.comult.apply(g.vector));
    auto rhs = q1.project(tensor_vec<F>(g.vector, g.vector));
    if (lhs != rhs) {
        grp.passed = false;
        grp.witnesses.push_back(Witness{{}, "Δ(x) != x⊗x in C ⊗_A C"});
    }
    return rep;
}

// Solves the linear system {ax = xa, ε(x) = 1}, then filters by the quadratic
// grouplike condition in C ⊗_A C. Complete over finite fields.
template <class F>
std::vector<GrouplikeElement<F>> find_invariant_grouplikes(const Coring<F>& c,
                                                           std::uint64_t limit = 1000000) {
    const auto& A = c.base;
    const F& field = A.field();
    const std::size_t n = c.space.dim;
    auto q1 = coring_tensor_square(c);

    std::vector<LinMap<F>> inv_blocks;
    for (std::size_t a = 0; a < A.dim(); ++a) {
        auto ea = unit_vec(field, A.dim(), a);
        inv_blocks.push_back(compose(c.left_action, insert_left(c.space, A.space, ea)) -
                             compose(c.right_action, insert_right(c.space, A.space, ea)));
    }
    auto residual = [&](const Vec<F>& x) {
        Vec<F> out;
        for (const auto& blk : inv_blocks) {
            auto r = blk.apply(x);
            out.insert(out.end(), r.begin(), r.end());
        }
        auto e = c.counit.apply(x);
        sub_from<F>(e, A.unit);
        out.insert(out.end(), e.begin(), e.end());
        return out;
    };
    auto space = solve_affine_conditions<F>(field, n, residual);
    std::vector<GrouplikeElement<F>> found;
    if (!space) return found;
    enumerate_affine<F>(*space, limit, [&](const Vec<F>& x) {
        auto lhs = q1.project(c.comult.apply(x));
        auto rhs = q1.project(tensor_vec<F>(x, x));
        if (lhs == rhs) found.push_back(GrouplikeElement<F>{c, x});
    });
    return found;
}

}  // namespace sepkit
