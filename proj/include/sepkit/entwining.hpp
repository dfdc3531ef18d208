#pragma once

#include "coalgebra.hpp"
#include "coring.hpp"

namespace sepkit {

// An entwining structure (A, C, psi): an algebra and a coalgebra bound by
// psi: C⊗A -> A⊗C subject to four axioms (multiplication, unit,
// comultiplication, counit compatibility).
template <class F>
struct EntwiningStructure {
    StructureAlgebra<F> algebra;     // A
    StructureCoalgebra<F> coalgebra; // C
    LinMap<F> psi;                   // C⊗A -> A⊗C

    EntwiningStructure(StructureAlgebra<F> a, StructureCoalgebra<F> c, LinMap<F> p)
        : algebra(std::move(a)), coalgebra(std::move(c)), psi(std::move(p)) {
        if (psi.domain.dim != coalgebra.dim() * algebra.dim() ||
            psi.codomain.dim != algebra.dim() * coalgebra.dim())
            throw dimension_mismatch("psi must map C⊗A to A⊗C");
    }

    const F& field() const { return algebra.field(); }
};

template <class F>
EntwiningStructure<F> swap_entwining(const StructureAlgebra<F>& a,
                                     const StructureCoalgebra<F>& c) {
    return EntwiningStructure<F>(a, c, tensor_swap(c.space, a.space));
}

template <class F>
Report check_entwining(const EntwiningStructure<F>& e, const std::string& subject = "entwining") {
    Report rep;
    rep.subject = subject;
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto id_a = identity_map(A.space);
    auto id_c = identity_map(C.space);

    auto lhs1 = compose(e.psi, tensor_map(id_c, A.mult));
    auto rhs1 = compose(tensor_map(A.mult, id_c),
                        compose(tensor_map(id_a, e.psi), tensor_map(e.psi, id_a)));
    expect_equal_maps<F>(rep, "ent1", lhs1, rhs1, {C.dim(), A.dim(), A.dim()},
                         {&C.space, &A.space, &A.space});

    auto lhs2 = compose(e.psi, insert_right(C.space, A.space, A.unit));
    auto rhs2 = insert_left(C.space, A.space, A.unit);
    expect_equal_maps<F>(rep, "ent2", lhs2, rhs2, {C.dim()}, {&C.space});

    auto lhs3 = compose(tensor_map(id_a, C.comult), e.psi);
    auto rhs3 = compose(tensor_map(e.psi, id_c),
                        compose(tensor_map(id_c, e.psi), tensor_map(C.comult, id_a)));
    expect_equal_maps<F>(rep, "ent3", lhs3, rhs3, {C.dim(), A.dim()}, {&C.space, &A.space});

    auto dom = tensor_space(C.space, A.space);
    auto lhs4 = with_spaces(compose(tensor_map(id_a, C.counit), e.psi), dom, A.space);
    auto rhs4 = with_spaces(tensor_map(C.counit, id_a), dom, A.space);
    expect_equal_maps<F>(rep, "ent4", lhs4, rhs4, {C.dim(), A.dim()}, {&C.space, &A.space});
    return rep;
}

// ---------------------------------------------------------------------------
// Entwined modules: a right A-action and a right C-coaction commuting
// through psi.

template <class F>
struct EntwinedModule {
    EntwiningStructure<F> structure;
    BasedSpace<F> space;
    LinMap<F> action;    // M⊗A -> M
    LinMap<F> coaction;  // M -> M⊗C
};

template <class F>
Report check_entwined_module(const EntwinedModule<F>& m,
                             const std::string& subject = "entwined module") {
    Report rep;
    rep.subject = subject;
    const auto& A = m.structure.algebra;
    const auto& C = m.structure.coalgebra;

    auto amod = check_right_module(RightModule<F>{A, m.space, m.action});
    for (auto& c : amod.conditions) {
        c.tag = "action_" + c.tag;
        rep.conditions.push_back(std::move(c));
    }
    auto cmod = check_comodule(Comodule<F>{C, m.space, m.coaction});
    for (auto& c : cmod.conditions) {
        c.tag = "coaction_" + c.tag;
        rep.conditions.push_back(std::move(c));
    }

    auto lhs = compose(m.coaction, m.action);
    auto rhs = compose(tensor_map(m.action, identity_map(C.space)),
                       compose(tensor_map(identity_map(m.space), m.structure.psi),
                               tensor_map(m.coaction, identity_map(A.space))));
    expect_equal_maps<F>(rep, "compat", lhs, rhs, {m.space.dim, A.dim()}, {&m.space, &A.space});
    return rep;
}

// M ↦ M⊗C with action through psi and coaction through Δ.
template <class F>
EntwinedModule<F> induce_fc(const EntwiningStructure<F>& e, const RightModule<F>& m) {
    const auto& C = e.coalgebra;
    auto space = tensor_space(m.space, C.space);
    auto action = compose(tensor_map(m.action, identity_map(C.space)),
                          tensor_map(identity_map(m.space), e.psi));
    auto coaction = tensor_map(identity_map(m.space), C.comult);
    return EntwinedModule<F>{e, space, std::move(action), std::move(coaction)};
}

// N ↦ N⊗A with action through ∇ and coaction through psi.
template <class F>
EntwinedModule<F> induce_fa(const EntwiningStructure<F>& e, const Comodule<F>& n) {
    const auto& A = e.algebra;
    auto space = tensor_space(n.space, A.space);
    auto action = tensor_map(identity_map(n.space), A.mult);
    auto coaction = compose(tensor_map(identity_map(n.space), e.psi),
                            tensor_map(n.coaction, identity_map(A.space)));
    return EntwinedModule<F>{e, space, std::move(action), std::move(coaction)};
}

template <class F>
struct DirectSumModule {
    EntwinedModule<F> module;
    LinMap<F> incl1, incl2;  // summand -> sum
    LinMap<F> proj1, proj2;  // sum -> summand
};

template <class F>
DirectSumModule<F> direct_sum(const EntwinedModule<F>& m1, const EntwinedModule<F>& m2) {
    const F& field = m1.space.field;
    const auto& e = m1.structure;
    const std::size_t d1 = m1.space.dim, d2 = m2.space.dim;
    BasedSpace<F> sum(field, d1 + d2);

    auto i1 = make_map<F>(m1.space, sum, [&](std::size_t j) { return unit_vec(field, d1 + d2, j); });
    auto i2 = make_map<F>(m2.space, sum,
                          [&](std::size_t j) { return unit_vec(field, d1 + d2, d1 + j); });
    auto p1 = make_map<F>(sum, m1.space, [&](std::size_t j) {
        return j < d1 ? unit_vec(field, d1, j) : zero_vec(field, d1);
    });
    auto p2 = make_map<F>(sum, m2.space, [&](std::size_t j) {
        return j < d1 ? zero_vec(field, d2) : unit_vec(field, d2, j - d1);
    });

    const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
    auto action = make_map<F>(tensor_space(sum, e.algebra.space), sum, [&](std::size_t col) {
        std::size_t m = col / da, a = col % da;
        if (m < d1)
            return i1.apply(m1.action.apply(tensor_vec<F>(unit_vec(field, d1, m), unit_vec(field, da, a))));
        return i2.apply(m2.action.apply(tensor_vec<F>(unit_vec(field, d2, m - d1), unit_vec(field, da, a))));
    });
    auto coaction = make_map<F>(sum, tensor_space(sum, e.coalgebra.space), [&](std::size_t m) {
        if (m < d1)
            return tensor_map(i1, identity_map(e.coalgebra.space))
                .apply(m1.coaction.apply(unit_vec(field, d1, m)));
        return tensor_map(i2, identity_map(e.coalgebra.space))
            .apply(m2.coaction.apply(unit_vec(field, d2, m - d1)));
    });
    (void)dc;
    EntwinedModule<F> sum_mod{e, sum, std::move(action), std::move(coaction)};
    return DirectSumModule<F>{std::move(sum_mod), std::move(i1), std::move(i2), std::move(p1),
                              std::move(p2)};
}

// Is f: M -> N a morphism of entwined modules (A-linear and C-colinear)?
template <class F>
bool is_module_morphism(const EntwinedModule<F>& m, const EntwinedModule<F>& n,
                        const LinMap<F>& f) {
    auto id_a = identity_map(m.structure.algebra.space);
    auto id_c = identity_map(m.structure.coalgebra.space);
    bool linear = compose(f, m.action) == compose(n.action, tensor_map(f, id_a));
    bool colinear = compose(n.coaction, f) == compose(tensor_map(f, id_c), m.coaction);
    return linear && colinear;
}

// ---------------------------------------------------------------------------
// The theta and zeta certificates, their defining equations compiled once as
// named map builders and shared by verifiers and solvers.

template <class F>
struct ThetaMap {
    EntwiningStructure<F> structure;
    LinMap<F> map;  // C⊗C -> A
};

template <class F>
struct ZetaMap {
    EntwiningStructure<F> structure;
    LinMap<F> map;  // C -> A⊗A
};

template <class F>
struct OmegaT {
    EntwiningStructure<F> structure;
    LinMap<F> map;  // C⊗C⊗C -> A
};

template <class F>
struct LambdaS {
    EntwiningStructure<F> structure;
    LinMap<F> map;  // C -> A⊗A⊗A
};

namespace entwine_maps {

// theta(x ⊗ y1) ⊗ y2
template <class F>
LinMap<F> e44_lhs(const EntwiningStructure<F>& e, const LinMap<F>& theta) {
    const auto& C = e.coalgebra;
    return compose(tensor_map(theta, identity_map(C.space)),
                   tensor_map(identity_map(C.space), C.comult));
}

// theta(x2 ⊗ y)_psi ⊗ x1^psi
template <class F>
LinMap<F> e44_rhs(const EntwiningStructure<F>& e, const LinMap<F>& theta) {
    const auto& C = e.coalgebra;
    return compose(e.psi, compose(tensor_map(identity_map(C.space), theta),
                                  tensor_map(C.comult, identity_map(C.space))));
}

template <class F>
LinMap<F> e45_lhs(const EntwiningStructure<F>& e, const LinMap<F>& theta) {
    return compose(theta, e.coalgebra.comult);
}

template <class F>
LinMap<F> e45_rhs(const EntwiningStructure<F>& e) {
    return compose(unit_map(e.algebra), e.coalgebra.counit);
}

// theta(y ⊗ z1)_psi · theta(x^psi ⊗ z21) ⊗ z22
template <class F>
LinMap<F> e46_lhs(const EntwiningStructure<F>& e, const LinMap<F>& theta) {
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto id_a = identity_map(A.space);
    auto id_c = identity_map(C.space);
    auto id_cc = identity_map(tensor_space(C.space, C.space));
    auto step1 = tensor_map(id_cc, C.comult);                       // x⊗y⊗z1⊗z2
    auto step2 = tensor_map(id_c, tensor_map(theta, id_c));         // x⊗theta(y⊗z1)⊗z2
    auto step3 = tensor_map(e.psi, id_c);                           // theta_psi⊗x^psi⊗z2
    auto step4 = tensor_map(tensor_map(id_a, id_c), C.comult);      // ...⊗z21⊗z22
    auto step5 = tensor_map(id_a, tensor_map(theta, id_c));         // theta_psi⊗theta(..)⊗z22
    auto step6 = tensor_map(A.mult, id_c);
    return compose(step6, compose(step5, compose(step4, compose(step3, compose(step2, step1)))));
}

// eps(y) theta(x ⊗ z1) ⊗ z2
template <class F>
LinMap<F> e46_rhs(const EntwiningStructure<F>& e, const LinMap<F>& theta) {
    const auto& C = e.coalgebra;
    auto id_c = identity_map(C.space);
    auto cc = tensor_space(C.space, C.space);
    auto collapse = with_spaces(tensor_map(id_c, tensor_map(C.counit, id_c)),
                                tensor_space(C.space, cc), cc);  // x⊗y⊗z ↦ eps(y) x⊗z
    return compose(tensor_map(theta, id_c), compose(tensor_map(id_c, C.comult), collapse));
}

// zeta1(c) ⊗ zeta2(c)·a
template <class F>
LinMap<F> e49_lhs(const EntwiningStructure<F>& e, const LinMap<F>& zeta) {
    const auto& A = e.algebra;
    return compose(tensor_map(identity_map(A.space), A.mult),
                   tensor_map(zeta, identity_map(A.space)));
}

// a_psi zeta1(c^psi) ⊗ zeta2(c^psi)
template <class F>
LinMap<F> e49_rhs(const EntwiningStructure<F>& e, const LinMap<F>& zeta) {
    const auto& A = e.algebra;
    return compose(tensor_map(A.mult, identity_map(A.space)),
                   compose(tensor_map(identity_map(A.space), zeta), e.psi));
}

template <class F>
LinMap<F> e410_lhs(const EntwiningStructure<F>& e, const LinMap<F>& zeta) {
    return compose(e.algebra.mult, zeta);
}

template <class F>
LinMap<F> e410_rhs(const EntwiningStructure<F>& e) {
    return compose(unit_map(e.algebra), e.coalgebra.counit);
}

// eps(c11) zeta1(c2)_psi ⊗ zeta1((c12)^psi) ⊗ zeta2((c12)^psi)·zeta2(c2)
template <class F>
LinMap<F> e411_lhs(const EntwiningStructure<F>& e, const LinMap<F>& zeta) {
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto id_a = identity_map(A.space);
    auto id_c = identity_map(C.space);
    auto step1 = C.comult;                                           // c1⊗c2
    auto step2 = tensor_map(C.comult, id_c);                         // c11⊗c12⊗c2
    auto step3 = tensor_map(identity_map(tensor_space(C.space, C.space)), zeta);
    auto step4 = tensor_map(id_c, tensor_map(e.psi, id_a));          // c11⊗z1_psi⊗c12^psi⊗z2
    auto step5 = tensor_map(id_c, tensor_map(id_a, tensor_map(zeta, id_a)));
    auto caa = tensor_space(C.space, tensor_space(A.space, A.space));
    auto step6 = tensor_map(identity_map(caa), A.mult);  // multiply the last two factors
    auto aaa = tensor_space(A.space, tensor_space(A.space, A.space));
    auto step7_src = tensor_space(C.space, aaa);
    auto step7 = with_spaces(tensor_map(C.counit, identity_map(aaa)), step7_src, aaa);
    return compose(step7,
                   compose(step6, compose(step5, compose(step4, compose(step3, step2))))) *
           step1;
}

// eps(c1) zeta1(c2) ⊗ 1 ⊗ zeta2(c2)
template <class F>
LinMap<F> e411_rhs(const EntwiningStructure<F>& e, const LinMap<F>& zeta) {
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto id_a = identity_map(A.space);
    auto aa = tensor_space(A.space, A.space);
    auto zc = with_spaces(tensor_map(C.counit, zeta), tensor_space(C.space, C.space), aa);
    auto mid_unit = tensor_map(id_a, insert_left(A.space, A.space, A.unit));  // x⊗y ↦ x⊗1⊗y
    return compose(mid_unit, compose(zc, C.comult));
}

// Omega membership: psi ∘ (1⊗T) ∘ (Δ⊗1⊗1) = (T⊗1) ∘ (1⊗1⊗Δ)
template <class F>
LinMap<F> omega_lhs(const EntwiningStructure<F>& e, const LinMap<F>& t) {
    const auto& C = e.coalgebra;
    auto id_cc = identity_map(tensor_space(C.space, C.space));
    return compose(e.psi,
                   compose(tensor_map(identity_map(C.space), t), tensor_map(C.comult, id_cc)));
}

template <class F>
LinMap<F> omega_rhs(const EntwiningStructure<F>& e, const LinMap<F>& t) {
    const auto& C = e.coalgebra;
    auto id_cc = identity_map(tensor_space(C.space, C.space));
    return compose(tensor_map(t, identity_map(C.space)), tensor_map(id_cc, C.comult));
}

// Lambda membership: (∇⊗1⊗1) ∘ (1⊗S) ∘ psi = (1⊗1⊗∇) ∘ (S⊗1)
template <class F>
LinMap<F> lambda_lhs(const EntwiningStructure<F>& e, const LinMap<F>& s) {
    const auto& A = e.algebra;
    auto id_aa = identity_map(tensor_space(A.space, A.space));
    return compose(tensor_map(A.mult, id_aa),
                   compose(tensor_map(identity_map(A.space), s), e.psi));
}

template <class F>
LinMap<F> lambda_rhs(const EntwiningStructure<F>& e, const LinMap<F>& s) {
    const auto& A = e.algebra;
    auto id_aa = identity_map(tensor_space(A.space, A.space));
    return compose(tensor_map(id_aa, A.mult), tensor_map(s, identity_map(A.space)));
}

}  // namespace entwine_maps

template <class F>
Report verify_theta(const ThetaMap<F>& t) {
    Report rep;
    rep.subject = "theta";
    const auto& e = t.structure;
    const auto& C = e.coalgebra;
    std::vector<std::size_t> cc{C.dim(), C.dim()};
    std::vector<const BasedSpace<F>*> ccs{&C.space, &C.space};
    expect_equal_maps<F>(rep, "E4.4", entwine_maps::e44_lhs(e, t.map),
                         entwine_maps::e44_rhs(e, t.map), cc, ccs);
    expect_equal_maps<F>(rep, "E4.5", entwine_maps::e45_lhs(e, t.map),
                         entwine_maps::e45_rhs(e), {C.dim()}, {&C.space});
    expect_equal_maps<F>(rep, "E4.6", entwine_maps::e46_lhs(e, t.map),
                         entwine_maps::e46_rhs(e, t.map), {C.dim(), C.dim(), C.dim()},
                         {&C.space, &C.space, &C.space});
    return rep;
}

template <class F>
Report verify_zeta(const ZetaMap<F>& z) {
    Report rep;
    rep.subject = "zeta";
    const auto& e = z.structure;
    const auto& C = e.coalgebra;
    const auto& A = e.algebra;
    expect_equal_maps<F>(rep, "E4.9", entwine_maps::e49_lhs(e, z.map),
                         entwine_maps::e49_rhs(e, z.map), {C.dim(), A.dim()},
                         {&C.space, &A.space});
    expect_equal_maps<F>(rep, "E4.10", entwine_maps::e410_lhs(e, z.map),
                         entwine_maps::e410_rhs(e), {C.dim()}, {&C.space});
    expect_equal_maps<F>(rep, "E4.11", entwine_maps::e411_lhs(e, z.map),
                         entwine_maps::e411_rhs(e, z.map), {C.dim()}, {&C.space});
    return rep;
}

template <class F>
Report check_omega(const OmegaT<F>& t) {
    Report rep;
    rep.subject = "omega";
    const auto& C = t.structure.coalgebra;
    expect_equal_maps<F>(rep, "omega", entwine_maps::omega_lhs(t.structure, t.map),
                         entwine_maps::omega_rhs(t.structure, t.map),
                         {C.dim(), C.dim(), C.dim()}, {&C.space, &C.space, &C.space});
    return rep;
}

template <class F>
Report check_lambda(const LambdaS<F>& s) {
    Report rep;
    rep.subject = "lambda";
    const auto& C = s.structure.coalgebra;
    expect_equal_maps<F>(rep, "lambda", entwine_maps::lambda_lhs(s.structure, s.map),
                         entwine_maps::lambda_rhs(s.structure, s.map),
                         {C.dim(), s.structure.algebra.dim()},
                         {&C.space, &s.structure.algebra.space});
    return rep;
}

// The composite certificate T(x⊗y⊗z) = theta(y⊗z1)_psi · theta(x^psi⊗z2):
// the counit-collapsed left side of E4.6. For a passing theta it lands in
// Omega.
template <class F>
OmegaT<F> theta_to_omega(const ThetaMap<F>& t) {
    const auto& e = t.structure;
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto lhs = entwine_maps::e46_lhs(e, t.map);
    auto collapsed = with_spaces(compose(tensor_map(identity_map(A.space), C.counit), lhs),
                                 lhs.domain, A.space);
    return OmegaT<F>{e, std::move(collapsed)};
}

// Dually, S = the left side of E4.11 lands in Lambda for a passing zeta.
template <class F>
LambdaS<F> zeta_to_lambda(const ZetaMap<F>& z) {
    auto lhs = entwine_maps::e411_lhs(z.structure, z.map);
    auto aaa = tensor_space(z.structure.algebra.space,
                            tensor_space(z.structure.algebra.space, z.structure.algebra.space));
    return LambdaS<F>{z.structure, with_spaces(lhs, z.structure.coalgebra.space, aaa)};
}

// ---------------------------------------------------------------------------
// Witness search: E4.4+E4.5 (resp. E4.9+E4.10) are linear in the certificate,
// E4.6 (resp. E4.11) is quadratic, so solvers enumerate the linear space and
// filter.

namespace entwine_maps {

template <class F>
Vec<F> flatten(const Matrix<F>& m) {
    Vec<F> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

template <class F>
LinMap<F> theta_from_coords(const EntwiningStructure<F>& e, const Vec<F>& u) {
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto dom = tensor_space(C.space, C.space);
    Matrix<F> m(e.field(), A.dim(), dom.dim);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < dom.dim; ++j) m.at(i, j) = u[i * dom.dim + j];
    return LinMap<F>(dom, A.space, std::move(m));
}

template <class F>
LinMap<F> zeta_from_coords(const EntwiningStructure<F>& e, const Vec<F>& u) {
    const auto& A = e.algebra;
    const auto& C = e.coalgebra;
    auto cod = tensor_space(A.space, A.space);
    Matrix<F> m(e.field(), cod.dim, C.dim());
    for (std::size_t i = 0; i < cod.dim; ++i)
        for (std::size_t j = 0; j < C.dim(); ++j) m.at(i, j) = u[i * C.dim() + j];
    return LinMap<F>(C.space, cod, std::move(m));
}

}  // namespace entwine_maps

template <class F>
std::vector<ThetaMap<F>> solve_theta(const EntwiningStructure<F>& e, std::uint64_t limit = 1000000) {
    using namespace entwine_maps;
    const F& field = e.field();
    const std::size_t unknowns = e.algebra.dim() * e.coalgebra.dim() * e.coalgebra.dim();
    auto residual = [&](const Vec<F>& u) {
        auto theta = theta_from_coords(e, u);
        Vec<F> out = flatten<F>((e44_lhs(e, theta) - e44_rhs(e, theta)).matrix);
        auto r45 = flatten<F>((e45_lhs(e, theta) - e45_rhs(e)).matrix);
        out.insert(out.end(), r45.begin(), r45.end());
        return out;
    };
    auto space = solve_affine_conditions<F>(field, unknowns, residual);
    std::vector<ThetaMap<F>> found;
    if (!space) return found;
    enumerate_affine<F>(*space, limit, [&](const Vec<F>& u) {
        auto theta = theta_from_coords(e, u);
        if ((e46_lhs(e, theta) - e46_rhs(e, theta)).matrix.is_zero())
            found.push_back(ThetaMap<F>{e, theta});
    });
    return found;
}

template <class F>
std::vector<ZetaMap<F>> solve_zeta(const EntwiningStructure<F>& e, std::uint64_t limit = 1000000) {
    using namespace entwine_maps;
    const F& field = e.field();
    const std::size_t unknowns = e.algebra.dim() * e.algebra.dim() * e.coalgebra.dim();
    auto residual = [&](const Vec<F>& u) {
        auto zeta = zeta_from_coords(e, u);
        Vec<F> out = flatten<F>((e49_lhs(e, zeta) - e49_rhs(e, zeta)).matrix);
        auto r410 = flatten<F>((e410_lhs(e, zeta) - e410_rhs(e)).matrix);
        out.insert(out.end(), r410.begin(), r410.end());
        return out;
    };
    auto space = solve_affine_conditions<F>(field, unknowns, residual);
    std::vector<ZetaMap<F>> found;
    if (!space) return found;
    enumerate_affine<F>(*space, limit, [&](const Vec<F>& u) {
        auto zeta = zeta_from_coords(e, u);
        if ((e411_lhs(e, zeta) - e411_rhs(e, zeta)).matrix.is_zero())
            found.push_back(ZetaMap<F>{e, zeta});
    });
    return found;
}

// ---------------------------------------------------------------------------
// Round-trip harnesses. The induced transformations
//   gamma_M = act ∘ (1⊗theta) ∘ (coact⊗1): M⊗C -> M
//   delta_M = (act⊗1) ∘ (1⊗zeta) ∘ coact:  M -> M⊗A
// are evaluated on the fixed family {F^C(A), F_A(C), their direct sum} and on
// a generating set of morphisms between those modules.

template <class F>
LinMap<F> induced_gamma(const EntwinedModule<F>& m, const LinMap<F>& theta) {
    auto id_c = identity_map(m.structure.coalgebra.space);
    return compose(m.action, compose(tensor_map(identity_map(m.space), theta),
                                     tensor_map(m.coaction, id_c)));
}

template <class F>
LinMap<F> induced_delta(const EntwinedModule<F>& m, const LinMap<F>& zeta) {
    auto id_a = identity_map(m.structure.algebra.space);
    return compose(tensor_map(m.action, id_a),
                   compose(tensor_map(identity_map(m.space), zeta), m.coaction));
}

template <class F>
struct HarnessFamily {
    EntwinedModule<F> fc;  // F^C of the regular A-module
    EntwinedModule<F> fa;  // F_A of the regular C-comodule
    DirectSumModule<F> sum;
    // generating morphisms, with source/target indices into {fc, fa, sum}
    struct Arrow {
        std::size_t src, dst;
        LinMap<F> map;
        std::string name;
    };
    std::vector<Arrow> arrows;

    const EntwinedModule<F>& at(std::size_t i) const {
        if (i == 0) return fc;
        if (i == 1) return fa;
        return sum.module;
    }
};

template <class F>
HarnessFamily<F> harness_family(const EntwiningStructure<F>& e) {
    auto fc = induce_fc(e, regular_right_module(e.algebra));
    auto fa = induce_fa(e, regular_comodule(e.coalgebra));
    auto sum = direct_sum(fc, fa);
    HarnessFamily<F> fam{std::move(fc), std::move(fa), std::move(sum), {}};
    // psi itself is a morphism F_A(C) -> F^C(A) by the mixed axioms
    fam.arrows.push_back({1, 0, e.psi, "psi"});
    fam.arrows.push_back({0, 2, fam.sum.incl1, "incl1"});
    fam.arrows.push_back({1, 2, fam.sum.incl2, "incl2"});
    fam.arrows.push_back({2, 0, fam.sum.proj1, "proj1"});
    fam.arrows.push_back({2, 1, fam.sum.proj2, "proj2"});
    fam.arrows.push_back({1, 2, compose(fam.sum.incl1, e.psi), "incl1∘psi"});
    return fam;
}

// Identity, naturality, module-level heavy condition, and Omega membership
// for a theta certificate.
template <class F>
Report harness_theta(const ThetaMap<F>& t) {
    Report rep;
    rep.subject = "theta_harness";
    const auto& e = t.structure;
    auto fam = harness_family(e);

    Condition& morph = rep.add("family_morphisms");
    for (std::size_t i = 0; i < fam.arrows.size(); ++i) {
        const auto& ar = fam.arrows[i];
        if (!is_module_morphism(fam.at(ar.src), fam.at(ar.dst), ar.map)) {
            morph.passed = false;
            morph.witnesses.push_back(Witness{{i}, ar.name + " is not a module morphism"});
        }
    }

    Condition& ident = rep.add("splitting_identity");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& m = fam.at(i);
        if (compose(induced_gamma(m, t.map), m.coaction) != identity_map(m.space)) {
            ident.passed = false;
            ident.witnesses.push_back(Witness{{i}, "gamma ∘ coaction != id on module " +
                                                       std::to_string(i)});
        }
    }

    Condition& natur = rep.add("naturality");
    auto id_c = identity_map(e.coalgebra.space);
    for (std::size_t i = 0; i < fam.arrows.size(); ++i) {
        const auto& ar = fam.arrows[i];
        auto lhs = compose(induced_gamma(fam.at(ar.dst), t.map), tensor_map(ar.map, id_c));
        auto rhs = compose(ar.map, induced_gamma(fam.at(ar.src), t.map));
        if (lhs != rhs) {
            natur.passed = false;
            natur.witnesses.push_back(Witness{{i}, "gamma not natural at " + ar.name});
        }
    }

    // gamma_M ∘ gamma_{M⊗C} = gamma_M ∘ (eps_M ⊗ 1) on each test module
    Condition& heavy = rep.add("heavy_composition");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& m = fam.at(i);
        auto mc = induce_fc(e, RightModule<F>{e.algebra, m.space, m.action});
        auto gamma_m = induced_gamma(m, t.map);
        auto gamma_mc = induced_gamma(mc, t.map);
        auto eps_m = with_spaces(tensor_map(identity_map(m.space), e.coalgebra.counit),
                                 tensor_space(m.space, e.coalgebra.space), m.space);
        auto lhs = compose(gamma_m, gamma_mc);
        auto rhs = compose(gamma_m, tensor_map(eps_m, id_c));
        if (lhs != rhs) {
            heavy.passed = false;
            heavy.witnesses.push_back(Witness{{i}, "on module " + std::to_string(i)});
        }
    }

    Condition& om = rep.add("omega_membership");
    if (!check_omega(theta_to_omega(t)).passed()) {
        om.passed = false;
        om.witnesses.push_back(Witness{{}, "induced T violates the Omega condition"});
    }
    return rep;
}

// Dual harness for zeta certificates.
template <class F>
Report harness_zeta(const ZetaMap<F>& z) {
    Report rep;
    rep.subject = "zeta_harness";
    const auto& e = z.structure;
    auto fam = harness_family(e);

    Condition& morph = rep.add("family_morphisms");
    for (std::size_t i = 0; i < fam.arrows.size(); ++i) {
        const auto& ar = fam.arrows[i];
        if (!is_module_morphism(fam.at(ar.src), fam.at(ar.dst), ar.map)) {
            morph.passed = false;
            morph.witnesses.push_back(Witness{{i}, ar.name + " is not a module morphism"});
        }
    }

    Condition& ident = rep.add("splitting_identity");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& m = fam.at(i);
        if (compose(m.action, induced_delta(m, z.map)) != identity_map(m.space)) {
            ident.passed = false;
            ident.witnesses.push_back(Witness{{i}, "action ∘ delta != id on module " +
                                                       std::to_string(i)});
        }
    }

    Condition& natur = rep.add("naturality");
    auto id_a = identity_map(e.algebra.space);
    for (std::size_t i = 0; i < fam.arrows.size(); ++i) {
        const auto& ar = fam.arrows[i];
        auto lhs = compose(induced_delta(fam.at(ar.dst), z.map), ar.map);
        auto rhs = compose(tensor_map(ar.map, id_a), induced_delta(fam.at(ar.src), z.map));
        if (lhs != rhs) {
            natur.passed = false;
            natur.witnesses.push_back(Witness{{i}, "delta not natural at " + ar.name});
        }
    }

    // delta_{M⊗A} ∘ delta_M = (unit insertion) ∘ delta_M on each test module
    Condition& heavy = rep.add("heavy_composition");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& m = fam.at(i);
        auto ma = induce_fa(e, Comodule<F>{e.coalgebra, m.space, m.coaction});
        auto delta_m = induced_delta(m, z.map);
        auto delta_ma = induced_delta(ma, z.map);
        auto mid_unit = tensor_map(identity_map(m.space),
                                   insert_left(e.algebra.space, e.algebra.space, e.algebra.unit));
        auto lhs = compose(delta_ma, delta_m);
        auto rhs = compose(mid_unit, delta_m);
        if (lhs.matrix != rhs.matrix) {
            heavy.passed = false;
            heavy.witnesses.push_back(Witness{{i}, "on module " + std::to_string(i)});
        }
    }

    Condition& lam = rep.add("lambda_membership");
    if (!check_lambda(zeta_to_lambda(z)).passed()) {
        lam.passed = false;
        lam.witnesses.push_back(Witness{{}, "induced S violates the Lambda condition"});
    }
    return rep;
}

}  // namespace sepkit
