#pragma once

#include <vector>

#include "algebra.hpp"

namespace sepkit {

// ---------------------------------------------------------------------------
// Retraction certificates for the extension of scalars along phi: R -> S,
// relative to psi: Q -> R. The witness is a right-Q-linear map alpha: S -> R
// with alpha∘phi = id whose kernel behaves like a left ideal; the two
// verifiers below are the two equivalent characterizations of that.

template <class F>
struct RetractionAlpha {
    AlgebraHom<F> phi;  // R -> S
    AlgebraHom<F> psi;  // Q -> R
    LinMap<F> map;      // alpha: S -> R

    RetractionAlpha(AlgebraHom<F> phi_, AlgebraHom<F> psi_, LinMap<F> alpha)
        : phi(std::move(phi_)), psi(std::move(psi_)), map(std::move(alpha)) {
        if (psi.target != phi.source) throw dimension_mismatch("psi target must be phi source");
        if (map.domain.dim != phi.target.dim() || map.codomain.dim != phi.source.dim())
            throw dimension_mismatch("alpha must map S to R");
    }
};

namespace detail {

// alpha(s · phi(psi(q))) = alpha(s) · psi(q), checked on basis pairs.
template <class F>
void check_q_linearity(Report& rep, const RetractionAlpha<F>& r) {
    const auto& S = r.phi.target;
    const auto& R = r.phi.source;
    const auto& Q = r.psi.source;
    auto phipsi = compose(r.phi.map, r.psi.map);  // Q -> S
    auto lhs = compose(r.map, compose(S.mult, tensor_map(identity_map(S.space), phipsi)));
    auto rhs = compose(R.mult, tensor_map(r.map, r.psi.map));
    expect_equal_maps<F>(rep, "q_linear", lhs, rhs, {S.dim(), Q.dim()}, {&S.space, &Q.space});
}

}  // namespace detail

// Conditions: (i) alpha∘phi = id, (ii) alpha(s1·alpha(s2)) = alpha(s1 s2),
// plus right Q-linearity of alpha.
template <class F>
Report verify_retraction(const RetractionAlpha<F>& r) {
    Report rep;
    rep.subject = "retraction";
    const auto& S = r.phi.target;
    const auto& R = r.phi.source;
    expect_equal_maps<F>(rep, "cond_i", compose(r.map, r.phi.map), identity_map(R.space),
                         {R.dim()}, {&R.space});
    auto phialpha = compose(r.phi.map, r.map);  // S -> S
    auto lhs = compose(r.map, compose(S.mult, tensor_map(identity_map(S.space), phialpha)));
    auto rhs = compose(r.map, S.mult);
    expect_equal_maps<F>(rep, "cond_ii", lhs, rhs, {S.dim(), S.dim()}, {&S.space, &S.space});
    detail::check_q_linearity(rep, r);
    return rep;
}

template <class F>
std::vector<Vec<F>> kernel_basis(const LinMap<F>& f) {
    auto sol = solve_affine(f.matrix, zero_vec(f.domain.field, f.codomain.dim));
    return sol->kernel_basis;  // homogeneous systems are always consistent
}

// Same certificate, characterized through ker(alpha) being a left ideal.
template <class F>
Report verify_retraction_ideal(const RetractionAlpha<F>& r) {
    Report rep;
    rep.subject = "retraction_ideal";
    const auto& S = r.phi.target;
    const auto& R = r.phi.source;
    expect_equal_maps<F>(rep, "cond_i", compose(r.map, r.phi.map), identity_map(R.space),
                         {R.dim()}, {&R.space});
    detail::check_q_linearity(rep, r);

    Condition& c = rep.add("left_ideal");
    auto kernel = kernel_basis(r.map);
    for (std::size_t s = 0; s < S.dim(); ++s) {
        auto lm = left_mult(S, unit_vec(S.space.field, S.dim(), s));
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            if (is_zero_vec<F>(r.map.apply(lm.apply(kernel[k])))) continue;
            c.passed = false;
            if (c.witnesses.size() < 8)
                c.witnesses.push_back(Witness{
                    {s, k}, "left factor " + S.space.label(s) + ", kernel vector " +
                                std::to_string(k)});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Tensor-square context: S ⊗_R S and (S ⊗_R S) ⊗_R S for a hom phi: R -> S,
// with projections from the plain tensor powers. Shared by the idempotent
// verifier/solver, the Sweedler coring, and the module-level harness.

template <class F>
struct TensorSquareContext {
    AlgebraHom<F> phi;
    LinMap<F> act_sr;        // S⊗R -> S, s⊗r ↦ s·phi(r)
    QuotientSpace<F> q1;     // S ⊗_R S
    LinMap<F> q1_right_act;  // q1⊗R -> q1 via the second factor
    QuotientSpace<F> q2;     // (S ⊗_R S) ⊗_R S
    LinMap<F> proj3;         // S⊗S⊗S -> q2

    explicit TensorSquareContext(const AlgebraHom<F>& phi_) : phi(phi_), act_sr(build_act(phi_)),
          q1(build_q1(phi_)),
          q1_right_act(build_right_act(phi_, q1, act_sr)),
          q2(build_q2(phi_, q1, q1_right_act)),
          proj3(compose(q2.projection,
                        tensor_map(q1.projection, identity_map(phi_.target.space)))) {}

    const StructureAlgebra<F>& S() const { return phi.target; }

private:
    static LinMap<F> build_act(const AlgebraHom<F>& phi) {
        const auto& S = phi.target;
        return compose(S.mult, tensor_map(identity_map(S.space), phi.map));
    }
    static QuotientSpace<F> build_q1(const AlgebraHom<F>& phi) {
        auto m = restrict_right(regular_right_module(phi.target), phi);
        auto n = restrict_left(regular_left_module(phi.target), phi);
        return alg_tensor(m, n);
    }
    static LinMap<F> build_right_act(const AlgebraHom<F>& phi, const QuotientSpace<F>& q1,
                                     const LinMap<F>& act_sr) {
        const auto& S = phi.target;
        auto lifted = compose(tensor_map(identity_map(S.space), act_sr),
                              tensor_map(q1.section, identity_map(phi.source.space)));
        return compose(q1.projection, lifted);
    }
    static QuotientSpace<F> build_q2(const AlgebraHom<F>& phi, const QuotientSpace<F>& q1,
                                     const LinMap<F>& act) {
        RightModule<F> m{phi.source, q1.space, act};
        auto n = restrict_left(regular_left_module(phi.target), phi);
        return alg_tensor(m, n);
    }
};

// ---------------------------------------------------------------------------
// Heavy separability idempotents: an element of S ⊗_R S (coordinates in the
// canonical quotient basis) for phi: R -> S, relative to xi: T -> S.

template <class F>
struct SepIdempotent {
    AlgebraHom<F> phi;  // R -> S
    AlgebraHom<F> xi;   // T -> S
    Vec<F> element;     // coordinates in S ⊗_R S
};

namespace detail {

// Σ E[p,q] E[p',q'] e_p ⊗ (e_q e_p') ⊗ e_q' in S⊗S⊗S.
template <class F>
Vec<F> idempotent_triple_lhs(const StructureAlgebra<F>& S, const Vec<F>& lifted) {
    const std::size_t n = S.dim();
    const F& field = S.field();
    Vec<F> out = zero_vec(field, n * n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const auto& c1 = lifted[p * n + q];
            if (c1.is_zero()) continue;
            for (std::size_t p2 = 0; p2 < n; ++p2)
                for (std::size_t q2 = 0; q2 < n; ++q2) {
                    const auto& c2 = lifted[p2 * n + q2];
                    if (c2.is_zero()) continue;
                    auto w = c1 * c2;
                    auto prod = S.mult.matrix.col(q * n + p2);
                    for (std::size_t m = 0; m < n; ++m) {
                        if (prod[m].is_zero()) continue;
                        out[(p * n + m) * n + q2] += w * prod[m];
                    }
                }
        }
    return out;
}

// Σ E[p,q] e_p ⊗ 1 ⊗ e_q in S⊗S⊗S.
template <class F>
Vec<F> idempotent_triple_rhs(const StructureAlgebra<F>& S, const Vec<F>& lifted) {
    const std::size_t n = S.dim();
    Vec<F> out = zero_vec(S.field(), n * n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const auto& c = lifted[p * n + q];
            if (c.is_zero()) continue;
            for (std::size_t m = 0; m < n; ++m) {
                if (S.unit[m].is_zero()) continue;
                out[(p * n + m) * n + q] += c * S.unit[m];
            }
        }
    return out;
}

// Eq1 residuals, one block per basis element t of T: xi(t)·e - e·xi(t) in q1.
template <class F>
std::vector<Vec<F>> eq1_residuals(const TensorSquareContext<F>& ctx, const AlgebraHom<F>& xi,
                                  const Vec<F>& e) {
    const auto& S = ctx.S();
    auto lifted = ctx.q1.lift(e);
    std::vector<Vec<F>> out;
    for (std::size_t t = 0; t < xi.source.dim(); ++t) {
        auto xt = xi.map.apply(unit_vec(S.field(), xi.source.dim(), t));
        auto lhs = tensor_map(left_mult(S, xt), identity_map(S.space)).apply(lifted);
        auto rhs = tensor_map(identity_map(S.space), right_mult(S, xt)).apply(lifted);
        sub_from<F>(lhs, rhs);
        out.push_back(ctx.q1.project(lhs));
    }
    return out;
}

template <class F>
Vec<F> eq2_residual(const TensorSquareContext<F>& ctx, const Vec<F>& e) {
    auto val = ctx.S().mult.apply(ctx.q1.lift(e));
    sub_from<F>(val, ctx.S().unit);
    return val;
}

template <class F>
bool eq3_holds(const TensorSquareContext<F>& ctx, const Vec<F>& e) {
    auto lifted = ctx.q1.lift(e);
    auto lhs = ctx.proj3.apply(idempotent_triple_lhs(ctx.S(), lifted));
    auto rhs = ctx.proj3.apply(idempotent_triple_rhs(ctx.S(), lifted));
    return lhs == rhs;
}

}  // namespace detail

template <class F>
Report verify_sep_idempotent(const TensorSquareContext<F>& ctx, const SepIdempotent<F>& e) {
    Report rep;
    rep.subject = "sep_idempotent";
    if (e.element.size() != ctx.q1.space.dim)
        throw dimension_mismatch("idempotent coordinates must live in S ⊗_R S");

    Condition& c1 = rep.add("Eq1");
    auto residuals = detail::eq1_residuals(ctx, e.xi, e.element);
    for (std::size_t t = 0; t < residuals.size(); ++t) {
        if (is_zero_vec<F>(residuals[t])) continue;
        c1.passed = false;
        if (c1.witnesses.size() < 8)
            c1.witnesses.push_back(Witness{{t}, "t = " + e.xi.source.space.label(t)});
    }

    expect_equal_vecs<F>(rep, "Eq2", ctx.S().mult.apply(ctx.q1.lift(e.element)), ctx.S().unit,
                         &ctx.S().space);

    Condition& c3 = rep.add("Eq3");
    if (!detail::eq3_holds(ctx, e.element)) {
        c3.passed = false;
        c3.witnesses.push_back(Witness{{}, "triple tensors differ in (S⊗_R S)⊗_R S"});
    }
    return rep;
}

template <class F>
Report verify_sep_idempotent(const SepIdempotent<F>& e) {
    TensorSquareContext<F> ctx(e.phi);
    return verify_sep_idempotent(ctx, e);
}

// Linear Eq1+Eq2 space, enumerated and filtered by quadratic Eq3. Complete
// over finite fields; lexicographic order in the kernel coefficients of the
// linear solution space.
template <class F>
std::vector<SepIdempotent<F>> solve_sep_idempotent(const AlgebraHom<F>& phi,
                                                   const AlgebraHom<F>& xi,
                                                   std::uint64_t limit = 1000000) {
    TensorSquareContext<F> ctx(phi);
    const F& field = phi.target.field();
    const std::size_t n = ctx.q1.space.dim;

    auto residual = [&](const Vec<F>& e) {
        Vec<F> out;
        for (auto& block : detail::eq1_residuals(ctx, xi, e))
            out.insert(out.end(), block.begin(), block.end());
        auto r2 = detail::eq2_residual(ctx, e);
        out.insert(out.end(), r2.begin(), r2.end());
        return out;
    };
    auto space = solve_affine_conditions<F>(field, n, residual);
    std::vector<SepIdempotent<F>> found;
    if (!space) return found;
    enumerate_affine<F>(*space, limit, [&](const Vec<F>& e) {
        if (detail::eq3_holds(ctx, e)) found.push_back(SepIdempotent<F>{phi, xi, e});
    });
    return found;
}

// The affine space cut out by Eq1+Eq2 alone (the classical conditions).
template <class F>
std::optional<AffineSpace<F>> classical_idempotent_space(const AlgebraHom<F>& phi,
                                                         const AlgebraHom<F>& xi) {
    TensorSquareContext<F> ctx(phi);
    auto residual = [&](const Vec<F>& e) {
        Vec<F> out;
        for (auto& block : detail::eq1_residuals(ctx, xi, e))
            out.insert(out.end(), block.begin(), block.end());
        auto r2 = detail::eq2_residual(ctx, e);
        out.insert(out.end(), r2.begin(), r2.end());
        return out;
    };
    return solve_affine_conditions<F>(phi.target.field(), ctx.q1.space.dim, residual);
}

// ---------------------------------------------------------------------------
// Evaluates the transformation induced by a separability idempotent,
// delta_N(n) = Σ n·a_i ⊗ b_i, on concrete test modules: the splitting
// identity and the heavy condition must hold componentwise.

template <class F>
Report induce_delta_and_check(const SepIdempotent<F>& e,
                              const std::vector<RightModule<F>>& test_modules) {
    Report rep;
    rep.subject = "induced_delta";
    TensorSquareContext<F> ctx(e.phi);
    const auto& S = ctx.S();
    const F& field = S.field();
    auto lifted = ctx.q1.lift(e.element);
    const std::size_t ns = S.dim();

    for (std::size_t mi = 0; mi < test_modules.size(); ++mi) {
        const auto& N = test_modules[mi];
        std::string suffix = "[" + std::to_string(mi) + "]";
        auto axioms = check_right_module(N);
        if (!axioms.passed()) {
            Condition& c = rep.add("module_axioms" + suffix);
            c.passed = false;
            c.witnesses.push_back(Witness{{mi}, "test module fails its own axioms"});
            continue;
        }

        // counit: Σ (n·a_i)·b_i = n
        Condition& cc = rep.add("counit" + suffix);
        const std::size_t dn = N.space.dim;
        for (std::size_t b = 0; b < dn; ++b) {
            Vec<F> acc = zero_vec(field, dn);
            for (std::size_t p = 0; p < ns; ++p)
                for (std::size_t q = 0; q < ns; ++q) {
                    const auto& c = lifted[p * ns + q];
                    if (c.is_zero()) continue;
                    auto na = N.action.apply(
                        tensor_vec<F>(unit_vec(field, dn, b), unit_vec(field, ns, p)));
                    auto nab = N.action.apply(tensor_vec<F>(na, unit_vec(field, ns, q)));
                    add_to<F>(acc, scaled<F>(nab, c));
                }
            if (acc != unit_vec(field, dn, b)) {
                cc.passed = false;
                if (cc.witnesses.size() < 8)
                    cc.witnesses.push_back(Witness{{b}, "at basis " + N.space.label(b)});
            }
        }

        // heavy: Σ n·a_i ⊗ b_i a_k ⊗ b_k = Σ n·a_i ⊗ 1 ⊗ b_i in N ⊗_R S ⊗_R S
        auto nr = restrict_right(N, e.phi);
        auto sleft = restrict_left(regular_left_module(S), e.phi);
        auto qn = alg_tensor(nr, sleft);
        auto act = compose(qn.projection,
                           compose(tensor_map(identity_map(N.space), ctx.act_sr),
                                   tensor_map(qn.section, identity_map(e.phi.source.space))));
        RightModule<F> qn_mod{e.phi.source, qn.space, act};
        auto qn2 = alg_tensor(qn_mod, sleft);
        auto proj_full = compose(qn2.projection,
                                 tensor_map(qn.projection, identity_map(S.space)));

        Condition& ch = rep.add("heavy" + suffix);
        for (std::size_t b = 0; b < dn; ++b) {
            Vec<F> lhs = zero_vec(field, dn * ns * ns);
            Vec<F> rhs = zero_vec(field, dn * ns * ns);
            for (std::size_t p = 0; p < ns; ++p)
                for (std::size_t q = 0; q < ns; ++q) {
                    const auto& c1 = lifted[p * ns + q];
                    if (c1.is_zero()) continue;
                    auto na = N.action.apply(
                        tensor_vec<F>(unit_vec(field, dn, b), unit_vec(field, ns, p)));
                    for (std::size_t m = 0; m < dn; ++m) {
                        if (na[m].is_zero()) continue;
                        // rhs: n·a ⊗ 1 ⊗ b
                        for (std::size_t u = 0; u < ns; ++u)
                            if (!S.unit[u].is_zero())
                                rhs[(m * ns + u) * ns + q] += c1 * na[m] * S.unit[u];
                        // lhs: n·a_i ⊗ b_i a_k ⊗ b_k
                        for (std::size_t p2 = 0; p2 < ns; ++p2)
                            for (std::size_t q2 = 0; q2 < ns; ++q2) {
                                const auto& c2 = lifted[p2 * ns + q2];
                                if (c2.is_zero()) continue;
                                auto prod = S.mult.matrix.col(q * ns + p2);
                                for (std::size_t u = 0; u < ns; ++u)
                                    if (!prod[u].is_zero())
                                        lhs[(m * ns + u) * ns + q2] +=
                                            c1 * na[m] * c2 * prod[u];
                            }
                    }
                }
            if (proj_full.apply(lhs) != proj_full.apply(rhs)) {
                ch.passed = false;
                if (ch.witnesses.size() < 8)
                    ch.witnesses.push_back(Witness{{b}, "at basis " + N.space.label(b)});
            }
        }
    }
    return rep;
}

}  // namespace sepkit
