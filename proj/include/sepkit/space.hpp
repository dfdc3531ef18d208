#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace sepkit {

// A finite-dimensional vector space with a fixed ordered basis. Labels, when
// present, name the basis elements (used in witness output).
template <class F>
struct BasedSpace {
    F field;
    std::size_t dim = 0;
    std::optional<std::vector<std::string>> labels;

    BasedSpace(const F& f, std::size_t d) : field(f), dim(d) {}
    BasedSpace(const F& f, std::size_t d, std::vector<std::string> names)
        : field(f), dim(d), labels(std::move(names)) {
        if (labels->size() != dim) throw dimension_mismatch("label count != dim");
    }

    std::string label(std::size_t i) const {
        if (labels) return (*labels)[i];
        return "e" + std::to_string(i);
    }

    friend bool operator==(const BasedSpace& a, const BasedSpace& b) {
        return a.field == b.field && a.dim == b.dim;
    }
    friend bool operator!=(const BasedSpace& a, const BasedSpace& b) { return !(a == b); }
};

template <class F>
BasedSpace<F> scalar_space(const F& field) {
    return BasedSpace<F>(field, 1);
}

// Basis index of e_i ⊗ f_j is i*dim(n) + j. Fixed repo-wide.
template <class F>
BasedSpace<F> tensor_space(const BasedSpace<F>& m, const BasedSpace<F>& n) {
    if (m.field != n.field) throw field_mismatch("tensor_space: fields differ");
    BasedSpace<F> t(m.field, m.dim * n.dim);
    if (m.labels && n.labels && t.dim > 0) {
        std::vector<std::string> names;
        names.reserve(t.dim);
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < n.dim; ++j)
                names.push_back(m.label(i) + "⊗" + n.label(j));
        t.labels = std::move(names);
    }
    return t;
}

// ---------------------------------------------------------------------------
// A linear map between based spaces; columns are images of domain basis
// vectors.

template <class F>
struct LinMap {
    BasedSpace<F> domain;
    BasedSpace<F> codomain;
    Matrix<F> matrix;  // codomain.dim x domain.dim

    LinMap(BasedSpace<F> dom, BasedSpace<F> cod, Matrix<F> m)
        : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
        if (matrix.rows() != codomain.dim || matrix.cols() != domain.dim)
            throw dimension_mismatch("LinMap: matrix shape vs spaces");
        if (domain.field != codomain.field) throw field_mismatch("LinMap: fields differ");
    }

    Vec<F> apply(const Vec<F>& v) const { return matrix.apply(v); }

    friend bool operator==(const LinMap& a, const LinMap& b) {
        return a.domain == b.domain && a.codomain == b.codomain && a.matrix == b.matrix;
    }
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }
};

template <class F>
LinMap<F> identity_map(const BasedSpace<F>& s) {
    return LinMap<F>(s, s, Matrix<F>::identity(s.field, s.dim));
}

template <class F>
LinMap<F> zero_map(const BasedSpace<F>& dom, const BasedSpace<F>& cod) {
    return LinMap<F>(dom, cod, Matrix<F>(dom.field, cod.dim, dom.dim));
}

// Builds a map column-by-column from images of domain basis vectors.
template <class F>
LinMap<F> make_map(const BasedSpace<F>& dom, const BasedSpace<F>& cod,
                   const std::function<Vec<F>(std::size_t)>& image_of_basis) {
    Matrix<F> m(dom.field, cod.dim, dom.dim);
    for (std::size_t j = 0; j < dom.dim; ++j) {
        Vec<F> img = image_of_basis(j);
        if (img.size() != cod.dim) throw dimension_mismatch("make_map: image length");
        m.set_col(j, img);
    }
    return LinMap<F>(dom, cod, std::move(m));
}

// g ∘ f
template <class F>
LinMap<F> compose(const LinMap<F>& g, const LinMap<F>& f) {
    if (f.codomain.dim != g.domain.dim)
        throw dimension_mismatch("compose: inner dimensions differ");
    return LinMap<F>(f.domain, g.codomain, g.matrix * f.matrix);
}

template <class F>
LinMap<F> operator*(const LinMap<F>& g, const LinMap<F>& f) {
    return compose(g, f);
}

// Kronecker product on the fixed row-major tensor basis:
// (f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j).
template <class F>
LinMap<F> tensor_map(const LinMap<F>& f, const LinMap<F>& g) {
    return LinMap<F>(tensor_space(f.domain, g.domain), tensor_space(f.codomain, g.codomain),
                     f.matrix.kron(g.matrix));
}

template <class F>
LinMap<F> operator+(const LinMap<F>& f, const LinMap<F>& g) {
    return LinMap<F>(f.domain, f.codomain, f.matrix + g.matrix);
}

template <class F>
LinMap<F> operator-(const LinMap<F>& f, const LinMap<F>& g) {
    return LinMap<F>(f.domain, f.codomain, f.matrix - g.matrix);
}

// V⊗W -> W⊗V, e_i ⊗ f_j ↦ f_j ⊗ e_i.
template <class F>
LinMap<F> tensor_swap(const BasedSpace<F>& v, const BasedSpace<F>& w) {
    auto dom = tensor_space(v, w);
    auto cod = tensor_space(w, v);
    Matrix<F> m(v.field, cod.dim, dom.dim);
    for (std::size_t i = 0; i < v.dim; ++i)
        for (std::size_t j = 0; j < w.dim; ++j)
            m.at(j * v.dim + i, i * w.dim + j) = v.field.one();
    return LinMap<F>(dom, cod, std::move(m));
}

// Reinterprets the (co)domain of a map by an equal-dimension space. Used for
// the unitor identifications k⊗V = V = V⊗k, which are index-identities under
// the row-major convention.
template <class F>
LinMap<F> with_spaces(const LinMap<F>& f, const BasedSpace<F>& dom, const BasedSpace<F>& cod) {
    if (dom.dim != f.domain.dim || cod.dim != f.codomain.dim)
        throw dimension_mismatch("with_spaces: dimension must be preserved");
    return LinMap<F>(dom, cod, f.matrix);
}

// x ↦ e_j ⊗ x and x ↦ x ⊗ e_j as maps V → W⊗V, V → V⊗W for a fixed vector.
template <class F>
LinMap<F> insert_left(const BasedSpace<F>& v, const BasedSpace<F>& w, const Vec<F>& wvec) {
    return make_map<F>(v, tensor_space(w, v), [&](std::size_t j) {
        return tensor_vec<F>(wvec, unit_vec(v.field, v.dim, j));
    });
}

template <class F>
LinMap<F> insert_right(const BasedSpace<F>& v, const BasedSpace<F>& w, const Vec<F>& wvec) {
    return make_map<F>(v, tensor_space(v, w), [&](std::size_t j) {
        return tensor_vec<F>(unit_vec(v.field, v.dim, j), wvec);
    });
}

// ---------------------------------------------------------------------------
// Quotient of a based space by the span of relation vectors. The quotient
// basis consists of the non-pivot coordinates of the relation RREF, so the
// construction is deterministic and depends only on the relation span.

template <class F>
struct QuotientSpace {
    BasedSpace<F> ambient;
    Matrix<F> relation_rref;  // canonical basis of the killed subspace
    BasedSpace<F> space;      // the quotient itself
    LinMap<F> projection;     // ambient -> quotient
    LinMap<F> section;        // quotient -> ambient, projection ∘ section = id

    Vec<F> project(const Vec<F>& ambient_vec) const { return projection.apply(ambient_vec); }
    Vec<F> lift(const Vec<F>& quotient_vec) const { return section.apply(quotient_vec); }
};

template <class F>
QuotientSpace<F> quotient_by(const BasedSpace<F>& ambient, const std::vector<Vec<F>>& relations) {
    const F& field = ambient.field;
    const std::size_t n = ambient.dim;
    for (const auto& r : relations)
        if (r.size() != n) throw dimension_mismatch("relation length != ambient dim");

    auto red = rref(Matrix<F>::from_rows(field, relations));
    const auto& pivots = red.pivot_columns;
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_row(n, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        pivot_row[pivots[r]] = r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const std::size_t q = free_cols.size();
    BasedSpace<F> qspace(field, q);
    if (ambient.labels) {
        std::vector<std::string> names;
        for (auto c : free_cols) names.push_back("[" + ambient.label(c) + "]");
        qspace.labels = std::move(names);
    }

    Matrix<F> proj(field, q, n);
    for (std::size_t t = 0; t < q; ++t) proj.at(t, free_cols[t]) = field.one();
    for (auto c : pivots) {
        // e_c = -sum over free columns of rref[row(c), free] modulo relations
        std::size_t r = pivot_row[c];
        for (std::size_t t = 0; t < q; ++t) proj.at(t, c) = -red.matrix.at(r, free_cols[t]);
    }
    Matrix<F> sect(field, n, q);
    for (std::size_t t = 0; t < q; ++t) sect.at(free_cols[t], t) = field.one();

    Matrix<F> rel = relations.empty() ? Matrix<F>(field, 0, n) : std::move(red.matrix);
    // drop zero rows of the rref so relation_rref rows are a basis
    Matrix<F> rel_basis(field, pivots.size(), n);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) rel_basis.at(r, c) = rel.at(r, c);

    LinMap<F> projection(ambient, qspace, std::move(proj));
    LinMap<F> section(qspace, ambient, std::move(sect));
    return QuotientSpace<F>{ambient, std::move(rel_basis), std::move(qspace),
                            std::move(projection), std::move(section)};
}

// Failing basis columns of f = g, decomposed as multi-indices when the domain
// is a tensor product of the given factor dims.
template <class F>
std::vector<std::size_t> differing_columns(const LinMap<F>& f, const LinMap<F>& g) {
    if (f.domain.dim != g.domain.dim || f.codomain.dim != g.codomain.dim)
        throw dimension_mismatch("differing_columns: shapes differ");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < f.domain.dim; ++j) {
        for (std::size_t i = 0; i < f.codomain.dim; ++i) {
            if (f.matrix.at(i, j) != g.matrix.at(i, j)) {
                out.push_back(j);
                break;
            }
        }
    }
    return out;
}

inline std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t k = dims.size(); k-- > 0;) {
        idx[k] = dims[k] ? flat % dims[k] : 0;
        flat = dims[k] ? flat / dims[k] : 0;
    }
    return idx;
}

}  // namespace sepkit
