#pragma once

#include <string>
#include <vector>

#include "space.hpp"

namespace sepkit {

struct Witness {
    std::vector<std::size_t> indices;  // basis indices locating the failure
    std::string note;                  // human-readable detail (labels, values)
};

struct Condition {
    std::string tag;  // stable condition identifier, e.g. "Eq3", "E4.6", "cond1"
    bool passed = true;
    std::vector<Witness> witnesses;
};

struct Report {
    std::string subject;
    std::vector<Condition> conditions;
    double elapsed_ms = 0.0;

    bool passed() const {
        for (const auto& c : conditions)
            if (!c.passed) return false;
        return true;
    }

    const Condition* find(const std::string& tag) const {
        for (const auto& c : conditions)
            if (c.tag == tag) return &c;
        return nullptr;
    }

    bool condition_passed(const std::string& tag) const {
        const Condition* c = find(tag);
        return c && c->passed;
    }

    Condition& add(const std::string& tag) {
        conditions.push_back(Condition{tag, true, {}});
        return conditions.back();
    }
};

// Records f = g under `tag`, with failing basis columns decomposed into
// multi-indices over `factor_dims` (empty = flat index). Caps witness count;
// the first few failures are what a reader acts on.
template <class F>
bool expect_equal_maps(Report& rep, const std::string& tag, const LinMap<F>& f, const LinMap<F>& g,
                       const std::vector<std::size_t>& factor_dims = {},
                       const std::vector<const BasedSpace<F>*>& factor_spaces = {},
                       std::size_t max_witnesses = 8) {
    Condition& c = rep.add(tag);
    for (auto col : differing_columns(f, g)) {
        c.passed = false;
        if (c.witnesses.size() >= max_witnesses) break;
        Witness w;
        std::string note;
        if (!factor_dims.empty()) {
            w.indices = split_index(col, factor_dims);
            for (std::size_t k = 0; k < w.indices.size(); ++k) {
                if (k) note += ",";
                note += (k < factor_spaces.size() && factor_spaces[k])
                            ? factor_spaces[k]->label(w.indices[k])
                            : std::to_string(w.indices[k]);
            }
        } else {
            w.indices = {col};
            note = std::to_string(col);
        }
        w.note = "at basis (" + note + ")";
        c.witnesses.push_back(std::move(w));
    }
    return c.passed;
}

template <class F>
bool expect_equal_vecs(Report& rep, const std::string& tag, const Vec<F>& a, const Vec<F>& b,
                       const BasedSpace<F>* space = nullptr, std::size_t max_witnesses = 8) {
    Condition& c = rep.add(tag);
    if (a.size() != b.size()) throw dimension_mismatch("expect_equal_vecs: lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        c.passed = false;
        if (c.witnesses.size() >= max_witnesses) break;
        std::string name = space ? space->label(i) : std::to_string(i);
        c.witnesses.push_back(
            Witness{{i}, "coordinate " + name + ": " + a[i].str() + " != " + b[i].str()});
    }
    return c.passed;
}

}  // namespace sepkit
