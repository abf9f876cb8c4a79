#include "qlbkit/multivector.hpp"

#include "qlbkit/errors.hpp"

#include <set>

namespace qlbkit {

bool is_multivector(const SparseTensor& t) {
    if (t.arity() == 0) return true;
    const auto& g = t.groups();
    return g.size() == 1 && g[0].variance == Variance::Upper &&
           (g[0].symmetry == Symmetry::Antisymmetric || g[0].size == 1);
}

int multivector_degree(const SparseTensor& t) { return t.arity(); }

SparseTensor basis_multivector(int dim, const Index& idx, const Scalar& coef) {
    SparseTensor t = SparseTensor::multivector(dim, static_cast<int>(idx.size()));
    t.add(idx, coef);
    return t;
}

SparseTensor wedge(const SparseTensor& a, const SparseTensor& b) {
    if (!is_multivector(a) || !is_multivector(b)) throw InputError("wedge expects multivectors");
    if (a.dim() != b.dim()) throw InputError("wedge of multivectors over different spaces");
    SparseTensor r = SparseTensor::multivector(a.dim(), a.arity() + b.arity());
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries()) {
            Index k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add(k, va * vb);
        }
    return r;
}

SparseTensor embed_wedge(const SparseTensor& lambda) {
    if (!is_multivector(lambda)) throw InputError("embed_wedge expects a multivector");
    return lambda.expanded();
}

SparseTensor embed_sym(const SparseTensor& c) {
    if (c.groups().size() > 1 || (c.arity() > 1 && c.groups()[0].symmetry != Symmetry::Symmetric))
        throw InputError("embed_sym expects a symmetric tensor");
    return c.expanded();
}

SparseTensor alternate(const SparseTensor& t) {
    const int p = t.arity();
    SparseTensor r = SparseTensor::multivector(t.dim(), p);
    auto perms = all_permutations(p);
    std::vector<int> signs;
    for (const auto& s : perms) signs.push_back(permutation_sign(s));
    // each full component contributes to the canonical tuple of its sorted index
    for (const auto& [k, v] : t.full_components()) {
        std::set<int> distinct(k.begin(), k.end());
        if (static_cast<int>(distinct.size()) != p) continue;
        r.add(k, v);
    }
    return r;
}

SparseTensor contract(const SparseTensor& t, const std::vector<std::pair<int, int>>& slot_pairs) {
    auto layout = t.slot_layout();
    const int p = t.arity();
    std::vector<bool> used(p, false);
    for (const auto& [lo, up] : slot_pairs) {
        if (lo < 0 || lo >= p || up < 0 || up >= p || lo == up)
            throw InputError("contraction slot out of range");
        if (used[lo] || used[up]) throw InputError("slot used in two contractions");
        if (layout[lo].variance != Variance::Lower || layout[up].variance != Variance::Upper)
            throw InputError("contraction must pair a dual (g*) slot with a g slot");
        used[lo] = used[up] = true;
    }
    std::vector<SlotGroup> groups;
    int slot = 0;
    for (const auto& g : t.groups()) {
        int remaining = 0;
        for (int i = 0; i < g.size; ++i)
            if (!used[slot + i]) ++remaining;
        if (remaining > 0) groups.push_back({remaining, g.symmetry, g.variance});
        slot += g.size;
    }
    std::map<Index, Scalar> full;
    for (const auto& [k, v] : t.full_components()) {
        bool diag = true;
        for (const auto& [lo, up] : slot_pairs)
            if (k[lo] != k[up]) {
                diag = false;
                break;
            }
        if (!diag) continue;
        Index rest;
        for (int s = 0; s < p; ++s)
            if (!used[s]) rest.push_back(k[s]);
        auto [it, inserted] = full.emplace(rest, v);
        if (!inserted) it->second += v;
    }
    return SparseTensor::from_full(t.dim(), groups, full);
}

}  // namespace qlbkit
