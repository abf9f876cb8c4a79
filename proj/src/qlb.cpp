#include "qlbkit/qlb.hpp"

#include "qlbkit/ce.hpp"
#include "qlbkit/errors.hpp"
#include "qlbkit/multivector.hpp"

#include <algorithm>

namespace qlbkit {

namespace {

// Reads (k, w) off a tensor whose slots are a lower group followed by an upper group.
std::pair<int, int> bidegree(const SparseTensor& t) {
    int k = 0, w = 0;
    for (const auto& g : t.groups()) (g.variance == Variance::Lower ? k : w) += g.size;
    return {k, w};
}

}  // namespace

SparseTensor zero_cobracket(int dim) { return SparseTensor(dim, big_bracket_groups(1, 2, 1)); }

SparseTensor zero_multivector(int dim, int p) { return SparseTensor::multivector(dim, p); }

QuasiLieBialgebra QuasiLieBialgebra::zero(const LieAlgebra& g) {
    return {g, zero_cobracket(g.dim()), zero_multivector(g.dim(), 3)};
}

void validate_shapes(const QuasiLieBialgebra& q) {
    const int n = q.g.dim();
    if (!q.delta.same_shape(zero_cobracket(n)))
        throw InputError("cobracket must have signature [lower 1][upper anti 2] over dim " + std::to_string(n));
    if (!q.phi.same_shape(zero_multivector(n, 3)))
        throw InputError("associator must be a 3-vector over dim " + std::to_string(n));
}

size_t QLBReport::max_support() const {
    return std::max({cocycle.support_size(), co_jacobi.support_size(), compatible.support_size()});
}

SparseTensor ce_bb_differential(const LieAlgebra& g, const SparseTensor& x, int shift) {
    auto [k, w] = bidegree(x);
    auto d = big_bracket(BigBracketElement::structure(g, shift), BigBracketElement::from_tensor(x, shift));
    return d.to_tensor(k + 1, w);
}

SparseTensor bb_tensor_bracket(const SparseTensor& a, const SparseTensor& b, int shift) {
    auto [k1, w1] = bidegree(a);
    auto [k2, w2] = bidegree(b);
    if (k1 + k2 == 0 || w1 + w2 == 0) return SparseTensor(a.dim(), big_bracket_groups(0, 0, shift));
    auto r = big_bracket(BigBracketElement::from_tensor(a, shift), BigBracketElement::from_tensor(b, shift));
    return r.to_tensor(k1 + k2 - 1, w1 + w2 - 1);
}

QLBReport check_qlb(const QuasiLieBialgebra& q) {
    validate_shapes(q);
    auto mu = BigBracketElement::structure(q.g, 1);
    auto D = BigBracketElement::from_tensor(q.delta, 1);
    auto P = BigBracketElement::from_tensor(q.phi, 1);
    QLBReport r;
    r.cocycle = big_bracket(mu, D).to_tensor(2, 2);
    r.co_jacobi = (big_bracket(D, D).scaled(Scalar::fraction(1, 2)) + big_bracket(mu, P)).to_tensor(1, 3);
    r.compatible = big_bracket(D, P).to_tensor(0, 4);
    r.pass = r.cocycle.is_zero() && r.co_jacobi.is_zero() && r.compatible.is_zero();
    return r;
}

SparseTensor schouten(const LieAlgebra& g, const SparseTensor& a, const SparseTensor& b) {
    if (!is_multivector(a) || !is_multivector(b)) throw InputError("schouten expects multivectors");
    if (a.dim() != g.dim() || b.dim() != g.dim()) throw InputError("multivector dimension does not match g");
    const int p = multivector_degree(a), q = multivector_degree(b);
    if (p + q == 0) return SparseTensor::multivector(g.dim(), 0);
    auto mu = BigBracketElement::structure(g, 1);
    auto A = BigBracketElement::from_tensor(a, 1), B = BigBracketElement::from_tensor(b, 1);
    return (-big_bracket(big_bracket(mu, A), B)).to_tensor(0, p + q - 1);
}

QuasiLieBialgebra twist_unchecked(const QuasiLieBialgebra& q, const SparseTensor& lambda) {
    validate_shapes(q);
    if (!lambda.same_shape(zero_multivector(q.g.dim(), 2))) throw InputError("twist must be a bivector");
    auto mu = BigBracketElement::structure(q.g, 1);
    auto D = BigBracketElement::from_tensor(q.delta, 1);
    auto L = BigBracketElement::from_tensor(lambda, 1);
    QuasiLieBialgebra r = q;
    r.delta = q.delta + big_bracket(mu, L).to_tensor(1, 2);
    r.phi = q.phi + big_bracket(D, L).to_tensor(0, 3) - schouten(q.g, lambda, lambda).scaled(Scalar::fraction(1, 2));
    return r;
}

QuasiLieBialgebra twist(const QuasiLieBialgebra& q, const SparseTensor& lambda) {
    if (!check_qlb(q).pass) throw PreconditionError("twist: input does not satisfy the quasi-Lie bialgebra axioms");
    return twist_unchecked(q, lambda);
}

SparseTensor casimir_commutator(const LieAlgebra& g, const SparseTensor& c) {
    const int n = g.dim();
    if (c.dim() != n || c.arity() != 2) throw InputError("Casimir must be a 2-tensor over g");
    auto full = c.full_components();
    // rows of c by first index and by second index
    std::vector<std::vector<std::pair<int, Scalar>>> by_first(n), by_second(n);
    for (const auto& [idx, v] : full) {
        by_first[idx[0]].emplace_back(idx[1], v);
        by_second[idx[1]].emplace_back(idx[0], v);
    }
    std::map<Index, Scalar> out;
    // c^{iq} c^{rk} [e_q, e_r]^j
    for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r) {
            const auto& br = g.bracket(q, r);
            if (br.empty()) continue;
            for (const auto& [i, ciq] : by_second[q])
                for (const auto& [k, crk] : by_first[r])
                    for (const auto& [j, f] : br) {
                        Scalar v = ciq * f * crk;
                        auto [it, ins] = out.emplace(Index{i, j, k}, v);
                        if (!ins) it->second += v;
                    }
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return SparseTensor::from_full(n, {{3, Symmetry::None, Variance::Upper}}, out);
}

SparseTensor casimir_invariance_residual(const LieAlgebra& g, const SparseTensor& c) {
    if (c.dim() != g.dim() || c.arity() != 2 || !c.has_symmetry({{2, Symmetry::Symmetric, Variance::Upper}}))
        throw InputError("Casimir must be a symmetric 2-tensor over g");
    SparseTensor sym = SparseTensor::from_full(g.dim(), {{2, Symmetry::Symmetric, Variance::Upper}}, c.full_components());
    return ce_differential(g, as_cochain(sym, Module::sym(2))).tensor;
}

SparseTensor casimir_to_phi(const LieAlgebra& g, const SparseTensor& c) {
    auto res = casimir_invariance_residual(g, c);
    if (!res.is_zero())
        throw PreconditionError("Casimir is not invariant; d_CE c = " + res.to_string(g.basis()));
    return alternate(casimir_commutator(g, c)).scaled(Scalar::fraction(-1, 36));
}

}  // namespace qlbkit
