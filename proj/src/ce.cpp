#include "qlbkit/ce.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <map>

namespace qlbkit {

Module Module::parse(const std::string& s) {
    auto power_of = [&](const std::string& prefix) {
        std::string rest = s.substr(prefix.size());
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
            throw InputError("bad module descriptor '" + s + "'");
        return std::stoi(rest);
    };
    if (s == "trivial") return trivial();
    if (s == "adjoint") return adjoint();
    if (s.rfind("wedge", 0) == 0) return wedge(power_of("wedge"));
    if (s.rfind("sym", 0) == 0) return sym(power_of("sym"));
    if (s.rfind("tensor", 0) == 0) return tensor(power_of("tensor"));
    throw InputError("unsupported module '" + s + "'");
}

std::vector<SlotGroup> Module::upper_groups() const {
    switch (kind) {
        case Kind::Trivial: return {};
        case Kind::Wedge: return {{power, Symmetry::Antisymmetric, Variance::Upper}};
        case Kind::Sym: return {{power, Symmetry::Symmetric, Variance::Upper}};
        case Kind::Tensor: return {{power, Symmetry::None, Variance::Upper}};
    }
    return {};
}

std::string Module::name() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::Wedge: return "wedge" + std::to_string(power);
        case Kind::Sym: return "sym" + std::to_string(power);
        case Kind::Tensor: return power == 1 ? "adjoint" : "tensor" + std::to_string(power);
    }
    return "?";
}

std::vector<SlotGroup> CECochain::groups(int degree, const Module& module) {
    std::vector<SlotGroup> g{{degree, Symmetry::Antisymmetric, Variance::Lower}};
    for (const auto& u : module.upper_groups()) g.push_back(u);
    return g;
}

CECochain CECochain::zero(int dim, int degree, const Module& module) {
    return {degree, module, SparseTensor(dim, groups(degree, module))};
}

CECochain as_cochain(const SparseTensor& v, const Module& module) {
    CECochain c = CECochain::zero(v.dim(), 0, module);
    if (v.arity() != module.power) throw InputError("module element has the wrong arity for " + module.name());
    if (!v.has_symmetry(module.upper_groups()))
        throw InputError("element does not have the symmetry of " + module.name());
    c.tensor = SparseTensor::from_full(v.dim(), CECochain::groups(0, module), v.full_components());
    return c;
}

namespace {

// All permutations of the upper part of one stored entry, with signs.
std::vector<std::pair<Index, Scalar>> expand_upper(int dim, const std::vector<SlotGroup>& upper, const Index& up,
                                                   const Scalar& v) {
    if (upper.empty()) return {{up, v}};
    SparseTensor t(dim, upper);
    t.add(up, v);
    auto full = t.full_components();
    return {full.begin(), full.end()};
}

int position_in(const Index& sorted, int v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

void accumulate(std::map<Index, Scalar>& out, Index key, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = out.emplace(std::move(key), v);
    if (!inserted) it->second += v;
}

}  // namespace

CECochain ce_differential(const LieAlgebra& g, const CECochain& x) {
    const int n = g.dim();
    const int k = x.degree;
    if (x.tensor.dim() != n) throw InputError("cochain dimension does not match the Lie algebra");
    if (!x.tensor.same_shape(SparseTensor(n, CECochain::groups(k, x.module))))
        throw InputError("cochain tensor does not match its declared degree and module");
    const auto upper = x.module.upper_groups();
    std::map<Index, Scalar> out;
    for (const auto& [key, v] : x.tensor.entries()) {
        Index A(key.begin(), key.begin() + k);
        Index B(key.begin() + k, key.end());
        // sum_i (-1)^(i+1) xi_i . x(.. ^xi_i ..)
        auto fullB = expand_upper(n, upper, B, v);
        for (int a = 0; a < n; ++a) {
            if (std::binary_search(A.begin(), A.end(), a)) continue;
            Index S = A;
            S.insert(S.begin() + position_in(A, a), a);
            int pos = position_in(S, a);
            int sign = pos % 2 ? 1 : -1;
            for (const auto& [Bf, w] : fullB)
                for (size_t s = 0; s < Bf.size(); ++s)
                    for (const auto& [c, f] : g.bracket(a, Bf[s])) {
                        Index key2 = S;
                        key2.insert(key2.end(), Bf.begin(), Bf.end());
                        key2[k + 1 + s] = c;
                        accumulate(out, std::move(key2), w * f * Scalar(sign));
                    }
        }
        // - sum_{i<j} (-1)^(i+j) x([xi_i, xi_j], ...)
        for (int t = 0; t < k; ++t) {
            int c = A[t];
            Index R = A;
            R.erase(R.begin() + t);
            for (const auto& con : g.constants_by_target()[c]) {
                if (std::binary_search(R.begin(), R.end(), con.i) || std::binary_search(R.begin(), R.end(), con.j))
                    continue;
                Index S = R;
                S.insert(S.begin() + position_in(S, con.i), con.i);
                S.insert(S.begin() + position_in(S, con.j), con.j);
                int i = position_in(S, con.i), j = position_in(S, con.j);
                int sign = ((i + j) % 2 ? 1 : -1) * (t % 2 ? -1 : 1);
                Index key2 = S;
                key2.insert(key2.end(), B.begin(), B.end());
                accumulate(out, std::move(key2), con.value * v * Scalar(sign));
            }
        }
    }
    CECochain r{k + 1, x.module, SparseTensor::from_full(n, CECochain::groups(k + 1, x.module), out)};
    return r;
}

SparseTensor module_action(const LieAlgebra& g, int a, const SparseTensor& v) {
    std::map<Index, Scalar> out;
    for (const auto& [B, w] : v.full_components())
        for (size_t s = 0; s < B.size(); ++s)
            for (const auto& [c, f] : g.bracket(a, B[s])) {
                Index B2 = B;
                B2[s] = c;
                accumulate(out, std::move(B2), w * f);
            }
    return SparseTensor::from_full(v.dim(), v.groups(), out);
}

namespace {

std::vector<Index> module_basis(int dim, const Module& module) {
    switch (module.kind) {
        case Module::Kind::Trivial: return {Index{}};
        case Module::Kind::Wedge: return increasing_tuples(dim, module.power, true);
        case Module::Kind::Sym: return increasing_tuples(dim, module.power, false);
        case Module::Kind::Tensor: {
            std::vector<Index> out{Index{}};
            for (int p = 0; p < module.power; ++p) {
                std::vector<Index> next;
                for (const auto& t : out)
                    for (int i = 0; i < dim; ++i) {
                        Index u = t;
                        u.push_back(i);
                        next.push_back(u);
                    }
                out = std::move(next);
            }
            return out;
        }
    }
    return {};
}

std::vector<SparseTensor> kernel_to_tensors(int dim, const Module& module, const std::vector<Index>& basis,
                                            const RationalMatrix& rows) {
    auto ns = nullspace(rows, static_cast<int>(basis.size()));
    std::vector<SparseTensor> out;
    for (auto& v : ns) {
        Rational lead = 0;
        for (const auto& x : v)
            if (x != 0) {
                lead = x;
                break;
            }
        SparseTensor t(dim, module.upper_groups());
        for (size_t i = 0; i < basis.size(); ++i)
            if (v[i] != 0) t.add(basis[i], Scalar(Rational(v[i] / lead)));
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<SparseTensor> invariants(const LieAlgebra& g, const Module& module) {
    const int n = g.dim();
    auto basis = module_basis(n, module);
    // rows: (generator a, output coordinate)
    std::map<std::pair<int, Index>, RationalVector> rows;
    for (size_t j = 0; j < basis.size(); ++j) {
        SparseTensor b(n, module.upper_groups());
        b.add(basis[j], Scalar(1));
        for (int a = 0; a < n; ++a) {
            SparseTensor act = module_action(g, a, b);
            for (const auto& [idx, v] : act.entries()) {
                auto& row = rows[{a, idx}];
                if (row.empty()) row.assign(basis.size(), Rational(0));
                row[j] += v.rational();
            }
        }
    }
    RationalMatrix m;
    for (auto& [key, row] : rows) m.push_back(std::move(row));
    return kernel_to_tensors(n, module, basis, m);
}

std::vector<CECochain> cochain_basis(int dim, int degree, const Module& module) {
    std::vector<CECochain> out;
    for (const auto& A : increasing_tuples(dim, degree, true))
        for (const auto& B : module_basis(dim, module)) {
            CECochain c = CECochain::zero(dim, degree, module);
            Index key = A;
            key.insert(key.end(), B.begin(), B.end());
            c.tensor.add(key, Scalar(1));
            out.push_back(std::move(c));
        }
    return out;
}

namespace {

RationalMatrix differential_matrix(const LieAlgebra& g, const Module& module, int degree, int& cols) {
    auto basis = cochain_basis(g.dim(), degree, module);
    cols = static_cast<int>(basis.size());
    std::map<Index, RationalVector> rows;
    for (int j = 0; j < cols; ++j) {
        CECochain d = ce_differential(g, basis[j]);
        for (const auto& [idx, v] : d.tensor.entries()) {
            auto& row = rows[idx];
            if (row.empty()) row.assign(cols, Rational(0));
            row[j] += v.rational();
        }
    }
    RationalMatrix m;
    for (auto& [key, row] : rows) m.push_back(std::move(row));
    return m;
}

}  // namespace

std::vector<SparseTensor> invariants_via_differential(const LieAlgebra& g, const Module& module) {
    int cols = 0;
    RationalMatrix m = differential_matrix(g, module, 0, cols);
    return kernel_to_tensors(g.dim(), module, module_basis(g.dim(), module), m);
}

int cohomology_dim(const LieAlgebra& g, const Module& module, int degree) {
    if (degree < 0 || degree > g.dim()) return 0;
    int cols = 0;
    RationalMatrix dk = differential_matrix(g, module, degree, cols);
    int rk = rank(dk, cols);
    int rprev = 0;
    if (degree > 0) {
        int c2 = 0;
        RationalMatrix dp = differential_matrix(g, module, degree - 1, c2);
        rprev = rank(dp, c2);
    }
    return cols - rk - rprev;
}

}  // namespace qlbkit
