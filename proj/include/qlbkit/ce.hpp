#pragma once

#include "qlbkit/lie_algebra.hpp"
#include "qlbkit/sparse_tensor.hpp"

#include <string>
#include <vector>

namespace qlbkit {

// Coefficient modules built from the adjoint representation.
struct Module {
    enum class Kind { Trivial, Wedge, Sym, Tensor };
    Kind kind = Kind::Trivial;
    int power = 0;

    static Module trivial() { return {Kind::Trivial, 0}; }
    static Module adjoint() { return {Kind::Tensor, 1}; }
    static Module wedge(int p) { return {Kind::Wedge, p}; }
    static Module sym(int p) { return {Kind::Sym, p}; }
    static Module tensor(int p) { return {Kind::Tensor, p}; }
    // "trivial", "adjoint", "wedge<p>", "sym<p>", "tensor<p>"
    static Module parse(const std::string& s);

    std::vector<SlotGroup> upper_groups() const;
    std::string name() const;
    bool operator==(const Module& o) const { return kind == o.kind && power == o.power; }
};

// Degree-k cochain: k antisymmetric g* slots followed by the module slots.
struct CECochain {
    int degree = 0;
    Module module;
    SparseTensor tensor;

    static CECochain zero(int dim, int degree, const Module& module);
    static std::vector<SlotGroup> groups(int degree, const Module& module);
};

// Lift a module element (e.g. a multivector) to a 0-cochain and back.
CECochain as_cochain(const SparseTensor& module_element, const Module& module);

// Standard alternating-sum differential with (dx)(xi) = -ad_xi(x) on C^0.
CECochain ce_differential(const LieAlgebra& g, const CECochain& x);

// e_a . v for a module element v (derivation action on every slot).
SparseTensor module_action(const LieAlgebra& g, int a, const SparseTensor& v);

// Basis of the invariant submodule, each vector scaled so that its first
// nonzero canonical coordinate is 1.
std::vector<SparseTensor> invariants(const LieAlgebra& g, const Module& module);
// Same space computed as the kernel of the differential on C^0.
std::vector<SparseTensor> invariants_via_differential(const LieAlgebra& g, const Module& module);

std::vector<CECochain> cochain_basis(int dim, int degree, const Module& module);
int cohomology_dim(const LieAlgebra& g, const Module& module, int degree);

}  // namespace qlbkit
