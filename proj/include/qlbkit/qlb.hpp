#pragma once

#include "qlbkit/big_bracket.hpp"
#include "qlbkit/lie_algebra.hpp"

#include <string>

namespace qlbkit {

// delta: [Lower 1][Upper anti 2], the map e_k -> delta(e_k);  phi: a 3-vector.
struct QuasiLieBialgebra {
    LieAlgebra g;
    SparseTensor delta;
    SparseTensor phi;

    static QuasiLieBialgebra zero(const LieAlgebra& g);
};

SparseTensor zero_cobracket(int dim);
SparseTensor zero_multivector(int dim, int p);
// Throws InputError unless delta and phi have the expected slot signatures.
void validate_shapes(const QuasiLieBialgebra& q);

struct QLBReport {
    bool pass = false;
    SparseTensor cocycle;      // d delta                    [Lower 2][Upper 2]
    SparseTensor co_jacobi;    // 1/2 [delta,delta] + d phi  [Lower 1][Upper 3]
    SparseTensor compatible;   // [delta, phi]               4-vector
    size_t max_support() const;
};

QLBReport check_qlb(const QuasiLieBialgebra& q);

// {mu, -} applied to a tensor of bidegree (k, w).  For shift 1 this is ce_differential;
// for shift 2 it is its negative.
SparseTensor ce_bb_differential(const LieAlgebra& g, const SparseTensor& x, int shift = 1);
// Big bracket of two tensors in C(g, Sym(g[-1])).
SparseTensor bb_tensor_bracket(const SparseTensor& a, const SparseTensor& b, int shift = 1);

// Schouten bracket of multivectors, [[a,b]] = -{d a, b}.
SparseTensor schouten(const LieAlgebra& g, const SparseTensor& a, const SparseTensor& b);

// delta' = delta + d lambda, phi' = phi + [delta, lambda] - 1/2 [[lambda, lambda]].
QuasiLieBialgebra twist(const QuasiLieBialgebra& q, const SparseTensor& lambda);
// Same without the precondition check (used to probe invalid inputs).
QuasiLieBialgebra twist_unchecked(const QuasiLieBialgebra& q, const SparseTensor& lambda);

// Full components of [c12, c23]: T^{ijk} = c^{iq} f^j_{qr} c^{rk}.
SparseTensor casimir_commutator(const LieAlgebra& g, const SparseTensor& c);
// phi = -1/6 times the antisymmetric part of [c12, c23].  c must be invariant.
SparseTensor casimir_to_phi(const LieAlgebra& g, const SparseTensor& c);
// d_CE c as a [Lower 1][Upper sym 2] tensor.
SparseTensor casimir_invariance_residual(const LieAlgebra& g, const SparseTensor& c);

}  // namespace qlbkit
