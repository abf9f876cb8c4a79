#pragma once

#include "qlbkit/sparse_tensor.hpp"

#include <utility>
#include <vector>

namespace qlbkit {

// Multivectors are SparseTensors with a single antisymmetric upper group; the
// stored component at a strictly increasing tuple is the coefficient of the
// corresponding wedge monomial.
bool is_multivector(const SparseTensor& t);
int multivector_degree(const SparseTensor& t);

SparseTensor basis_multivector(int dim, const Index& idx, const Scalar& coef = Scalar(1));
SparseTensor wedge(const SparseTensor& a, const SparseTensor& b);

// x1^...^xp -> sum over S_p of sgn(s) x_s(1) (x) ... (x) x_s(p), no 1/p! factor.
SparseTensor embed_wedge(const SparseTensor& lambda);
// Symmetric tensors are stored by full components, so this only drops the declared symmetry.
SparseTensor embed_sym(const SparseTensor& c);

// Antisymmetric part of a plain tensor read as a multivector: component at
// i1<...<ip equals sum_s sgn(s) t[s(i)] (no 1/p! factor).
SparseTensor alternate(const SparseTensor& t);

// Trace over each (lower slot, upper slot) pair.  Remaining slots keep their
// group's symmetry type and variance.
SparseTensor contract(const SparseTensor& t, const std::vector<std::pair<int, int>>& slot_pairs);

}  // namespace qlbkit
