#pragma once

#include "qlbkit/lie_algebra.hpp"
#include "qlbkit/polynomial.hpp"
#include "qlbkit/split.hpp"

#include <string>
#include <vector>

namespace qlbkit {

// r in g (x) g, a plain 2-tensor (coefficients may be rational functions).
struct RMatrix {
    SparseTensor r;
};

// [r12, r13] + [r12, r23] + [r13, r23] as a plain 3-tensor.
SparseTensor cybe(const LieAlgebra& g, const SparseTensor& r);

struct RSplit {
    SparseTensor lambda;       // 2-vector with embed_wedge(2 lambda) = r - c
    SparseTensor c;            // symmetric 2-tensor, c = (r + r^T)/2
    SparseTensor c_residual;   // d_CE c
    bool c_invariant = false;
};

RSplit split_r(const LieAlgebra& g, const SparseTensor& r);

// The associator that the lambda-form is compared with: casimir_phi_twist_factor * casimir_to_phi(c).
SparseTensor casimir_phi(const LieAlgebra& g, const SparseTensor& c);

struct QuasitriangularReport {
    RSplit parts;
    SparseTensor cybe;          // plain 3-tensor
    SparseTensor lambda_form;   // 1/2 [[lambda,lambda]] - phi_c (3-vector); empty-zero when c not invariant
    bool cybe_zero = false;
    bool lambda_form_holds = false;
    bool criteria_agree = false;   // cybe_zero <=> lambda_form_holds (given invariant c)
    bool kappa_relation = false;   // cybe == kappa0 * embed_wedge(lambda_form)
    bool pass = false;             // cybe_zero && c invariant
};

QuasitriangularReport quasitriangular_check(const LieAlgebra& g, const SparseTensor& r);

// Prepends a slot carrying the ambient index of h-basis vector i: component
// (h[i], idx) = d f(idx) / d vars[i].
SparseTensor d_dr(const SparseTensor& f, const SplitSubalgebra& h, const std::vector<std::string>& vars);

// Alternation of a plain 3-tensor whose first slot lies in h.
SparseTensor alt_ddr(const SparseTensor& t, const SplitSubalgebra& h);

struct DynamicalRMatrix {
    SplitSubalgebra base;
    std::vector<std::string> vars;  // x_i dual to the i-th basis vector of base.h()
    SparseTensor r;
    std::vector<Polynomial> locus;

    // InputError for undeclared variables, shape problems or denominators outside the locus.
    void validate() const;
};

struct DynamicalReport {
    bool equivariant = false;
    std::vector<SparseTensor> equivariance;  // one residual per basis vector of h
    bool c_constant = false;
    bool c_invariant = false;
    SparseTensor cdybe;        // cybe(r) + embed(alt_ddr(d_dr(r)))
    bool cdybe_zero = false;
    SparseTensor lambda_form;  // 1/2 [[lambda,lambda]] + a Alt(d_dR lambda) - phi_c
    bool lambda_form_holds = false;
    bool criteria_agree = false;
    bool pass = false;
};

DynamicalReport dynamical_check(const DynamicalRMatrix& d);

}  // namespace qlbkit
