#pragma once

#include "qlbkit/linalg.hpp"
#include "qlbkit/qlb.hpp"

#include <string>
#include <vector>

namespace qlbkit {

struct QuadraticLieAlgebra {
    LieAlgebra d;
    RationalMatrix pairing;  // symmetric, in the basis of d
};

struct QuadraticReport {
    bool square_symmetric = false;
    bool nondegenerate = false;
    bool invariant = false;
    bool pass = false;
    std::vector<std::string> witness;  // basis labels x, y, z with <[x,y],z> + <y,[x,z]> != 0
    Rational defect = 0;
};

QuadraticReport check_quadratic(const LieAlgebra& d, const RationalMatrix& pairing);

// A linear subspace of d given by spanning rows (coordinates in the basis of d).
struct Subspace {
    RationalMatrix basis;
    std::vector<std::string> labels;  // one per row

    static Subspace of_indices(const LieAlgebra& d, const std::vector<int>& indices);
    int dim() const { return static_cast<int>(basis.size()); }
};

struct SubspaceReport {
    bool independent = false;
    bool subalgebra = false;
    bool isotropic = false;
    bool lagrangian = false;  // isotropic with dim = dim d / 2
    std::vector<std::string> witness;
    bool pass() const { return independent && subalgebra && lagrangian; }
};

SubspaceReport subspace_check(const QuadraticLieAlgebra& d, const Subspace& s);

struct ManinPair {
    QuadraticLieAlgebra d;
    Subspace g;
};

struct ManinTriple {
    QuadraticLieAlgebra d;
    Subspace g;
    Subspace gstar;
};

struct ManinReport {
    QuadraticReport quadratic;
    LieCheckReport jacobi;
    SubspaceReport g;
    SubspaceReport gstar;     // unused for pairs
    bool transversal = true;  // g + g* = d (pairs: always true)
    bool pass = false;
};

ManinReport manin_pair_check(const QuadraticLieAlgebra& d, const Subspace& g);
ManinReport manin_triple_check(const ManinTriple& t);

// g (+) g with the difference of trace forms, the diagonal, and
// g* = {(x+, x-) in b+ (+) b- : h-components add up to zero}.
ManinTriple dual_subalgebra_bplus_bminus(const LieAlgebra& g);

// Basis xi^k of g* with <u_i, xi^k> = delta_ik, as rows in d coordinates.
RationalMatrix dual_basis(const ManinTriple& t);

// delta(u_c) = sum_{a<b} gamma^{ab}_c u_a ^ u_b where [xi^a, xi^b] = gamma^{ab}_c xi^c.
QuasiLieBialgebra triple_to_bialgebra(const ManinTriple& t);

// d = g (+) g* with <x + xi, y + eta> = xi(y) + eta(x) and
// [x_i, xi^a] = gamma^{ab}_i x_b - f^a_{ib} xi^b.  Only phi = 0 is required; an
// invalid delta gives a double whose Jacobi identity fails.
ManinTriple drinfeld_double(const QuasiLieBialgebra& b);

// Rows of `images` are images of the basis of a in b coordinates.
bool is_quadratic_isomorphism(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b,
                              const RationalMatrix& images, std::string* reason = nullptr);

// Basis of t.g followed by the dual basis of t.gstar; identifies drinfeld_double(triple_to_bialgebra(t)) with t.d.
RationalMatrix tautological_map(const ManinTriple& t);

}  // namespace qlbkit
