#pragma once

#include "qlbkit/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qlbkit {

// Normalisation and sign choices used by every operation in the library.  One
// instance exists per process and is stamped into every report.
struct ConventionLedger {
    std::string wedge_embedding;
    std::string sym_embedding;
    std::string alt_normalization;
    std::string ce_sign;
    std::string big_bracket;
    std::string schouten;
    std::string twist;
    std::string gauge_ode;
    std::string coisotropic_phi;
    // phi_c := casimir_phi_twist_factor * casimir_to_phi(c) is the associator
    // that the twist / r-matrix equations are compared against.
    Rational casimir_phi_twist_factor;
    // cybe(2 lambda + c) = cybe_kappa0 * embed_wedge(1/2 [[lambda,lambda]] - phi_c)
    Rational cybe_kappa0;
    // coefficient of Alt(d_dR lambda) in the dynamical lambda-form equation
    Rational dynamical_alt_coefficient;
    // lambda(x) = kappa/x e^f solves the sl2 dynamical equation with c = 0
    Rational dynamical_kappa;

    std::vector<std::pair<std::string, std::string>> entries() const;
    std::string fingerprint() const;

    static const ConventionLedger& standard();
};

}  // namespace qlbkit
