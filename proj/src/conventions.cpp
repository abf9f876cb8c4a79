#include "qlbkit/conventions.hpp"

namespace qlbkit {

std::vector<std::pair<std::string, std::string>> ConventionLedger::entries() const {
    return {
        {"wedge_embedding", wedge_embedding},
        {"sym_embedding", sym_embedding},
        {"alt_normalization", alt_normalization},
        {"ce_sign", ce_sign},
        {"big_bracket", big_bracket},
        {"schouten", schouten},
        {"twist", twist},
        {"gauge_ode", gauge_ode},
        {"coisotropic_phi", coisotropic_phi},
        {"casimir_phi_twist_factor", casimir_phi_twist_factor.get_str()},
        {"cybe_kappa0", cybe_kappa0.get_str()},
        {"dynamical_alt_coefficient", dynamical_alt_coefficient.get_str()},
        {"dynamical_kappa", dynamical_kappa.get_str()},
    };
}

std::string ConventionLedger::fingerprint() const {
    std::string s;
    for (const auto& [k, v] : entries()) s += k + "=" + v + ";";
    return s;
}

const ConventionLedger& ConventionLedger::standard() {
    static const ConventionLedger ledger = [] {
        ConventionLedger l;
        l.wedge_embedding = "x1^...^xp -> sum_s sgn(s) x_s(1)(x)...(x)x_s(p), no 1/p!";
        l.sym_embedding = "symmetric tensors stored by full components, no 1/p!";
        l.alt_normalization = "Alt(T) = sum_s sgn(s) s(T), no 1/p!";
        l.ce_sign = "(dx)(x0..xk) = sum_i (-1)^(i+1) xi.x(..^xi..) - sum_{i<j} (-1)^(i+j) x([xi,xj],..); "
                    "(dx)(xi) = -ad_xi x on C^0";
        l.big_bracket = "{F,G} = sum_i F<d/dtheta^i d/de_i>G - (-1)^n F<d/de_i d/dtheta^i>G; "
                        "{theta^i, e_j} = delta^i_j; d = {mu,-}, mu = 1/2 f^k_ij theta^i theta^j e_k";
        l.schouten = "[[a,b]] = -{d a, b}; [[x,y]] = [x,y] on vectors";
        l.twist = "delta' = delta + d lambda, phi' = phi + {delta,lambda} - 1/2 [[lambda,lambda]]";
        l.gauge_ode = "d alpha/dt + d mu + [alpha, mu] = 0 with gauge element mu = -lambda for the twist by lambda";
        l.coisotropic_phi = "multivector coefficient of phi = 2 x index-formula value";
        l.casimir_phi_twist_factor = Rational(3, 2);
        l.cybe_kappa0 = -4;
        l.dynamical_alt_coefficient = Rational(-1, 2);
        l.dynamical_kappa = 1;
        return l;
    }();
    return ledger;
}

}  // namespace qlbkit
