#include "qlbkit/rmatrix.hpp"

#include "qlbkit/conventions.hpp"
#include "qlbkit/errors.hpp"
#include "qlbkit/multivector.hpp"
#include "qlbkit/qlb.hpp"

#include <algorithm>
#include <set>

namespace qlbkit {

namespace {

void require_two_tensor(const LieAlgebra& g, const SparseTensor& r) {
    if (r.dim() != g.dim() || r.arity() != 2) throw InputError("r must be a 2-tensor on g");
    for (const auto& grp : r.groups())
        if (grp.variance != Variance::Upper) throw InputError("r must have upper (g) slots");
}

// Full components of a 2-tensor as a list, for the quadratic loops below.
std::vector<std::pair<Index, Scalar>> components(const SparseTensor& r) {
    auto full = r.full_components();
    return {full.begin(), full.end()};
}

bool all_rational(const SparseTensor& t) {
    return std::all_of(t.entries().begin(), t.entries().end(),
                       [](const auto& kv) { return kv.second.is_rational(); });
}

}  // namespace

SparseTensor cybe(const LieAlgebra& g, const SparseTensor& r) {
    require_two_tensor(g, r);
    SparseTensor out = SparseTensor::plain(g.dim(), 3);
    auto terms = components(r);
    for (const auto& [x, u] : terms)
        for (const auto& [y, v] : terms) {
            const int a = x[0], b = x[1], c = y[0], d = y[1];
            Scalar uv = u * v;
            for (const auto& [k, s] : g.bracket(a, c)) out.add({k, b, d}, uv * s);
            for (const auto& [k, s] : g.bracket(b, c)) out.add({a, k, d}, uv * s);
            for (const auto& [k, s] : g.bracket(b, d)) out.add({a, c, k}, uv * s);
        }
    return out;
}

RSplit split_r(const LieAlgebra& g, const SparseTensor& r) {
    require_two_tensor(g, r);
    RSplit s;
    s.lambda = SparseTensor::multivector(g.dim(), 2);
    s.c = SparseTensor::symmetric(g.dim(), 2);
    auto full = r.full_components();
    auto at = [&](int i, int j) {
        auto it = full.find({i, j});
        return it == full.end() ? Scalar(0) : it->second;
    };
    const Scalar half = Scalar::fraction(1, 2), quarter = Scalar::fraction(1, 4);
    std::set<std::pair<int, int>> seen;
    for (const auto& [idx, v] : full) {
        int i = std::min(idx[0], idx[1]), j = std::max(idx[0], idx[1]);
        if (!seen.insert({i, j}).second) continue;
        s.c.add({i, j}, half * (at(i, j) + at(j, i)));
        if (i != j) s.lambda.add({i, j}, quarter * (at(i, j) - at(j, i)));
    }
    s.c_residual = casimir_invariance_residual(g, s.c);
    s.c_invariant = s.c_residual.is_zero();
    return s;
}

SparseTensor casimir_phi(const LieAlgebra& g, const SparseTensor& c) {
    return casimir_to_phi(g, c).scaled(Scalar(ConventionLedger::standard().casimir_phi_twist_factor));
}

QuasitriangularReport quasitriangular_check(const LieAlgebra& g, const SparseTensor& r) {
    QuasitriangularReport rep;
    rep.parts = split_r(g, r);
    rep.cybe = cybe(g, r);
    rep.cybe_zero = rep.cybe.is_zero();
    SparseTensor half_sq = schouten(g, rep.parts.lambda, rep.parts.lambda).scaled(Scalar::fraction(1, 2));
    if (rep.parts.c_invariant) {
        rep.lambda_form = half_sq - casimir_phi(g, rep.parts.c);
        rep.lambda_form_holds = rep.lambda_form.is_zero();
        rep.criteria_agree = rep.cybe_zero == rep.lambda_form_holds;
        rep.kappa_relation =
            rep.cybe == embed_wedge(rep.lambda_form).scaled(Scalar(ConventionLedger::standard().cybe_kappa0));
    } else {
        // the lambda-form only makes sense against an invariant symmetric part
        rep.lambda_form = half_sq;
        rep.criteria_agree = true;
    }
    rep.pass = rep.cybe_zero && rep.parts.c_invariant;
    return rep;
}

SparseTensor d_dr(const SparseTensor& f, const SplitSubalgebra& h, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != h.hdim())
        throw InputError("one coordinate per basis vector of h is required");
    if (f.dim() != h.ambient().dim()) throw InputError("tensor dimension does not match the ambient algebra");
    std::vector<SlotGroup> groups{{1, Symmetry::None, Variance::Upper}};
    for (const auto& grp : f.groups()) groups.push_back(grp);
    SparseTensor out(f.dim(), groups);
    for (int i = 0; i < h.hdim(); ++i)
        for (const auto& [idx, v] : f.entries()) {
            Scalar dv = v.derivative(vars[i]);
            if (dv.is_zero()) continue;
            Index k{h.h()[i]};
            k.insert(k.end(), idx.begin(), idx.end());
            out.add(k, dv);
        }
    return out;
}

SparseTensor alt_ddr(const SparseTensor& t, const SplitSubalgebra& h) {
    if (t.arity() != 3 || t.dim() != h.ambient().dim()) throw InputError("alt_ddr expects a 3-tensor on g");
    for (const auto& s : t.slot_layout())
        if (s.variance != Variance::Upper) throw InputError("alt_ddr expects an h slot followed by two g slots");
    const std::set<int> hset(h.h().begin(), h.h().end());
    for (const auto& [idx, v] : t.full_components())
        if (!hset.count(idx[0])) throw InputError("first slot of alt_ddr input must lie in h");
    return alternate(t);
}

void DynamicalRMatrix::validate() const {
    const LieAlgebra& g = base.ambient();
    require_two_tensor(g, r);
    if (static_cast<int>(vars.size()) != base.hdim())
        throw InputError("one coordinate per basis vector of h is required");
    const std::set<std::string> declared(vars.begin(), vars.end());
    if (declared.size() != vars.size()) throw InputError("coordinate names must be distinct");
    for (const auto& p : locus)
        for (const auto& x : p.variables())
            if (!declared.count(x)) throw InputError("undeclared variable in locus: " + x);
    for (const auto& [idx, v] : r.entries()) {
        for (const auto& x : v.variables())
            if (!declared.count(x)) throw InputError("undeclared variable in r: " + x);
        if (v.is_rational()) continue;
        Polynomial den = v.as_function().denominator();
        // strip locus factors until a constant remains
        bool progress = true;
        while (!den.is_constant() && progress) {
            progress = false;
            for (const auto& p : locus) {
                if (p.is_constant()) continue;
                if (auto q = den.exact_divide(p)) {
                    den = *q;
                    progress = true;
                }
            }
        }
        if (!den.is_constant())
            throw InputError("denominator of r outside the declared locus: " + v.to_string());
    }
}

DynamicalReport dynamical_check(const DynamicalRMatrix& d) {
    d.validate();
    const LieAlgebra& g = d.base.ambient();
    const auto& ledger = ConventionLedger::standard();
    DynamicalReport rep;

    // (1) h-equivariance
    auto terms = components(d.r);
    rep.equivariant = true;
    for (int j = 0; j < d.base.hdim(); ++j) {
        const int xi = d.base.h()[j];
        SparseTensor res = SparseTensor::plain(g.dim(), 2);
        for (const auto& [idx, v] : terms) {
            for (const auto& [k, s] : g.bracket(xi, idx[0])) res.add({k, idx[1]}, v * s);
            for (const auto& [k, s] : g.bracket(xi, idx[1])) res.add({idx[0], k}, v * s);
        }
        // V_xi = -sum f^{k}_{xi, i} x_k d/dx_i (coadjoint vector field on h*)
        for (int i = 0; i < d.base.hdim(); ++i) {
            Scalar coef(0);
            for (int k = 0; k < d.base.hdim(); ++k)
                coef += d.base.f(k, j, i) * Scalar::variable(d.vars[k]);
            if (coef.is_zero()) continue;
            for (const auto& [idx, v] : terms) res.add(idx, coef * v.derivative(d.vars[i]));
        }
        if (!res.is_zero()) rep.equivariant = false;
        rep.equivariance.push_back(res);
    }

    // (2) symmetric part
    RSplit parts = split_r(g, d.r);
    rep.c_constant = all_rational(parts.c);
    rep.c_invariant = parts.c_invariant;

    // (3) classical dynamical Yang-Baxter residual
    rep.cdybe = cybe(g, d.r) + embed_wedge(alt_ddr(d_dr(d.r, d.base, d.vars), d.base));
    rep.cdybe_zero = rep.cdybe.is_zero();

    // (4) lambda-form
    SparseTensor lhs = schouten(g, parts.lambda, parts.lambda).scaled(Scalar::fraction(1, 2)) +
                       alt_ddr(d_dr(embed_wedge(parts.lambda), d.base, d.vars), d.base)
                           .scaled(Scalar(ledger.dynamical_alt_coefficient));
    const bool comparable = rep.c_constant && rep.c_invariant;
    if (comparable) {
        rep.lambda_form = lhs - casimir_phi(g, parts.c);
        rep.lambda_form_holds = rep.lambda_form.is_zero();
        rep.criteria_agree = rep.cdybe_zero == rep.lambda_form_holds;
    } else {
        rep.lambda_form = lhs;
        rep.criteria_agree = true;
    }
    rep.pass = rep.equivariant && comparable && rep.cdybe_zero && rep.lambda_form_holds;
    return rep;
}

}  // namespace qlbkit
