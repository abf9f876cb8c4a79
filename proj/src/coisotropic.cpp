#include "qlbkit/coisotropic.hpp"

#include "qlbkit/ce.hpp"
#include "qlbkit/errors.hpp"
#include "qlbkit/multivector.hpp"

#include <functional>

namespace qlbkit {

namespace {

using Table = std::vector<std::vector<Scalar>>;

Table zeros(int r, int c) { return Table(r, std::vector<Scalar>(c)); }

void require_symmetric(const SplitSubalgebra& s, const SparseTensor& c) {
    if (c.dim() != s.ambient().dim() || c.arity() != 2 ||
        !c.has_symmetry({{2, Symmetry::Symmetric, Variance::Upper}}))
        throw InputError("Casimir must be a symmetric 2-tensor over the ambient algebra");
}

}  // namespace

CasimirBlocks CasimirBlocks::of(const SplitSubalgebra& s, const SparseTensor& c) {
    require_symmetric(s, c);
    const int hd = s.hdim(), md = s.mdim();
    CasimirBlocks b{zeros(hd, hd), zeros(hd, md), zeros(md, md)};
    for (int i = 0; i < hd; ++i) {
        for (int j = 0; j < hd; ++j) b.P[i][j] = c.get({s.h()[i], s.h()[j]});
        for (int a = 0; a < md; ++a) b.Q[i][a] = c.get({s.h()[i], s.m()[a]});
    }
    for (int a = 0; a < md; ++a)
        for (int d = 0; d < md; ++d) b.R[a][d] = c.get({s.m()[a], s.m()[d]});
    return b;
}

bool coisotropic_casimir_check(const SplitSubalgebra& s, const SparseTensor& c, std::string* reason) {
    auto b = CasimirBlocks::of(s, c);
    const auto& labels = s.ambient().basis();
    for (int a = 0; a < s.mdim(); ++a)
        for (int d = a; d < s.mdim(); ++d)
            if (!b.R[a][d].is_zero()) {
                if (reason)
                    *reason = "component " + labels[s.m()[a]] + "." + labels[s.m()[d]] + " = " + b.R[a][d].to_string() +
                              " survives in Sym^2(g/h)";
                return false;
            }
    return true;
}

QuasiLieBialgebra induce_unchecked(const SplitSubalgebra& s, const SparseTensor& c) {
    auto blk = CasimirBlocks::of(s, c);
    const auto& P = blk.P;
    const auto& Q = blk.Q;
    const int hd = s.hdim(), md = s.mdim();
    QuasiLieBialgebra q = QuasiLieBialgebra::zero(s.h_algebra());
    // delta(e_k)^{ij} = 1/2 (A^j_{ka} Q^{ia} - A^i_{ka} Q^{ja})
    for (int k = 0; k < hd; ++k)
        for (int i = 0; i < hd; ++i)
            for (int j = i + 1; j < hd; ++j) {
                Scalar v;
                for (int a = 0; a < md; ++a) v += s.A(j, k, a) * Q[i][a] - s.A(i, k, a) * Q[j][a];
                q.delta.add({k, i, j}, v * Scalar::fraction(1, 2));
            }
    // phi^{ijk} = 1/8 f^i_ab P^aj P^bk + 1/4 Q^ia (C^k_ab Q^jb - C^j_ab Q^kb)
    //           + 1/8 P^ia (A^k_ab Q^jb - A^j_ab Q^kb)
    std::map<Index, Scalar> full;
    for (int i = 0; i < hd; ++i)
        for (int j = 0; j < hd; ++j)
            for (int k = 0; k < hd; ++k) {
                Scalar v;
                for (int a = 0; a < hd; ++a)
                    for (int b = 0; b < hd; ++b) v += Scalar::fraction(1, 8) * s.f(i, a, b) * P[a][j] * P[b][k];
                for (int a = 0; a < md; ++a)
                    for (int b = 0; b < md; ++b)
                        v += Scalar::fraction(1, 4) * Q[i][a] * (s.C(k, a, b) * Q[j][b] - s.C(j, a, b) * Q[k][b]);
                for (int a = 0; a < hd; ++a)
                    for (int b = 0; b < md; ++b)
                        v += Scalar::fraction(1, 8) * P[i][a] * (s.A(k, a, b) * Q[j][b] - s.A(j, a, b) * Q[k][b]);
                if (!v.is_zero()) full[{i, j, k}] = v;
            }
    // the multivector coefficient is twice the antisymmetric part of the formula
    SparseTensor raw = SparseTensor::from_full(hd, {{3, Symmetry::None, Variance::Upper}}, full);
    q.phi = alternate(raw).scaled(Scalar::fraction(1, 3));
    return q;
}

QuasiLieBialgebra induce_from_coisotropic(const SplitSubalgebra& s, const SparseTensor& c) {
    std::string why;
    if (!coisotropic_casimir_check(s, c, &why)) throw PreconditionError("Casimir is not coisotropic: " + why);
    auto res = casimir_invariance_residual(s.ambient(), c);
    if (!res.is_zero())
        throw PreconditionError("Casimir is not invariant; d_CE c = " + res.to_string(s.ambient().basis()));
    return induce_unchecked(s, c);
}

namespace {

// The image of theta^x (ambient dual generator) in the big bracket algebra of h.
BigBracketElement F_generator(const SplitSubalgebra& s, const CasimirBlocks& blk, int x) {
    const int hd = s.hdim();
    BigBracketElement r(hd, 1);
    auto hit = std::find(s.h().begin(), s.h().end(), x);
    if (hit != s.h().end()) {
        int i = static_cast<int>(hit - s.h().begin());
        r.add({i}, {}, Scalar(1));
        for (int j = 0; j < hd; ++j) r.add({}, {j}, blk.P[i][j] * Scalar::fraction(1, 2));
    } else {
        int a = static_cast<int>(std::find(s.m().begin(), s.m().end(), x) - s.m().begin());
        for (int j = 0; j < hd; ++j) r.add({}, {j}, blk.Q[j][a]);
    }
    return r;
}

}  // namespace

MorphismReport verify_coisotropic_morphism(const SplitSubalgebra& s, const SparseTensor& c) {
    MorphismReport rep;
    const LieAlgebra& g = s.ambient();
    const auto& labels = g.basis();
    const auto& H = s.h();
    const auto& M = s.m();
    const int hd = s.hdim(), md = s.mdim();
    auto blk = CasimirBlocks::of(s, c);
    const auto& P = blk.P;
    const auto& Q = blk.Q;
    rep.coisotropic = coisotropic_casimir_check(s, c);

    SparseTensor dc = casimir_invariance_residual(g, c);
    rep.invariant = dc.is_zero();
    // d_CE c components that the identities account for
    std::map<Index, bool> covered;

    auto run = [&](const std::string& name, int n1, int n2, int n3, const std::vector<int>& r1,
                   const std::vector<int>& r2, const std::vector<int>& r3, int sign,
                   const std::function<Scalar(int, int, int)>& value) {
        InvarianceIdentity id;
        id.name = name;
        for (int x = 0; x < n1; ++x)
            for (int y = 0; y < n2; ++y)
                for (int z = 0; z < n3; ++z) {
                    Scalar v = value(x, y, z);
                    // free indices (first, second) are the Casimir slots, third is the cochain slot
                    Index key{r3[z], r1[x], r2[y]};
                    Scalar predicted = dc.get(key) * Scalar(sign);
                    covered[key] = true;
                    covered[{r3[z], r2[y], r1[x]}] = true;
                    if (!(v == predicted)) id.matches_differential = false;
                    if (!v.is_zero()) {
                        id.vanishes = false;
                        id.nonzero.push_back({{labels[r1[x]], labels[r2[y]], labels[r3[z]]}, v});
                    }
                }
        rep.identities.push_back(std::move(id));
    };

    // (i, a in h; k in m)
    run("h-h pairing against m", hd, hd, md, H, H, M, 1, [&](int i, int a, int k) {
        Scalar v;
        for (int j = 0; j < hd; ++j) v += s.A(i, j, k) * P[j][a] + s.A(a, j, k) * P[j][i];
        for (int j = 0; j < md; ++j) v += s.C(i, j, k) * Q[a][j] + s.C(a, j, k) * Q[i][j];
        return v;
    });
    // (i, a in h; j in h)
    run("h-h pairing against h", hd, hd, hd, H, H, H, -1, [&](int i, int a, int j) {
        Scalar v;
        for (int k = 0; k < md; ++k) v += s.A(i, j, k) * Q[a][k] + s.A(a, j, k) * Q[i][k];
        for (int k = 0; k < hd; ++k) v -= s.f(i, k, j) * P[k][a] + s.f(a, k, j) * P[k][i];
        return v;
    });
    // (i in h, a in m; k in m)
    run("h-m pairing against m", hd, md, md, H, M, M, -1, [&](int i, int a, int k) {
        Scalar v;
        for (int j = 0; j < hd; ++j) v -= s.A(i, j, k) * Q[j][a] + s.B(a, j, k) * P[i][j];
        for (int j = 0; j < md; ++j) v -= s.D(a, j, k) * Q[i][j];
        return v;
    });
    // (i in h, a in m; j in h)
    run("h-m pairing against h", hd, md, hd, H, M, H, -1, [&](int i, int a, int j) {
        Scalar v;
        for (int k = 0; k < hd; ++k) v -= s.f(i, k, j) * Q[k][a];
        for (int k = 0; k < md; ++k) v += s.B(a, j, k) * Q[i][k];
        return v;
    });
    // (i, a in m; k in m)
    run("m-m pairing against m", md, md, md, M, M, M, 1, [&](int i, int a, int k) {
        Scalar v;
        for (int j = 0; j < hd; ++j) v += s.B(i, j, k) * Q[j][a] + s.B(a, j, k) * Q[j][i];
        return v;
    });

    rep.identities_pass = true;
    bool mapping = true;
    for (const auto& id : rep.identities) {
        rep.identities_pass = rep.identities_pass && id.vanishes;
        mapping = mapping && id.matches_differential;
    }
    // the only components of d_CE c not named by an identity lie in h* (x) Sym^2(m); coisotropy kills them
    bool rest_zero = true;
    for (const auto& [key, v] : dc.entries())
        if (!covered.count(key)) rest_zero = false;
    rep.identities_cover_differential = mapping && (rest_zero || !rep.coisotropic);
    rep.equivalence = rep.identities_cover_differential && (rep.identities_pass == rep.invariant);

    // (3) F commutes with the differentials
    rep.intertwines = rep.coisotropic;
    if (rep.coisotropic) {
        QuasiLieBialgebra q = induce_unchecked(s, c);
        auto total = BigBracketElement::structure(q.g, 1) + BigBracketElement::from_tensor(q.delta, 1) +
                     BigBracketElement::from_tensor(q.phi, 1);
        auto mu_g = BigBracketElement::structure(g, 1);
        std::vector<BigBracketElement> images;
        for (int x = 0; x < g.dim(); ++x) images.push_back(F_generator(s, blk, x));
        for (int x = 0; x < g.dim(); ++x) {
            auto dx = big_bracket(mu_g, BigBracketElement::theta(g.dim(), 1, x));
            BigBracketElement lhs(hd, 1);
            for (const auto& [m, v] : dx.terms()) {
                BigBracketElement term = BigBracketElement::constant(hd, 1, v);
                for (int t : m.theta) term = term * images[t];
                lhs = lhs + term;
            }
            auto rhs = big_bracket(total, images[x]);
            if (!(lhs == rhs)) {
                rep.intertwines = false;
                rep.intertwine_failures.push_back("F(d " + labels[x] + "*) - d F(" + labels[x] +
                                                  "*) = " + (lhs - rhs).to_string(q.g.basis()));
            }
        }
    }
    return rep;
}

}  // namespace qlbkit
