#include "doctest.h"

#include "qlbkit/ce.hpp"
#include "qlbkit/coisotropic.hpp"
#include "qlbkit/conventions.hpp"
#include "qlbkit/errors.hpp"
#include "support.hpp"

using namespace qlbkit;
using namespace testing_support;

namespace {

struct Homogeneous {
    BigBracketElement x;
    int degree;  // total degree k + n w
};

Homogeneous random_element(std::mt19937_64& rng, int dim, int n, int k, int w) {
    SparseTensor t = randomize(SparseTensor(dim, big_bracket_groups(k, w, n)), rng, 0.6, 2);
    return {BigBracketElement::from_tensor(t, n), k + n * w};
}

SparseTensor mv(int dim, std::initializer_list<std::pair<Index, int>> entries) {
    SparseTensor t = SparseTensor::multivector(dim, static_cast<int>(entries.begin()->first.size()));
    for (const auto& [i, v] : entries) t.add(i, Scalar(v));
    return t;
}

// [[X1^..^Xp, Y1^..^Yq]] on basis decomposables, expanded term by term.
SparseTensor schouten_oracle(const LieAlgebra& g, const Index& X, const Index& Y) {
    const int p = static_cast<int>(X.size()), q = static_cast<int>(Y.size());
    SparseTensor out = SparseTensor::multivector(g.dim(), p + q - 1);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            for (const auto& [k, f] : g.bracket(X[i], Y[j])) {
                Index idx{k};
                for (int a = 0; a < p; ++a)
                    if (a != i) idx.push_back(X[a]);
                for (int b = 0; b < q; ++b)
                    if (b != j) idx.push_back(Y[b]);
                int sign = ((p + 1 + i + j) % 2) ? -1 : 1;
                out.add(idx, f * Scalar(sign));
            }
    return out;
}

std::vector<QuasiLieBialgebra> shipped_valid(const LieAlgebra& g) {
    std::vector<QuasiLieBialgebra> out{QuasiLieBialgebra::zero(g)};
    if (g.name() == "sl2") {
        auto q = QuasiLieBialgebra::zero(g);
        q.phi.add({0, 1, 2}, Scalar(1));
        out.push_back(q);
        out.push_back(twist(QuasiLieBialgebra::zero(g), mv(3, {{{0, 1}, 1}})));
        auto c = casimir_from_form(trace_form(g));
        auto p = QuasiLieBialgebra::zero(g);
        p.phi = casimir_to_phi(g, c);
        out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("generator brackets") {
    for (int n : {1, 2}) {
        const int dim = 3;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                auto th = BigBracketElement::theta(dim, n, i);
                auto e = BigBracketElement::e(dim, n, j);
                Scalar expect(i == j ? 1 : 0);
                CHECK(big_bracket(th, e) == BigBracketElement::constant(dim, n, expect));
                CHECK(big_bracket(BigBracketElement::e(dim, n, i), e).is_zero());
                CHECK(big_bracket(th, BigBracketElement::theta(dim, n, j)).is_zero());
            }
    }
    CHECK_THROWS_AS(big_bracket(BigBracketElement::e(3, 1, 0), BigBracketElement::e(3, 2, 0)), InputError);
    CHECK_THROWS_AS(BigBracketElement(3, 3), InputError);
}

TEST_CASE("big bracket is a graded Poisson bracket") {
    std::mt19937_64 rng(11);
    const int dim = 3;
    for (int n : {1, 2}) {
        auto sgn = [&](int a, int b) { return ((a - n - 1) * (b - n - 1)) % 2 ? -1 : 1; };
        for (int trial = 0; trial < 12; ++trial) {
            std::uniform_int_distribution<int> kd(0, 2), wd(0, 2);
            auto a = random_element(rng, dim, n, kd(rng), wd(rng));
            auto b = random_element(rng, dim, n, kd(rng), wd(rng));
            auto c = random_element(rng, dim, n, kd(rng), wd(rng));
            // antisymmetry
            CHECK(big_bracket(a.x, b.x) == big_bracket(b.x, a.x).scaled(Scalar(-sgn(a.degree, b.degree))));
            // Jacobi
            auto lhs = big_bracket(a.x, big_bracket(b.x, c.x));
            auto rhs = big_bracket(big_bracket(a.x, b.x), c.x) +
                       big_bracket(b.x, big_bracket(a.x, c.x)).scaled(Scalar(sgn(a.degree, b.degree)));
            CHECK(lhs == rhs);
            // Leibniz
            int s = ((a.degree - n - 1) * b.degree) % 2 ? -1 : 1;
            CHECK(big_bracket(a.x, b.x * c.x) == big_bracket(a.x, b.x) * c.x + (b.x * big_bracket(a.x, c.x)).scaled(Scalar(s)));
            // graded commutativity of the product
            int cs = (a.degree * b.degree) % 2 ? -1 : 1;
            CHECK(a.x * b.x == (b.x * a.x).scaled(Scalar(cs)));
        }
    }
}

TEST_CASE("structure element squares to zero exactly for Lie algebras") {
    for (const auto& g : {sl2(), sl3(), heisenberg3()})
        for (int n : {1, 2}) {
            auto mu = BigBracketElement::structure(g, n);
            CHECK(big_bracket(mu, mu).is_zero());
        }
    LieAlgebra bad("broken", {"e", "f", "h"}, {},
                   {{0, 1, {{2, Scalar(1)}}}, {2, 0, {{0, Scalar(2)}}}, {2, 1, {{1, Scalar(-3)}}}});
    auto mu = BigBracketElement::structure(bad, 1);
    CHECK(!big_bracket(mu, mu).is_zero());
}

TEST_CASE("bracket with the structure element is the CE differential up to the shift sign") {
    std::mt19937_64 rng(5);
    for (const auto& g : {sl2(), heisenberg3()})
        for (int n : {1, 2})
            for (int k = 0; k <= 2; ++k)
                for (int w = 0; w <= 3; ++w) {
                    Module m = w == 0 ? Module::trivial() : (n == 1 ? Module::wedge(w) : Module::sym(w));
                    auto x = randomize(SparseTensor(g.dim(), big_bracket_groups(k, w, n)), rng, 0.5);
                    CECochain cx{k, m, SparseTensor(g.dim(), CECochain::groups(k, m))};
                    for (const auto& [idx, v] : x.entries()) cx.tensor.add(idx, v);
                    auto expect = ce_differential(g, cx).tensor;
                    auto got = ce_bb_differential(g, x, n);
                    CHECK_MESSAGE(got.full_components() == expect.scaled(Scalar(n == 1 ? 1 : -1)).full_components(),
                                  g.name() << " n=" << n << " k=" << k << " w=" << w);
                }
}

TEST_CASE("tensor round trip with factorial weights for even shift") {
    SparseTensor c = SparseTensor::symmetric(3, 2);
    c.add({0, 0}, Scalar(2));
    c.add({0, 1}, Scalar(5));
    auto x = BigBracketElement::from_tensor(c, 2);
    CHECK(x.terms().at(BBMonomial{{}, {0, 0}}) == Scalar(1));
    CHECK(x.to_tensor(0, 2) == c);
}

TEST_CASE("Schouten bracket") {
    LieAlgebra g = sl2();
    int e = 0, f = 1, h = 2;
    // degree one: the Lie bracket
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SparseTensor expect = SparseTensor::multivector(3, 1);
            for (const auto& [k, v] : g.bracket(i, j)) expect.add({k}, v);
            CHECK(schouten(g, basis_multivector(3, {i}), basis_multivector(3, {j})) == expect);
        }
    auto ef = basis_multivector(3, {e, f});
    CHECK(schouten(g, ef, ef) == basis_multivector(3, {e, f, h}, Scalar(-2)));
    CHECK(schouten(abelian(3), ef, ef).is_zero());
    // decomposable oracle and polarisation identity
    std::mt19937_64 rng(3);
    for (const auto& alg : {sl2(), sl3()}) {
        const int d = alg.dim();
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q)
                for (int trial = 0; trial < 5; ++trial) {
                    std::uniform_int_distribution<int> pick(0, d - 1);
                    Index X, Y;
                    while (static_cast<int>(X.size()) < p) {
                        int v = pick(rng);
                        if (std::find(X.begin(), X.end(), v) == X.end()) X.push_back(v);
                    }
                    while (static_cast<int>(Y.size()) < q) {
                        int v = pick(rng);
                        if (std::find(Y.begin(), Y.end(), v) == Y.end()) Y.push_back(v);
                    }
                    SparseTensor a = SparseTensor::multivector(d, p), b = SparseTensor::multivector(d, q);
                    a.add(X, Scalar(1));
                    b.add(Y, Scalar(1));
                    CHECK(schouten(alg, a, b) == schouten_oracle(alg, X, Y));
                }
        auto lam = random_multivector(rng, d, 2);
        auto dlam = ce_bb_differential(alg, lam);
        CHECK(schouten(alg, lam, lam) == bb_tensor_bracket(lam, dlam));
    }
}

TEST_CASE("quasi-Lie bialgebra axioms") {
    LieAlgebra g = sl2();
    CHECK(check_qlb(QuasiLieBialgebra::zero(g)).pass);
    CHECK(check_qlb(QuasiLieBialgebra::zero(sl3())).pass);
    auto q = QuasiLieBialgebra::zero(g);
    q.phi.add({0, 1, 2}, Scalar(1));
    CHECK(check_qlb(q).pass);
    auto lam = basis_multivector(3, {0, 1});
    auto t = QuasiLieBialgebra::zero(g);
    t.delta = ce_bb_differential(g, lam);
    t.phi = schouten(g, lam, lam).scaled(Scalar::fraction(-1, 2));
    CHECK(check_qlb(t).pass);
    CHECK(!t.delta.is_zero());
    // a random cobracket is generically not a cocycle and the cocycle residual is d delta
    std::mt19937_64 rng(17);
    auto bad = QuasiLieBialgebra::zero(g);
    bad.delta = random_cobracket(rng, 3);
    auto rep = check_qlb(bad);
    CHECK(!rep.pass);
    SparseTensor d = ce_differential(g, CECochain{1, Module::wedge(2), bad.delta}).tensor;
    CHECK(rep.cocycle.full_components() == d.full_components());
    CHECK(rep.max_support() > 0);
    auto wrong = QuasiLieBialgebra::zero(g);
    wrong.phi = SparseTensor::multivector(3, 2);
    CHECK_THROWS_AS(check_qlb(wrong), InputError);
}

TEST_CASE("twists form a groupoid") {
    std::mt19937_64 rng(23);
    for (const auto& g : {sl2(), sl3()}) {
        for (const auto& q : shipped_valid(g)) {
            REQUIRE(check_qlb(q).pass);
            auto same = twist(q, SparseTensor::multivector(g.dim(), 2));
            CHECK(same.delta == q.delta);
            CHECK(same.phi == q.phi);
            int trials = g.dim() == 3 ? 50 : 5;
            for (int i = 0; i < trials; ++i) {
                auto lam = random_multivector(rng, g.dim(), 2, g.dim() == 3 ? 1.0 : 0.3);
                auto t = twist(q, lam);
                CHECK(check_qlb(t).pass);
                CHECK(t.delta - q.delta == ce_bb_differential(g, lam));
                auto back = twist(t, lam.scaled(Scalar(-1)));
                CHECK(back.delta == q.delta);
                CHECK(back.phi == q.phi);
            }
        }
    }
    auto bad = QuasiLieBialgebra::zero(sl2());
    bad.delta = random_cobracket(rng, 3);
    CHECK_THROWS_AS(twist(bad, basis_multivector(3, {0, 1})), PreconditionError);
}

TEST_CASE("Casimir associator") {
    LieAlgebra g = sl2();
    auto c = casimir_from_form(trace_form(g));
    auto T = casimir_commutator(g, c);
    // the full signed S3 orbit of e (x) f (x) h
    SparseTensor orbit = embed_wedge(basis_multivector(3, {0, 1, 2}));
    CHECK(T.full_components() == orbit.full_components());
    auto phi = casimir_to_phi(g, c);
    CHECK(phi == basis_multivector(3, {0, 1, 2}, Scalar::fraction(-1, 6)));
    auto q = QuasiLieBialgebra::zero(g);
    q.phi = phi;
    CHECK(check_qlb(q).pass);
    CHECK(casimir_to_phi(g, SparseTensor::symmetric(3, 2)).is_zero());
    SparseTensor any = SparseTensor::symmetric(3, 2);
    any.add({0, 1}, Scalar(3));
    any.add({2, 2}, Scalar(1));
    CHECK(casimir_to_phi(abelian(3), any).is_zero());
    SparseTensor ee = SparseTensor::symmetric(3, 2);
    ee.add({0, 0}, Scalar(1));
    CHECK_THROWS_AS(casimir_to_phi(g, ee), PreconditionError);

    LieAlgebra s3 = sl3();
    auto inv = invariants(s3, Module::sym(2));
    REQUIRE(inv.size() == 1);
    auto T3 = casimir_commutator(s3, inv[0]);
    CHECK(T3.has_symmetry({{3, Symmetry::Antisymmetric, Variance::Upper}}));
    auto phi3 = casimir_to_phi(s3, inv[0]);
    CHECK(!phi3.is_zero());
    auto wedge3 = invariants(s3, Module::wedge(3));
    REQUIRE(wedge3.size() == 1);
    // phi3 spans the same line as the invariant 3-vector
    auto lead = wedge3[0].entries().begin();
    CHECK(phi3 == wedge3[0].scaled(phi3.get(lead->first)));
}

TEST_CASE("coisotropic Casimir data") {
    LieAlgebra g = sl2();
    auto c = casimir_from_form(trace_form(g));
    auto borel = SplitSubalgebra::from_labels(g, {"e", "h"});
    auto cartan = SplitSubalgebra::from_labels(g, {"h"});
    std::string why;
    CHECK(coisotropic_casimir_check(borel, c));
    CHECK(!coisotropic_casimir_check(cartan, c, &why));
    CHECK(why.find("e") != std::string::npos);
    CHECK(coisotropic_casimir_check(cartan, SparseTensor::symmetric(3, 2)));
    CHECK_THROWS_AS(induce_from_coisotropic(cartan, c), PreconditionError);
}

TEST_CASE("induced quasi-Lie bialgebra on the Borel") {
    LieAlgebra g = sl2();
    auto c = casimir_from_form(trace_form(g));
    auto borel = SplitSubalgebra::from_labels(g, {"e", "h"});
    auto q = induce_from_coisotropic(borel, c);
    CHECK(q.g.dim() == 2);
    auto rep = check_qlb(q);
    CHECK(rep.pass);
    CHECK(!q.delta.is_zero());
    auto zero = induce_from_coisotropic(borel, SparseTensor::symmetric(3, 2));
    CHECK(zero.delta.is_zero());
    CHECK(zero.phi.is_zero());
    // sl3 Borel and a parabolic
    LieAlgebra s3 = sl3();
    auto c3 = casimir_from_form(trace_form(s3));
    for (auto labels : {std::vector<std::string>{"e1", "e2", "e3", "h1", "h2"},
                        std::vector<std::string>{"e1", "e2", "e3", "f1", "h1", "h2"}}) {
        auto s = SplitSubalgebra::from_labels(s3, labels);
        REQUIRE(coisotropic_casimir_check(s, c3));
        CHECK(check_qlb(induce_from_coisotropic(s, c3)).pass);
        CHECK(verify_coisotropic_morphism(s, c3).pass());
    }
}

TEST_CASE("h = g reproduces the Casimir associator") {
    const Rational factor = ConventionLedger::standard().casimir_phi_twist_factor;
    for (const auto& g : {sl2(), sl3()}) {
        auto c = casimir_from_form(trace_form(g));
        std::vector<int> all;
        for (int i = 0; i < g.dim(); ++i) all.push_back(i);
        SplitSubalgebra s(g, all, {});
        auto q = induce_from_coisotropic(s, c);
        CHECK(q.delta.is_zero());
        CHECK(q.phi.full_components() == casimir_to_phi(g, c).scaled(Scalar(factor)).full_components());
    }
}

TEST_CASE("the generator map intertwines the differentials") {
    LieAlgebra g = sl2();
    auto c = casimir_from_form(trace_form(g));
    auto borel = SplitSubalgebra::from_labels(g, {"e", "h"});
    auto rep = verify_coisotropic_morphism(borel, c);
    CHECK(rep.coisotropic);
    CHECK(rep.identities.size() == 5);
    CHECK(rep.identities_pass);
    CHECK(rep.identities_cover_differential);
    CHECK(rep.equivalence);
    CHECK(rep.intertwines);
    CHECK(rep.pass());
    for (const auto& f : rep.intertwine_failures) MESSAGE(f);

    SparseTensor ee = SparseTensor::symmetric(3, 2);
    ee.add({0, 0}, Scalar(1));
    auto bad = verify_coisotropic_morphism(borel, ee);
    CHECK(!bad.identities_pass);
    CHECK(bad.equivalence);
    CHECK(!bad.invariant);
    bool named = false;
    for (const auto& id : bad.identities) named = named || (!id.vanishes && !id.nonzero.empty());
    CHECK(named);

    LieAlgebra ab = abelian(3);
    SparseTensor any = SparseTensor::symmetric(3, 2);
    any.add({0, 1}, Scalar(2));
    any.add({0, 0}, Scalar(1));
    auto triv = verify_coisotropic_morphism(SplitSubalgebra::from_labels(ab, {"x1", "x2"}), any);
    CHECK(triv.pass());
}

TEST_CASE("random split Casimirs: identities vanish exactly when c is invariant") {
    std::mt19937_64 rng(29);
    LieAlgebra g = sl2();
    auto borel = SplitSubalgebra::from_labels(g, {"e", "h"});
    for (int trial = 0; trial < 20; ++trial) {
        SparseTensor c = randomize(SparseTensor::symmetric(3, 2), rng, 0.7, 2);
        c.set({1, 1}, Scalar(0));  // keep it coisotropic for the Borel
        auto rep = verify_coisotropic_morphism(borel, c);
        CHECK(rep.identities_cover_differential);
        CHECK(rep.equivalence);
    }
}
