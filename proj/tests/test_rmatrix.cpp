#include "doctest.h"

#include "qlbkit/conventions.hpp"
#include "qlbkit/errors.hpp"
#include "qlbkit/rmatrix.hpp"
#include "support.hpp"

using namespace qlbkit;
using namespace testing_support;

namespace {

SparseTensor standard_casimir(const LieAlgebra& g) { return casimir_from_form(trace_form(g)); }

// r = 2 lambda + c as a plain tensor
SparseTensor assemble(const SparseTensor& lambda, const SparseTensor& c) {
    return embed_wedge(lambda).scaled(Scalar(2)) + embed_sym(c);
}

SparseTensor standard_sl2_r(const LieAlgebra& g) {
    const int e = g.index_of("e"), f = g.index_of("f"), h = g.index_of("h");
    SparseTensor r = SparseTensor::plain(3, 2);
    r.add({e, f}, Scalar(1));
    r.add({h, h}, Scalar::fraction(1, 4));
    return r;
}

// sum over positive roots of s(alpha) e_alpha ^ f_alpha
SparseTensor root_wedge(const LieAlgebra& g, const std::function<Scalar(const std::vector<int>&)>& s) {
    const auto* cd = g.chevalley();
    SparseTensor l = SparseTensor::multivector(g.dim(), 2);
    for (size_t a = 0; a < cd->positive_roots.size(); ++a)
        l.add({cd->e_index[a], cd->f_index[a]}, s(cd->positive_roots[a]));
    return l;
}

DynamicalRMatrix sl2_dynamical(const Scalar& coef) {
    LieAlgebra g = sl2();
    SparseTensor lambda = basis_multivector(3, {g.index_of("e"), g.index_of("f")}, coef);
    return {SplitSubalgebra::from_labels(g, {"h"}), {"x"}, embed_wedge(lambda).scaled(Scalar(2)),
            {Polynomial::variable("x")}};
}

}  // namespace

TEST_CASE("cybe basics") {
    LieAlgebra g = sl2();
    CHECK(cybe(g, SparseTensor::plain(3, 2)).is_zero());
    std::mt19937_64 rng(11);
    auto r = randomize(SparseTensor::plain(3, 2), rng);
    CHECK(cybe(abelian(3), r).is_zero());
    CHECK(cybe(g, standard_sl2_r(g)).is_zero());
    // quadratic in r
    for (int t = 0; t < 10; ++t) {
        auto x = randomize(SparseTensor::plain(3, 2), rng);
        Scalar s = small_rational(rng);
        CHECK(cybe(g, x.scaled(s)) == cybe(g, x).scaled(s * s));
    }
    CHECK_THROWS_AS(cybe(g, SparseTensor::plain(3, 3)), InputError);
}

TEST_CASE("cybe of e(x)f without symmetric completion") {
    LieAlgebra g = sl2();
    const int e = g.index_of("e"), f = g.index_of("f"), h = g.index_of("h");
    SparseTensor r = SparseTensor::plain(3, 2);
    r.add({e, f}, Scalar(1));
    auto res = cybe(g, r);
    CHECK_FALSE(res.is_zero());
    // [r12,r13] = [e,e] f f = 0; [r12,r23] = e [f,e] f = -e h f; [r13,r23] = 0
    SparseTensor expect = SparseTensor::plain(3, 3);
    expect.add({e, h, f}, Scalar(-1));
    CHECK(res == expect);
    CHECK_FALSE(quasitriangular_check(g, r).pass);
}

TEST_CASE("split_r") {
    LieAlgebra g = sl2();
    std::mt19937_64 rng(5);
    auto sym = embed_sym(randomize(SparseTensor::symmetric(3, 2), rng));
    CHECK(split_r(g, sym).lambda.is_zero());
    auto anti = embed_wedge(randomize(SparseTensor::multivector(3, 2), rng));
    CHECK(split_r(g, anti).c.is_zero());
    for (int t = 0; t < 10; ++t) {
        auto r = randomize(SparseTensor::plain(3, 2), rng);
        auto s = split_r(g, r);
        CHECK(assemble(s.lambda, s.c) == r);
    }
    auto s = split_r(g, standard_sl2_r(g));
    const int e = g.index_of("e"), f = g.index_of("f"), h = g.index_of("h");
    CHECK(s.c_invariant);
    CHECK(s.c == standard_casimir(g).scaled(Scalar::fraction(1, 2)));
    CHECK(s.c.get({h, h}) == Scalar::fraction(1, 4));
    CHECK(s.lambda == basis_multivector(3, {e, f}, Scalar::fraction(1, 4)));
}

TEST_CASE("quasitriangular check and lambda-form") {
    LieAlgebra g = sl2();
    auto zero = quasitriangular_check(g, SparseTensor::plain(3, 2));
    CHECK(zero.pass);
    CHECK(zero.lambda_form_holds);

    auto rep = quasitriangular_check(g, standard_sl2_r(g));
    CHECK(rep.pass);
    CHECK(rep.lambda_form_holds);
    CHECK(rep.criteria_agree);
    CHECK(rep.kappa_relation);
    // 1/2 [[lambda,lambda]] = -1/16 e^f^h
    auto phi = casimir_phi(g, rep.parts.c);
    CHECK(phi == basis_multivector(3, {g.index_of("e"), g.index_of("f"), g.index_of("h")}, Scalar::fraction(-1, 16)));
}

TEST_CASE("kappa0 relation on random lambda") {
    const Rational kappa0 = ConventionLedger::standard().cybe_kappa0;
    CHECK(kappa0 == -4);
    std::mt19937_64 rng(2024);
    for (const auto& g : {sl2(), sl3()}) {
        auto c = standard_casimir(g).scaled(Scalar::fraction(1, 2));
        int runs = g.dim() == 3 ? 50 : 8;
        int agree = 0;
        for (int t = 0; t < runs; ++t) {
            auto lambda = randomize(SparseTensor::multivector(g.dim(), 2), rng, g.dim() == 3 ? 1.0 : 0.3);
            auto rep = quasitriangular_check(g, assemble(lambda, c));
            CHECK(rep.parts.c_invariant);
            CHECK(rep.kappa_relation);
            CHECK(rep.criteria_agree);
            // cybe(2 lambda + c) is totally antisymmetric
            CHECK(rep.cybe == embed_wedge(alternate(rep.cybe).scaled(Scalar::fraction(1, 6))));
            agree += rep.criteria_agree;
        }
        CHECK(agree == runs);
        // the positive solutions +-1/4 sum e_a ^ f_a
        for (int sign : {1, -1}) {
            auto lambda = root_wedge(g, [&](const std::vector<int>&) { return Scalar::fraction(sign, 4); });
            auto rep = quasitriangular_check(g, assemble(lambda, c));
            CHECK(rep.pass);
            CHECK(rep.lambda_form_holds);
        }
    }
}

TEST_CASE("d_dr and alt_ddr") {
    LieAlgebra g = sl2();
    auto split = SplitSubalgebra::from_labels(g, {"h"});
    const int e = g.index_of("e"), f = g.index_of("f"), h = g.index_of("h");
    Scalar x = Scalar::variable("x");
    SparseTensor constant = SparseTensor::plain(3, 2);
    constant.add({e, f}, Scalar(3));
    CHECK(d_dr(constant, split, {"x"}).is_zero());

    SparseTensor sq = SparseTensor::plain(3, 1);
    sq.add({e}, x * x);
    CHECK(d_dr(sq, split, {"x"}).get({h, e}) == Scalar(2) * x);

    SparseTensor inv = SparseTensor::plain(3, 1);
    inv.add({e}, Scalar(1) / x);
    CHECK(d_dr(inv, split, {"x"}).get({h, e}) == Scalar(-1) / (x * x));

    // d_dR of (1/x) e^f, then Alt: -2/x^2 on e^f^h
    auto lambda = basis_multivector(3, {e, f}, Scalar(1) / x);
    auto alt = alt_ddr(d_dr(embed_wedge(lambda), split, {"x"}), split);
    CHECK(alt == basis_multivector(3, {e, f, h}, Scalar(-2) / (x * x)));

    // an antisymmetric input with first slot in h is multiplied by 6
    auto t = embed_wedge(basis_multivector(3, {e, f, h}));
    SparseTensor only_h = SparseTensor::plain(3, 3);
    for (const auto& [idx, v] : t.entries())
        if (idx[0] == h) only_h.add(idx, v);
    CHECK(alt_ddr(only_h, split).get({e, f, h}) == Scalar(2));
    CHECK(alt_ddr(SparseTensor::plain(3, 3), split).is_zero());

    SparseTensor bad = SparseTensor::plain(3, 3);
    bad.add({e, f, h}, Scalar(1));
    CHECK_THROWS_AS(alt_ddr(bad, split), InputError);
    CHECK_THROWS_AS(alt_ddr(SparseTensor::plain(3, 2), split), InputError);
    CHECK_THROWS_AS(d_dr(sq, split, {}), InputError);
}

TEST_CASE("dynamical 1/x family on sl2") {
    CHECK(ConventionLedger::standard().dynamical_kappa == 1);
    CHECK(ConventionLedger::standard().dynamical_alt_coefficient == Rational(-1, 2));
    Scalar x = Scalar::variable("x");
    auto good = dynamical_check(sl2_dynamical(Scalar(ConventionLedger::standard().dynamical_kappa) / x));
    CHECK(good.equivariant);
    CHECK(good.c_constant);
    CHECK(good.c_invariant);
    CHECK(good.cdybe_zero);
    CHECK(good.lambda_form_holds);
    CHECK(good.criteria_agree);
    CHECK(good.pass);

    for (const Scalar& coef : {Scalar(1) / (x * x), Scalar(2) / x, Scalar(-1) / x, x}) {
        auto d = sl2_dynamical(coef);
        if (coef == x) d.locus.clear();
        auto rep = dynamical_check(d);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.cdybe_zero);
        CHECK_FALSE(rep.lambda_form.is_zero());
        CHECK(rep.criteria_agree);
    }
    // (3) and (4) are proportional: cdybe = kappa0 * embed(lambda_form)
    auto bad = dynamical_check(sl2_dynamical(Scalar(1) / (x * x)));
    CHECK(bad.cdybe == embed_wedge(bad.lambda_form).scaled(Scalar(ConventionLedger::standard().cybe_kappa0)));
}

TEST_CASE("dynamical sl3 family") {
    LieAlgebra g = sl3();
    auto split = SplitSubalgebra::from_labels(g, {"h1", "h2"});
    std::vector<std::string> vars{"x1", "x2"};
    auto alpha = [&](const std::vector<int>& root) {
        Scalar s(0);
        for (size_t j = 0; j < root.size(); ++j) s += Scalar(root[j]) * Scalar::variable(vars[j]);
        return s;
    };
    std::vector<Polynomial> locus;
    for (const auto& root : g.chevalley()->positive_roots) locus.push_back(alpha(root).as_function().numerator());
    auto lambda = root_wedge(g, [&](const std::vector<int>& root) { return Scalar(1) / alpha(root); });
    auto rep = dynamical_check({split, vars, embed_wedge(lambda).scaled(Scalar(2)), locus});
    CHECK(rep.equivariant);
    CHECK(rep.cdybe_zero);
    CHECK(rep.lambda_form_holds);
    CHECK(rep.pass);

    // with the invariant symmetric part added the equation changes; the criteria still agree
    auto with_c = embed_wedge(lambda).scaled(Scalar(2)) + embed_sym(standard_casimir(g).scaled(Scalar::fraction(1, 2)));
    auto rep2 = dynamical_check({split, vars, with_c, locus});
    CHECK(rep2.criteria_agree);

    // a non-weight-zero term breaks equivariance
    auto broken = embed_wedge(lambda).scaled(Scalar(2));
    broken.add({g.chevalley()->e_index[0], g.chevalley()->e_index[1]}, Scalar(1));
    CHECK_FALSE(dynamical_check({split, vars, broken, locus}).equivariant);
}

TEST_CASE("dynamical check reduces to the constant case") {
    std::mt19937_64 rng(9);
    LieAlgebra g = sl2();
    auto split = SplitSubalgebra::from_labels(g, {});
    auto c = standard_casimir(g).scaled(Scalar::fraction(1, 2));
    std::vector<SparseTensor> rs{standard_sl2_r(g), SparseTensor::plain(3, 2)};
    for (int t = 0; t < 10; ++t) rs.push_back(assemble(randomize(SparseTensor::multivector(3, 2), rng), c));
    for (const auto& r : rs) {
        auto q = quasitriangular_check(g, r);
        auto d = dynamical_check({split, {}, r, {}});
        CHECK(q.pass == d.pass);
        CHECK(d.criteria_agree);
    }
    CHECK(dynamical_check({split, {}, standard_sl2_r(g), {}}).pass);
}

TEST_CASE("dynamical input errors") {
    LieAlgebra g = sl2();
    Scalar y = Scalar::variable("y");
    auto d = sl2_dynamical(Scalar(1) / y);
    CHECK_THROWS_AS(dynamical_check(d), InputError);
    auto d2 = sl2_dynamical(Scalar(1) / (Scalar::variable("x") + Scalar(1)));
    CHECK_THROWS_AS(dynamical_check(d2), InputError);
    auto d3 = sl2_dynamical(Scalar(1) / Scalar::variable("x"));
    d3.vars = {"x", "z"};
    CHECK_THROWS_AS(dynamical_check(d3), InputError);
}
