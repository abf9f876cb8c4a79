#include "doctest.h"

#include "qlbkit/ce.hpp"
#include "qlbkit/errors.hpp"
#include "qlbkit/split.hpp"

#include <random>

using namespace qlbkit;

namespace {

SparseVector vec(int i, int c) { return {{i, Scalar(c)}}; }

CECochain random_cochain(std::mt19937_64& rng, int dim, int degree, const Module& module) {
    std::uniform_int_distribution<int> coef(-4, 4);
    CECochain c = CECochain::zero(dim, degree, module);
    for (const auto& b : cochain_basis(dim, degree, module)) {
        int v = coef(rng);
        if (v == 0) continue;
        c.tensor = c.tensor + b.tensor.scaled(Scalar(v));
    }
    return c;
}

bool proportional(const RationalMatrix& a, const RationalMatrix& b, Rational ratio) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != ratio * b[i][j]) return false;
    return true;
}

}  // namespace

TEST_CASE("factories satisfy the Lie axioms") {
    for (const auto& g : {abelian(3), heisenberg3(), sl2(), sl3(), direct_sum(sl2(), heisenberg3())}) {
        auto rep = check_lie(g);
        CHECK_MESSAGE(rep.pass, g.name() << ": " << rep.message);
    }
    CHECK(sl2().dim() == 3);
    CHECK(sl3().dim() == 8);
}

TEST_CASE("sl2 brackets follow the Chevalley normalisation") {
    LieAlgebra g = sl2();
    int e = g.index_of("e"), f = g.index_of("f"), h = g.index_of("h");
    CHECK(g.bracket(e, f) == vec(h, 1));
    CHECK(g.bracket(h, e) == vec(e, 2));
    CHECK(g.bracket(h, f) == vec(f, -2));
    CHECK_THROWS_AS(g.index_of("x"), InputError);
}

TEST_CASE("sl3 Cartan relations") {
    LieAlgebra g = sl3();
    const auto* ch = g.chevalley();
    REQUIRE(ch != nullptr);
    for (size_t r = 0; r < ch->positive_roots.size(); ++r) {
        int e = ch->e_index[r], f = ch->f_index[r];
        // [h_i, e_alpha] = alpha(h_i) e_alpha
        for (size_t i = 0; i < ch->h_index.size(); ++i) {
            int alpha_h = 0;
            for (size_t j = 0; j < ch->cartan.size(); ++j) alpha_h += ch->positive_roots[r][j] * ch->cartan[j][i];
            CHECK(g.bracket(ch->h_index[i], e) == (alpha_h ? vec(e, alpha_h) : SparseVector{}));
        }
        // [e_alpha, f_alpha] is a coroot, nonzero and inside the Cartan
        auto hf = g.bracket(e, f);
        CHECK(!hf.empty());
        for (const auto& [k, v] : hf)
            CHECK(std::find(ch->h_index.begin(), ch->h_index.end(), k) != ch->h_index.end());
    }
}

TEST_CASE("a broken bracket is caught with a witness") {
    LieAlgebra good = sl2();
    std::vector<BracketEntry> br{{0, 1, vec(2, 1)}, {2, 0, vec(0, 2)}, {2, 1, vec(1, -3)}};
    LieAlgebra bad("sl2-mutated", {"e", "f", "h"}, {}, br);
    auto rep = check_lie(bad);
    CHECK(!rep.pass);
    CHECK(rep.witness.size() == 3);
    CHECK(!rep.jacobiator.empty());
    CHECK_THROWS_AS(LieAlgebra("dup", {"a", "a"}, {}, {}), InputError);
    CHECK_THROWS_AS(LieAlgebra("self", {"a", "b"}, {}, {{0, 0, vec(1, 1)}}), InputError);
    CHECK_THROWS_AS(LieAlgebra("clash", {"a", "b"}, {}, {{0, 1, vec(1, 1)}, {1, 0, vec(1, 1)}}), InputError);
}

TEST_CASE("differential on 0-cochains is minus the adjoint action") {
    LieAlgebra g = sl2();
    int e = g.index_of("e"), h = g.index_of("h");
    SparseTensor x = SparseTensor::multivector(3, 1);
    x.add({h}, Scalar(1));
    CECochain dx = ce_differential(g, as_cochain(x, Module::wedge(1)));
    CHECK(dx.degree == 1);
    CHECK(dx.tensor.get({e, e}) == Scalar(2));
    CHECK(dx.tensor.support_size() == 2);
}

TEST_CASE("d squared vanishes") {
    std::mt19937_64 rng(7);
    struct Case {
        LieAlgebra g;
        Module m;
        int degree;
    };
    std::vector<Case> cases{{sl2(), Module::trivial(), 1},  {sl2(), Module::adjoint(), 1},
                            {sl2(), Module::wedge(2), 0},   {sl2(), Module::sym(2), 1},
                            {heisenberg3(), Module::sym(2), 1}, {sl3(), Module::adjoint(), 1},
                            {sl3(), Module::wedge(2), 0},   {sl2(), Module::tensor(2), 1}};
    for (const auto& c : cases)
        for (int rep = 0; rep < 3; ++rep) {
            auto x = random_cochain(rng, c.g.dim(), c.degree, c.m);
            auto ddx = ce_differential(c.g, ce_differential(c.g, x));
            CHECK_MESSAGE(ddx.tensor.is_zero(), c.g.name() << " " << c.m.name() << " degree " << c.degree);
        }
}

TEST_CASE("invariant dimensions") {
    LieAlgebra s2 = sl2(), s3 = sl3();
    CHECK(invariants(s2, Module::trivial()).size() == 1);
    CHECK(invariants(s2, Module::adjoint()).empty());
    CHECK(invariants(s2, Module::wedge(2)).empty());
    CHECK(invariants(s2, Module::wedge(3)).size() == 1);
    CHECK(invariants(s2, Module::sym(2)).size() == 1);
    CHECK(invariants(s3, Module::sym(2)).size() == 1);
    CHECK(invariants(s3, Module::sym(3)).size() == 1);
    CHECK(invariants(s3, Module::wedge(3)).size() == 1);
    CHECK(invariants(heisenberg3(), Module::adjoint()).size() == 1);
    for (const auto& m : {Module::sym(2), Module::wedge(3), Module::adjoint()})
        CHECK(invariants(s2, m) == invariants_via_differential(s2, m));
}

TEST_CASE("quadratic invariant of sl2 is the trace-form Casimir") {
    LieAlgebra g = sl2();
    auto inv = invariants(g, Module::sym(2));
    REQUIRE(inv.size() == 1);
    SparseTensor c = casimir_from_form(trace_form(g));
    CHECK(inv[0] == c);
    CHECK(c.get({g.index_of("h"), g.index_of("h")}) == Scalar::fraction(1, 2));
}

TEST_CASE("Killing form is proportional to the trace form") {
    CHECK(proportional(sl2().killing_form(), trace_form(sl2()), 4));
    CHECK(proportional(sl3().killing_form(), trace_form(sl3()), 6));
}

TEST_CASE("Lie algebra cohomology") {
    LieAlgebra g = sl2();
    CHECK(cohomology_dim(g, Module::trivial(), 0) == 1);
    CHECK(cohomology_dim(g, Module::trivial(), 1) == 0);
    CHECK(cohomology_dim(g, Module::trivial(), 2) == 0);
    CHECK(cohomology_dim(g, Module::trivial(), 3) == 1);
    for (int k = 0; k <= 3; ++k) CHECK(cohomology_dim(g, Module::adjoint(), k) == 0);
    LieAlgebra h = heisenberg3();
    CHECK(cohomology_dim(h, Module::trivial(), 1) == 2);
    CHECK(cohomology_dim(h, Module::trivial(), 2) == 2);
    CHECK(cohomology_dim(h, Module::trivial(), 3) == 1);
}

TEST_CASE("module descriptors") {
    CHECK(Module::parse("sym2") == Module::sym(2));
    CHECK(Module::parse("wedge3") == Module::wedge(3));
    CHECK(Module::parse("adjoint") == Module::tensor(1));
    CHECK(Module::parse("trivial").name() == "trivial");
    CHECK_THROWS_AS(Module::parse("sym"), InputError);
    CHECK_THROWS_AS(Module::parse("spin"), InputError);
    SparseTensor notsym = SparseTensor::plain(3, 2);
    notsym.add({0, 1}, Scalar(1));
    CHECK_THROWS_AS(as_cochain(notsym, Module::sym(2)), InputError);
}

TEST_CASE("split subalgebras") {
    LieAlgebra g = sl2();
    auto borel = SplitSubalgebra::from_labels(g, {"e", "h"});
    CHECK(borel.hdim() == 2);
    CHECK(borel.mdim() == 1);
    CHECK(borel.reassembles());
    CHECK(check_lie(borel.h_algebra()).pass);
    // [h, f] = -2 f lands in m, [e, f] = h lands in h
    CHECK(borel.B(0, 1, 0) == Scalar(-2));
    CHECK(borel.A(1, 0, 0) == Scalar(1));
    CHECK_THROWS_AS(SplitSubalgebra::from_labels(g, {"e", "f"}), InputError);
    CHECK_THROWS_AS(SplitSubalgebra(g, {0, 1}, {1, 2}), InputError);

    LieAlgebra s3 = sl3();
    auto levi = SplitSubalgebra::from_labels(s3, {"e1", "f1", "h1", "h2"});
    CHECK(levi.reassembles());
    CHECK(check_lie(levi.h_algebra()).pass);
}
