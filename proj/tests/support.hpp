#pragma once

#include "qlbkit/multivector.hpp"
#include "qlbkit/qlb.hpp"

#include <functional>
#include <random>

namespace testing_support {

using namespace qlbkit;

inline Scalar small_rational(std::mt19937_64& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return Scalar(q);
}

// Fills every canonical slot of an empty tensor with a random value (zeros allowed).
inline SparseTensor randomize(SparseTensor t, std::mt19937_64& rng, double density = 1.0, int range = 3) {
    std::bernoulli_distribution keep(density);
    std::vector<Index> slots{Index{}};
    for (const auto& g : t.groups()) {
        auto block = g.symmetry == Symmetry::None ? std::vector<Index>{} : increasing_tuples(t.dim(), g.size,
                                                                                          g.symmetry == Symmetry::Antisymmetric);
        if (g.symmetry == Symmetry::None) {
            block = {Index{}};
            for (int s = 0; s < g.size; ++s) {
                std::vector<Index> next;
                for (const auto& b : block)
                    for (int i = 0; i < t.dim(); ++i) {
                        Index u = b;
                        u.push_back(i);
                        next.push_back(u);
                    }
                block = next;
            }
        }
        std::vector<Index> next;
        for (const auto& a : slots)
            for (const auto& b : block) {
                Index u = a;
                u.insert(u.end(), b.begin(), b.end());
                next.push_back(u);
            }
        slots = next;
    }
    for (const auto& idx : slots)
        if (keep(rng)) t.add(idx, small_rational(rng, range));
    return t;
}

inline SparseTensor random_multivector(std::mt19937_64& rng, int dim, int p, double density = 1.0) {
    return randomize(SparseTensor::multivector(dim, p), rng, density);
}

inline SparseTensor random_cobracket(std::mt19937_64& rng, int dim, double density = 1.0) {
    return randomize(zero_cobracket(dim), rng, density);
}

}  // namespace testing_support
