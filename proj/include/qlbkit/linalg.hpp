#pragma once

#include "qlbkit/polynomial.hpp"

#include <optional>
#include <vector>

namespace qlbkit {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

// Row echelon form computed by fraction-free (Bareiss) elimination after
// clearing denominators row by row.  All entries stay integral.
struct IntegerEchelon {
    std::vector<std::vector<mpz_class>> rows;  // the nonzero echelon rows
    std::vector<int> pivots;                   // pivot column of each row
    int cols = 0;
};

IntegerEchelon fraction_free_echelon(const RationalMatrix& m, int cols);
int rank(const RationalMatrix& m, int cols);
// Basis of {v : m v = 0}; one vector per free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m, int cols);
// Some solution of m v = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b, int cols);
Rational determinant(const RationalMatrix& m);
RationalMatrix inverse(const RationalMatrix& m);  // throws PreconditionError if singular
RationalMatrix transpose(const RationalMatrix& m, int cols);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, int inner, int cols);

}  // namespace qlbkit
