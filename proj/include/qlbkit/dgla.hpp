#pragma once

#include "qlbkit/big_bracket.hpp"
#include "qlbkit/lie_algebra.hpp"
#include "qlbkit/linalg.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qlbkit {

// Unshifted degree and weight of a homogeneous slice.
struct SliceKey {
    int degree = 0;
    int weight = 0;
    auto operator<=>(const SliceKey&) const = default;
};

struct Slice {
    std::vector<std::string> basis;
    int ce_degree = 0;  // bookkeeping for Pol(Bg, n) slices
};

// Sparse matrix: column j -> list of (row, value).
using SparseColumns = std::vector<std::vector<std::pair<int, Rational>>>;

// Structure constants of the bracket between two slices: (i, j) -> sum_k v_k b_k.
struct BracketBlock {
    SliceKey target;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> table;
};

// An element is a finite sum of homogeneous parts, stored densely per slice.
struct DGLAElement {
    std::map<SliceKey, RationalVector> parts;
    bool is_zero() const;
    DGLAElement operator+(const DGLAElement& o) const;
    DGLAElement operator-(const DGLAElement& o) const;
    DGLAElement scaled(const Rational& s) const;
    bool operator==(const DGLAElement& o) const;  // zero parts are ignored
};

struct WindowSpec {
    int max_weight = 4;
    int max_ce_degree = 4;
    int min_weight = 2;
    size_t max_basis = 20000;          // total basis size guard
    size_t max_bracket_pairs = 4000000;  // sum over slice pairs of dim1 * dim2
};

// A finite window of a weight-graded dg Lie algebra.  The bracket has weight -1
// and unshifted degree -shift; after shifting by `shift`, MC elements sit in
// shifted degree 1 (unshifted degree shift + 1).
class WeightGradedDGLA {
public:
    std::string name;
    int shift = 2;
    int max_weight = 4;
    std::map<SliceKey, Slice> slices;
    std::map<SliceKey, SparseColumns> differential;  // into (degree + 1, weight)
    std::map<std::pair<SliceKey, SliceKey>, BracketBlock> brackets;

    // Pol(Bg, n) bookkeeping: monomial of each basis vector.
    int generator_dim = 0;
    int poly_shift = 0;
    std::map<SliceKey, std::vector<BBMonomial>> monomials;

    int shifted_degree(const SliceKey& k) const { return k.degree - shift; }
    int mc_degree() const { return shift + 1; }
    bool has_slice(const SliceKey& k) const { return slices.count(k) > 0; }
    size_t dim(const SliceKey& k) const;
    size_t total_dim() const;

    DGLAElement zero() const { return {}; }
    DGLAElement d(const DGLAElement& x) const;
    // Components whose target slice lies outside the window are dropped (weight cutoff).
    DGLAElement bracket(const DGLAElement& x, const DGLAElement& y) const;
    void check_element(const DGLAElement& x) const;
};

struct StructureCheck {
    bool pass = true;
    std::string witness;
    size_t checked = 0;
};

StructureCheck check_d_squared(const WeightGradedDGLA& L);
StructureCheck check_antisymmetry(const WeightGradedDGLA& L);
StructureCheck check_jacobi(const WeightGradedDGLA& L);
StructureCheck check_leibniz(const WeightGradedDGLA& L);
StructureCheck check_weight_additivity(const WeightGradedDGLA& L);

// C(g, Sym(g[-n])) restricted to min_weight <= weight <= max_weight and CE degree <= max_ce_degree.
WeightGradedDGLA pol_bg(const LieAlgebra& g, int n, const WindowSpec& window = {});

// Canonical identification with tensors of bidegree (k, w) (big bracket conventions).
DGLAElement element_from_tensor(const WeightGradedDGLA& L, const SparseTensor& t);
SparseTensor tensor_from_element(const WeightGradedDGLA& L, const DGLAElement& x, int ce_degree, int weight);
SliceKey pol_slice(const WeightGradedDGLA& L, int ce_degree, int weight);

// dx + 1/2 [x, x]; x must live in shifted degree 1 and weights >= 2.
DGLAElement mc_residual(const WeightGradedDGLA& L, const DGLAElement& x);

// alpha(t) = sum_p t^p coefficients[p]; lambda in shifted degree 0.
struct GaugePath {
    DGLAElement lambda;
    std::vector<DGLAElement> coefficients;
    DGLAElement at(const Rational& t) const;
};

struct GaugeReport {
    bool starts = false;
    bool ends = false;
    bool ode = false;
    bool mc_along_path = false;
    std::vector<std::string> failures;
    bool pass() const { return starts && ends && ode && mc_along_path; }
};

GaugeReport gauge_verify(const WeightGradedDGLA& L, const DGLAElement& x, const DGLAElement& y,
                         const GaugePath& path);

// Integrated twist path x0 + t (d l + [x0, l]) + t^2/2 [d l, l]; the gauge parameter
// of the ODE is -l.  Exact whenever brackets of weight >= 3 with l vanish beyond t^2,
// as in Pol(Bg, 1).
GaugePath twist_path(const WeightGradedDGLA& L, const DGLAElement& x0, const DGLAElement& l);

std::string dgla_to_json(const WeightGradedDGLA& L);
WeightGradedDGLA dgla_from_json(const std::string& text);

}  // namespace qlbkit
