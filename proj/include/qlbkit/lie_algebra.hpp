#pragma once

#include "qlbkit/linalg.hpp"
#include "qlbkit/scalar.hpp"
#include "qlbkit/sparse_tensor.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlbkit {

using SparseVector = std::vector<std::pair<int, Scalar>>;  // sorted by index, no zeros

SparseVector sparse_add(const SparseVector& a, const SparseVector& b);
SparseVector sparse_scale(const SparseVector& a, const Scalar& s);

struct FieldDescriptor {
    std::vector<std::string> variables;  // empty: the rationals
    bool is_rational() const { return variables.empty(); }
};

// Root data of an algebra generated from a simply-laced Cartan matrix.
struct ChevalleyData {
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots;  // coordinates in simple roots
    std::vector<int> e_index, f_index;             // basis index of e_alpha, f_alpha per positive root
    std::vector<int> h_index;                      // basis index of the simple coroots
};

struct BracketEntry {
    int i;
    int j;
    SparseVector value;  // [e_i, e_j]
};

class LieAlgebra {
public:
    struct Constant {
        int i, j, k;  // i < j
        Scalar value;  // f^k_ij
    };

    LieAlgebra() = default;
    // Brackets are given for ordered pairs; [e_j,e_i] = -[e_i,e_j] is implied.
    // Listing a pair twice inconsistently, or [x,x] != 0, is an input error.
    LieAlgebra(std::string name, std::vector<std::string> basis, FieldDescriptor field,
               const std::vector<BracketEntry>& brackets);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const FieldDescriptor& field() const { return field_; }
    int index_of(const std::string& label) const;

    const SparseVector& bracket(int i, int j) const { return table_[static_cast<size_t>(i) * basis_.size() + j]; }
    Scalar structure_constant(int k, int i, int j) const;
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
    const std::vector<Constant>& constants() const { return constants_; }
    // f^k_ij with i<j grouped by k
    const std::vector<std::vector<Constant>>& constants_by_target() const { return by_target_; }
    bool is_abelian() const { return constants_.empty(); }
    bool is_rational() const;

    const ChevalleyData* chevalley() const { return chevalley_.get(); }
    LieAlgebra with_chevalley(ChevalleyData data) const;
    LieAlgebra renamed(std::string name) const;

    // Killing form tr(ad x ad y) as a matrix in the basis.
    RationalMatrix killing_form() const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    FieldDescriptor field_;
    std::vector<SparseVector> table_;
    std::vector<Constant> constants_;
    std::vector<std::vector<Constant>> by_target_;
    std::shared_ptr<const ChevalleyData> chevalley_;
};

struct LieCheckReport {
    bool pass = true;
    std::string message;
    std::vector<std::string> witness;  // basis labels of the violating triple
    SparseVector jacobiator;           // value of the cyclic sum on the witness
};

LieCheckReport check_lie(const LieAlgebra& g);

// Factories.
LieAlgebra abelian(int n);
LieAlgebra sl2();
LieAlgebra sl3();
LieAlgebra heisenberg3();
// Chevalley basis from a symmetric (simply-laced) Cartan matrix with integer constants.
LieAlgebra simply_laced(const std::string& name, const std::vector<std::vector<int>>& cartan);
// Basis labels get the given prefixes.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& prefix_a = "1.",
                      const std::string& prefix_b = "2.");
// Rebase: rows of `change` are the new basis vectors in old coordinates.
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& change, std::vector<std::string> labels,
                        std::string name);

// Normalised invariant form (h_i|h_j) = a_ij, (e_a|f_b) = delta_ab.  For sl_n it is
// the trace form of the defining representation.
RationalMatrix trace_form(const LieAlgebra& g);
// Inverse of a nondegenerate symmetric form, as a symmetric 2-tensor.
SparseTensor casimir_from_form(const RationalMatrix& form);

}  // namespace qlbkit
