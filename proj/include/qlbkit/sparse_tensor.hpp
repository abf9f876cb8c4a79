#pragma once

#include "qlbkit/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlbkit {

enum class Symmetry { None, Antisymmetric, Symmetric };
enum class Variance { Upper, Lower };  // Upper: a slot in g, Lower: a slot in g*

// Consecutive slots sharing a symmetry type and variance.
struct SlotGroup {
    int size = 0;
    Symmetry symmetry = Symmetry::None;
    Variance variance = Variance::Upper;
    bool operator==(const SlotGroup& o) const {
        return size == o.size && symmetry == o.symmetry && variance == o.variance;
    }
};

using Index = std::vector<int>;

// Sparse tensor on a space of dimension n.  Values are full-tensor components and
// are stored only at canonical representatives: strictly increasing within an
// antisymmetric group, weakly increasing within a symmetric group.
class SparseTensor {
public:
    SparseTensor() = default;
    SparseTensor(int dim, std::vector<SlotGroup> groups);

    static SparseTensor multivector(int dim, int p);
    static SparseTensor symmetric(int dim, int p);
    static SparseTensor plain(int dim, int p);
    static SparseTensor scalar(const Scalar& s);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    const std::vector<SlotGroup>& groups() const { return groups_; }
    std::vector<SlotGroup> slot_layout() const;  // one entry per slot (size 1 groups)

    Scalar get(const Index& idx) const;
    void add(const Index& idx, const Scalar& v);
    void set(const Index& idx, const Scalar& v);

    const std::map<Index, Scalar>& entries() const { return data_; }
    size_t support_size() const { return data_.size(); }
    bool is_zero() const { return data_.empty(); }
    bool same_shape(const SparseTensor& o) const { return dim_ == o.dim_ && groups_ == o.groups_; }

    SparseTensor operator-() const;
    SparseTensor operator+(const SparseTensor& o) const;
    SparseTensor operator-(const SparseTensor& o) const;
    SparseTensor scaled(const Scalar& s) const;
    bool operator==(const SparseTensor& o) const;
    bool operator!=(const SparseTensor& o) const { return !(*this == o); }

    // All components, every permutation spelled out.
    std::map<Index, Scalar> full_components() const;
    // Same tensor with every group relaxed to no symmetry.
    SparseTensor expanded() const;
    // Keeps only canonical tuples of `full` under the given groups; the caller
    // guarantees that `full` has the declared symmetry (see has_symmetry).
    static SparseTensor from_full(int dim, std::vector<SlotGroup> groups, const std::map<Index, Scalar>& full);
    SparseTensor regrouped(std::vector<SlotGroup> groups) const;
    bool has_symmetry(const std::vector<SlotGroup>& groups) const;

    // Result slot s carries old slot perm[s]; no symmetry is kept.
    SparseTensor permuted(const std::vector<int>& perm) const;
    SparseTensor tensor_product(const SparseTensor& o) const;

    // Canonical representative of an arbitrary tuple and the sign relating them;
    // nullopt when an antisymmetric group has a repeated index.
    std::optional<std::pair<Index, int>> canonical(const Index& idx) const;

    std::string to_string(const std::vector<std::string>& labels) const;

private:
    void check_index(const Index& idx) const;
    int dim_ = 0;
    int arity_ = 0;
    std::vector<SlotGroup> groups_;
    std::map<Index, Scalar> data_;
};

// Signed permutation helpers shared by several modules.
int permutation_sign(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int n);
// All strictly (or weakly) increasing k-tuples over range(n).
std::vector<Index> increasing_tuples(int n, int k, bool strict);

}  // namespace qlbkit
