#pragma once

#include "qlbkit/lie_algebra.hpp"
#include "qlbkit/sparse_tensor.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qlbkit {

// theta^A e_B with the odd generators theta^i (dual basis) written first.
// A is strictly increasing; B is strictly increasing for odd shift and weakly
// increasing for even shift.
struct BBMonomial {
    Index theta;
    Index e;
    auto operator<=>(const BBMonomial&) const = default;
    int degree() const { return static_cast<int>(theta.size()); }
    int weight() const { return static_cast<int>(e.size()); }
};

// Element of C(g, Sym(g[-n])) viewed as a graded polynomial algebra with the
// Poisson bracket that pairs theta^i with e_i.
class BigBracketElement {
public:
    BigBracketElement() = default;
    BigBracketElement(int dim, int shift);

    static BigBracketElement theta(int dim, int shift, int i);
    static BigBracketElement e(int dim, int shift, int i);
    static BigBracketElement constant(int dim, int shift, const Scalar& s);
    // Component (A, B) of the tensor becomes the coefficient of theta^A e_B.
    // Lower slots must form one antisymmetric group, upper slots one group
    // (antisymmetric for odd shift, symmetric for even shift).
    static BigBracketElement from_tensor(const SparseTensor& t, int shift);
    // The Lie structure mu = sum_{i<j} f^k_ij theta^i theta^j e_k; {mu, -} is the CE differential.
    static BigBracketElement structure(const LieAlgebra& g, int shift);

    int dim() const { return dim_; }
    int shift() const { return shift_; }
    const std::map<BBMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds coef * theta^A e_B given in any order (reordered with the Koszul sign).
    void add(const Index& theta, const Index& e, const Scalar& coef);

    BigBracketElement operator+(const BigBracketElement& o) const;
    BigBracketElement operator-(const BigBracketElement& o) const;
    BigBracketElement operator-() const;
    BigBracketElement scaled(const Scalar& s) const;
    BigBracketElement operator*(const BigBracketElement& o) const;
    bool operator==(const BigBracketElement& o) const;

    // Homogeneous component of CE degree k and weight w.
    BigBracketElement part(int k, int w) const;
    SparseTensor to_tensor(int k, int w) const;

    std::string to_string(const std::vector<std::string>& labels) const;

private:
    void check_compatible(const BigBracketElement& o) const;
    int dim_ = 0;
    int shift_ = 1;
    std::map<BBMonomial, Scalar> terms_;
};

// Slot groups of the tensor attached to bidegree (k, w).
std::vector<SlotGroup> big_bracket_groups(int k, int w, int shift);

// {F, G} = sum_i F d/dtheta^i (right) d/de_i G (left) + eps F d/de_i (right) d/dtheta^i G (left),
// eps = -(-1)^n.  Bidegrees add as (k1 + k2 - 1, w1 + w2 - 1).
BigBracketElement big_bracket(const BigBracketElement& a, const BigBracketElement& b);

}  // namespace qlbkit
