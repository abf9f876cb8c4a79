#pragma once

#include "qlbkit/lie_algebra.hpp"

#include <string>
#include <vector>

namespace qlbkit {

// A subalgebra h of g together with a chosen complement m (standing in for g/h).
// Writing e_i for the h basis and e~_a for the m basis:
//   [e_i, e_j]   = f^k_ij e_k
//   [e_i, e~_a]  = A^k_ia e_k + B^b_ia e~_b
//   [e~_a, e~_b] = C^k_ab e_k + D^c_ab e~_c
// All block indices are positions inside h or m, not ambient indices.
class SplitSubalgebra {
public:
    SplitSubalgebra(LieAlgebra g, std::vector<int> h, std::vector<int> m);
    static SplitSubalgebra from_labels(const LieAlgebra& g, const std::vector<std::string>& h_labels);

    const LieAlgebra& ambient() const { return g_; }
    const std::vector<int>& h() const { return h_; }
    const std::vector<int>& m() const { return m_; }
    int hdim() const { return static_cast<int>(h_.size()); }
    int mdim() const { return static_cast<int>(m_.size()); }

    const Scalar& f(int k, int i, int j) const { return f_[(k * hdim() + i) * hdim() + j]; }
    const Scalar& A(int k, int i, int a) const { return A_[(k * hdim() + i) * mdim() + a]; }
    const Scalar& B(int b, int i, int a) const { return B_[(b * hdim() + i) * mdim() + a]; }
    const Scalar& C(int k, int a, int b) const { return C_[(k * mdim() + a) * mdim() + b]; }
    const Scalar& D(int c, int a, int b) const { return D_[(c * mdim() + a) * mdim() + b]; }

    // h as a Lie algebra in its own right (labels taken from g).
    LieAlgebra h_algebra() const;
    // Rebuild the ambient brackets from (f, A, B, C, D); true when they agree exactly.
    bool reassembles() const;

private:
    LieAlgebra g_;
    std::vector<int> h_, m_;
    std::vector<Scalar> f_, A_, B_, C_, D_;
};

}  // namespace qlbkit
