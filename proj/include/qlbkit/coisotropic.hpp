#pragma once

#include "qlbkit/qlb.hpp"
#include "qlbkit/split.hpp"

#include <string>
#include <vector>

namespace qlbkit {

// Blocks of a symmetric c in the split g = h + m:  P (h,h), Q (h,m), R (m,m).
struct CasimirBlocks {
    std::vector<std::vector<Scalar>> P, Q, R;
    static CasimirBlocks of(const SplitSubalgebra& s, const SparseTensor& c);
};

// Passes iff c has no component in Sym^2(m), i.e. its image in Sym^2(g/h) vanishes.
bool coisotropic_casimir_check(const SplitSubalgebra& s, const SparseTensor& c, std::string* reason = nullptr);

// Induced (delta, phi) on h.  Requires c symmetric, invariant and coisotropic.
QuasiLieBialgebra induce_from_coisotropic(const SplitSubalgebra& s, const SparseTensor& c);
// The index formulas without precondition checks.
QuasiLieBialgebra induce_unchecked(const SplitSubalgebra& s, const SparseTensor& c);

struct InvarianceIdentity {
    std::string name;
    bool vanishes = true;
    bool matches_differential = true;  // equals the predicted signed component of d_CE c
    // nonzero values keyed by ambient basis labels of the free indices
    std::vector<std::pair<std::vector<std::string>, Scalar>> nonzero;
};

struct MorphismReport {
    bool coisotropic = false;
    std::vector<InvarianceIdentity> identities;  // five entries
    bool identities_pass = false;                // check (1)
    bool identities_cover_differential = false;  // every component of d_CE c is one of the identities (up to sign) or forced zero
    bool equivalence = false;                    // check (2): (all five vanish) == (d_CE c == 0)
    bool invariant = false;
    bool intertwines = false;                    // check (3)
    std::vector<std::string> intertwine_failures;
    bool pass() const { return coisotropic && identities_pass && equivalence && intertwines; }
};

MorphismReport verify_coisotropic_morphism(const SplitSubalgebra& s, const SparseTensor& c);

}  // namespace qlbkit
