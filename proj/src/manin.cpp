#include "qlbkit/manin.hpp"

#include "qlbkit/errors.hpp"

#include <map>

namespace qlbkit {

namespace {

Rational to_rational(const Scalar& s) {
    if (!s.is_rational()) throw InputError("quadratic Lie algebras must have rational structure constants");
    return s.rational();
}

RationalVector bracket_vec(const LieAlgebra& g, const RationalVector& u, const RationalVector& v) {
    const int n = g.dim();
    RationalVector out(n, 0);
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            for (const auto& [k, c] : g.bracket(i, j)) out[k] += u[i] * v[j] * to_rational(c);
        }
    }
    return out;
}

Rational pair(const RationalMatrix& m, const RationalVector& u, const RationalVector& v) {
    Rational s = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) s += u[i] * m[i][j] * v[j];
    }
    return s;
}

RationalVector unit(int n, int i) {
    RationalVector v(n, 0);
    v[i] = 1;
    return v;
}

// Coordinates of v in the span of the rows of basis (nullopt if outside).
std::optional<RationalVector> coordinates(const RationalMatrix& basis, const RationalVector& v) {
    const int n = static_cast<int>(v.size());
    const int k = static_cast<int>(basis.size());
    if (k == 0) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return RationalVector{};
    }
    return solve(transpose(basis, n), v, k);
}

SparseVector sparse(const RationalVector& v) {
    SparseVector s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace_back(static_cast<int>(i), Scalar(v[i]));
    return s;
}

std::string vec_label(const Subspace& s, int i) {
    return i < static_cast<int>(s.labels.size()) ? s.labels[i] : "u" + std::to_string(i + 1);
}

}  // namespace

QuadraticReport check_quadratic(const LieAlgebra& d, const RationalMatrix& pairing) {
    QuadraticReport r;
    const int n = d.dim();
    r.square_symmetric = static_cast<int>(pairing.size()) == n;
    for (const auto& row : pairing)
        if (static_cast<int>(row.size()) != n) r.square_symmetric = false;
    if (!r.square_symmetric) throw InputError("pairing must be a square matrix of size dim d");
    for (int i = 0; i < n && r.square_symmetric; ++i)
        for (int j = 0; j < i; ++j)
            if (pairing[i][j] != pairing[j][i]) {
                r.square_symmetric = false;
                r.witness = {d.basis()[i], d.basis()[j]};
                break;
            }
    r.nondegenerate = n == 0 || rank(pairing, n) == n;
    r.invariant = true;
    for (int x = 0; x < n && r.invariant; ++x)
        for (int y = 0; y < n && r.invariant; ++y)
            for (int z = 0; z < n; ++z) {
                Rational s = 0;
                for (const auto& [k, c] : d.bracket(x, y)) s += to_rational(c) * pairing[k][z];
                for (const auto& [k, c] : d.bracket(x, z)) s += pairing[y][k] * to_rational(c);
                if (s != 0) {
                    r.invariant = false;
                    r.witness = {d.basis()[x], d.basis()[y], d.basis()[z]};
                    r.defect = s;
                    break;
                }
            }
    r.pass = r.square_symmetric && r.nondegenerate && r.invariant;
    return r;
}

Subspace Subspace::of_indices(const LieAlgebra& d, const std::vector<int>& indices) {
    Subspace s;
    for (int i : indices) {
        if (i < 0 || i >= d.dim()) throw InputError("subspace index out of range: " + std::to_string(i));
        s.basis.push_back(unit(d.dim(), i));
        s.labels.push_back(d.basis()[i]);
    }
    return s;
}

SubspaceReport subspace_check(const QuadraticLieAlgebra& d, const Subspace& s) {
    const int n = d.d.dim(), k = s.dim();
    for (const auto& row : s.basis)
        if (static_cast<int>(row.size()) != n) throw InputError("subspace vector has the wrong length");
    SubspaceReport r;
    r.independent = rank(s.basis, n) == k;
    r.subalgebra = true;
    for (int a = 0; a < k && r.subalgebra; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!coordinates(s.basis, bracket_vec(d.d, s.basis[a], s.basis[b]))) {
                r.subalgebra = false;
                r.witness = {vec_label(s, a), vec_label(s, b)};
                break;
            }
    r.isotropic = true;
    for (int a = 0; a < k && r.isotropic; ++a)
        for (int b = a; b < k; ++b)
            if (pair(d.pairing, s.basis[a], s.basis[b]) != 0) {
                r.isotropic = false;
                if (r.witness.empty()) r.witness = {vec_label(s, a), vec_label(s, b)};
                break;
            }
    r.lagrangian = r.isotropic && 2 * k == n;
    return r;
}

ManinReport manin_pair_check(const QuadraticLieAlgebra& d, const Subspace& g) {
    ManinReport r;
    r.quadratic = check_quadratic(d.d, d.pairing);
    r.jacobi = check_lie(d.d);
    r.g = subspace_check(d, g);
    r.pass = r.quadratic.pass && r.jacobi.pass && r.g.pass();
    return r;
}

ManinReport manin_triple_check(const ManinTriple& t) {
    ManinReport r = manin_pair_check(t.d, t.g);
    r.gstar = subspace_check(t.d, t.gstar);
    RationalMatrix both = t.g.basis;
    both.insert(both.end(), t.gstar.basis.begin(), t.gstar.basis.end());
    const int n = t.d.d.dim();
    r.transversal = rank(both, n) == n && static_cast<int>(both.size()) == n;
    r.pass = r.pass && r.gstar.pass() && r.transversal;
    return r;
}

ManinTriple dual_subalgebra_bplus_bminus(const LieAlgebra& g) {
    const auto* cd = g.chevalley();
    if (!cd) throw InputError("dual_subalgebra_bplus_bminus needs an algebra with Chevalley data (sl2, sl3)");
    const int n = g.dim();
    ManinTriple t;
    t.d.d = direct_sum(g, g, "1.", "2.").renamed(g.name() + "+" + g.name());
    RationalMatrix form = trace_form(g);
    t.d.pairing.assign(2 * n, RationalVector(2 * n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.d.pairing[i][j] = form[i][j];
            t.d.pairing[n + i][n + j] = -form[i][j];
        }
    for (int i = 0; i < n; ++i) {
        RationalVector v(2 * n, 0);
        v[i] = v[n + i] = 1;
        t.g.basis.push_back(v);
        t.g.labels.push_back(g.basis()[i]);
    }
    for (int e : cd->e_index) {
        t.gstar.basis.push_back(unit(2 * n, e));
        t.gstar.labels.push_back("(" + g.basis()[e] + ",0)");
    }
    for (int f : cd->f_index) {
        t.gstar.basis.push_back(unit(2 * n, n + f));
        t.gstar.labels.push_back("(0," + g.basis()[f] + ")");
    }
    for (int h : cd->h_index) {
        RationalVector v(2 * n, 0);
        v[h] = 1;
        v[n + h] = -1;
        t.gstar.basis.push_back(v);
        t.gstar.labels.push_back("(" + g.basis()[h] + ",-" + g.basis()[h] + ")");
    }
    return t;
}

RationalMatrix dual_basis(const ManinTriple& t) {
    const int k = t.g.dim();
    if (t.gstar.dim() != k) throw PreconditionError("g and g* must have equal dimension");
    RationalMatrix M(k, RationalVector(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M[i][j] = pair(t.d.pairing, t.g.basis[i], t.gstar.basis[j]);
    RationalMatrix Minv = inverse(M);
    const int n = t.d.d.dim();
    RationalMatrix xi(k, RationalVector(n, 0));
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < k; ++j)
            if (Minv[j][c] != 0)
                for (int s = 0; s < n; ++s) xi[c][s] += Minv[j][c] * t.gstar.basis[j][s];
    return xi;
}

QuasiLieBialgebra triple_to_bialgebra(const ManinTriple& t) {
    if (!manin_triple_check(t).pass) throw PreconditionError("input is not a Manin triple");
    const int k = t.g.dim();
    std::vector<BracketEntry> br;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto c = coordinates(t.g.basis, bracket_vec(t.d.d, t.g.basis[a], t.g.basis[b]));
            auto v = sparse(*c);
            if (!v.empty()) br.push_back({a, b, v});
        }
    std::vector<std::string> labels;
    for (int a = 0; a < k; ++a) labels.push_back(vec_label(t.g, a));
    QuasiLieBialgebra q{LieAlgebra(t.d.d.name() + ":g", labels, {}, br), zero_cobracket(k), zero_multivector(k, 3)};
    RationalMatrix xi = dual_basis(t);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto gamma = coordinates(xi, bracket_vec(t.d.d, xi[a], xi[b]));
            for (int c = 0; c < k; ++c)
                if ((*gamma)[c] != 0) q.delta.add({c, a, b}, Scalar((*gamma)[c]));
        }
    return q;
}

ManinTriple drinfeld_double(const QuasiLieBialgebra& b) {
    validate_shapes(b);
    if (!b.phi.is_zero()) throw PreconditionError("the Drinfeld double needs phi = 0");
    const LieAlgebra& g = b.g;
    const int n = g.dim();
    // gamma[c][a][b] = full component of delta(e_c) at (a, b)
    std::vector<std::vector<std::vector<Rational>>> gamma(n, std::vector<std::vector<Rational>>(n, RationalVector(n, 0)));
    for (const auto& [idx, v] : b.delta.full_components()) gamma[idx[0]][idx[1]][idx[2]] = to_rational(v);

    std::map<std::pair<int, int>, std::map<int, Rational>> table;
    for (const auto& c : g.constants()) table[{c.i, c.j}][c.k] += to_rational(c.value);
    for (int a = 0; a < n; ++a)
        for (int bb = a + 1; bb < n; ++bb)
            for (int c = 0; c < n; ++c)
                if (gamma[c][a][bb] != 0) table[{n + a, n + bb}][n + c] += gamma[c][a][bb];
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            auto& out = table[{i, n + a}];
            for (int bb = 0; bb < n; ++bb) {
                if (gamma[i][a][bb] != 0) out[bb] += gamma[i][a][bb];
                Rational f = to_rational(g.structure_constant(a, i, bb));
                if (f != 0) out[n + bb] -= f;
            }
        }
    std::vector<BracketEntry> br;
    for (const auto& [ij, vals] : table) {
        SparseVector v;
        for (const auto& [k, c] : vals)
            if (c != 0) v.emplace_back(k, Scalar(c));
        if (!v.empty()) br.push_back({ij.first, ij.second, v});
    }
    std::vector<std::string> labels = g.basis();
    for (const auto& l : g.basis()) labels.push_back(l + "*");
    ManinTriple t;
    t.d.d = LieAlgebra("D(" + g.name() + ")", labels, {}, br);
    t.d.pairing.assign(2 * n, RationalVector(2 * n, 0));
    for (int i = 0; i < n; ++i) t.d.pairing[i][n + i] = t.d.pairing[n + i][i] = 1;
    std::vector<int> lo, hi;
    for (int i = 0; i < n; ++i) {
        lo.push_back(i);
        hi.push_back(n + i);
    }
    t.g = Subspace::of_indices(t.d.d, lo);
    t.gstar = Subspace::of_indices(t.d.d, hi);
    return t;
}

bool is_quadratic_isomorphism(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b,
                              const RationalMatrix& images, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    const int n = a.d.dim();
    if (b.d.dim() != n || static_cast<int>(images.size()) != n) return fail("dimension mismatch");
    if (rank(images, n) != n) return fail("map is not invertible");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pair(b.pairing, images[i], images[j]) != a.pairing[i][j])
                return fail("pairing not preserved on " + a.d.basis()[i] + ", " + a.d.basis()[j]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RationalVector lhs(n, 0);
            for (const auto& [k, c] : a.d.bracket(i, j))
                for (int s = 0; s < n; ++s) lhs[s] += to_rational(c) * images[k][s];
            if (lhs != bracket_vec(b.d, images[i], images[j]))
                return fail("bracket not preserved on " + a.d.basis()[i] + ", " + a.d.basis()[j]);
        }
    return true;
}

RationalMatrix tautological_map(const ManinTriple& t) {
    RationalMatrix m = t.g.basis;
    RationalMatrix xi = dual_basis(t);
    m.insert(m.end(), xi.begin(), xi.end());
    return m;
}

}  // namespace qlbkit
