#include "qlbkit/lie_algebra.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlbkit {

SparseVector sparse_add(const SparseVector& a, const SparseVector& b) {
    SparseVector r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            Scalar s = a[i].second + b[j].second;
            if (!s.is_zero()) r.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVector sparse_scale(const SparseVector& a, const Scalar& s) {
    SparseVector r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : a) r.emplace_back(k, v * s);
    return r;
}

namespace {

SparseVector normalized(std::map<int, Scalar> m) {
    SparseVector r;
    for (auto& [k, v] : m)
        if (!v.is_zero()) r.emplace_back(k, v);
    return r;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis, FieldDescriptor field,
                       const std::vector<BracketEntry>& brackets)
    : name_(std::move(name)), basis_(std::move(basis)), field_(std::move(field)) {
    const int n = dim();
    std::set<std::string> seen;
    for (const auto& b : basis_)
        if (!seen.insert(b).second) throw InputError("duplicate basis label '" + b + "'");
    table_.assign(static_cast<size_t>(n) * n, {});
    std::vector<bool> given(static_cast<size_t>(n) * n, false);
    for (const auto& e : brackets) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) throw InputError("bracket index out of range");
        std::map<int, Scalar> acc;
        for (const auto& [k, v] : e.value) {
            if (k < 0 || k >= n) throw InputError("bracket value index out of range");
            acc[k] += v;
        }
        SparseVector val = normalized(acc);
        if (e.i == e.j) {
            if (!val.empty()) throw InputError("nonzero bracket [" + basis_[e.i] + "," + basis_[e.i] + "]");
            continue;
        }
        size_t ij = static_cast<size_t>(e.i) * n + e.j, ji = static_cast<size_t>(e.j) * n + e.i;
        SparseVector neg = sparse_scale(val, Scalar(-1));
        if (given[ij] && table_[ij] != val)
            throw InputError("inconsistent brackets for the pair (" + basis_[e.i] + "," + basis_[e.j] + ")");
        given[ij] = given[ji] = true;
        table_[ij] = val;
        table_[ji] = neg;
    }
    by_target_.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const auto& [k, v] : bracket(i, j)) {
                constants_.push_back({i, j, k, v});
                by_target_[k].push_back({i, j, k, v});
            }
}

int LieAlgebra::index_of(const std::string& label) const {
    auto it = std::find(basis_.begin(), basis_.end(), label);
    if (it == basis_.end()) throw InputError("unknown basis label '" + label + "' in " + name_);
    return static_cast<int>(it - basis_.begin());
}

Scalar LieAlgebra::structure_constant(int k, int i, int j) const {
    for (const auto& [idx, v] : bracket(i, j))
        if (idx == k) return v;
    return {};
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
    std::map<int, Scalar> acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            if (i == j) continue;
            Scalar ab = a * b;
            for (const auto& [k, f] : bracket(i, j)) acc[k] += ab * f;
        }
    return normalized(acc);
}

bool LieAlgebra::is_rational() const {
    for (const auto& c : constants_)
        if (!c.value.is_rational()) return false;
    return true;
}

LieAlgebra LieAlgebra::with_chevalley(ChevalleyData data) const {
    LieAlgebra g = *this;
    g.chevalley_ = std::make_shared<const ChevalleyData>(std::move(data));
    return g;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra g = *this;
    g.name_ = std::move(name);
    return g;
}

RationalMatrix LieAlgebra::killing_form() const {
    const int n = dim();
    // ad matrices: ad[i][l][k] = f^l_{ik}
    std::vector<RationalMatrix> ad(n, RationalMatrix(n, RationalVector(n, Rational(0))));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (const auto& [l, v] : bracket(i, k)) ad[i][l][k] = v.rational();
    RationalMatrix kf(n, RationalVector(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) s += ad[i][a][b] * ad[j][b][a];
            kf[i][j] = s;
        }
    return kf;
}

LieCheckReport check_lie(const LieAlgebra& g) {
    LieCheckReport rep;
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && !g.bracket(i, i).empty()) {
                rep.pass = false;
                rep.message = "antisymmetry violated: [x,x] != 0";
                rep.witness = {g.basis()[i], g.basis()[i]};
                return rep;
            }
            if (i != j && sparse_add(g.bracket(i, j), g.bracket(j, i)) != SparseVector{}) {
                rep.pass = false;
                rep.message = "antisymmetry violated";
                rep.witness = {g.basis()[i], g.basis()[j]};
                return rep;
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SparseVector ei{{i, Scalar(1)}}, ej{{j, Scalar(1)}}, ek{{k, Scalar(1)}};
                SparseVector jac = sparse_add(sparse_add(g.bracket(ei, g.bracket(j, k)), g.bracket(ej, g.bracket(k, i))),
                                              g.bracket(ek, g.bracket(i, j)));
                if (!jac.empty()) {
                    rep.pass = false;
                    rep.message = "Jacobi identity violated";
                    rep.witness = {g.basis()[i], g.basis()[j], g.basis()[k]};
                    rep.jacobiator = jac;
                    return rep;
                }
            }
    rep.message = "antisymmetry and Jacobi hold";
    return rep;
}

LieAlgebra abelian(int n) {
    std::vector<std::string> basis;
    for (int i = 1; i <= n; ++i) basis.push_back("x" + std::to_string(i));
    return {"abelian" + std::to_string(n), basis, {}, {}};
}

LieAlgebra heisenberg3() {
    return {"heisenberg3", {"x", "y", "z"}, {}, {{0, 1, {{2, Scalar(1)}}}}};
}

LieAlgebra sl2() { return simply_laced("sl2", {{2}}); }

LieAlgebra sl3() { return simply_laced("sl3", {{2, -1}, {-1, 2}}); }

namespace {

int parity(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

LieAlgebra simply_laced(const std::string& name, const std::vector<std::vector<int>>& cartan) {
    const int r = static_cast<int>(cartan.size());
    if (r == 0) throw InputError("empty Cartan matrix");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(cartan[i].size()) != r) throw InputError("Cartan matrix must be square");
        if (cartan[i][i] != 2) throw InputError("Cartan matrix needs 2 on the diagonal");
        for (int j = 0; j < r; ++j) {
            if (cartan[i][j] != cartan[j][i]) throw InputError("only simply-laced (symmetric) Cartan matrices");
            if (i != j && cartan[i][j] != 0 && cartan[i][j] != -1) throw InputError("off-diagonal entries must be 0 or -1");
        }
    }
    using Root = std::vector<int>;
    auto form = [&](const Root& a, const Root& b) {
        long s = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) s += static_cast<long>(a[i]) * cartan[i][j] * b[j];
        return s;
    };
    std::set<Root> found;
    std::vector<Root> frontier;
    for (int i = 0; i < r; ++i) {
        Root a(r, 0);
        a[i] = 1;
        found.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& b : frontier)
            for (int i = 0; i < r; ++i) {
                Root ai(r, 0);
                ai[i] = 1;
                if (form(b, ai) != -1) continue;
                Root c = b;
                c[i] += 1;
                if (found.insert(c).second) next.push_back(c);
                if (found.size() > 4096) throw InputError("Cartan matrix is not of finite type");
            }
        frontier = std::move(next);
    }
    std::vector<Root> pos(found.begin(), found.end());
    std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
        int ha = 0, hb = 0;
        for (int v : a) ha += v;
        for (int v : b) hb += v;
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (const auto& p : pos)
        if (form(p, p) != 2) throw InputError("Cartan matrix is not of finite type");
    const int N = static_cast<int>(pos.size());
    const int n = 2 * N + r;
    std::vector<std::string> basis;
    ChevalleyData data;
    data.cartan = cartan;
    data.positive_roots = pos;
    for (int a = 0; a < N; ++a) {
        basis.push_back(r == 1 ? "e" : "e" + std::to_string(a + 1));
        data.e_index.push_back(a);
    }
    for (int a = 0; a < N; ++a) {
        basis.push_back(r == 1 ? "f" : "f" + std::to_string(a + 1));
        data.f_index.push_back(N + a);
    }
    for (int i = 0; i < r; ++i) {
        basis.push_back(r == 1 ? "h" : "h" + std::to_string(i + 1));
        data.h_index.push_back(2 * N + i);
    }
    // Root vectors E_g with [E_a, E_b] = eps(a,b) E_{a+b}, [E_a, E_-a] = -a, and
    // e_a = E_a, f_a = -E_-a so that [e_a, f_a] = h_a.
    auto eps = [&](const Root& a, const Root& b) {
        long s = 0;
        for (int i = 0; i < r; ++i) {
            s += static_cast<long>(a[i]) * b[i];
            for (int j = i + 1; j < r; ++j)
                if (cartan[i][j] == -1) s += static_cast<long>(a[i]) * b[j];
        }
        return parity(s) ? -1 : 1;
    };
    std::map<Root, std::pair<int, int>> root_vector;  // signed root -> (basis index, sign)
    for (int a = 0; a < N; ++a) {
        root_vector[pos[a]] = {a, 1};
        Root neg = pos[a];
        for (auto& v : neg) v = -v;
        root_vector[neg] = {N + a, -1};
    }
    // describe each basis element as (is_root, root or coroot index, sign)
    struct Elem {
        bool is_root;
        Root root;
        int h;
        int sign;
    };
    std::vector<Elem> elems(n);
    for (const auto& [root, iv] : root_vector) elems[iv.first] = {true, root, -1, iv.second};
    for (int i = 0; i < r; ++i) elems[2 * N + i] = {false, {}, i, 1};
    std::vector<BracketEntry> brackets;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const Elem& A = elems[x];
            const Elem& B = elems[y];
            SparseVector val;
            if (!A.is_root && !B.is_root) continue;
            if (A.is_root && B.is_root) {
                Root s(r);
                bool zero = true;
                for (int i = 0; i < r; ++i) {
                    s[i] = A.root[i] + B.root[i];
                    if (s[i] != 0) zero = false;
                }
                int sg = A.sign * B.sign;
                if (zero) {
                    for (int i = 0; i < r; ++i)
                        if (A.root[i] != 0) val.emplace_back(2 * N + i, Scalar(-sg * A.root[i]));
                } else if (auto it = root_vector.find(s); it != root_vector.end()) {
                    // sg*E_a*E_b = sg*eps E_s and E_s = sign_s * basis
                    val.emplace_back(it->second.first, Scalar(sg * eps(A.root, B.root) * it->second.second));
                }
            } else {
                // [h_i, E_g] = (alpha_i|g) E_g, possibly with the roles swapped
                const Elem& R = A.is_root ? A : B;
                const Elem& H = A.is_root ? B : A;
                Root ai(r, 0);
                ai[H.h] = 1;
                long w = form(ai, R.root);
                int idx = A.is_root ? x : y;
                if (w != 0) val.emplace_back(idx, Scalar(A.is_root ? -w : w));
            }
            std::sort(val.begin(), val.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
            if (!val.empty()) brackets.push_back({x, y, val});
        }
    return LieAlgebra(name, basis, {}, brackets).with_chevalley(data);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& prefix_a,
                      const std::string& prefix_b) {
    std::vector<std::string> basis;
    for (const auto& l : a.basis()) basis.push_back(prefix_a + l);
    for (const auto& l : b.basis()) basis.push_back(prefix_b + l);
    std::vector<BracketEntry> br;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (!a.bracket(i, j).empty()) br.push_back({i, j, a.bracket(i, j)});
    const int off = a.dim();
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i + 1; j < b.dim(); ++j) {
            SparseVector v;
            for (const auto& [k, c] : b.bracket(i, j)) v.emplace_back(k + off, c);
            if (!v.empty()) br.push_back({i + off, j + off, v});
        }
    FieldDescriptor field = a.field();
    for (const auto& v : b.field().variables)
        if (std::find(field.variables.begin(), field.variables.end(), v) == field.variables.end())
            field.variables.push_back(v);
    return {a.name() + "+" + b.name(), basis, field, br};
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& change, std::vector<std::string> labels,
                        std::string name) {
    const int n = g.dim();
    if (static_cast<int>(change.size()) != n || static_cast<int>(labels.size()) != n)
        throw InputError("change of basis has the wrong size");
    RationalMatrix inv = inverse(change);
    std::vector<SparseVector> rows(n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            if (change[a][i] != 0) rows[a].emplace_back(i, Scalar(change[a][i]));
    std::vector<BracketEntry> br;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            SparseVector old = g.bracket(rows[a], rows[b]);
            SparseVector nv;
            for (int c = 0; c < n; ++c) {
                Rational s = 0;
                for (const auto& [i, v] : old) s += v.rational() * inv[i][c];
                if (s != 0) nv.emplace_back(c, Scalar(s));
            }
            if (!nv.empty()) br.push_back({a, b, nv});
        }
    return {std::move(name), std::move(labels), g.field(), br};
}

RationalMatrix trace_form(const LieAlgebra& g) {
    const ChevalleyData* cd = g.chevalley();
    if (!cd) throw PreconditionError(g.name() + " carries no Chevalley data");
    const int n = g.dim();
    RationalMatrix m(n, RationalVector(n, Rational(0)));
    const int r = static_cast<int>(cd->h_index.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[cd->h_index[i]][cd->h_index[j]] = cd->cartan[i][j];
    for (size_t a = 0; a < cd->e_index.size(); ++a) {
        m[cd->e_index[a]][cd->f_index[a]] = 1;
        m[cd->f_index[a]][cd->e_index[a]] = 1;
    }
    return m;
}

SparseTensor casimir_from_form(const RationalMatrix& form) {
    const int n = static_cast<int>(form.size());
    RationalMatrix inv = inverse(form);
    SparseTensor c = SparseTensor::symmetric(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (inv[i][j] != 0) c.add({i, j}, Scalar(inv[i][j]));
    return c;
}

}  // namespace qlbkit
