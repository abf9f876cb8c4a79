#include "qlbkit/dgla.hpp"

#include "qlbkit/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace qlbkit {

namespace {

void add_into(RationalVector& v, const RationalVector& o, const Rational& s = 1) {
    if (v.empty()) v.assign(o.size(), Rational(0));
    for (size_t i = 0; i < o.size(); ++i) v[i] += s * o[i];
}

bool all_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::string key_string(const SliceKey& k) {
    return "(degree " + std::to_string(k.degree) + ", weight " + std::to_string(k.weight) + ")";
}

int koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

}  // namespace

bool DGLAElement::is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return all_zero(p.second); });
}

DGLAElement DGLAElement::operator+(const DGLAElement& o) const {
    DGLAElement r = *this;
    for (const auto& [k, v] : o.parts) add_into(r.parts[k], v);
    return r;
}

DGLAElement DGLAElement::operator-(const DGLAElement& o) const { return *this + o.scaled(-1); }

DGLAElement DGLAElement::scaled(const Rational& s) const {
    DGLAElement r = *this;
    for (auto& [k, v] : r.parts)
        for (auto& q : v) q *= s;
    return r;
}

bool DGLAElement::operator==(const DGLAElement& o) const { return (*this - o).is_zero(); }

size_t WeightGradedDGLA::dim(const SliceKey& k) const {
    auto it = slices.find(k);
    return it == slices.end() ? 0 : it->second.basis.size();
}

size_t WeightGradedDGLA::total_dim() const {
    size_t n = 0;
    for (const auto& [k, s] : slices) n += s.basis.size();
    return n;
}

void WeightGradedDGLA::check_element(const DGLAElement& x) const {
    for (const auto& [k, v] : x.parts) {
        if (!has_slice(k)) {
            if (all_zero(v)) continue;
            throw InputError("element has a component in " + key_string(k) + ", outside the window");
        }
        if (v.size() != dim(k)) throw InputError("element component in " + key_string(k) + " has the wrong size");
    }
}

DGLAElement WeightGradedDGLA::d(const DGLAElement& x) const {
    check_element(x);
    DGLAElement r;
    for (const auto& [k, v] : x.parts) {
        auto it = differential.find(k);
        if (it == differential.end()) continue;
        SliceKey t{k.degree + 1, k.weight};
        auto& out = r.parts[t];
        out.assign(dim(t), Rational(0));
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                for (const auto& [row, c] : it->second[j]) out[row] += c * v[j];
    }
    return r;
}

DGLAElement WeightGradedDGLA::bracket(const DGLAElement& x, const DGLAElement& y) const {
    check_element(x);
    check_element(y);
    DGLAElement r;
    for (const auto& [k1, v1] : x.parts)
        for (const auto& [k2, v2] : y.parts) {
            auto it = brackets.find({k1, k2});
            if (it == brackets.end()) continue;
            auto& out = r.parts[it->second.target];
            if (out.empty()) out.assign(dim(it->second.target), Rational(0));
            for (const auto& [ij, vals] : it->second.table) {
                const Rational& a = v1[ij.first];
                if (a == 0) continue;
                const Rational& b = v2[ij.second];
                if (b == 0) continue;
                Rational ab = a * b;
                for (const auto& [k, c] : vals) out[k] += c * ab;
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// structure checks

namespace {

DGLAElement basis_vector(const WeightGradedDGLA& L, const SliceKey& k, size_t i) {
    DGLAElement e;
    e.parts[k].assign(L.dim(k), Rational(0));
    e.parts[k][i] = 1;
    return e;
}

bool in_window(const WeightGradedDGLA& L, const SliceKey& a, const SliceKey& b) {
    return L.has_slice({a.degree + b.degree - L.shift, a.weight + b.weight - 1});
}

}  // namespace

StructureCheck check_d_squared(const WeightGradedDGLA& L) {
    StructureCheck c;
    for (const auto& [k, s] : L.slices)
        for (size_t i = 0; i < s.basis.size(); ++i) {
            ++c.checked;
            if (!L.d(L.d(basis_vector(L, k, i))).is_zero()) {
                c.pass = false;
                c.witness = "d^2 " + s.basis[i] + " != 0";
                return c;
            }
        }
    return c;
}

StructureCheck check_antisymmetry(const WeightGradedDGLA& L) {
    StructureCheck c;
    for (const auto& [k1, s1] : L.slices)
        for (const auto& [k2, s2] : L.slices) {
            if (!in_window(L, k1, k2)) continue;
            int sign = -koszul(L.shifted_degree(k1), L.shifted_degree(k2));
            for (size_t i = 0; i < s1.basis.size(); ++i)
                for (size_t j = 0; j < s2.basis.size(); ++j) {
                    ++c.checked;
                    auto x = basis_vector(L, k1, i), y = basis_vector(L, k2, j);
                    if (!(L.bracket(x, y) == L.bracket(y, x).scaled(sign))) {
                        c.pass = false;
                        c.witness = "[" + s1.basis[i] + ", " + s2.basis[j] + "]";
                        return c;
                    }
                }
        }
    return c;
}

StructureCheck check_jacobi(const WeightGradedDGLA& L) {
    StructureCheck c;
    auto target = [&](const SliceKey& a, const SliceKey& b) {
        return SliceKey{a.degree + b.degree - L.shift, a.weight + b.weight - 1};
    };
    for (const auto& [k1, s1] : L.slices)
        for (const auto& [k2, s2] : L.slices)
            for (const auto& [k3, s3] : L.slices) {
                // every intermediate term must be inside the window
                if (!in_window(L, k2, k3) || !in_window(L, k1, k2) || !in_window(L, k1, k3)) continue;
                if (!in_window(L, k1, target(k2, k3)) || !in_window(L, target(k1, k2), k3) ||
                    !in_window(L, k2, target(k1, k3)))
                    continue;
                int sign = koszul(L.shifted_degree(k1), L.shifted_degree(k2));
                for (size_t i = 0; i < s1.basis.size(); ++i) {
                    auto a = basis_vector(L, k1, i);
                    for (size_t j = 0; j < s2.basis.size(); ++j) {
                        auto b = basis_vector(L, k2, j);
                        auto ab = L.bracket(a, b);
                        for (size_t l = 0; l < s3.basis.size(); ++l) {
                            ++c.checked;
                            auto e = basis_vector(L, k3, l);
                            auto lhs = L.bracket(a, L.bracket(b, e));
                            auto rhs = L.bracket(ab, e) + L.bracket(b, L.bracket(a, e)).scaled(sign);
                            if (!(lhs == rhs)) {
                                c.pass = false;
                                c.witness = s1.basis[i] + ", " + s2.basis[j] + ", " + s3.basis[l];
                                return c;
                            }
                        }
                    }
                }
            }
    return c;
}

StructureCheck check_leibniz(const WeightGradedDGLA& L) {
    StructureCheck c;
    for (const auto& [k1, s1] : L.slices)
        for (const auto& [k2, s2] : L.slices) {
            SliceKey t{k1.degree + k2.degree - L.shift, k1.weight + k2.weight - 1};
            if (!L.has_slice(t) || !L.has_slice({t.degree + 1, t.weight})) continue;
            // skip pairs whose d-images were cut off by the CE degree window
            auto d_exact = [&](const SliceKey& k, const Slice& s) {
                return L.has_slice({k.degree + 1, k.weight}) || (L.poly_shift && s.ce_degree == L.generator_dim);
            };
            if (!d_exact(k1, s1) || !d_exact(k2, s2)) continue;
            int sign = koszul(L.shifted_degree(k1), 1);
            for (size_t i = 0; i < s1.basis.size(); ++i)
                for (size_t j = 0; j < s2.basis.size(); ++j) {
                    ++c.checked;
                    auto x = basis_vector(L, k1, i), y = basis_vector(L, k2, j);
                    auto lhs = L.d(L.bracket(x, y));
                    auto rhs = L.bracket(L.d(x), y) + L.bracket(x, L.d(y)).scaled(sign);
                    if (!(lhs == rhs)) {
                        c.pass = false;
                        c.witness = "d[" + s1.basis[i] + ", " + s2.basis[j] + "]";
                        return c;
                    }
                }
        }
    return c;
}

StructureCheck check_weight_additivity(const WeightGradedDGLA& L) {
    StructureCheck c;
    for (const auto& [pair, block] : L.brackets) {
        ++c.checked;
        const auto& [a, b] = pair;
        if (block.target.weight != a.weight + b.weight - 1 || block.target.degree != a.degree + b.degree - L.shift) {
            c.pass = false;
            c.witness = "bracket " + key_string(a) + " x " + key_string(b) + " lands in " + key_string(block.target);
            return c;
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Pol(Bg, n)

SliceKey pol_slice(const WeightGradedDGLA& L, int ce_degree, int weight) {
    return {ce_degree + L.poly_shift * weight, weight};
}

namespace {

std::string monomial_label(const BBMonomial& m, const std::vector<std::string>& labels) {
    std::string s;
    for (int i : m.theta) s += (s.empty() ? "" : " ") + labels[i] + "*";
    s += s.empty() ? "|" : " |";
    for (int i : m.e) s += " " + labels[i];
    return s;
}

}  // namespace

WeightGradedDGLA pol_bg(const LieAlgebra& g, int n, const WindowSpec& window) {
    if (n != 1 && n != 2) throw InputError("pol_bg supports n = 1 or 2");
    if (!g.is_rational()) throw InputError("pol_bg needs structure constants over the rationals");
    if (window.min_weight < 0 || window.max_weight < window.min_weight || window.max_ce_degree < 0)
        throw InputError("invalid window");
    WeightGradedDGLA L;
    L.name = "Pol(B" + g.name() + ", " + std::to_string(n) + ")";
    L.shift = n + 1;
    L.max_weight = window.max_weight;
    L.generator_dim = g.dim();
    L.poly_shift = n;
    const int dim = g.dim();
    const int kmax = std::min(window.max_ce_degree, dim);

    std::map<SliceKey, std::map<BBMonomial, int>> index;
    for (int w = window.min_weight; w <= window.max_weight; ++w)
        for (int k = 0; k <= kmax; ++k) {
            auto As = increasing_tuples(dim, k, true);
            auto Bs = increasing_tuples(dim, w, n % 2 == 1);
            if (As.empty() || Bs.empty()) continue;
            if (L.total_dim() + As.size() * Bs.size() > window.max_basis)
                throw SizeError("Pol window exceeds " + std::to_string(window.max_basis) +
                                " basis vectors; lower max_weight or max_ce_degree");
            SliceKey key = pol_slice(L, k, w);
            Slice s;
            s.ce_degree = k;
            auto& mons = L.monomials[key];
            for (const auto& A : As)
                for (const auto& B : Bs) {
                    BBMonomial m{A, B};
                    index[key][m] = static_cast<int>(mons.size());
                    mons.push_back(m);
                    s.basis.push_back(monomial_label(m, g.basis()));
                }
            L.slices[key] = std::move(s);
        }

    size_t pairs = 0;
    for (const auto& [k1, s1] : L.slices)
        for (const auto& [k2, s2] : L.slices)
            if (L.has_slice({k1.degree + k2.degree - L.shift, k1.weight + k2.weight - 1}))
                pairs += s1.basis.size() * s2.basis.size();
    if (pairs > window.max_bracket_pairs)
        throw SizeError("Pol window needs " + std::to_string(pairs) + " bracket evaluations (limit " +
                        std::to_string(window.max_bracket_pairs) + ")");

    auto single = [&](const BBMonomial& m) {
        BigBracketElement x(dim, n);
        x.add(m.theta, m.e, Scalar(1));
        return x;
    };
    auto scatter = [&](const BigBracketElement& r, const SliceKey& target) {
        std::vector<std::pair<int, Rational>> out;
        const auto& idx = index.at(target);
        for (const auto& [m, v] : r.terms()) out.emplace_back(idx.at(m), v.rational());
        return out;
    };

    auto mu = BigBracketElement::structure(g, n);
    for (const auto& [key, mons] : L.monomials) {
        SliceKey t{key.degree + 1, key.weight};
        if (!L.has_slice(t)) continue;
        SparseColumns cols;
        for (const auto& m : mons) cols.push_back(scatter(big_bracket(mu, single(m)), t));
        L.differential[key] = std::move(cols);
    }
    for (const auto& [k1, m1] : L.monomials)
        for (const auto& [k2, m2] : L.monomials) {
            SliceKey t{k1.degree + k2.degree - L.shift, k1.weight + k2.weight - 1};
            if (!L.has_slice(t)) continue;
            BracketBlock block{t, {}};
            for (size_t i = 0; i < m1.size(); ++i) {
                auto x = single(m1[i]);
                for (size_t j = 0; j < m2.size(); ++j) {
                    auto r = big_bracket(x, single(m2[j]));
                    if (!r.is_zero()) block.table[{static_cast<int>(i), static_cast<int>(j)}] = scatter(r, t);
                }
            }
            L.brackets[{k1, k2}] = std::move(block);
        }
    return L;
}

DGLAElement element_from_tensor(const WeightGradedDGLA& L, const SparseTensor& t) {
    if (L.poly_shift == 0) throw InputError("tensor identification needs a Pol(Bg, n) algebra");
    if (t.dim() != L.generator_dim) throw InputError("tensor dimension does not match the algebra");
    int k = 0, w = 0;
    for (const auto& grp : t.groups()) (grp.variance == Variance::Lower ? k : w) += grp.size;
    auto x = BigBracketElement::from_tensor(t, L.poly_shift);
    SliceKey key = pol_slice(L, k, w);
    DGLAElement e;
    if (x.is_zero()) return e;
    if (!L.has_slice(key))
        throw InputError("tensor of CE degree " + std::to_string(k) + " and weight " + std::to_string(w) +
                         " lies outside the window");
    auto& v = e.parts[key];
    v.assign(L.dim(key), Rational(0));
    const auto& mons = L.monomials.at(key);
    for (const auto& [m, c] : x.terms()) {
        auto it = std::lower_bound(mons.begin(), mons.end(), m);
        v[it - mons.begin()] = c.rational();
    }
    return e;
}

SparseTensor tensor_from_element(const WeightGradedDGLA& L, const DGLAElement& x, int ce_degree, int weight) {
    if (L.poly_shift == 0) throw InputError("tensor identification needs a Pol(Bg, n) algebra");
    BigBracketElement b(L.generator_dim, L.poly_shift);
    SliceKey key = pol_slice(L, ce_degree, weight);
    auto it = x.parts.find(key);
    if (it != x.parts.end() && L.has_slice(key)) {
        const auto& mons = L.monomials.at(key);
        for (size_t i = 0; i < it->second.size(); ++i)
            if (it->second[i] != 0) b.add(mons[i].theta, mons[i].e, Scalar(it->second[i]));
    }
    return b.to_tensor(ce_degree, weight);
}

// ---------------------------------------------------------------------------
// Maurer-Cartan and gauge

DGLAElement mc_residual(const WeightGradedDGLA& L, const DGLAElement& x) {
    L.check_element(x);
    for (const auto& [k, v] : x.parts) {
        if (all_zero(v)) continue;
        if (L.shifted_degree(k) != 1)
            throw InputError("MC elements live in shifted degree 1; got a component in " + key_string(k));
        if (k.weight < 2) throw InputError("MC elements must have weight >= 2");
    }
    return L.d(x) + L.bracket(x, x).scaled(Rational(1, 2));
}

DGLAElement GaugePath::at(const Rational& t) const {
    DGLAElement r;
    Rational p = 1;
    for (const auto& c : coefficients) {
        r = r + c.scaled(p);
        p *= t;
    }
    return r;
}

GaugeReport gauge_verify(const WeightGradedDGLA& L, const DGLAElement& x, const DGLAElement& y,
                         const GaugePath& path) {
    GaugeReport rep;
    if (path.coefficients.empty()) {
        rep.failures.push_back("empty path");
        return rep;
    }
    if (static_cast<int>(path.coefficients.size()) - 1 > L.max_weight)
        throw InputError("gauge path degree exceeds the weight cutoff");
    for (const auto& [k, v] : path.lambda.parts)
        if (!all_zero(v) && L.shifted_degree(k) != 0) throw InputError("gauge parameter must have shifted degree 0");
    rep.starts = path.coefficients.front() == x;
    if (!rep.starts) rep.failures.push_back("alpha(0) != x");
    rep.ends = path.at(1) == y;
    if (!rep.ends) rep.failures.push_back("alpha(1) != y");

    // d alpha/dt + d lambda + [alpha, lambda] = 0, order by order in t
    const auto& a = path.coefficients;
    const size_t m = a.size();
    DGLAElement dl = L.d(path.lambda);
    rep.ode = true;
    for (size_t p = 0; p < m; ++p) {
        DGLAElement term = L.bracket(a[p], path.lambda);
        if (p + 1 < m) term = term + a[p + 1].scaled(Rational(static_cast<long>(p + 1)));
        if (p == 0) term = term + dl;
        if (!term.is_zero()) {
            rep.ode = false;
            rep.failures.push_back("gauge equation fails at order t^" + std::to_string(p));
        }
    }
    // MC along the path: d alpha_p + 1/2 sum_{i+j=p} [alpha_i, alpha_j]
    rep.mc_along_path = true;
    for (size_t p = 0; p + 1 < 2 * m; ++p) {
        DGLAElement term;
        if (p < m) term = L.d(a[p]);
        for (size_t i = 0; i <= p && i < m; ++i)
            if (p - i < m) term = term + L.bracket(a[i], a[p - i]).scaled(Rational(1, 2));
        if (!term.is_zero()) {
            rep.mc_along_path = false;
            rep.failures.push_back("Maurer-Cartan residual nonzero at order t^" + std::to_string(p));
        }
    }
    return rep;
}

GaugePath twist_path(const WeightGradedDGLA& L, const DGLAElement& x0, const DGLAElement& l) {
    GaugePath path;
    path.lambda = l.scaled(-1);
    DGLAElement dl = L.d(l);
    path.coefficients.push_back(x0);
    path.coefficients.push_back(dl + L.bracket(x0, l));
    path.coefficients.push_back(L.bracket(dl, l).scaled(Rational(1, 2)));
    return path;
}

// ---------------------------------------------------------------------------
// serialisation

namespace {

using nlohmann::json;

json key_json(const SliceKey& k) { return json::array({k.degree, k.weight}); }
SliceKey key_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }
std::string q_str(const Rational& q) { return q.get_str(); }
Rational q_from(const json& j) {
    Rational q(j.get<std::string>());
    q.canonicalize();
    return q;
}

}  // namespace

std::string dgla_to_json(const WeightGradedDGLA& L) {
    json j;
    j["name"] = L.name;
    j["shift"] = L.shift;
    j["max_weight"] = L.max_weight;
    j["generator_dim"] = L.generator_dim;
    j["poly_shift"] = L.poly_shift;
    j["slices"] = json::array();
    for (const auto& [k, s] : L.slices) {
        json sj{{"key", key_json(k)}, {"ce_degree", s.ce_degree}, {"basis", s.basis}};
        if (L.monomials.count(k)) {
            json ms = json::array();
            for (const auto& m : L.monomials.at(k)) ms.push_back(json::array({m.theta, m.e}));
            sj["monomials"] = ms;
        }
        j["slices"].push_back(sj);
    }
    j["differential"] = json::array();
    for (const auto& [k, cols] : L.differential) {
        json cj = json::array();
        for (const auto& col : cols) {
            json c = json::array();
            for (const auto& [row, v] : col) c.push_back(json::array({row, q_str(v)}));
            cj.push_back(c);
        }
        j["differential"].push_back({{"source", key_json(k)}, {"columns", cj}});
    }
    j["brackets"] = json::array();
    for (const auto& [pair, block] : L.brackets) {
        json entries = json::array();
        for (const auto& [ij, vals] : block.table)
            for (const auto& [k, v] : vals) entries.push_back(json::array({ij.first, ij.second, k, q_str(v)}));
        j["brackets"].push_back({{"left", key_json(pair.first)},
                                 {"right", key_json(pair.second)},
                                 {"target", key_json(block.target)},
                                 {"entries", entries}});
    }
    return j.dump(1);
}

WeightGradedDGLA dgla_from_json(const std::string& text) {
    WeightGradedDGLA L;
    try {
        json j = json::parse(text);
        L.name = j.at("name").get<std::string>();
        L.shift = j.at("shift").get<int>();
        L.max_weight = j.at("max_weight").get<int>();
        L.generator_dim = j.value("generator_dim", 0);
        L.poly_shift = j.value("poly_shift", 0);
        for (const auto& sj : j.at("slices")) {
            SliceKey k = key_from(sj.at("key"));
            Slice s;
            s.ce_degree = sj.value("ce_degree", 0);
            s.basis = sj.at("basis").get<std::vector<std::string>>();
            if (sj.contains("monomials")) {
                auto& mons = L.monomials[k];
                for (const auto& m : sj.at("monomials"))
                    mons.push_back({m.at(0).get<Index>(), m.at(1).get<Index>()});
            }
            L.slices[k] = std::move(s);
        }
        for (const auto& dj : j.at("differential")) {
            SparseColumns cols;
            for (const auto& c : dj.at("columns")) {
                std::vector<std::pair<int, Rational>> col;
                for (const auto& e : c) col.emplace_back(e.at(0).get<int>(), q_from(e.at(1)));
                cols.push_back(std::move(col));
            }
            L.differential[key_from(dj.at("source"))] = std::move(cols);
        }
        for (const auto& bj : j.at("brackets")) {
            BracketBlock block{key_from(bj.at("target")), {}};
            for (const auto& e : bj.at("entries"))
                block.table[{e.at(0).get<int>(), e.at(1).get<int>()}].emplace_back(e.at(2).get<int>(), q_from(e.at(3)));
            L.brackets[{key_from(bj.at("left")), key_from(bj.at("right"))}] = std::move(block);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed dg Lie algebra file: ") + e.what());
    }
    return L;
}

}  // namespace qlbkit
