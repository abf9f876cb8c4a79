#include "qlbkit/split.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>

namespace qlbkit {

SplitSubalgebra::SplitSubalgebra(LieAlgebra g, std::vector<int> h, std::vector<int> m)
    : g_(std::move(g)), h_(std::move(h)), m_(std::move(m)) {
    const int n = g_.dim();
    std::vector<int> role(n, -1);
    for (int i : h_) {
        if (i < 0 || i >= n) throw InputError("subalgebra index out of range");
        if (role[i] != -1) throw InputError("index listed twice in the split");
        role[i] = 0;
    }
    for (int a : m_) {
        if (a < 0 || a >= n) throw InputError("complement index out of range");
        if (role[a] != -1) throw InputError("h and m overlap at '" + g_.basis()[a] + "'");
        role[a] = 1;
    }
    if (std::count(role.begin(), role.end(), -1) > 0) throw InputError("h and m do not cover the basis");
    std::vector<int> pos(n);
    for (int i = 0; i < hdim(); ++i) pos[h_[i]] = i;
    for (int a = 0; a < mdim(); ++a) pos[m_[a]] = a;

    const int hd = hdim(), md = mdim();
    f_.assign(static_cast<size_t>(hd) * hd * hd, Scalar());
    A_.assign(static_cast<size_t>(hd) * hd * md, Scalar());
    B_.assign(static_cast<size_t>(md) * hd * md, Scalar());
    C_.assign(static_cast<size_t>(hd) * md * md, Scalar());
    D_.assign(static_cast<size_t>(md) * md * md, Scalar());
    for (int i = 0; i < hd; ++i)
        for (int j = 0; j < hd; ++j)
            for (const auto& [k, v] : g_.bracket(h_[i], h_[j])) {
                if (role[k] == 1)
                    throw InputError("h is not a subalgebra: [" + g_.basis()[h_[i]] + "," + g_.basis()[h_[j]] +
                                     "] has a component along " + g_.basis()[k]);
                f_[(pos[k] * hd + i) * hd + j] = v;
            }
    for (int i = 0; i < hd; ++i)
        for (int a = 0; a < md; ++a)
            for (const auto& [k, v] : g_.bracket(h_[i], m_[a])) {
                if (role[k] == 0)
                    A_[(pos[k] * hd + i) * md + a] = v;
                else
                    B_[(pos[k] * hd + i) * md + a] = v;
            }
    for (int a = 0; a < md; ++a)
        for (int b = 0; b < md; ++b)
            for (const auto& [k, v] : g_.bracket(m_[a], m_[b])) {
                if (role[k] == 0)
                    C_[(pos[k] * md + a) * md + b] = v;
                else
                    D_[(pos[k] * md + a) * md + b] = v;
            }
}

SplitSubalgebra SplitSubalgebra::from_labels(const LieAlgebra& g, const std::vector<std::string>& h_labels) {
    std::vector<int> h, m;
    for (const auto& l : h_labels) h.push_back(g.index_of(l));
    for (int i = 0; i < g.dim(); ++i)
        if (std::find(h.begin(), h.end(), i) == h.end()) m.push_back(i);
    return {g, h, m};
}

LieAlgebra SplitSubalgebra::h_algebra() const {
    std::vector<std::string> labels;
    for (int i : h_) labels.push_back(g_.basis()[i]);
    std::vector<BracketEntry> br;
    const int hd = hdim();
    for (int i = 0; i < hd; ++i)
        for (int j = i + 1; j < hd; ++j) {
            SparseVector v;
            for (int k = 0; k < hd; ++k)
                if (!f(k, i, j).is_zero()) v.emplace_back(k, f(k, i, j));
            if (!v.empty()) br.push_back({i, j, v});
        }
    return {g_.name() + "/h", labels, g_.field(), br};
}

bool SplitSubalgebra::reassembles() const {
    const int hd = hdim(), md = mdim();
    auto check = [&](int x, int y, SparseVector expect) {
        std::sort(expect.begin(), expect.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        SparseVector clean;
        for (auto& p : expect)
            if (!p.second.is_zero()) clean.push_back(p);
        return g_.bracket(x, y) == clean;
    };
    for (int i = 0; i < hd; ++i)
        for (int j = 0; j < hd; ++j) {
            SparseVector v;
            for (int k = 0; k < hd; ++k) v.emplace_back(h_[k], f(k, i, j));
            if (!check(h_[i], h_[j], v)) return false;
        }
    for (int i = 0; i < hd; ++i)
        for (int a = 0; a < md; ++a) {
            SparseVector v;
            for (int k = 0; k < hd; ++k) v.emplace_back(h_[k], A(k, i, a));
            for (int b = 0; b < md; ++b) v.emplace_back(m_[b], B(b, i, a));
            if (!check(h_[i], m_[a], v)) return false;
        }
    for (int a = 0; a < md; ++a)
        for (int b = 0; b < md; ++b) {
            SparseVector v;
            for (int k = 0; k < hd; ++k) v.emplace_back(h_[k], C(k, a, b));
            for (int c = 0; c < md; ++c) v.emplace_back(m_[c], D(c, a, b));
            if (!check(m_[a], m_[b], v)) return false;
        }
    return true;
}

}  // namespace qlbkit
