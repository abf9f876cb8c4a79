#include "qlbkit/sparse_tensor.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qlbkit {

namespace {

int inversion_sign(const Index& v, size_t begin, size_t end) {
    int inv = 0;
    for (size_t i = begin; i < end; ++i)
        for (size_t j = i + 1; j < end; ++j)
            if (v[i] > v[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace

int permutation_sign(const std::vector<int>& perm) { return inversion_sign(perm, 0, perm.size()); }

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Index> increasing_tuples(int n, int k, bool strict) {
    std::vector<Index> out;
    if (k == 0) return {Index{}};
    Index cur(k);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur[pos] = v;
            rec(pos + 1, strict ? v + 1 : v);
        }
    };
    rec(0, 0);
    return out;
}

SparseTensor::SparseTensor(int dim, std::vector<SlotGroup> groups) : dim_(dim) {
    if (dim < 0) throw InputError("negative tensor dimension");
    for (auto& g : groups) {
        if (g.size < 0) throw InputError("negative slot group size");
        if (g.size == 0) continue;
        if (g.size == 1) g.symmetry = Symmetry::None;
        // adjacent unsymmetric groups of the same variance are one group
        if (g.symmetry == Symmetry::None && !groups_.empty() && groups_.back().symmetry == Symmetry::None &&
            groups_.back().variance == g.variance)
            groups_.back().size += g.size;
        else
            groups_.push_back(g);
        arity_ += g.size;
    }
}

SparseTensor SparseTensor::multivector(int dim, int p) { return {dim, {{p, Symmetry::Antisymmetric, Variance::Upper}}}; }
SparseTensor SparseTensor::symmetric(int dim, int p) { return {dim, {{p, Symmetry::Symmetric, Variance::Upper}}}; }
SparseTensor SparseTensor::plain(int dim, int p) { return {dim, {{p, Symmetry::None, Variance::Upper}}}; }

SparseTensor SparseTensor::scalar(const Scalar& s) {
    SparseTensor t(0, {});
    t.add({}, s);
    return t;
}

std::vector<SlotGroup> SparseTensor::slot_layout() const {
    std::vector<SlotGroup> out;
    for (const auto& g : groups_)
        for (int i = 0; i < g.size; ++i) out.push_back({1, Symmetry::None, g.variance});
    return out;
}

void SparseTensor::check_index(const Index& idx) const {
    if (static_cast<int>(idx.size()) != arity_)
        throw InputError("index tuple of length " + std::to_string(idx.size()) + " for a tensor of arity " +
                         std::to_string(arity_));
    for (int v : idx)
        if (v < 0 || v >= dim_) throw InputError("index " + std::to_string(v) + " out of range");
}

std::optional<std::pair<Index, int>> SparseTensor::canonical(const Index& idx) const {
    check_index(idx);
    Index out = idx;
    int sign = 1;
    size_t off = 0;
    for (const auto& g : groups_) {
        auto b = out.begin() + static_cast<long>(off);
        auto e = b + g.size;
        if (g.symmetry == Symmetry::Antisymmetric) {
            sign *= inversion_sign(out, off, off + g.size);
            std::sort(b, e);
            if (std::adjacent_find(b, e) != e) return std::nullopt;
        } else if (g.symmetry == Symmetry::Symmetric) {
            std::sort(b, e);
        }
        off += g.size;
    }
    return std::make_pair(out, sign);
}

Scalar SparseTensor::get(const Index& idx) const {
    auto c = canonical(idx);
    if (!c) return {};
    auto it = data_.find(c->first);
    if (it == data_.end()) return {};
    return c->second > 0 ? it->second : -it->second;
}

void SparseTensor::add(const Index& idx, const Scalar& v) {
    if (v.is_zero()) return;
    auto c = canonical(idx);
    if (!c) return;
    Scalar w = c->second > 0 ? v : -v;
    auto [it, inserted] = data_.emplace(c->first, w);
    if (!inserted) {
        it->second += w;
        if (it->second.is_zero()) data_.erase(it);
    }
}

void SparseTensor::set(const Index& idx, const Scalar& v) {
    auto c = canonical(idx);
    if (!c) {
        if (!v.is_zero()) throw InputError("nonzero value on a repeated antisymmetric index");
        return;
    }
    if (v.is_zero()) {
        data_.erase(c->first);
        return;
    }
    data_[c->first] = c->second > 0 ? v : -v;
}

SparseTensor SparseTensor::operator-() const { return scaled(Scalar(-1)); }

SparseTensor SparseTensor::operator+(const SparseTensor& o) const {
    if (!same_shape(o)) throw InputError("adding tensors of different shapes");
    SparseTensor r = *this;
    for (const auto& [k, v] : o.data_) {
        auto [it, inserted] = r.data_.emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) r.data_.erase(it);
        }
    }
    return r;
}

SparseTensor SparseTensor::operator-(const SparseTensor& o) const { return *this + (-o); }

SparseTensor SparseTensor::scaled(const Scalar& s) const {
    SparseTensor r(dim_, groups_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : data_) {
        Scalar w = v * s;
        if (!w.is_zero()) r.data_.emplace(k, w);
    }
    return r;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
    if (!same_shape(o)) return false;
    if (data_.size() != o.data_.size()) return false;
    auto a = data_.begin();
    auto b = o.data_.begin();
    for (; a != data_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

std::map<Index, Scalar> SparseTensor::full_components() const {
    std::map<Index, Scalar> out;
    for (const auto& [key, val] : data_) {
        // expand one group at a time
        std::vector<std::pair<Index, int>> partial{{key, 1}};
        size_t off = 0;
        for (const auto& g : groups_) {
            if (g.symmetry != Symmetry::None) {
                std::vector<std::pair<Index, int>> next;
                for (const auto& [tuple, sgn] : partial) {
                    Index t = tuple;
                    auto b = t.begin() + static_cast<long>(off);
                    auto e = b + g.size;
                    do {
                        int s = g.symmetry == Symmetry::Antisymmetric ? inversion_sign(t, off, off + g.size) : 1;
                        next.emplace_back(t, sgn * s);
                    } while (std::next_permutation(b, e));
                }
                partial = std::move(next);
            }
            off += g.size;
        }
        for (const auto& [tuple, sgn] : partial) out.emplace(tuple, sgn > 0 ? val : -val);
    }
    return out;
}

SparseTensor SparseTensor::expanded() const {
    std::vector<SlotGroup> gs;
    for (const auto& g : groups_) gs.push_back({g.size, Symmetry::None, g.variance});
    SparseTensor r(dim_, gs);
    r.data_ = full_components();
    return r;
}

SparseTensor SparseTensor::from_full(int dim, std::vector<SlotGroup> groups, const std::map<Index, Scalar>& full) {
    SparseTensor r(dim, std::move(groups));
    for (const auto& [k, v] : full) {
        if (v.is_zero()) continue;
        auto c = r.canonical(k);
        if (c && c->first == k) r.data_.emplace(k, v);
    }
    return r;
}

SparseTensor SparseTensor::regrouped(std::vector<SlotGroup> groups) const {
    return from_full(dim_, std::move(groups), full_components());
}

bool SparseTensor::has_symmetry(const std::vector<SlotGroup>& groups) const {
    SparseTensor r = regrouped(groups);
    return r.full_components() == full_components();
}

SparseTensor SparseTensor::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != arity_) throw InputError("permutation length does not match arity");
    auto layout = slot_layout();
    std::vector<SlotGroup> gs;
    for (int s : perm) gs.push_back(layout.at(s));
    SparseTensor r(dim_, gs);
    for (const auto& [k, v] : full_components()) {
        Index t(arity_);
        for (int s = 0; s < arity_; ++s) t[s] = k[perm[s]];
        r.data_.emplace(t, v);
    }
    return r;
}

SparseTensor SparseTensor::tensor_product(const SparseTensor& o) const {
    if (dim_ != o.dim_ && arity_ > 0 && o.arity_ > 0) throw InputError("tensor product of different dimensions");
    std::vector<SlotGroup> gs = groups_;
    gs.insert(gs.end(), o.groups_.begin(), o.groups_.end());
    SparseTensor r(arity_ > 0 ? dim_ : o.dim_, gs);
    for (const auto& [a, va] : data_)
        for (const auto& [b, vb] : o.data_) {
            Index t = a;
            t.insert(t.end(), b.begin(), b.end());
            r.data_.emplace(t, va * vb);
        }
    return r;
}

std::string SparseTensor::to_string(const std::vector<std::string>& labels) const {
    if (data_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : data_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.to_string() << ")";
        if (!k.empty()) {
            os << "[";
            for (size_t i = 0; i < k.size(); ++i) {
                if (i) os << ",";
                os << (k[i] < static_cast<int>(labels.size()) ? labels[k[i]] : std::to_string(k[i]));
            }
            os << "]";
        }
    }
    return os.str();
}

}  // namespace qlbkit
