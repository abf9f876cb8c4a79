#include "qlbkit/io.hpp"

#include "qlbkit/errors.hpp"
#include "qlbkit/expression.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace qlbkit {

namespace {

Scalar coefficient(const Json& c, const std::vector<std::string>& vars) {
    if (c.is_number_integer()) return Scalar(c.get<long>());
    if (c.is_string()) return parse_scalar(c.get<std::string>(), vars);
    throw InputError("coefficient must be an integer or a string, got " + c.dump());
}

int label_index(const Json& x, const LieAlgebra& g) {
    if (x.is_number_integer()) {
        int i = x.get<int>();
        if (i < 0 || i >= g.dim()) throw InputError("basis position out of range: " + x.dump());
        return i;
    }
    if (!x.is_string()) throw InputError("basis reference must be a label or an integer: " + x.dump());
    try {
        return g.index_of(x.get<std::string>());
    } catch (const std::exception&) {
        throw InputError("unknown basis label: " + x.get<std::string>());
    }
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be a list");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw InputError(std::string(what) + " entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

LieAlgebra lie_algebra_from_json(const Json& j) {
    std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "g";
    FieldDescriptor field;
    if (j.contains("field")) {
        const auto& f = j["field"];
        std::string type = member(f, "type").get<std::string>();
        if (type == "ratfun") {
            field.variables = string_list(member(f, "vars"), "field vars");
        } else if (type != "rational") {
            throw InputError("unknown field type: " + type);
        }
    }
    auto basis = string_list(member(j, "basis"), "basis");
    std::map<std::string, int> pos;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!pos.emplace(basis[i], static_cast<int>(i)).second) throw InputError("duplicate basis label " + basis[i]);
    auto find = [&](const Json& x) {
        if (!x.is_string() || !pos.count(x.get<std::string>())) throw InputError("unknown basis label in brackets: " + x.dump());
        return pos[x.get<std::string>()];
    };
    std::vector<BracketEntry> brackets;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw InputError("brackets must be a list");
        for (const auto& b : j["brackets"]) {
            if (!b.is_array() || b.size() != 3 || !b[2].is_array())
                throw InputError("bracket entries have the form [x, y, [[z, coef], ...]]");
            std::map<int, Scalar> acc;
            for (const auto& term : b[2]) {
                if (!term.is_array() || term.size() != 2) throw InputError("bracket term must be [z, coef]");
                acc[find(term[0])] += coefficient(term[1], field.variables);
            }
            SparseVector v;
            for (const auto& [k, c] : acc)
                if (!c.is_zero()) v.emplace_back(k, c);
            brackets.push_back({find(b[0]), find(b[1]), v});
        }
    }
    return {name, basis, field, brackets};
}

Json lie_algebra_to_json(const LieAlgebra& g) {
    Json j;
    j["name"] = g.name();
    if (g.field().is_rational())
        j["field"] = {{"type", "rational"}};
    else
        j["field"] = {{"type", "ratfun"}, {"vars", g.field().variables}};
    j["basis"] = g.basis();
    Json br = Json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i + 1; k < g.dim(); ++k) {
            if (g.bracket(i, k).empty()) continue;
            Json terms = Json::array();
            for (const auto& [z, c] : g.bracket(i, k)) terms.push_back({g.basis()[z], c.to_string()});
            br.push_back({g.basis()[i], g.basis()[k], terms});
        }
    j["brackets"] = br;
    return j;
}

std::vector<SlotGroup> signature_groups(const std::string& name) {
    using S = Symmetry;
    const auto up = Variance::Upper;
    if (name == "vector") return {{1, S::None, up}};
    if (name == "plain2") return {{2, S::None, up}};
    if (name == "plain3") return {{3, S::None, up}};
    if (name == "wedge2") return {{2, S::Antisymmetric, up}};
    if (name == "wedge3") return {{3, S::Antisymmetric, up}};
    if (name == "wedge4") return {{4, S::Antisymmetric, up}};
    if (name == "sym2") return {{2, S::Symmetric, up}};
    if (name == "cobracket") return {{1, S::None, Variance::Lower}, {2, S::Antisymmetric, up}};
    throw InputError("unknown tensor signature: " + name);
}

std::string signature_name(const SparseTensor& t) {
    for (const char* n : {"vector", "plain2", "plain3", "wedge2", "wedge3", "wedge4", "sym2", "cobracket"})
        if (signature_groups(n) == t.groups()) return n;
    return "";
}

TensorLiteral tensor_from_json(const Json& j, const LieAlgebra& g, const std::string& expected,
                               const std::vector<std::string>& extra_vars) {
    TensorLiteral out;
    const Json* entries = &j;
    if (j.is_object()) {
        out.header = j;
        if (j.contains("signature")) {
            std::string sig = j["signature"].is_string() ? j["signature"].get<std::string>() : "";
            if (sig != expected)
                throw InputError("tensor signature \"" + sig + "\" does not match the expected \"" + expected + "\"");
        }
        if (j.contains("vars")) out.vars = string_list(j["vars"], "vars");
        entries = &member(j, "entries");
    }
    if (!entries->is_array()) throw InputError("tensor entries must be a list of {idx, coef} records");
    std::vector<std::string> vars = g.field().variables;
    vars.insert(vars.end(), out.vars.begin(), out.vars.end());
    vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());

    out.tensor = SparseTensor(g.dim(), signature_groups(expected));
    std::map<Index, Scalar> seen;  // canonical index -> value implied by the first record
    for (const auto& rec : *entries) {
        const Json& idx = member(rec, "idx");
        if (!idx.is_array() || static_cast<int>(idx.size()) != out.tensor.arity())
            throw InputError("entry " + rec.dump() + " needs " + std::to_string(out.tensor.arity()) + " indices");
        Index k;
        for (const auto& x : idx) k.push_back(label_index(x, g));
        Scalar v = coefficient(member(rec, "coef"), vars);
        auto canon = out.tensor.canonical(k);
        if (!canon) {
            if (!v.is_zero()) throw InputError("nonzero coefficient on a repeated antisymmetric index: " + rec.dump());
            continue;
        }
        Scalar cv = canon->second > 0 ? v : -v;
        auto [it, fresh] = seen.emplace(canon->first, cv);
        if (!fresh) {
            if (it->second != cv) throw InputError("inconsistent entries for the same component: " + rec.dump());
            continue;
        }
        out.tensor.add(canon->first, cv);
    }
    return out;
}

Json tensor_to_json(const SparseTensor& t, const std::vector<std::string>& labels) {
    Json arr = Json::array();
    for (const auto& [idx, v] : t.entries()) {
        Json names = Json::array();
        for (int i : idx) names.push_back(i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i));
        arr.push_back({{"idx", names}, {"coef", v.to_string()}});
    }
    return arr;
}

RationalMatrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() ? member(j, "pairing") : j;
    if (!rows.is_array()) throw InputError("matrix must be a list of rows");
    RationalMatrix m;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) throw InputError("matrix must be square");
        RationalVector r;
        for (const auto& x : row) {
            Scalar s = coefficient(x, {});
            r.push_back(s.rational());
        }
        m.push_back(r);
    }
    return m;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return rows;
}

std::vector<int> parse_index_list(const std::string& text, const LieAlgebra& g) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        bool numeric = item.find_first_not_of("0123456789") == std::string::npos;
        out.push_back(numeric ? label_index(Json(std::stoi(item)), g) : label_index(Json(item), g));
    }
    return out;
}

}  // namespace qlbkit
