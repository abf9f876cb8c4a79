#pragma once

#include "qlbkit/lie_algebra.hpp"
#include "qlbkit/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qlbkit {

using Json = nlohmann::json;

// Reads and parses a JSON file; InputError on I/O or syntax problems.
Json read_json_file(const std::string& path);

// {"name", "field": {"type": "rational"} | {"type": "ratfun", "vars": [...]},
//  "basis": [...], "brackets": [[x, y, [[z, coef], ...]], ...]}
LieAlgebra lie_algebra_from_json(const Json& j);
Json lie_algebra_to_json(const LieAlgebra& g);

// Named slot signatures of tensor literals.
//   vector, plain2, plain3, wedge2, wedge3, wedge4, sym2, cobracket (g* (x) wedge^2 g)
std::vector<SlotGroup> signature_groups(const std::string& name);
std::string signature_name(const SparseTensor& t);  // "" when unnamed

struct TensorLiteral {
    SparseTensor tensor;
    std::vector<std::string> vars;  // declared in the file
    Json header;                    // the whole object (empty for bare lists)
};

// A tensor literal is either a bare list of {"idx": [...], "coef": "..."} records or
// an object {"signature": ..., "vars": [...], "entries": [...]}.  Entries are full
// components; both orders of a (skew-)symmetric pair may be listed if consistent.
// A declared signature must equal `expected`.
// extra_vars are coordinate names declared on the command line.
TensorLiteral tensor_from_json(const Json& j, const LieAlgebra& g, const std::string& expected,
                               const std::vector<std::string>& extra_vars = {});
Json tensor_to_json(const SparseTensor& t, const std::vector<std::string>& labels);

// Square matrix of rationals: a bare array of rows or {"pairing": rows}; entries are
// integers or coefficient strings.
RationalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RationalMatrix& m);

// Comma list of basis labels or integer positions.
std::vector<int> parse_index_list(const std::string& text, const LieAlgebra& g);

}  // namespace qlbkit
