#pragma once

// JSON and DOT serialization for seeds, torus elements, difference operators
// and check reports.

#include "qcluster/diffop.hpp"
#include "qcluster/qtorus.hpp"
#include "qcluster/report.hpp"

#include <string>
#include <vector>

namespace qcluster {

// {ambient_dim, basis, form2, frozen, symbols?, ambient_labels?, labels?, vertex_names?}
std::string seed_json(const Seed& s, const std::vector<std::string>& vertex_names = {});
// Throws SchemaError.
Seed parse_seed_json(const std::string& text);

// Frozen vertices are boxes; an entry eps_ij = k > 0 becomes k parallel arrows i -> j.
std::string seed_dot(const Seed& s, const std::vector<std::string>& vertex_names = {});

// [{"lattice_vector": [...], "coeff": {"<v-exponent>": "<integer>"}}]
std::string element_json(const TorusElement& x);
// Also accepts plain integer coefficients. Throws SchemaError.
TorusElement parse_element_json(const std::string& text, int ambient_dim);

// [{"coeff": "...", "shift": {"D[i,r]": k}}]
std::string diffop_json(const DiffOp& op);

// One line: {check_id, inputs, status, witness?, lhs?, rhs?}
std::string report_json(const CheckReport& r);

}  // namespace qcluster
