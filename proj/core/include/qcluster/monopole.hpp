#pragma once

// Dressed minuscule monopole operators E_{i;x^m}, F_{i;x^m} and the sign twist.

#include "qcluster/diffop.hpp"
#include "qcluster/gauge.hpp"

namespace qcluster {

DiffOp monopole_E(const GaugeQuiver& g, const std::string& node, int m);
DiffOp monopole_F(const GaugeQuiver& g, const std::string& node, int m);

// w -> -w at black nodes, z -> -z on flavors attached to black nodes,
// u(a) -> -u(a) on non-tree edges joining nodes of equal color. D is fixed.
DiffOp sigma_twist(const DiffOp& op, const GaugeQuiver& g);

// Multiplication by e_k(w_{i,1..d_i}).
DiffOp multiplication_e(const GaugeQuiver& g, const std::string& node, int k);

// All w[i,r] of one gauge node.
std::vector<std::string> w_vars(const GaugeQuiver& g, const std::string& node);
std::vector<std::vector<std::string>> w_groups(const GaugeQuiver& g);

}  // namespace qcluster
