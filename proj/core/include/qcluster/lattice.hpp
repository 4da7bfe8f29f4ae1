#pragma once

// Integer lattice vectors and exact linear algebra over Q.

#include "qcluster/coeffs.hpp"

#include <optional>
#include <vector>

namespace qcluster {

using LVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// A matrix with entries in (1/2)Z, stored as twice its value.
struct HalfIntMatrix {
    IntMatrix twice;

    std::size_t size() const { return twice.size(); }
    Rational at(std::size_t i, std::size_t j) const { return Rational(twice[i][j], 2); }
    bool is_integral(std::size_t i, std::size_t j) const { return twice[i][j] % 2 == 0; }
    int integer_at(std::size_t i, std::size_t j) const;  // throws if not integral
    bool operator==(const HalfIntMatrix& o) const { return twice == o.twice; }
};

LVec lv_add(const LVec& a, const LVec& b, int scale = 1);
LVec lv_scale(const LVec& a, int s);
bool lv_is_zero(const LVec& a);
LVec unit_vector(std::size_t n, std::size_t i);

// a^T M b
long long bilinear(const IntMatrix& m, const LVec& a, const LVec& b);

std::size_t rational_rank(RatMatrix m);
std::size_t rational_rank(const HalfIntMatrix& m);
Rational determinant(RatMatrix m);
std::optional<RatMatrix> inverse(RatMatrix m);

// Solve sum_i c_i * columns[i] = target exactly; nullopt if not in the span.
// Columns must be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<LVec>& columns, const LVec& target);

}  // namespace qcluster
