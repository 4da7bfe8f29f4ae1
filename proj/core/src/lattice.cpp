#include "qcluster/lattice.hpp"

#include <stdexcept>

namespace qcluster {

int HalfIntMatrix::integer_at(std::size_t i, std::size_t j) const {
    if (!is_integral(i, j)) throw std::domain_error("half-integer exchange entry");
    return twice[i][j] / 2;
}

LVec lv_add(const LVec& a, const LVec& b, int scale) {
    LVec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * b[i];
    return out;
}

LVec lv_scale(const LVec& a, int s) {
    LVec out(a);
    for (auto& x : out) x *= s;
    return out;
}

bool lv_is_zero(const LVec& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

LVec unit_vector(std::size_t n, std::size_t i) {
    LVec e(n, 0);
    e[i] = 1;
    return e;
}

long long bilinear(const IntMatrix& m, const LVec& a, const LVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (std::size_t j = 0; j < b.size(); ++j) row += static_cast<long long>(m[i][j]) * b[j];
        s += a[i] * row;
    }
    return s;
}

namespace {

// Row-reduces in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, Rational* det = nullptr) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    if (det) *det = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) {
            if (det) *det = 0;
            continue;
        }
        if (p != r) {
            std::swap(m[p], m[r]);
            if (det) *det = -*det;
        }
        const Rational inv = Rational(1) / m[r][c];
        if (det) *det *= m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    if (det && r < rows) *det = 0;
    return pivots;
}

}  // namespace

std::size_t rational_rank(RatMatrix m) {
    return row_reduce(m).size();
}

std::size_t rational_rank(const HalfIntMatrix& m) {
    RatMatrix r(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m.twice[i][j];
    return rational_rank(std::move(r));
}

Rational determinant(RatMatrix m) {
    if (m.empty()) return 1;
    Rational det;
    row_reduce(m, &det);
    return det;
}

std::optional<RatMatrix> inverse(RatMatrix m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, 0);
        m[i][n + i] = 1;
    }
    auto pivots = row_reduce(m);
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    RatMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<LVec>& columns, const LVec& target) {
    const std::size_t k = columns.size();
    const std::size_t dim = target.size();
    RatMatrix m(dim, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < k; ++c) m[r][c] = columns[c][r];
        m[r][k] = target[r];
    }
    auto pivots = row_reduce(m);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    if (pivots.size() < k) throw std::invalid_argument("solve_in_span: dependent columns");
    std::vector<Rational> out(k);
    for (std::size_t i = 0; i < k; ++i) out[pivots[i]] = m[i][k];
    return out;
}

}  // namespace qcluster
