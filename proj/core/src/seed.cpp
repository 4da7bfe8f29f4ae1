#include "qcluster/seed.hpp"

#include "qcluster/errors.hpp"

#include <string>

namespace qcluster {

SymbolVector Seed::label(int v) const {
    if (!symbols) throw std::logic_error("seed has no labels");
    SymbolVector out = symbols->zero();
    const LVec& e = basis.at(v);
    for (int j = 0; j < ambient_dim; ++j) {
        if (e[j] == 0) continue;
        const SymbolVector& l = ambient_labels[j];
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += e[j] * l[i];
    }
    return out;
}

std::vector<SymbolVector> Seed::labels() const {
    std::vector<SymbolVector> out;
    for (std::size_t v = 0; v < size(); ++v) out.push_back(label(static_cast<int>(v)));
    return out;
}

HalfIntMatrix exchange_matrix(const Seed& s) {
    const std::size_t n = s.size();
    HalfIntMatrix m{IntMatrix(n, std::vector<int>(n, 0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.twice[i][j] = static_cast<int>(s.pair2(s.basis[i], s.basis[j]));
    return m;
}

Seed mutate_seed(const Seed& s, int k) {
    if (k < 0 || k >= static_cast<int>(s.size())) throw IndexOutOfRange("vertex " + std::to_string(k));
    if (s.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(k) + " is frozen");
    Seed out = s;
    const LVec& ek = s.basis[k];
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (static_cast<int>(i) == k) {
            out.basis[i] = lv_scale(ek, -1);
            continue;
        }
        const long long e2 = s.pair2(s.basis[i], ek);
        if (e2 % 2 != 0) throw std::domain_error("half-integer exchange entry at a mutable vertex");
        const long long eik = e2 / 2;
        if (eik > 0) out.basis[i] = lv_add(s.basis[i], ek, static_cast<int>(eik));
    }
    return out;
}

Seed permute_vertices(const Seed& s, const std::vector<int>& perm) {
    if (perm.size() != s.size()) throw std::invalid_argument("permutation size mismatch");
    Seed out = s;
    out.frozen.clear();
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.basis.at(perm[i]) = s.basis[i];
        if (s.is_frozen(static_cast<int>(i))) out.frozen.insert(perm[i]);
    }
    return out;
}

Seed mutate_sequence(const Seed& s, const MutationSeq& seq) {
    Seed cur = s;
    for (int k : seq.steps) cur = mutate_seed(cur, k);
    if (seq.post_permutation) cur = permute_vertices(cur, *seq.post_permutation);
    return cur;
}

Seed seed_from_symbol_labels(std::shared_ptr<const SymbolSpace> space, const std::vector<SymbolVector>& labels,
                             std::set<int> frozen) {
    RatMatrix m;
    for (const auto& l : labels) m.emplace_back(l.begin(), l.end());
    if (rational_rank(m) != labels.size()) throw std::invalid_argument("labels are linearly dependent");
    Seed s;
    s.ambient_dim = static_cast<int>(space->size());
    s.basis = labels;
    s.frozen = std::move(frozen);
    s.form2 = space->pairing_matrix();
    for (auto& row : s.form2)
        for (auto& x : row) x *= 2;
    for (int j = 0; j < s.ambient_dim; ++j) s.ambient_labels.push_back(unit_vector(space->size(), j));
    s.symbols = std::move(space);
    return s;
}

Seed seed_from_vertex_labels(std::shared_ptr<const SymbolSpace> space, const std::vector<SymbolVector>& labels,
                             std::set<int> frozen) {
    Seed s;
    const std::size_t n = labels.size();
    s.ambient_dim = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i) s.basis.push_back(unit_vector(n, i));
    s.frozen = std::move(frozen);
    s.form2 = exchange_from_labels(*space, labels).twice;
    s.ambient_labels = labels;
    s.symbols = std::move(space);
    return s;
}

std::shared_ptr<const SymbolSpace> toda_space(int n) {
    auto sp = std::make_shared<SymbolSpace>();
    for (int j = 0; j <= n; ++j) sp->add_pair("x[" + std::to_string(j) + "]", "p[" + std::to_string(j) + "]");
    sp->add("specU", SymbolKind::spectral);
    sp->add("specV", SymbolKind::spectral);
    return sp;
}

namespace {

std::string idx(const char* sym, int j) {
    return std::string(sym) + "[" + std::to_string(j) + "]";
}

std::vector<SymbolVector> coxeter_labels(const SymbolSpace& sp, int n) {
    std::vector<SymbolVector> labels(2 * n);
    labels[0] = sp.vec({{idx("p", 1), -1}, {"specU", -1}});
    for (int j = 1; j < n; ++j) {
        labels[2 * j] = sp.vec({{idx("x", j + 1), 1}, {idx("x", j), -1}});
        labels[2 * j - 1] = sp.vec({{idx("p", j), 1}, {idx("p", j + 1), -1}, {idx("x", j), 1}, {idx("x", j + 1), -1}});
    }
    labels[2 * n - 1] = sp.vec({{idx("p", n), 1}, {"specV", 1}});
    return labels;
}

}  // namespace

Seed build_coxeter(int n) {
    if (n < 2) throw RankTooSmall("coxeter quiver needs n >= 2");
    auto sp = toda_space(n);
    return seed_from_symbol_labels(sp, coxeter_labels(*sp, n));
}

int augmented_a(int n) {
    return 2 * n;
}

int augmented_f(int n) {
    return 2 * n + 1;
}

Seed build_augmented_coxeter(int n) {
    if (n < 2) throw RankTooSmall("augmented coxeter quiver needs n >= 2");
    auto sp = toda_space(n);
    auto labels = coxeter_labels(*sp, n);
    labels.push_back(sp->vec({{idx("p", 1), -1}, {idx("x", 0), -1}}));
    labels.push_back(sp->basis(idx("p", 0)));
    return seed_from_symbol_labels(sp, labels, {augmented_f(n)});
}

int glued_position(int n, int z) {
    return z + 2 * (n - 1);
}

Seed build_glued(int m, int n) {
    if (m < 1 || n < 1) throw RankTooSmall("glued quiver needs m, n >= 1");
    auto sp = std::make_shared<SymbolSpace>();
    for (int j = 1; j <= m; ++j) sp->add_pair(idx("x", j), idx("p", j));
    for (int j = 1; j <= n; ++j) sp->add_pair(idx("y", j), idx("q", j));
    std::vector<SymbolVector> labels(2 * m + 2 * n - 3);
    auto at = [&](int z) -> SymbolVector& { return labels[glued_position(n, z)]; };
    at(0) = sp->vec({{idx("q", n), 1}, {idx("p", 1), -1}});
    for (int j = 1; j < m; ++j) {
        at(2 * j) = sp->vec({{idx("x", j + 1), 1}, {idx("x", j), -1}});
        at(2 * j - 1) = sp->vec({{idx("p", j), 1}, {idx("p", j + 1), -1}, {idx("x", j), 1}, {idx("x", j + 1), -1}});
    }
    // The y-side runs towards the glue from y[n]: v_{-2j} involves y[n-j].
    for (int j = 1; j < n; ++j) {
        const int a = n - j;
        at(-2 * j) = sp->vec({{idx("y", a + 1), 1}, {idx("y", a), -1}});
        at(-2 * j + 1) = sp->vec({{idx("q", a), 1}, {idx("q", a + 1), -1}, {idx("y", a), 1}, {idx("y", a + 1), -1}});
    }
    return seed_from_symbol_labels(sp, labels);
}

}  // namespace qcluster
