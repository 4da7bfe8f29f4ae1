#include "qcluster/errors.hpp"
#include "qcluster/seed.hpp"

#include <algorithm>
#include <map>

namespace qcluster {

SequenceKind parse_sequence_kind(const std::string& name) {
    if (name == "baxter_top") return SequenceKind::baxter_top;
    if (name == "baxter_bottom") return SequenceKind::baxter_bottom;
    if (name == "r_op") return SequenceKind::r_op;
    if (name == "dehn") return SequenceKind::dehn;
    throw UnknownKind("unknown sequence kind " + name);
}

MutationSeq standard_sequence(SequenceKind kind, int n) {
    if (n < 2) throw RankTooSmall("sequences need n >= 2");
    MutationSeq seq;
    switch (kind) {
    case SequenceKind::baxter_top:
        for (int k = 0; k <= 2 * n - 2; ++k) seq.steps.push_back(k);
        break;
    case SequenceKind::baxter_bottom:
        seq.steps.push_back(2 * n - 1);
        for (int k = n - 1; k >= 1; --k) {
            seq.steps.push_back(2 * k - 1);
            seq.steps.push_back(2 * k);
        }
        break;
    case SequenceKind::r_op:
        for (int k = 0; k <= 2 * n - 3; ++k) seq.steps.push_back(k);
        break;
    case SequenceKind::dehn: {
        std::vector<int> perm(2 * n);
        for (int i = 0; i < 2 * n; ++i) perm[i] = i;
        for (int k = 1; k < n; ++k) {
            seq.steps.push_back(2 * k - 1);
            std::swap(perm[2 * k], perm[2 * k - 1]);
        }
        seq.post_permutation = perm;
        break;
    }
    }
    return seq;
}

std::vector<int> bifund_order(int m, int n) {
    if (m < 1 || n < 1) throw RankTooSmall("bifundamental sequence needs m, n >= 1");
    // Entry (i, j) sits in column i + j with value i - j; even j is circled.
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> cols;
    for (int i = 0; i <= 2 * (m - 1); ++i)
        for (int j = 0; j <= 2 * (n - 1); ++j) {
            auto& c = cols[i + j];
            (j % 2 == 0 ? c.first : c.second).push_back(i - j);
        }
    std::vector<int> out;
    for (auto& [x, c] : cols) {
        std::sort(c.first.begin(), c.first.end(), std::greater<>());
        std::sort(c.second.begin(), c.second.end());
        out.insert(out.end(), c.first.begin(), c.first.end());
        out.insert(out.end(), c.second.begin(), c.second.end());
    }
    return out;
}

int bifund_renumber(int m, int n, int z) {
    // Neighbouring odd/even pairs trade places around the shifted glue.
    const int t = z + 2 * (n - m);
    if (t == 0) return 0;
    const bool odd = t % 2 != 0;
    if (t > 0) return odd ? t + 1 : t - 1;
    return odd ? t - 1 : t + 1;
}

MutationSeq bifund_sequence(int m, int n) {
    MutationSeq seq;
    for (int z : bifund_order(m, n)) seq.steps.push_back(glued_position(n, z));
    std::vector<int> perm(2 * m + 2 * n - 3);
    for (int z = -2 * (n - 1); z <= 2 * (m - 1); ++z)
        perm[glued_position(n, z)] = glued_position(m, bifund_renumber(m, n, z));
    seq.post_permutation = perm;
    return seq;
}

}  // namespace qcluster
