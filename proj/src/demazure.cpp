#include "demroots/demazure.hpp"

#include <algorithm>

namespace demroots {

std::optional<LatticeVector> is_root(const Cone& c, const LatticeVector& e) {
    if (e.rank() != c.rank())
        throw DomainError("rank_mismatch", "is_root: vector rank does not match cone rank");
    std::optional<LatticeVector> distinguished;
    for (const auto& ray : c.rays()) {
        Int p = pairing(ray, e);
        if (p >= 0) continue;
        if (p != -1 || distinguished) return std::nullopt;
        distinguished = ray;
    }
    return distinguished;
}

std::vector<DemazureRoot> roots_within(const Cone& c, int bound) {
    if (bound < 1) throw DomainError("bad_bound", "roots_within: bound must be >= 1");
    const int n = c.rank();
    std::vector<DemazureRoot> out;
    std::vector<Int> cur(static_cast<size_t>(n), Int(-bound));
    while (true) {
        LatticeVector e{std::vector<Int>(cur)};
        if (auto ray = is_root(c, e)) out.push_back({std::move(e), *ray});
        int i = n - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == bound) {
            cur[static_cast<size_t>(i)] = -bound;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace demroots
