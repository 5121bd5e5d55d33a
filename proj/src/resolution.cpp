#include "lexcoh/resolution.hpp"

#include <algorithm>
#include <map>

#include "lexcoh/laurent.hpp"

namespace lexcoh {

std::strong_ordering ModOrder::cmp(const Monomial& ma, int ca,
                                   const Monomial& mb, int cb) const {
    std::strong_ordering c = std::strong_ordering::equal;
    if (images_.empty()) {
        c = compare(ma, mb, ring_);
    } else {
        const ModImage& ia = images_[static_cast<std::size_t>(ca)];
        const ModImage& ib = images_[static_cast<std::size_t>(cb)];
        c = lower_->cmp(ma.times(ia.m), ia.comp, mb.times(ib.m), ib.comp);
    }
    if (c != std::strong_ordering::equal) return c;
    if (ca != cb)
        return ca < cb ? std::strong_ordering::greater
                       : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

GradedBetti monomial_betti(const MonomialIdeal& I) {
    GradedBetti b;
    if (I.is_unit()) return b;  // zero module
    b.by_level.push_back({{0, 1}});
    if (I.is_zero()) return b;
    if (is_stable(I)) {
        int maxm = 0;
        for (const auto& u : I.gens()) maxm = std::max(maxm, u.m_index());
        std::vector<std::map<long long, long long>> lv(
            static_cast<std::size_t>(maxm));
        for (const auto& u : I.gens()) {
            int m = u.m_index();
            for (int k = 0; k < m; ++k)
                lv[static_cast<std::size_t>(k)][u.degree() + k] +=
                    binom(m - 1, k).convert_to<long long>();
        }
        for (const auto& row : lv) {
            std::vector<std::pair<long long, long long>> r(row.begin(),
                                                           row.end());
            b.by_level.push_back(std::move(r));
        }
        return b;
    }
    if (I.ctx().field == FieldKind::rationals) {
        QQ K;
        return graded_betti(K, taylor_resolution(K, I));
    }
    GFp K(I.ctx().p);
    return graded_betti(K, taylor_resolution(K, I));
}

}  // namespace lexcoh
