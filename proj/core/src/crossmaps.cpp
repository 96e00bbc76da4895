#include "vjac/crossmaps.hpp"

#include <cassert>

namespace vjac {

LevelPair::LevelPair(int g, int n)
    : low_(StabilityDomain::build(g, n)),
      high_(StabilityDomain::build(g, n + 1)),
      low_ext_(StabilityDomain::build_extended(g, n)) {
    xi_map_.resize(n);
    for (int i = 1; i <= n; ++i) {
        xi_map_[i - 1].resize(low_.size());
        for (int k = 0; k < low_.size(); ++k) {
            auto idx = high_.index_of(xi(low_, i, low_.element(k)));
            assert(idx.has_value());
            xi_map_[i - 1][k] = *idx;
        }
    }
    varpi_map_.resize(high_.size());
    for (int k = 0; k < high_.size(); ++k) {
        auto idx = low_ext_.index_of(varpi(high_, high_.element(k)));
        assert(idx.has_value());
        varpi_map_[k] = *idx;
    }
}

VFunction level_down(const LevelPair& lp, int i, const VFunction& tau) {
    if (i < 1 || i > lp.n()) throw std::invalid_argument("mark index out of range");
    if (!same_domain(*tau.dom, lp.high()) || tau.part != Part::Full)
        throw std::invalid_argument("expected a full function at (g,n+1)");
    VFunction out{&lp.low(), Part::Full, tau.chi, {}};
    out.values.reserve(lp.low().size());
    for (int k = 0; k < lp.low().size(); ++k) out.values.push_back(tau.at(lp.xi_index(i, k)));
    return out;
}

VFunction level_up(const LevelPair& lp, const VFunction& sigma) {
    if (!same_domain(*sigma.dom, lp.low()) || sigma.part != Part::Full)
        throw std::invalid_argument("expected a full function at (g,n)");
    const StabilityDomain& ext = lp.low_extended();
    const long long chi = sigma.chi;
    // sigma-hat on the extended domain: 0 on the log-degree-0 extras, chi on
    // their complements, sigma on the core.
    std::vector<long long> hat(ext.size(), 0);
    for (int k = 0; k < ext.size(); ++k) {
        if (ext.in_core(k)) {
            auto idx = lp.low().index_of(ext.element(k));
            assert(idx.has_value());
            hat[k] = sigma.at(*idx);
        } else {
            hat[k] = (ext.log_degree(k) == 0) ? 0 : chi;
        }
    }
    VFunction out{&lp.high(), Part::Full, chi, {}};
    out.values.reserve(lp.high().size());
    for (int k = 0; k < lp.high().size(); ++k) out.values.push_back(hat[lp.varpi_index(k)]);
    return out;
}

namespace {
VFunction raise_on_mark(const LevelPair& lp, const VFunction& omega, bool with_mark) {
    VFunction out = omega;
    const StabilityDomain& hd = lp.high();
    const Mask bit = Mask{1} << (hd.n() - 1);
    for (int k = 0; k < hd.size(); ++k) {
        if (!pair_degenerate(omega, k)) continue;
        bool has = (hd.element(k).marks & bit) != 0;
        if (has == with_mark) out.values[k] += 1;
    }
    return out;
}
}  // namespace

VFunction level_up_plus(const LevelPair& lp, const VFunction& sigma) {
    return raise_on_mark(lp, level_up(lp, sigma), true);
}

VFunction level_up_minus(const LevelPair& lp, const VFunction& sigma) {
    return raise_on_mark(lp, level_up(lp, sigma), false);
}

Polarization level_down_pol(const LevelPair& lp, int i, const Polarization& L) {
    if (i < 1 || i > lp.n()) throw std::invalid_argument("mark index out of range");
    if (!same_domain(*L.dom, lp.high()))
        throw std::invalid_argument("expected a polarization at (g,n+1)");
    const StabilityDomain& lo = lp.low();
    Polarization out;
    out.dom = &lo;
    out.beta = L.beta;
    out.alpha.assign(L.alpha.begin(), L.alpha.end() - 1);
    out.alpha[i - 1] += L.alpha.back();
    // gamma pulls back along xi_i, so the gamma difference at a pair matches
    // the one at its image pair.
    out.gamma.assign(lo.separating().size(), Rat(0));
    for (size_t p = 0; p < lo.separating().size(); ++p) {
        int k = lp.xi_index(i, lo.separating()[p]);
        out.gamma[p] = L.gamma[lp.high().sep_pos(k)];
    }
    check_polarization(out);
    return out;
}

Polarization level_up_pol(const LevelPair& lp, const Polarization& L) {
    if (!same_domain(*L.dom, lp.low()))
        throw std::invalid_argument("expected a polarization at (g,n)");
    const StabilityDomain& hi = lp.high();
    const StabilityDomain& lo = lp.low();
    Polarization out;
    out.dom = &hi;
    out.beta = L.beta;
    out.alpha = L.alpha;
    out.alpha.push_back(Rat(0));
    // gamma pushes forward along varpi; on the new boundary pair
    // {(1;0,{j,n+1}), (1;g,[n]-{j})} the deleted mark sits on a degree-0 side
    // and the difference must come out as beta - alpha_j.
    out.gamma.assign(hi.separating().size(), Rat(0));
    for (size_t p = 0; p < hi.separating().size(); ++p) {
        int k = hi.separating()[p];
        int m = lp.varpi_index(k);
        const StabilityDomain& ext = lp.low_extended();
        if (ext.in_core(m)) {
            auto li = lo.index_of(ext.element(m));
            assert(li.has_value());
            out.gamma[p] = L.gamma[lo.sep_pos(*li)];
        } else if (ext.log_degree(m) == 0) {
            // (1;0,{j,n+1}) over (1;0,{j})
            int j = mask_to_list(ext.element(m).marks)[0];
            out.gamma[p] = L.alpha[j - 1] - L.beta;
        }
        // complement side of the new pair keeps gamma = 0
    }
    check_polarization(out);
    return out;
}

}  // namespace vjac
