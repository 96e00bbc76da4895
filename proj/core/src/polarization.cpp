#include "vjac/polarization.hpp"

#include <cassert>

#include "vjac/linsolve.hpp"

namespace vjac {

Rat Polarization::relative_degree() const {
    Rat d = rat(2 * dom->g() - 2) * beta;
    for (const Rat& a : alpha) d += a;
    return d;
}

long long Polarization::chi() const {
    Rat d = relative_degree();
    if (!is_integer(d)) throw std::invalid_argument("relative degree is not an integer");
    return to_ll(rat_floor(d));
}

Polarization make_polarization(const StabilityDomain& d, Rat beta, std::vector<Rat> alpha,
                               std::vector<Rat> gamma) {
    if (gamma.empty()) gamma.assign(d.separating().size(), Rat(0));
    Polarization L{&d, std::move(beta), std::move(alpha), std::move(gamma)};
    check_polarization(L);
    return L;
}

void check_polarization(const Polarization& L) {
    const StabilityDomain& d = *L.dom;
    if (static_cast<int>(L.alpha.size()) != d.n())
        throw std::invalid_argument("need one alpha per mark");
    if (L.gamma.size() != d.separating().size())
        throw std::invalid_argument("need one gamma per separating element");
    if (!is_integer(L.relative_degree()))
        throw std::invalid_argument("relative degree must be an integer");
    if (d.g() == 1 && L.beta != 0)
        throw std::invalid_argument("g = 1 forces beta = 0");
    if (d.g() == 0)
        for (const Rat& a : L.alpha)
            if (a != L.alpha[0])
                throw std::invalid_argument("g = 0 forces all alpha equal");
}

Rat ceiling_argument(const Polarization& L, int idx) {
    const StabilityDomain& d = *L.dom;
    const HalfVine& x = d.element(idx);
    Rat q;
    if (x.e == 1) {
        q = L.beta * rat(2 * x.h - 1);
        q -= L.gamma[d.sep_pos(idx)];
        q += L.gamma[d.sep_pos(d.complement(idx))];
    } else {
        q = L.beta * rat(2 * x.h - 2 + x.e);
    }
    for (int m : mask_to_list(x.marks)) q += L.alpha[m - 1];
    return q;
}

VFunction sigma_of(const Polarization& L) {
    check_polarization(L);
    const StabilityDomain& d = *L.dom;
    VFunction f{&d, Part::Full, L.chi(), {}};
    f.values.reserve(d.size());
    for (int i = 0; i < d.size(); ++i) f.values.push_back(to_ll(rat_ceil(ceiling_argument(L, i))));
    return f;
}

RegionSignature region_signature(const Polarization& L) {
    check_polarization(L);
    RegionSignature sig;
    sig.chi = L.chi();
    for (int i : L.dom->pair_reps()) {
        Rat q = ceiling_argument(L, i);
        sig.per_pair.emplace_back(rat_floor(q), is_integer(q));
    }
    return sig;
}

bool same_region(const Polarization& L1, const Polarization& L2) {
    if (!same_domain(*L1.dom, *L2.dom))
        throw std::invalid_argument("polarizations on different domains");
    return region_signature(L1) == region_signature(L2);
}

std::optional<Polarization> classical_feasible(const VFunction& f) {
    if (!validate(f).ok())
        throw std::invalid_argument("classical_feasible requires a valid function");
    const StabilityDomain& d = *f.dom;
    const int g = d.g(), n = d.n();

    // Variables: beta (dropped if g <= 1), then alpha_1..alpha_n (collapsed to
    // one shared value if g = 0).
    const bool has_beta = g >= 2;
    const int nalpha = (g == 0 && n > 0) ? 1 : n;
    const int nv = (has_beta ? 1 : 0) + nalpha;
    auto alpha_var = [&](int mark) { return (has_beta ? 1 : 0) + (g == 0 ? 0 : mark - 1); };

    RationalSystem sys(nv);
    auto row_for = [&](const HalfVine& x) {
        std::vector<Rat> row(nv, Rat(0));
        if (has_beta) row[0] = rat(2 * x.h - 2 + x.e);
        for (int m : mask_to_list(x.marks)) row[alpha_var(m)] += 1;
        if (g == 0) {
            // omega = -2 Sigma_1 folds beta(2h-2+e) into the shared alpha; with
            // beta stored as 0 the ns part is empty anyway, so nothing to add.
        }
        return row;
    };

    // Degree equality (2g-2) beta + sum alpha = chi.
    {
        std::vector<Rat> row(nv, Rat(0));
        if (has_beta) row[0] = rat(2 * g - 2);
        for (int m = 1; m <= n; ++m) row[alpha_var(m)] += 1;
        sys.add_eq(std::move(row), rat(f.chi));
    }

    // One constraint set per pair representative the function covers (the
    // complementary constraint is implied by the degree equality).  Gamma
    // cancels on self-complementary separating pairs, so those constrain beta
    // exactly like a non-separating pair; all other separating pairs are
    // absorbed by gamma afterwards.
    for (int i : d.pair_reps()) {
        if (!f.covers(i)) continue;
        if (d.is_separating(i) && !d.self_complementary(i)) continue;
        const HalfVine& x = d.element(i);
        long long v = f.at(i);
        std::vector<Rat> row = row_for(x);
        if (pair_degenerate(f, i)) {
            sys.add_eq(std::move(row), rat(v));
        } else {
            sys.add_le(row, rat(v), /*strict=*/true);
            sys.add_ge(std::move(row), rat(v - 1), /*strict=*/true);
        }
    }

    auto sol = sys.solve();
    if (!sol) return std::nullopt;

    Polarization L;
    L.dom = &d;
    L.beta = has_beta ? (*sol)[0] : Rat(0);
    L.alpha.resize(n);
    for (int m = 1; m <= n; ++m) L.alpha[m - 1] = (*sol)[alpha_var(m)];
    L.gamma.assign(d.separating().size(), Rat(0));

    // Absorb separating values: pick gamma on the canonical side so that the
    // e = 1 form lands exactly on v (degenerate pair) or at v - 1/2.
    for (int i : d.sep_pair_reps()) {
        if (!f.covers(i) || d.self_complementary(i)) continue;
        const HalfVine& x = d.element(i);
        Rat base = L.beta * rat(2 * x.h - 1);
        for (int m : mask_to_list(x.marks)) base += L.alpha[m - 1];
        Rat target = pair_degenerate(f, i) ? rat(f.at(i)) : rat(2 * f.at(i) - 1, 2);
        L.gamma[d.sep_pos(i)] = base - target;
    }

    VFunction check = sigma_of(L);
    for (int i : f.indices())
        if (f.covers(i) && check.at(i) != f.at(i))
            throw std::logic_error("feasibility certificate fails verification");
    return L;
}

}  // namespace vjac
