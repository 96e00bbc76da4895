#include <doctest.h>

#include <random>

#include "vjac/crossmaps.hpp"
#include "vjac/polarization.hpp"
#include "vjac/symmetry.hpp"

using namespace vjac;

namespace {
HalfVine hv(int e, int h, std::vector<int> marks = {}) {
    Mask m = 0;
    for (int i : marks) m |= Mask{1} << (i - 1);
    return {e, h, m};
}

Polarization random_pol(const StabilityDomain& d, std::mt19937& rng) {
    auto frac = [&]() {
        long num = static_cast<long>(rng() % 13) - 6;
        long den = 1 + static_cast<long>(rng() % 5);
        Rat q(num, den);
        q.canonicalize();
        return q;
    };
    Rat beta = d.g() >= 2 ? frac() : Rat(0);
    std::vector<Rat> alpha(d.n());
    for (auto& a : alpha) a = frac();
    if (d.g() == 0)
        for (auto& a : alpha) a = alpha[0];
    // fix the degree to the nearest integer by adjusting one coordinate
    Rat deg = rat(2 * d.g() - 2) * beta;
    for (const Rat& a : alpha) deg += a;
    Rat adjust = Rat(rat_ceil(deg)) - deg;
    if (d.n() > 0 && d.g() != 0)
        alpha[0] += adjust;
    else if (d.g() >= 2)
        beta += adjust / rat(2 * d.g() - 2);
    else if (d.g() == 0)
        for (auto& a : alpha) a += adjust / rat(d.n());
    std::vector<Rat> gamma(d.separating().size());
    for (auto& c : gamma) c = frac();
    return make_polarization(d, beta, alpha, gamma);
}
}  // namespace

TEST_CASE("sigma of the canonical slope") {
    StabilityDomain d = StabilityDomain::build(3, 0);
    Polarization L = make_polarization(d, Rat(2, 4), {});
    CHECK(sigma_of(L) == canonical_vfunction(d, 2));
    CHECK(L.chi() == 2);
}

TEST_CASE("sigma of the third-point polarization at (1,6)") {
    StabilityDomain d = StabilityDomain::build(1, 6);
    Polarization L = make_polarization(d, Rat(0), std::vector<Rat>(6, Rat(1, 3)));
    VFunction f = sigma_of(L);
    CHECK(f.chi == 2);
    for (int i : d.nonseparating())
        CHECK(f.at(i) == (popcount(d.element(i).marks) >= 4 ? 2 : 1));
    CHECK(validate(f).ok());
}

TEST_CASE("an integral gamma shift moves one pair by (-1,+1)") {
    StabilityDomain d = StabilityDomain::build(2, 1);
    Polarization L = make_polarization(d, Rat(1, 3), {Rat(1, 3)});
    VFunction base = sigma_of(L);
    Polarization shifted = L;
    int rep = d.sep_pair_reps()[0];
    shifted.gamma[d.sep_pos(rep)] += 1;
    VFunction moved = sigma_of(shifted);
    for (int i = 0; i < d.size(); ++i) {
        if (i == rep) CHECK(moved.at(i) == base.at(i) - 1);
        else if (i == d.complement(rep)) CHECK(moved.at(i) == base.at(i) + 1);
        else CHECK(moved.at(i) == base.at(i));
    }
    CHECK(!same_region(L, shifted));

    // a shift by 2 on one gamma changes the signature and that pair only
    Polarization shifted2 = L;
    shifted2.gamma[d.sep_pos(rep)] += 2;
    CHECK(!same_region(L, shifted2));
    CHECK(same_region(L, L));
}

TEST_CASE("signature equality characterizes equal sigma") {
    std::mt19937 rng(4242);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 4}}) {
        StabilityDomain d = StabilityDomain::build(g, n);
        std::vector<RegionSignature> sigs;
        std::vector<VFunction> sigmas;
        for (int k = 0; k < 500; ++k) {
            Polarization L = random_pol(d, rng);
            if (k >= 400) {
                // a coarse sub-sample so that shared regions actually occur
                L.beta = d.g() >= 2 ? rat(static_cast<long>(rng() % 3) - 1, 2) : Rat(0);
                for (auto& a : L.alpha) a = rat(static_cast<long>(rng() % 3) - 1, 2);
                if (d.g() == 0)
                    for (auto& a : L.alpha) a = L.alpha[0];
                for (auto& c : L.gamma) c = Rat(0);
                Rat deg = L.relative_degree();
                Rat adjust = Rat(rat_ceil(deg)) - deg;
                if (d.n() > 0 && d.g() != 0) L.alpha[0] += adjust;
                else if (d.g() >= 2) L.beta += adjust / rat(2 * d.g() - 2);
                check_polarization(L);
            }
            sigs.push_back(region_signature(L));
            sigmas.push_back(sigma_of(L));
        }
        int coincidences = 0;
        for (size_t a = 0; a < sigs.size(); ++a)
            for (size_t b = a + 1; b < sigs.size(); ++b) {
                bool same_sig = sigs[a] == sigs[b];
                bool same_sigma = sigmas[a] == sigmas[b];
                CHECK(same_sig == same_sigma);
                coincidences += same_sig;
            }
        CHECK(coincidences > 0);  // the sample does hit shared regions
    }
}

TEST_CASE("two nearby slopes at (3,1): same value at (4;0), split by the signature") {
    StabilityDomain d = StabilityDomain::build(3, 1);
    // degree 1 in both cases
    Polarization L1 = make_polarization(d, Rat(1, 4), {Rat(0)});
    Polarization L2 = make_polarization(d, Rat(1, 3), {Rat(-1, 3)});
    VFunction f1 = sigma_of(L1), f2 = sigma_of(L2);
    int i40 = *d.index_of(hv(4, 0));
    CHECK(f1.at(i40) == 1);  // ceil(1/2)
    CHECK(f2.at(i40) == 1);  // ceil(2/3)
    // the form 4*beta is integral for L1 only, at (2;2,@)
    int i22 = *d.index_of(hv(2, 2));
    CHECK(is_integer(ceiling_argument(L1, i22)));
    CHECK(!is_integer(ceiling_argument(L2, i22)));
    CHECK(!same_region(L1, L2));
    CHECK(!(f1 == f2));
}

TEST_CASE("degeneracy happens exactly on integral forms") {
    std::mt19937 rng(11);
    StabilityDomain d = StabilityDomain::build(3, 1);
    for (int k = 0; k < 50; ++k) {
        Polarization L = random_pol(d, rng);
        VFunction f = sigma_of(L);
        for (int i : d.nonseparating())
            CHECK(pair_degenerate(f, i) == is_integer(ceiling_argument(L, i)));
    }
}

TEST_CASE("round trip through feasibility") {
    std::mt19937 rng(5150);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 0}, {1, 4}, {2, 2}}) {
        StabilityDomain d = StabilityDomain::build(g, n);
        for (int k = 0; k < 25; ++k) {
            Polarization L = random_pol(d, rng);
            VFunction f = sigma_of(L);
            auto back = classical_feasible(f);
            REQUIRE(back.has_value());
            CHECK(sigma_of(*back) == f);
        }
    }
}

TEST_CASE("feasibility certificates for the canonical functions") {
    StabilityDomain d = StabilityDomain::build(3, 0);
    auto cert = classical_feasible(canonical_vfunction(d, 2));
    REQUIRE(cert.has_value());
    CHECK(cert->beta == Rat(1, 2));

    // every function at (2,0) is classical
    StabilityDomain d2 = StabilityDomain::build(2, 0);
    for (long long chi = -3; chi <= 3; ++chi)
        CHECK(classical_feasible(canonical_vfunction(d2, chi)).has_value());
}

TEST_CASE("the unilateral 3-subset raises at (1,6) are not classical") {
    StabilityDomain d = StabilityDomain::build(1, 6);
    VFunction phi = classical_ns(d, 2, std::vector<Rat>(6, Rat(1, 3)));
    CHECK(classical_feasible(phi).has_value());
    // raise one 3-subset side
    VFunction raised = phi;
    raised.at(*d.index_of(hv(2, 0, {1, 2, 3}))) += 1;
    REQUIRE(validate(raised).ok());
    CHECK(!classical_feasible(raised).has_value());
}

TEST_CASE("equivariance under integral translation") {
    std::mt19937 rng(31337);
    StabilityDomain d = StabilityDomain::build(2, 1);
    for (int k = 0; k < 30; ++k) {
        Polarization L = random_pol(d, rng);
        GroupElement M = identity_element(d);
        M.beta = static_cast<long long>(rng() % 5) - 2;
        for (auto& a : M.alpha) a = static_cast<long long>(rng() % 5) - 2;
        for (auto& c : M.gamma) c = static_cast<long long>(rng() % 5) - 2;
        Polarization sum = L;
        sum.beta += rat(M.beta);
        for (int i = 0; i < d.n(); ++i) sum.alpha[i] += rat(M.alpha[i]);
        for (size_t p = 0; p < sum.gamma.size(); ++p) sum.gamma[p] += rat(M.gamma[p]);
        CHECK(sigma_of(sum) == act(M, sigma_of(L)));
    }
}

TEST_CASE("polarization invariants are enforced") {
    StabilityDomain d1 = StabilityDomain::build(1, 2);
    CHECK_THROWS_AS(make_polarization(d1, Rat(1, 2), {Rat(0), Rat(0)}),
                    std::invalid_argument);  // g = 1 forces beta = 0
    CHECK_THROWS_AS(make_polarization(d1, Rat(0), {Rat(1, 3), Rat(0)}),
                    std::invalid_argument);  // non-integral degree
    StabilityDomain d0 = StabilityDomain::build(0, 4);
    CHECK_THROWS_AS(make_polarization(d0, Rat(0), {Rat(1), Rat(0), Rat(0), Rat(0)}),
                    std::invalid_argument);  // g = 0 forces equal alpha
    CHECK(make_polarization(d0, Rat(0), std::vector<Rat>(4, Rat(1, 2))).chi() == 2);
}

TEST_CASE("every function at n = 0 is classical") {
    for (int g : {2, 3, 4}) {
        StabilityDomain d = StabilityDomain::build(g, 0);
        for (const VFunction& ns : enumerate_normalized(d)) {
            // both separating patterns on the non-self-complementary pairs
            for (bool degenerate : {false, true}) {
                VFunction sep{&d, Part::Sep, ns.chi,
                              std::vector<long long>(d.separating().size(), 0)};
                bool possible = true;
                for (int i : d.sep_pair_reps()) {
                    if (d.complement(i) == i) {
                        // parity decides; no choice to make
                        if ((ns.chi % 2 + 2) % 2 == (degenerate ? 1 : 0)) possible = false;
                        sep.at(i) = degenerate ? ns.chi / 2 : (ns.chi + 1) / 2;
                    } else {
                        sep.at(i) = 0;
                        sep.at(d.complement(i)) = degenerate ? ns.chi : ns.chi + 1;
                    }
                }
                if (!possible) continue;
                VFunction f = join(sep, ns);
                if (!validate(f).ok()) continue;
                CHECK(classical_feasible(f).has_value());
            }
        }
    }
}
