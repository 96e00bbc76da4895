#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vjac/rational.hpp"
#include "vjac/vfunction.hpp"

namespace vjac {

// A relative R-line bundle with integral relative degree, in the coordinates
// beta (omega), alpha_i (marked sections) and gamma_{(h,A)} (one boundary
// coefficient per separating element of the domain, aligned with
// dom->separating()).  For g = 1 beta must be 0; for g = 0 all alpha agree.
struct Polarization {
    const StabilityDomain* dom = nullptr;
    Rat beta;
    std::vector<Rat> alpha;
    std::vector<Rat> gamma;

    Rat relative_degree() const;
    long long chi() const;  // throws if the relative degree is not integral
};

Polarization make_polarization(const StabilityDomain& d, Rat beta, std::vector<Rat> alpha,
                               std::vector<Rat> gamma = {});
void check_polarization(const Polarization& L);

// The exact argument of the ceiling in sigma_L at an element.
Rat ceiling_argument(const Polarization& L, int idx);

// sigma_L: e = 1 -> ceil(beta(2h-1) + sum_{i in A} alpha_i - gamma_x + gamma_{x^c}),
//          e >= 2 -> ceil(beta(2h-2+e) + sum_{i in A} alpha_i).
VFunction sigma_of(const Polarization& L);

// Region data of L with respect to the degree hyperplane arrangement: for the
// canonical representative of each complementary pair, the floor of the exact
// form value and whether it is integral.  Equal signatures characterize equal
// sigma_L.
struct RegionSignature {
    long long chi = 0;  // the degree component the region lives in
    std::vector<std::pair<Int, bool>> per_pair;
    friend bool operator==(const RegionSignature&, const RegionSignature&) = default;
};

RegionSignature region_signature(const Polarization& L);
bool same_region(const Polarization& L1, const Polarization& L2);

// Search for L with sigma_L = f.  The non-separating part yields a linear
// system over (beta, alpha) with the degree equality; each degenerate pair
// pins its form to an integer and each non-degenerate pair confines it to an
// open unit interval.  Separating values are absorbed by gamma in closed form.
// Returns a certificate or nullopt (infeasibility is definitive).
std::optional<Polarization> classical_feasible(const VFunction& f);

}  // namespace vjac
