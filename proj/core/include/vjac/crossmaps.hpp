#pragma once

#include "vjac/polarization.hpp"
#include "vjac/vfunction.hpp"

namespace vjac {

// The domains at (g,n) and (g,n+1) with the mark-insertion maps xi_i and the
// mark-deletion map varpi precomputed as index maps.  Functions returned by
// the level maps point into the domains owned here.
class LevelPair {
  public:
    LevelPair(int g, int n);

    const StabilityDomain& low() const { return low_; }
    const StabilityDomain& high() const { return high_; }
    const StabilityDomain& low_extended() const { return low_ext_; }

    int g() const { return low_.g(); }
    int n() const { return low_.n(); }

    int xi_index(int i, int low_idx) const { return xi_map_.at(i - 1).at(low_idx); }
    int varpi_index(int high_idx) const { return varpi_map_.at(high_idx); }

  private:
    StabilityDomain low_, high_, low_ext_;
    std::vector<std::vector<int>> xi_map_;  // [i-1][low idx] -> high idx
    std::vector<int> varpi_map_;            // high idx -> low extended idx
};

// Xi_i(tau) = tau o xi_i, a function at (g,n) from one at (g,n+1); needs n >= 1.
VFunction level_down(const LevelPair& lp, int i, const VFunction& tau);

// Omega(sigma) = sigma-hat o varpi where sigma-hat extends sigma by 0 on the
// degree-0 side of each extra extended element and by chi on the other side.
VFunction level_up(const LevelPair& lp, const VFunction& sigma);

// The two one-sided general raises of Omega(sigma): add 1 on degenerate
// elements carrying mark n+1 (plus) or not carrying it (minus).
VFunction level_up_plus(const LevelPair& lp, const VFunction& sigma);
VFunction level_up_minus(const LevelPair& lp, const VFunction& sigma);

// Polarization counterparts; sigma_of commutes with both.
Polarization level_down_pol(const LevelPair& lp, int i, const Polarization& L);
Polarization level_up_pol(const LevelPair& lp, const Polarization& L);

}  // namespace vjac
