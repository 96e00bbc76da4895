#pragma once

#include <optional>
#include <vector>

#include "vjac/rational.hpp"

namespace vjac {

// Exact rational linear feasibility with strict and non-strict inequalities.
//
// Equalities are removed first by Gaussian elimination, then the remaining
// variables are eliminated one at a time by Fourier-Motzkin; a combined
// constraint is strict iff either parent is strict.  Constraints are kept in
// a normal form (coprime integer coefficient vector) and only the tightest
// bound per direction is retained, which keeps the projection small for the
// subset-sum systems that arise here.  On success a sample point is
// reconstructed by back-substitution, choosing interior points of the final
// intervals so strict bounds are respected.
class RationalSystem {
  public:
    explicit RationalSystem(int nvars) : nvars_(nvars) {}

    void add_eq(std::vector<Rat> coeff, Rat rhs);
    // sum coeff[i] x_i <= rhs (strict: <)
    void add_le(std::vector<Rat> coeff, Rat rhs, bool strict = false);
    void add_ge(std::vector<Rat> coeff, Rat rhs, bool strict = false);

    // A feasible point, or nullopt if the system is infeasible.
    std::optional<std::vector<Rat>> solve() const;

  private:
    struct Ineq {
        std::vector<Rat> coeff;
        Rat rhs;
        bool strict;
    };
    struct Eq {
        std::vector<Rat> coeff;
        Rat rhs;
    };
    int nvars_;
    std::vector<Ineq> ineqs_;
    std::vector<Eq> eqs_;
};

}  // namespace vjac
