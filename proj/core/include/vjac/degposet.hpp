#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vjac/symmetry.hpp"
#include "vjac/vfunction.hpp"

namespace vjac {

// Complement- and triangle-closure of a candidate degeneracy subset.
ValidationReport validate_degset(const DegSet& D);

DegSet make_degset(const StabilityDomain& d, std::vector<int> indices);
DegSet restrict_ns(const DegSet& D);
DegSet restrict_sep(const DegSet& D);

// A witness certifying D1 >= D2 (with D1 a subset of D2): a one-sided
// selection E inside D2 - D1 meeting every triangle of D2 with exactly one
// D1-member once, and every triangle inside D2 - D1 once or twice.
struct Witness {
    std::vector<int> indices;  // sorted
};

// All witnesses for D1 >= D2; empty when none exist (in particular when
// D2 - D1 contains a self-complementary element).
std::vector<Witness> witnesses(const DegSet& D1, const DegSet& D2,
                               SearchBudget* budget = nullptr);

// D1 >= D2 in the degeneracy poset: D1 inside D2 plus a witness.
bool dominates(const DegSet& D1, const DegSet& D2, SearchBudget* budget = nullptr);

// f2 + indicator(E); checks the result is valid with degeneracy D1.
VFunction lift(const VFunction& f2, const DegSet& D1, const Witness& E);

// Cached normalized enumeration of a domain, indexed by the degeneracy set of
// the non-separating part.
class RealizabilityIndex {
  public:
    explicit RealizabilityIndex(const StabilityDomain& d, SearchBudget* budget = nullptr);

    const StabilityDomain& domain() const { return *dom_; }
    // Normalized non-separating parts with the given ns degeneracy set.
    const std::vector<VFunction>* find(const DegSet& ns_deg) const;
    const std::vector<VFunction>& all() const { return normalized_; }

  private:
    const StabilityDomain* dom_;
    std::vector<VFunction> normalized_;
    std::map<std::vector<int>, std::vector<VFunction>> by_deg_;
};

// A full V-function of characteristic chi with degeneracy set D, or nullopt.
std::optional<VFunction> realize(const DegSet& D, long long chi, const RealizabilityIndex& idx);

// --- walls and submaximal elements ---------------------------------------------

// W_delta: unmixed pairs {(e;h,@),(e;h,@)^c} with delta | 2h-2+e.
DegSet wall_W(const StabilityDomain& d, int delta);
// W_{A,delta}: pairs {(e;h,A),(e;h,A)^c} with 2h-2+e = delta - |A|.
DegSet wall_W_mixed(const StabilityDomain& d, Mask A, int delta);

// For n >= 1, the submaximal (height one) elements of the realizable
// degeneracy poset: all separating pairs, all mixed pairs, the unmixed pairs
// with primitive-side log degree >= g, and the walls W_delta with
// 1 <= delta <= g-1.
std::vector<DegSet> enumerate_submaximal(const StabilityDomain& d);

// All complement- and triangle-closed subsets (exhaustive; desk scale).
std::vector<DegSet> enumerate_closed_subsets(const StabilityDomain& d);

// Submaximal elements found by raw poset search over realizable closed
// subsets; works for any n, used at n = 0 and as the oracle for the closed
// form above.
std::vector<DegSet> submaximal_by_search(const StabilityDomain& d,
                                         const RealizabilityIndex& idx);

// --- the n = 1 classification -----------------------------------------------------

struct N1Class {
    enum Kind { Empty, Wall, Antichain, NotRealizable } kind = Empty;
    int delta = 0;                // Wall
    std::vector<int> antichain;   // Antichain: primitive element indices
};

// Classifies the non-separating part of D (n = 1, D closed).
N1Class n1_classify(const DegSet& D);

// Height of a realizable D at n = 1: the classified non-separating height
// (0 / 1 / |A|) plus one per separating pair.
int n1_height(const DegSet& D);

// The function taking 2 strictly above the antichain and 1 elsewhere on the
// primitive domain, extended to a full V-function of characteristic chi with
// a non-degenerate separating part.
VFunction antichain_sigma(const StabilityDomain& d, const std::vector<int>& antichain,
                          long long chi);

// --- genus 1: Dynkin systems and mildly superadditive functions ---------------------

// Adds {@, [n]}; input must be the ns part of a closed subset at g = 1.
std::vector<Mask> to_dynkin(const DegSet& D);
// Strips {@, [n]} after checking the Dynkin axioms.
DegSet from_dynkin(const StabilityDomain& d, const std::vector<Mask>& system);

// f(@)=0, f([n])=chi, f(A)=sigma(2;0,A); indexed by mask.
std::vector<long long> msa_of(const VFunction& f);

// The characteristic-2 functions on (1,6) taking 2 on |A| >= 4 and on the
// 3-subsets in S, and 1 on the rest; S must avoid its own complements.
VFunction phi_S(const StabilityDomain& d, const std::vector<Mask>& S);

// --- connectivity through height one ------------------------------------------------

struct HeightOnePath {
    // Odd length, alternating maximal / submaximal, endpoints maximal.
    std::vector<VFunction> nodes;
};

std::optional<HeightOnePath> connect_height_one(const VFunction& a, const VFunction& b,
                                                SearchBudget* budget = nullptr);

// Checks alternation, validity, domination and submaximality of a path.
bool verify_height_one_path(const HeightOnePath& path, const VFunction& a, const VFunction& b);

}  // namespace vjac
