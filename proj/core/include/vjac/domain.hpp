#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vjac {

// Subsets of the mark set {1,...,n} as bit masks; mark i is bit (i-1).
using Mask = std::uint64_t;

constexpr int kMaxMarks = 62;

int popcount(Mask m);
Mask full_mask(int n);
std::vector<int> mask_to_list(Mask m);
Mask list_to_mask(const std::vector<int>& marks, int n);

// Lexicographic order on subsets written as sorted integer lists,
// e.g. {1} < {1,2} < {1,3} < {2}.
bool marks_lex_less(Mask a, Mask b);

// A half vine type (e; h, A): a two-sided degeneration with e connecting
// nodes, genus h on the chosen side and marks A on the chosen side.
struct HalfVine {
    int e = 0;
    int h = 0;
    Mask marks = 0;

    friend bool operator==(const HalfVine&, const HalfVine&) = default;
};

// Canonical total order: lexicographic on (e, h, A as sorted list).
bool canonical_less(const HalfVine& a, const HalfVine& b);

std::string to_string(const HalfVine& x);

// The finite set of half vine types of type (g,n), with its complement
// involution, its triangles and the separating/non-separating split.
// The strict variant keeps both stability inequalities > 0; the extended
// variant relaxes them to >= 0 and records which elements are extra.
class StabilityDomain {
  public:
    static StabilityDomain build(int g, int n);
    static StabilityDomain build_extended(int g, int n);

    int g() const { return g_; }
    int n() const { return n_; }
    bool extended() const { return extended_; }
    int size() const { return static_cast<int>(elements_.size()); }

    const std::vector<HalfVine>& elements() const { return elements_; }
    const HalfVine& element(int idx) const { return elements_.at(idx); }
    const std::vector<int>& all_indices() const { return all_; }
    std::optional<int> index_of(const HalfVine& x) const;

    int complement(int idx) const { return complement_.at(idx); }
    bool self_complementary(int idx) const { return complement_.at(idx) == idx; }

    // delta(e;h,A) = 2h - 2 + e + |A|
    int log_degree(int idx) const;

    // Unordered multisets of element indices, each sorted, the whole list
    // sorted; every member has e >= 2.
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    const std::vector<int>& separating() const { return sep_; }     // e == 1
    const std::vector<int>& nonseparating() const { return ns_; }   // e >= 2
    bool is_separating(int idx) const { return elements_.at(idx).e == 1; }

    // Position of an element inside separating()/nonseparating(), -1 if absent.
    int sep_pos(int idx) const { return sep_pos_.at(idx); }
    int ns_pos(int idx) const { return ns_pos_.at(idx); }

    // One canonical representative per complementary pair (the smaller index).
    const std::vector<int>& pair_reps() const { return pair_reps_; }
    const std::vector<int>& sep_pair_reps() const { return sep_pair_reps_; }
    const std::vector<int>& ns_pair_reps() const { return ns_pair_reps_; }

    // Extended domains only: false exactly on the elements outside the
    // strict-inequality core.
    bool in_core(int idx) const;

    // Triangle indices touching a given element (into triangles()).
    const std::vector<int>& triangles_at(int idx) const { return tri_at_.at(idx); }

  private:
    StabilityDomain() = default;
    static StabilityDomain build_impl(int g, int n, bool extended);

    int g_ = 0;
    int n_ = 0;
    bool extended_ = false;
    std::vector<HalfVine> elements_;
    std::vector<int> all_;
    std::vector<int> complement_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::vector<int>> tri_at_;
    std::vector<int> sep_, ns_;
    std::vector<int> sep_pos_, ns_pos_;
    std::vector<int> pair_reps_, sep_pair_reps_, ns_pair_reps_;
    std::vector<bool> in_core_;
};

// Two domains describe the same universe (builds are deterministic).
bool same_domain(const StabilityDomain& a, const StabilityDomain& b);

// (e; g-h-e+1, A^c), the other side of the same vine type.
HalfVine complement_of(const StabilityDomain& d, const HalfVine& x);

int log_degree(const HalfVine& x);

// --- structure specific to n = 1 -------------------------------------------

// Primitive elements: non-separating with A = empty, i.e. (e;h) with e >= 2.
bool is_primitive(const StabilityDomain& d, int idx);
std::vector<int> primitive_indices(const StabilityDomain& d);

// i-th composition (e1+e2-2i; h1+h2+i-1) of two primitive types.  Throws if
// i is outside [max(1, h1+h2+e1+e2-g-2), min(e1-1, e2-1)].
HalfVine compose(const StabilityDomain& d, const HalfVine& x1, const HalfVine& x2, int i);
std::pair<int, int> compose_index_range(const StabilityDomain& d, const HalfVine& x1,
                                        const HalfVine& x2);

// Order on primitive types: h1 <= h2 and e1+h1 <= e2+h2.
bool primitive_leq(const HalfVine& x1, const HalfVine& x2);

// --- maps between adjacent mark counts --------------------------------------

// xi_i : D_{g,n} -> D_{g,n+1}, adds mark n+1 alongside mark i.
HalfVine xi(const StabilityDomain& d, int i, const HalfVine& x);

// varpi : D_{g,n+1} -> extended D_{g,n}, deletes mark n+1.
HalfVine varpi(const StabilityDomain& d_high, const HalfVine& x);

}  // namespace vjac
