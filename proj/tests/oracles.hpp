#pragma once

// Independent brute-force reference implementations used to pin expected
// values.  Nothing here calls into the library's domain / validation logic;
// everything is recomputed from the raw inequalities.

#include <array>
#include <cstdint>
#include <vector>

#include "vjac/vfunction.hpp"

namespace oracle {

struct Elem {
    int e, h;
    std::uint64_t marks;
    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

// All (e;h,A) with e >= 1, 0 <= h <= g-e+1, A inside [n], and both
// 2h-2+e+|A| > 0 and 2g-2h-e+|A^c| > 0; sorted.
std::vector<Elem> domain_elements(int g, int n);

// All multisets [x1,x2,x3] of domain elements with even edge sum, pairwise
// e_i+e_j >= e_k+2, marks partitioning [n] and g = h1+h2+h3 + (e sum)/2 - 2;
// sorted triples of positions into domain_elements(g,n).
std::vector<std::array<int, 3>> triangles(int g, int n);

// Literal clause-by-clause check of the two defining conditions of a
// V-function on the oracle's own element/triangle lists.  values are indexed
// like domain_elements(g,n); cover[i] marks the elements the function is
// defined on (complement-closed).
bool is_vfunction(int g, int n, long long chi, const std::vector<long long>& values,
                  const std::vector<bool>& cover);

// Brute-force up-set of a library function: every 0/1 raise vector filtered
// by the literal validity check.
std::vector<std::vector<long long>> upset_values(const vjac::VFunction& f);

// Longest strictly ascending chain above f, on the brute-force up-set.
int height(const vjac::VFunction& f);

// Product iteration over the normalization boxes, filtered by the literal
// validity check; returns (chi, ns values in canonical ns order).
std::vector<std::pair<long long, std::vector<long long>>> normalized_ns(int g, int n);

// Families of subsets of [n] containing the empty set and closed under
// complement and disjoint union.
int count_dynkin_systems(int n);

}  // namespace oracle
