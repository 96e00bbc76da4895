#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vjac/domain.hpp"
#include "vjac/rational.hpp"

namespace vjac {

enum class Part { Full, Sep, NonSep };

// The element indices a part is defined on, in canonical order.
const std::vector<int>& part_indices(const StabilityDomain& d, Part part);

// An integer function on (part of) a stability domain together with its
// characteristic chi.  Pair and triangle conditions are not enforced on
// construction; run validate() to check them.
struct VFunction {
    const StabilityDomain* dom = nullptr;
    Part part = Part::Full;
    long long chi = 0;
    // values[k] is the value on part_indices(*dom, part)[k].
    std::vector<long long> values;

    const std::vector<int>& indices() const { return part_indices(*dom, part); }
    // Value at a domain element index (must belong to the part).
    long long at(int domain_idx) const;
    long long& at(int domain_idx);
    bool covers(int domain_idx) const;

    friend bool operator==(const VFunction&, const VFunction&) = default;
};

VFunction make_vfunction(const StabilityDomain& d, Part part, long long chi,
                         std::vector<long long> values);

// --- validation --------------------------------------------------------------

struct Violation {
    enum class Kind { PairSum, TriangleTwoDegenerate, TriangleSum };
    Kind kind;
    int a = -1;         // element index (pair violations: the representative)
    int triangle = -1;  // index into dom->triangles()
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Exhaustive check of the pair condition sigma(x)+sigma(x^c)-chi in {0,1}
// (2 sigma(x)-chi in {0,1} for self-complementary x) and of the triangle
// conditions.  Sep parts see no triangles.
ValidationReport validate(const VFunction& f);

bool pair_degenerate(const VFunction& f, int domain_idx);

// --- degeneracy ---------------------------------------------------------------

struct DegSet {
    const StabilityDomain* dom = nullptr;
    std::vector<int> indices;  // sorted element indices

    bool contains(int idx) const;
    int size() const { return static_cast<int>(indices.size()); }
    friend bool operator==(const DegSet&, const DegSet&) = default;
};

DegSet degeneracy_set(const VFunction& f);
bool is_general(const VFunction& f);

// --- order --------------------------------------------------------------------

enum class OrderRel { Less, Greater, Equal, Incomparable };

OrderRel compare(const VFunction& f1, const VFunction& f2);
bool leq(const VFunction& f1, const VFunction& f2);

// --- split / join ---------------------------------------------------------------

std::pair<VFunction, VFunction> split(const VFunction& f);  // (sep, nonsep)
VFunction join(const VFunction& sep, const VFunction& nonsep);

// --- constructions ---------------------------------------------------------------

// Canonical function of genus g: (e;h) -> ceil(chi (2h-2+e) / (2g-2)) on a
// domain with n = 0, g >= 2.
VFunction canonical_vfunction(const StabilityDomain& d, long long chi);

// Classical non-separating part from mark coefficients alpha:
//   g >= 2:  ceil((chi - sum alpha) (2h-2+e)/(2g-2) + sum_{i in A} alpha_i)
//   g == 1:  ceil(sum_{i in A} alpha_i), requires sum alpha = chi
//   g == 0:  empty part.
VFunction classical_ns(const StabilityDomain& d, long long chi, const std::vector<Rat>& alpha);

// n = 1 only: constant on each log-degree level of the primitive domain.
bool is_uniform(const VFunction& f);

// --- up-sets and height ------------------------------------------------------------

// All valid g >= f; obtained by raising one side of a subset of degenerate
// pairs and filtering by validate.  Includes f itself.
std::vector<VFunction> upset(const VFunction& f);

// Longest strictly ascending chain starting at f, computed exactly on the
// up-set.
int height(const VFunction& f);

long long ceil_div(long long num, long long den);  // den > 0

}  // namespace vjac
