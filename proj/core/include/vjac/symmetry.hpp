#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "vjac/vfunction.hpp"

namespace vjac {

// Node budget for backtracking searches; throws when exhausted.  Shared
// across worker threads, so the count is atomic.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

struct SearchBudget {
    std::atomic<std::uint64_t> remaining{UINT64_MAX};

    SearchBudget() = default;
    explicit SearchBudget(std::uint64_t limit) : remaining(limit) {}

    void tick() {
        if (remaining.fetch_sub(1, std::memory_order_relaxed) == 0) {
            remaining.store(0, std::memory_order_relaxed);
            throw BudgetExceeded();
        }
    }
};

// An element (beta, alpha, gamma, epsilon) of the integral translation group
// extended by dualization; gamma is indexed like dom->separating().  The
// action is: dualize epsilon times, then translate.
struct GroupElement {
    const StabilityDomain* dom = nullptr;
    long long beta = 0;
    std::vector<long long> alpha;
    std::vector<long long> gamma;
    int epsilon = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(const StabilityDomain& d);
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

// v -> -v on degenerate elements, -v + 1 elsewhere; chi -> -chi.
VFunction dualize(const VFunction& f);

VFunction act(const GroupElement& g, const VFunction& f);

// --- normalization ------------------------------------------------------------

struct NormalizedNs {
    VFunction ns;              // anchors (3;0,@) and (2;0,{i}) set to 0
    GroupElement translation;  // the pure translation that was applied
    bool anchors_missing = false;
};

// Unique pure-translation normal form of a non-separating part.
NormalizedNs normalize_ns(const VFunction& ns_part);

// All normalized non-separating parts: backtracking over the integer box
// -(2h+e+|A|-3) <= sigma(e;h,A) <= 0 with the pair coupling through chi and
// triangle-constraint propagation.  Sorted by (chi, values).
std::vector<VFunction> enumerate_normalized(const StabilityDomain& d,
                                            SearchBudget* budget = nullptr, int threads = 1);

// --- canonical forms and isomorphism -------------------------------------------

struct CanonicalKey {
    long long chi = 0;
    std::vector<long long> ns_values;
    std::vector<int> sep_degenerate;  // pair representatives in the separating part

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// Lexicographic minimum over dualization of the normalized (chi, ns values),
// together with the separating degeneracy pairs (full key only).
CanonicalKey canonical_form(const VFunction& f);
CanonicalKey space_key(const VFunction& f);  // ns data only

bool stack_isomorphic(const VFunction& f1, const VFunction& f2);
bool space_isomorphic(const VFunction& f1, const VFunction& f2);

}  // namespace vjac
