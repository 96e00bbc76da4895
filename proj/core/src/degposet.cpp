#include "vjac/degposet.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace vjac {

DegSet make_degset(const StabilityDomain& d, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices)
        if (i < 0 || i >= d.size()) throw std::invalid_argument("element index out of range");
    return DegSet{&d, std::move(indices)};
}

DegSet restrict_ns(const DegSet& D) {
    DegSet out{D.dom, {}};
    for (int i : D.indices)
        if (!D.dom->is_separating(i)) out.indices.push_back(i);
    return out;
}

DegSet restrict_sep(const DegSet& D) {
    DegSet out{D.dom, {}};
    for (int i : D.indices)
        if (D.dom->is_separating(i)) out.indices.push_back(i);
    return out;
}

ValidationReport validate_degset(const DegSet& D) {
    ValidationReport rep;
    const StabilityDomain& d = *D.dom;
    for (int i : D.indices) {
        if (!D.contains(d.complement(i))) {
            std::ostringstream os;
            os << "complement of " << to_string(d.element(i)) << " is missing";
            rep.violations.push_back({Violation::Kind::PairSum, i, -1, os.str()});
        }
    }
    for (int t = 0; t < static_cast<int>(d.triangles().size()); ++t) {
        const auto& tri = d.triangles()[t];
        int cnt = 0;
        for (int j = 0; j < 3; ++j) cnt += D.contains(tri[j]) ? 1 : 0;
        if (cnt == 2) {
            std::ostringstream os;
            os << "triangle [" << to_string(d.element(tri[0])) << ","
               << to_string(d.element(tri[1])) << "," << to_string(d.element(tri[2]))
               << "] has two members in the set, the third is missing";
            rep.violations.push_back({Violation::Kind::TriangleTwoDegenerate, tri[0], t, os.str()});
        }
    }
    return rep;
}

std::vector<Witness> witnesses(const DegSet& D1, const DegSet& D2, SearchBudget* budget) {
    if (D1.dom != D2.dom && !same_domain(*D1.dom, *D2.dom))
        throw std::invalid_argument("mismatched domains");
    const StabilityDomain& d = *D2.dom;
    for (int i : D1.indices)
        if (!D2.contains(i)) return {};

    std::vector<int> diff;
    for (int i : D2.indices)
        if (!D1.contains(i)) diff.push_back(i);
    if (diff.empty()) return {Witness{{}}};

    auto in_diff = [&](int i) { return std::binary_search(diff.begin(), diff.end(), i); };
    std::vector<int> reps;
    for (int i : diff) {
        int c = d.complement(i);
        if (c == i) return {};  // no consistent side choice
        assert(in_diff(c));
        if (i < c) reps.push_back(i);
    }

    // Constraints from triangles contained in D2.
    struct Tri {
        std::array<int, 3> members;
        bool exact_one;  // else: one or two
    };
    std::vector<Tri> constraints;
    for (const auto& tri : d.triangles()) {
        bool inside = true;
        int cnt1 = 0;
        for (int j = 0; j < 3; ++j) {
            if (!D2.contains(tri[j])) inside = false;
            if (D1.contains(tri[j])) ++cnt1;
        }
        if (!inside || cnt1 == 3) continue;
        assert(cnt1 != 2);  // D1 is triangle-closed
        constraints.push_back({tri, cnt1 == 1});
    }

    // rep position of each diff element, and the step at which a constraint
    // becomes fully decided.
    std::vector<int> rep_pos(d.size(), -1);
    for (size_t k = 0; k < reps.size(); ++k) {
        rep_pos[reps[k]] = static_cast<int>(k);
        rep_pos[d.complement(reps[k])] = static_cast<int>(k);
    }
    std::vector<std::vector<int>> due(reps.size());
    for (int c = 0; c < static_cast<int>(constraints.size()); ++c) {
        int last = -1;
        for (int j = 0; j < 3; ++j) {
            int i = constraints[c].members[j];
            if (in_diff(i)) last = std::max(last, rep_pos[i]);
        }
        assert(last >= 0);
        due[last].push_back(c);
    }

    std::vector<Witness> out;
    std::vector<bool> pick(reps.size());  // true: rep side in E, false: complement side
    std::function<void(size_t)> rec = [&](size_t k) {
        if (budget) budget->tick();
        if (k == reps.size()) {
            Witness w;
            for (size_t j = 0; j < reps.size(); ++j)
                w.indices.push_back(pick[j] ? reps[j] : d.complement(reps[j]));
            std::sort(w.indices.begin(), w.indices.end());
            out.push_back(std::move(w));
            return;
        }
        for (bool side : {true, false}) {
            pick[k] = side;
            bool ok = true;
            for (int c : due[k]) {
                int cnt = 0;
                for (int j = 0; j < 3; ++j) {
                    int i = constraints[c].members[j];
                    if (!in_diff(i)) continue;
                    bool chosen = pick[rep_pos[i]] == (i < d.complement(i));
                    if (chosen) ++cnt;
                }
                if (constraints[c].exact_one ? cnt != 1 : (cnt == 0 || cnt == 3)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const Witness& a, const Witness& b) { return a.indices < b.indices; });
    return out;
}

bool dominates(const DegSet& D1, const DegSet& D2, SearchBudget* budget) {
    return !witnesses(D1, D2, budget).empty();
}

VFunction lift(const VFunction& f2, const DegSet& D1, const Witness& E) {
    VFunction f1 = f2;
    for (int i : E.indices) f1.at(i) += 1;
    if (!validate(f1).ok())
        throw std::invalid_argument("selection is not a witness: lift is not a V-function");
    if (degeneracy_set(f1).indices != D1.indices)
        throw std::invalid_argument("selection is not a witness: wrong degeneracy set");
    return f1;
}

RealizabilityIndex::RealizabilityIndex(const StabilityDomain& d, SearchBudget* budget)
    : dom_(&d), normalized_(enumerate_normalized(d, budget)) {
    for (const VFunction& f : normalized_) by_deg_[degeneracy_set(f).indices].push_back(f);
}

const std::vector<VFunction>* RealizabilityIndex::find(const DegSet& ns_deg) const {
    auto it = by_deg_.find(ns_deg.indices);
    return it == by_deg_.end() ? nullptr : &it->second;
}

std::optional<VFunction> realize(const DegSet& D, long long chi, const RealizabilityIndex& idx) {
    if (!validate_degset(D).ok())
        throw std::invalid_argument("not a degeneracy subset (closure fails)");
    const StabilityDomain& d = idx.domain();
    if (!same_domain(*D.dom, d)) throw std::invalid_argument("mismatched domains");

    // Self-complementary separating pairs (n = 0, even g) fix the parity.
    for (int i : d.sep_pair_reps()) {
        if (!d.self_complementary(i)) continue;
        bool want_deg = D.contains(i);
        if (want_deg != (chi % 2 == 0)) return std::nullopt;
    }

    // Non-separating part via the normalized table, translated to chi.
    VFunction ns{&d, Part::NonSep, chi, std::vector<long long>(d.nonseparating().size(), 0)};
    if (!d.nonseparating().empty()) {
        const auto* cands = idx.find(restrict_ns(D));
        if (!cands) return std::nullopt;
        bool found = false;
        for (const VFunction& cand : *cands) {
            GroupElement t = identity_element(d);
            if (d.n() >= 1) {
                t.alpha[0] = chi - cand.chi;
            } else {
                long long m = 2 * d.g() - 2;
                long long delta = chi - cand.chi;
                if (((delta % m) + m) % m != 0) continue;
                t.beta = delta / m;
            }
            ns = act(t, cand);
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }

    VFunction sep{&d, Part::Sep, chi, std::vector<long long>(d.separating().size(), 0)};
    for (int i : d.sep_pair_reps()) {
        int c = d.complement(i);
        bool degen = D.contains(i);
        if (i == c) {
            sep.at(i) = degen ? chi / 2 : (chi + 1) / 2;
        } else {
            sep.at(i) = 0;
            sep.at(c) = degen ? chi : chi + 1;
        }
    }

    VFunction f = join(sep, ns);
    assert(validate(f).ok());
    assert(degeneracy_set(f).indices == D.indices);
    return f;
}

DegSet wall_W(const StabilityDomain& d, int delta) {
    if (delta < 1 || delta > 2 * d.g() - 2)
        throw std::invalid_argument("wall level outside [1, 2g-2]");
    std::vector<int> idxs;
    for (int i : d.nonseparating()) {
        const HalfVine& x = d.element(i);
        if (x.marks != 0) continue;
        int dd = 2 * x.h - 2 + x.e;
        if (dd % delta == 0) {
            idxs.push_back(i);
            idxs.push_back(d.complement(i));
        }
    }
    return make_degset(d, std::move(idxs));
}

DegSet wall_W_mixed(const StabilityDomain& d, Mask A, int delta) {
    int a = popcount(A);
    if (A == 0 || A == full_mask(d.n()))
        throw std::invalid_argument("mixed wall needs a proper non-empty mark subset");
    if (delta < a || delta > 2 * d.g() - 2 + a)
        throw std::invalid_argument("mixed wall level outside [|A|, 2g-2+|A|]");
    std::vector<int> idxs;
    for (int i : d.nonseparating()) {
        const HalfVine& x = d.element(i);
        if (x.marks != A) continue;
        if (2 * x.h - 2 + x.e == delta - a) {
            idxs.push_back(i);
            idxs.push_back(d.complement(i));
        }
    }
    return make_degset(d, std::move(idxs));
}

std::vector<DegSet> enumerate_submaximal(const StabilityDomain& d) {
    if (d.n() < 1) throw std::invalid_argument("closed-form submaximal list needs n >= 1");
    std::vector<DegSet> out;
    const Mask full = full_mask(d.n());
    for (int i : d.pair_reps()) {
        const HalfVine& x = d.element(i);
        bool take = false;
        if (x.e == 1) take = true;                                 // separating
        else if (x.marks != 0 && x.marks != full) take = true;     // mixed
        else {
            // unmixed pair: the empty-marked side must have log degree >= g
            const HalfVine& u = (x.marks == 0) ? x : d.element(d.complement(i));
            take = 2 * u.h - 2 + u.e >= d.g();
        }
        if (take) out.push_back(make_degset(d, {i, d.complement(i)}));
    }
    for (int delta = 1; delta <= d.g() - 1; ++delta) out.push_back(wall_W(d, delta));
    std::sort(out.begin(), out.end(),
              [](const DegSet& a, const DegSet& b) { return a.indices < b.indices; });
    return out;
}

std::vector<DegSet> enumerate_closed_subsets(const StabilityDomain& d) {
    const auto& reps = d.pair_reps();
    const size_t p = reps.size();
    if (p > 24) throw std::invalid_argument("too many pairs for exhaustive closure enumeration");
    std::vector<DegSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
        std::vector<int> idxs;
        for (size_t k = 0; k < p; ++k) {
            if (!(bits & (std::uint64_t{1} << k))) continue;
            idxs.push_back(reps[k]);
            if (d.complement(reps[k]) != reps[k]) idxs.push_back(d.complement(reps[k]));
        }
        DegSet D = make_degset(d, std::move(idxs));
        if (validate_degset(D).ok()) out.push_back(std::move(D));
    }
    return out;
}

std::vector<DegSet> submaximal_by_search(const StabilityDomain& d,
                                         const RealizabilityIndex& idx) {
    std::vector<DegSet> closed = enumerate_closed_subsets(d);
    std::sort(closed.begin(), closed.end(), [](const DegSet& a, const DegSet& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });

    auto realizable = [&](const DegSet& D) {
        if (d.n() >= 1) return realize(D, 0, idx).has_value();
        if (d.nonseparating().empty())
            return realize(D, 0, idx).has_value() || realize(D, 1, idx).has_value();
        // n = 0: translations fix chi mod 2g-2, so the candidates' own chi
        // values exhaust the reachable parities.
        const auto* cands = idx.find(restrict_ns(D));
        if (!cands) return false;
        for (const VFunction& c : *cands)
            if (realize(D, c.chi, idx)) return true;
        return false;
    };

    // Heights by longest ascending chains; D' > D forces D' strictly inside D,
    // so processing by increasing size sees all dominators first.
    std::vector<int> h(closed.size(), 0);
    for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (closed[j].indices.size() >= closed[i].indices.size()) continue;
            if (closed[j].indices == closed[i].indices) continue;
            if (dominates(closed[j], closed[i]))
                h[i] = std::max(h[i], h[j] + 1);
        }

    std::vector<DegSet> out;
    for (size_t i = 0; i < closed.size(); ++i)
        if (h[i] == 1 && realizable(closed[i])) out.push_back(closed[i]);
    std::sort(out.begin(), out.end(),
              [](const DegSet& a, const DegSet& b) { return a.indices < b.indices; });
    return out;
}

N1Class n1_classify(const DegSet& D) {
    const StabilityDomain& d = *D.dom;
    if (d.n() != 1) throw std::invalid_argument("classification is for n = 1");
    if (!validate_degset(D).ok())
        throw std::invalid_argument("not a degeneracy subset (closure fails)");
    std::vector<int> prim;
    for (int i : D.indices)
        if (is_primitive(d, i)) prim.push_back(i);
    N1Class out;
    if (prim.empty()) {
        out.kind = N1Class::Empty;
        return out;
    }
    int deltaD = 1 << 30;
    for (int i : prim) deltaD = std::min(deltaD, d.log_degree(i));
    if (deltaD <= d.g() - 1) {
        DegSet w = wall_W(d, deltaD);
        if (restrict_ns(D).indices == w.indices) {
            out.kind = N1Class::Wall;
            out.delta = deltaD;
        } else {
            out.kind = N1Class::NotRealizable;
        }
        return out;
    }
    // log degree >= g: closure forces the primitive part to be an antichain
    for (size_t a = 0; a < prim.size(); ++a)
        for (size_t b = 0; b < prim.size(); ++b) {
            if (a == b) continue;
            const HalfVine& xa = d.element(prim[a]);
            const HalfVine& xb = d.element(prim[b]);
            if (primitive_leq(xa, xb) && !(xa == xb)) {
                out.kind = N1Class::NotRealizable;  // not closed after all
                return out;
            }
        }
    out.kind = N1Class::Antichain;
    out.antichain = prim;
    return out;
}

int n1_height(const DegSet& D) {
    N1Class c = n1_classify(D);
    int ns_h = 0;
    switch (c.kind) {
        case N1Class::Empty: ns_h = 0; break;
        case N1Class::Wall: ns_h = 1; break;
        case N1Class::Antichain: ns_h = static_cast<int>(c.antichain.size()); break;
        case N1Class::NotRealizable:
            throw std::invalid_argument("height is defined for realizable subsets");
    }
    return ns_h + static_cast<int>(restrict_sep(D).indices.size()) / 2;
}

VFunction antichain_sigma(const StabilityDomain& d, const std::vector<int>& antichain,
                          long long chi) {
    if (d.n() != 1) throw std::invalid_argument("antichain construction is for n = 1");
    for (int i : antichain) {
        if (!is_primitive(d, i) || d.log_degree(i) < d.g())
            throw std::invalid_argument("antichain must consist of primitives of degree >= g");
        for (int j : antichain)
            if (i != j && primitive_leq(d.element(i), d.element(j)))
                throw std::invalid_argument("set is not an antichain");
    }
    auto in_A = [&](int i) { return std::find(antichain.begin(), antichain.end(), i) !=
                                    antichain.end(); };
    VFunction f{&d, Part::Full, chi, std::vector<long long>(d.size(), 0)};
    for (int i : d.nonseparating()) {
        if (is_primitive(d, i)) {
            long long tau = 1;
            for (int a : antichain) {
                const HalfVine& y = d.element(a);
                const HalfVine& x = d.element(i);
                if (primitive_leq(y, x) && !(y == x)) tau = 2;
            }
            f.at(i) = tau;
        }
    }
    for (int i : d.nonseparating()) {
        if (is_primitive(d, i)) continue;
        int c = d.complement(i);
        f.at(i) = in_A(c) ? chi - f.at(c) : chi + 1 - f.at(c);
    }
    for (int i : d.sep_pair_reps()) {
        f.at(i) = 1;
        f.at(d.complement(i)) = chi;
    }
    return f;
}

std::vector<Mask> to_dynkin(const DegSet& D) {
    const StabilityDomain& d = *D.dom;
    if (d.g() != 1) throw std::invalid_argument("Dynkin systems arise at g = 1");
    std::vector<Mask> out{0, full_mask(d.n())};
    for (int i : D.indices)
        if (!d.is_separating(i)) out.push_back(d.element(i).marks);
    std::sort(out.begin(), out.end(), marks_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DegSet from_dynkin(const StabilityDomain& d, const std::vector<Mask>& members) {
    if (d.g() != 1) throw std::invalid_argument("Dynkin systems arise at g = 1");
    const Mask full = full_mask(d.n());
    // the empty set and its complement are members of every Dynkin system
    std::vector<Mask> system = members;
    for (Mask forced : {Mask{0}, full})
        if (std::find(system.begin(), system.end(), forced) == system.end())
            system.push_back(forced);
    auto has = [&](Mask m) {
        return std::find(system.begin(), system.end(), m) != system.end();
    };
    for (Mask a : system) {
        if (a & ~full) throw std::invalid_argument("subset outside the mark range");
        if (!has(full & ~a)) throw std::invalid_argument("system is not complement-closed");
        for (Mask b : system)
            if (!(a & b) && !has(a | b))
                throw std::invalid_argument("system is not closed under disjoint unions");
    }
    std::vector<int> idxs;
    for (Mask a : system) {
        if (a == 0 || a == full) continue;
        auto i = d.index_of({2, 0, a});
        if (!i) throw std::invalid_argument("no non-separating element for a member subset");
        idxs.push_back(*i);
    }
    return make_degset(d, std::move(idxs));
}

std::vector<long long> msa_of(const VFunction& f) {
    const StabilityDomain& d = *f.dom;
    if (d.g() != 1) throw std::invalid_argument("mildly superadditive functions arise at g = 1");
    std::vector<long long> out(std::size_t{1} << d.n(), 0);
    out[full_mask(d.n())] = f.chi;
    for (int i : d.nonseparating()) out[d.element(i).marks] = f.at(i);
    return out;
}

VFunction phi_S(const StabilityDomain& d, const std::vector<Mask>& S) {
    if (d.g() != 1 || d.n() != 6) throw std::invalid_argument("phi^S lives on (g,n) = (1,6)");
    const Mask full = full_mask(6);
    for (Mask s : S) {
        if (popcount(s) != 3) throw std::invalid_argument("S must consist of 3-subsets");
        if (std::find(S.begin(), S.end(), full & ~s) != S.end())
            throw std::invalid_argument("S meets its own complement family");
    }
    const long long chi = 2;
    VFunction f{&d, Part::Full, chi, std::vector<long long>(d.size(), 0)};
    for (int i : d.nonseparating()) {
        Mask a = d.element(i).marks;
        int sz = popcount(a);
        bool high = sz >= 4 || (sz == 3 && std::find(S.begin(), S.end(), a) != S.end());
        f.at(i) = high ? 2 : 1;
    }
    for (int i : d.sep_pair_reps()) {
        f.at(i) = 1;
        f.at(d.complement(i)) = chi;
    }
    return f;
}

// --- connectivity ---------------------------------------------------------------

namespace {

// Lower one side of a non-degenerate pair, then raise the other: one unit of
// movement through a height-one element.  Returns {mid, next} or nullopt.
std::optional<std::pair<VFunction, VFunction>> unit_hop(const VFunction& f, int lower_side) {
    VFunction mid = f;
    mid.at(lower_side) -= 1;
    if (!validate(mid).ok()) return std::nullopt;
    VFunction next = mid;
    next.at(f.dom->complement(lower_side)) += 1;
    if (!validate(next).ok() || !is_general(next)) return std::nullopt;
    return std::make_pair(std::move(mid), std::move(next));
}

// n = 1: make the primitive values constant on every log-degree level.
bool uniformize_n1(VFunction& cur, std::vector<VFunction>& nodes) {
    const StabilityDomain& d = *cur.dom;
    for (;;) {
        std::map<int, std::vector<int>> levels;
        for (int i : primitive_indices(d)) levels[d.log_degree(i)].push_back(i);
        int bad_delta = -1;
        for (auto& [delta, idxs] : levels) {
            long long lo = cur.at(idxs[0]), hi = lo;
            for (int i : idxs) {
                lo = std::min(lo, cur.at(i));
                hi = std::max(hi, cur.at(i));
            }
            if (hi != lo) {
                if (hi - lo != 1) return false;
                bad_delta = delta;
                break;
            }
        }
        if (bad_delta < 0) return true;
        auto& idxs = levels[bad_delta];
        long long lo = cur.at(idxs[0]);
        for (int i : idxs) lo = std::min(lo, cur.at(i));
        // minimal low element in the primitive order
        int x0 = -1;
        for (int i : idxs) {
            if (cur.at(i) != lo) continue;
            if (x0 < 0 || (primitive_leq(d.element(i), d.element(x0)) &&
                           !(d.element(i) == d.element(x0))))
                x0 = i;
        }
        auto hop = unit_hop(cur, d.complement(x0));
        if (!hop) return false;
        nodes.push_back(hop->first);
        nodes.push_back(hop->second);
        cur = hop->second;
    }
}

struct UniformView {
    std::map<int, long long> sigma;  // level -> value on primitives
};

UniformView uniform_view(const VFunction& f) {
    UniformView v;
    for (int i : primitive_indices(*f.dom)) v.sigma[f.dom->log_degree(i)] = f.at(i);
    return v;
}

// Open interval of slopes realizing a uniform general function.
std::pair<Rat, Rat> slope_interval(const UniformView& v) {
    bool have = false;
    Rat lo, hi;
    for (auto& [delta, s] : v.sigma) {
        Rat l = rat(s - 1, delta), h = rat(s, delta);
        if (!have) {
            lo = l;
            hi = h;
            have = true;
        } else {
            lo = std::max(lo, l);
            hi = std::min(hi, h);
        }
    }
    if (!have || !(lo < hi)) throw std::logic_error("uniform function has no slope interval");
    return {lo, hi};
}

// Full function with the separating part of `like`, primitive values p(delta)
// and complementary values q(delta) = value at the full-marked side.
VFunction from_levels(const VFunction& like, const std::function<long long(int)>& prim,
                      const std::function<long long(int)>& co) {
    const StabilityDomain& d = *like.dom;
    VFunction f = like;
    for (int i : d.nonseparating()) {
        if (is_primitive(d, i))
            f.at(i) = prim(d.log_degree(i));
        else
            f.at(i) = co(d.log_degree(d.complement(i)));
    }
    return f;
}

// Cross one wall of the slope line at beta0, from the region below (to_right)
// or above (to_left) of it, through height-one elements.
bool cross_wall(VFunction& cur, const Rat& beta0, bool to_right,
                std::vector<VFunction>& nodes) {
    const StabilityDomain& d = *cur.dom;
    const long long chi = cur.chi;
    auto fl = [&](int delta) { return to_ll(rat_floor(beta0 * delta)); };
    auto cl = [&](int delta) { return to_ll(rat_ceil(beta0 * delta)); };

    VFunction below = from_levels(cur, [&](int dd) { return cl(dd); },
                                  [&](int dd) { return chi + 1 - cl(dd); });
    VFunction at = from_levels(cur, [&](int dd) { return cl(dd); },
                               [&](int dd) { return chi - fl(dd); });
    VFunction above = from_levels(cur, [&](int dd) { return fl(dd) + 1; },
                                  [&](int dd) { return chi - fl(dd); });
    VFunction& src = to_right ? below : above;
    VFunction& dst = to_right ? above : below;
    if (!(cur == src)) return false;
    if (!validate(at).ok() || !validate(dst).ok()) return false;

    long long q = to_ll(Int(beta0.get_den()));
    if (q <= d.g() - 1) {
        nodes.push_back(at);
        nodes.push_back(dst);
        cur = dst;
        return true;
    }
    // q >= g: the wall pairs form an antichain; hop them one at a time.
    std::vector<int> wall_prims;
    for (int i : primitive_indices(d))
        if (d.log_degree(i) % q == 0) wall_prims.push_back(i);
    VFunction walk = src;
    for (int i : wall_prims) {
        VFunction next = walk;
        next.at(i) = dst.at(i);
        next.at(d.complement(i)) = dst.at(d.complement(i));
        VFunction mid = walk;
        // min(walk, next) on the hopped pair
        mid.at(i) = std::min(walk.at(i), next.at(i));
        mid.at(d.complement(i)) = std::min(walk.at(d.complement(i)), next.at(d.complement(i)));
        if (!validate(mid).ok() || !validate(next).ok() || !is_general(next)) return false;
        nodes.push_back(mid);
        nodes.push_back(next);
        walk = next;
    }
    if (!(walk == dst)) return false;
    cur = dst;
    return true;
}

bool walk_classical_n1(VFunction& cur, const VFunction& target,
                       std::vector<VFunction>& nodes, SearchBudget* budget) {
    auto [tlo, thi] = slope_interval(uniform_view(target));
    Rat beta_star = (tlo + thi) / 2;
    for (;;) {
        if (budget) budget->tick();
        auto [lo, hi] = slope_interval(uniform_view(cur));
        if (lo < beta_star && beta_star < hi) break;
        if (beta_star >= hi) {
            if (!cross_wall(cur, hi, /*to_right=*/true, nodes)) return false;
        } else {
            if (!cross_wall(cur, lo, /*to_right=*/false, nodes)) return false;
        }
    }
    return cur == target;
}

}  // namespace

std::optional<HeightOnePath> connect_height_one(const VFunction& a, const VFunction& b,
                                                SearchBudget* budget) {
    if (!same_domain(*a.dom, *b.dom) || a.part != Part::Full || b.part != Part::Full)
        throw std::invalid_argument("expect full functions on one domain");
    if (!validate(a).ok() || !validate(b).ok() || !is_general(a) || !is_general(b))
        throw std::invalid_argument("endpoints must be valid general functions");
    if (a.chi != b.chi) return std::nullopt;

    const StabilityDomain& d = *a.dom;
    HeightOnePath path;
    path.nodes.push_back(a);
    VFunction cur = a;

    // One unit of movement on a pair toward b's value; false if the hop
    // would leave the valid functions.
    auto hop_one = [&](int pair_rep) -> bool {
        int i = pair_rep, c = d.complement(pair_rep);
        int lower = cur.at(i) > b.at(i) ? i : c;
        auto hop = unit_hop(cur, lower);
        if (!hop) return false;
        path.nodes.push_back(hop->first);
        path.nodes.push_back(hop->second);
        cur = hop->second;
        return true;
    };

    for (int i : d.sep_pair_reps()) {
        if (d.self_complementary(i)) continue;
        while (cur.at(i) != b.at(i))
            if (!hop_one(i)) return std::nullopt;
    }

    if (cur == b) return path;

    if (d.n() == 1) {
        VFunction target = b;
        std::vector<VFunction> tail;  // b's uniformization: [m1,u1,...,mk,uk]
        if (!uniformize_n1(cur, path.nodes)) return std::nullopt;
        if (!uniformize_n1(target, tail)) return std::nullopt;
        if (!walk_classical_n1(cur, target, path.nodes, budget)) return std::nullopt;
        if (!tail.empty()) {
            // retrace b's uniformization backwards: uk is already current
            for (int t = static_cast<int>(tail.size()) - 2; t >= 0; --t)
                path.nodes.push_back(tail[t]);
            path.nodes.push_back(b);
        }
        return path;
    }

    // Generic greedy: move some differing pair one unit at a time.
    while (!(cur == b)) {
        if (budget) budget->tick();
        bool moved = false;
        for (int i : d.ns_pair_reps()) {
            if (cur.at(i) == b.at(i)) continue;
            if (hop_one(i)) {
                moved = true;
                break;
            }
        }
        if (!moved) return std::nullopt;
    }
    return path;
}

bool verify_height_one_path(const HeightOnePath& path, const VFunction& a, const VFunction& b) {
    const auto& nodes = path.nodes;
    if (nodes.empty() || nodes.size() % 2 == 0) return false;
    if (!(nodes.front() == a) || !(nodes.back() == b)) return false;
    for (size_t k = 0; k < nodes.size(); ++k) {
        if (!validate(nodes[k]).ok()) return false;
        if (k % 2 == 0) {
            if (!is_general(nodes[k])) return false;
        } else {
            if (is_general(nodes[k])) return false;
            if (height(nodes[k]) != 1) return false;
            if (!leq(nodes[k], nodes[k - 1]) || !leq(nodes[k], nodes[k + 1])) return false;
        }
    }
    return true;
}

}  // namespace vjac
