#include "vjac/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <thread>

namespace vjac {

GroupElement identity_element(const StabilityDomain& d) {
    return GroupElement{&d, 0, std::vector<long long>(d.n(), 0),
                        std::vector<long long>(d.separating().size(), 0), 0};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (!same_domain(*a.dom, *b.dom)) throw std::invalid_argument("mismatched domains");
    GroupElement out = a;
    long long s = (a.epsilon == 1) ? -1 : 1;
    out.beta += s * b.beta;
    for (size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] += s * b.alpha[i];
    for (size_t i = 0; i < out.gamma.size(); ++i) out.gamma[i] += s * b.gamma[i];
    out.epsilon = (a.epsilon + b.epsilon) % 2;
    return out;
}

GroupElement inverse(const GroupElement& a) {
    GroupElement out = a;
    long long s = (a.epsilon == 1) ? 1 : -1;
    out.beta = s * a.beta;
    for (size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] = s * a.alpha[i];
    for (size_t i = 0; i < out.gamma.size(); ++i) out.gamma[i] = s * a.gamma[i];
    return out;
}

VFunction dualize(const VFunction& f) {
    VFunction out = f;
    out.chi = -f.chi;
    for (int i : f.indices()) out.at(i) = -f.at(i) + (pair_degenerate(f, i) ? 0 : 1);
    return out;
}

VFunction act(const GroupElement& g, const VFunction& f) {
    if (!same_domain(*g.dom, *f.dom)) throw std::invalid_argument("mismatched domains");
    const StabilityDomain& d = *f.dom;
    if (static_cast<int>(g.alpha.size()) != d.n() ||
        g.gamma.size() != d.separating().size())
        throw std::invalid_argument("malformed group element");
    if (d.g() == 1 && g.beta != 0) throw std::invalid_argument("g = 1 forces beta = 0");

    VFunction out = (g.epsilon == 1) ? dualize(f) : f;
    long long deg = (2 * d.g() - 2) * g.beta;
    for (long long a : g.alpha) deg += a;
    out.chi += deg;
    for (int i : out.indices()) {
        const HalfVine& x = d.element(i);
        long long t = g.beta * (2 * x.h - 2 + x.e);
        for (int m : mask_to_list(x.marks)) t += g.alpha[m - 1];
        if (x.e == 1) {
            t -= g.gamma[d.sep_pos(i)];
            t += g.gamma[d.sep_pos(d.complement(i))];
        }
        out.at(i) += t;
    }
    return out;
}

NormalizedNs normalize_ns(const VFunction& ns_part) {
    if (ns_part.part != Part::NonSep)
        throw std::invalid_argument("normalize_ns expects a non-separating part");
    const StabilityDomain& d = *ns_part.dom;
    GroupElement t = identity_element(d);
    if (ns_part.values.empty()) return NormalizedNs{ns_part, t, false};
    bool missing = false;
    if (d.g() >= 2) {
        auto anchor = d.index_of({3, 0, 0});
        if (anchor)
            t.beta = -ns_part.at(*anchor);
        else
            missing = true;
    }
    for (int i = 1; i <= d.n(); ++i) {
        auto anchor = d.index_of({2, 0, Mask{1} << (i - 1)});
        if (anchor)
            t.alpha[i - 1] = -ns_part.at(*anchor);
        else
            missing = true;
    }
    NormalizedNs out{act(t, ns_part), t, missing};
    return out;
}

namespace {

long long box_low(const HalfVine& x) { return -(2 * x.h + x.e + popcount(x.marks) - 3); }

struct Enumerator {
    const StabilityDomain& d;
    SearchBudget* budget;
    std::vector<int> reps;                 // ns pair representatives
    std::vector<long long> value;          // by domain index, meaningful when assigned
    std::vector<bool> assigned;            // by domain index
    std::vector<std::vector<int>> tris_of; // rep position -> triangles fully assigned there
    long long chi = 0;
    std::vector<VFunction>* out;

    explicit Enumerator(const StabilityDomain& dom, SearchBudget* b, std::vector<VFunction>* o)
        : d(dom), budget(b), out(o) {
        reps = d.ns_pair_reps();
        value.assign(d.size(), 0);
        assigned.assign(d.size(), false);
        // For pruning: triangles whose last member gets assigned at rep k.
        std::vector<int> assigned_at(d.size(), -1);
        for (size_t k = 0; k < reps.size(); ++k) {
            assigned_at[reps[k]] = static_cast<int>(k);
            assigned_at[d.complement(reps[k])] = static_cast<int>(k);
        }
        tris_of.resize(reps.size());
        for (int t = 0; t < static_cast<int>(d.triangles().size()); ++t) {
            int last = 0;
            for (int j = 0; j < 3; ++j)
                last = std::max(last, assigned_at[d.triangles()[t][j]]);
            tris_of[last].push_back(t);
        }
    }

    bool triangle_ok(int t) const {
        const auto& tri = d.triangles()[t];
        long long sum = 0;
        int deg = 0;
        for (int j = 0; j < 3; ++j) {
            int i = tri[j];
            int c = d.complement(i);
            long long s = (i == c) ? 2 * value[i] : value[i] + value[c];
            if (s == chi) ++deg;
            sum += value[i];
        }
        long long diff = sum - chi;
        return (deg == 0 && (diff == 1 || diff == 2)) || (deg == 1 && diff == 1) ||
               (deg == 3 && diff == 0);
    }

    void emit() {
        VFunction f{&d, Part::NonSep, chi, {}};
        f.values.reserve(d.nonseparating().size());
        for (int i : d.nonseparating()) f.values.push_back(value[i]);
        out->push_back(std::move(f));
    }

    void assign_rep(size_t k, long long v, bool degenerate) {
        int i = reps[k];
        int c = d.complement(i);
        value[i] = v;
        value[c] = degenerate ? chi - v : chi + 1 - v;
        assigned[i] = assigned[c] = true;
    }

    // Candidate (value, degenerate) pairs at rep k consistent with the boxes.
    std::vector<std::pair<long long, bool>> options(size_t k) const {
        int i = reps[k];
        int c = d.complement(i);
        std::vector<std::pair<long long, bool>> opts;
        const HalfVine& x = d.element(i);
        if (i == c) {
            // 2v - chi in {0,1}: at most one candidate by parity.
            for (bool degen : {true, false}) {
                long long twice = degen ? chi : chi + 1;
                if (twice % 2 != 0) continue;
                long long v = twice / 2;
                if (v >= box_low(x) && v <= 0) opts.push_back({v, degen});
            }
            return opts;
        }
        const HalfVine& xc = d.element(c);
        for (long long v = box_low(x); v <= 0; ++v) {
            for (bool degen : {true, false}) {
                long long w = degen ? chi - v : chi + 1 - v;
                if (w >= box_low(xc) && w <= 0) opts.push_back({v, degen});
            }
        }
        return opts;
    }

    void rec(size_t k) {
        if (budget) budget->tick();
        if (k == reps.size()) {
            emit();
            return;
        }
        for (auto [v, degen] : options(k)) {
            assign_rep(k, v, degen);
            bool ok = true;
            for (int t : tris_of[k])
                if (!triangle_ok(t)) { ok = false; break; }
            if (ok) rec(k + 1);
            assigned[reps[k]] = assigned[d.complement(reps[k])] = false;
        }
    }
};

}  // namespace

std::vector<VFunction> enumerate_normalized(const StabilityDomain& d, SearchBudget* budget,
                                            int threads) {
    std::vector<VFunction> out;
    if (d.nonseparating().empty()) return out;

    // chi range: each pair forces chi in {sum, sum-1} with sum between the
    // box sums and 0.
    long long chi_lo = 0;
    for (int i : d.ns_pair_reps()) {
        long long s = box_low(d.element(i)) +
                      (d.self_complementary(i) ? box_low(d.element(i))
                                               : box_low(d.element(d.complement(i))));
        chi_lo = std::min(chi_lo, s - 1);
    }

    std::vector<long long> chis;
    for (long long chi = chi_lo; chi <= 0; ++chi) chis.push_back(chi);

    if (threads <= 1 || chis.size() <= 1) {
        for (long long chi : chis) {
            Enumerator en(d, budget, &out);
            en.chi = chi;
            en.rec(0);
        }
    } else {
        std::vector<std::vector<VFunction>> parts(chis.size());
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        std::atomic<bool> exhausted{false};
        int nt = std::min<int>(threads, static_cast<int>(chis.size()));
        for (int t = 0; t < nt; ++t) {
            pool.emplace_back([&] {
                try {
                    for (size_t j = next.fetch_add(1); j < chis.size();
                         j = next.fetch_add(1)) {
                        Enumerator en(d, budget, &parts[j]);
                        en.chi = chis[j];
                        en.rec(0);
                    }
                } catch (const BudgetExceeded&) {
                    exhausted = true;
                }
            });
        }
        for (auto& th : pool) th.join();
        if (exhausted) throw BudgetExceeded();
        for (auto& p : parts)
            for (auto& f : p) out.push_back(std::move(f));
    }

    std::sort(out.begin(), out.end(), [](const VFunction& a, const VFunction& b) {
        if (a.chi != b.chi) return a.chi < b.chi;
        return a.values < b.values;
    });
    return out;
}

CanonicalKey space_key(const VFunction& f) {
    VFunction ns = (f.part == Part::NonSep) ? f : split(f).second;
    CanonicalKey best;
    bool have = false;
    for (int eps : {0, 1}) {
        VFunction h = (eps == 1) ? dualize(ns) : ns;
        NormalizedNs n = normalize_ns(h);
        CanonicalKey key{n.ns.chi, n.ns.values, {}};
        if (!have || key < best) {
            best = std::move(key);
            have = true;
        }
    }
    return best;
}

CanonicalKey canonical_form(const VFunction& f) {
    if (f.part != Part::Full)
        throw std::invalid_argument("canonical_form expects a full function");
    CanonicalKey key = space_key(f);
    for (int i : f.dom->sep_pair_reps())
        if (pair_degenerate(f, i)) key.sep_degenerate.push_back(i);
    return key;
}

bool stack_isomorphic(const VFunction& f1, const VFunction& f2) {
    if (!same_domain(*f1.dom, *f2.dom)) throw std::invalid_argument("mismatched domains");
    return canonical_form(f1) == canonical_form(f2);
}

bool space_isomorphic(const VFunction& f1, const VFunction& f2) {
    if (!same_domain(*f1.dom, *f2.dom)) throw std::invalid_argument("mismatched domains");
    return space_key(f1) == space_key(f2);
}

}  // namespace vjac
