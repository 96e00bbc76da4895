#include "vjac/vfunction.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

namespace vjac {

long long ceil_div(long long num, long long den) {
    assert(den > 0);
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

const std::vector<int>& part_indices(const StabilityDomain& d, Part part) {
    switch (part) {
        case Part::Sep: return d.separating();
        case Part::NonSep: return d.nonseparating();
        default: return d.all_indices();
    }
}

namespace {
int pos_of(const VFunction& f, int idx) {
    switch (f.part) {
        case Part::Full: return idx;
        case Part::Sep: return f.dom->sep_pos(idx);
        case Part::NonSep: return f.dom->ns_pos(idx);
    }
    return -1;
}
}  // namespace

long long VFunction::at(int domain_idx) const {
    int p = pos_of(*this, domain_idx);
    if (p < 0) throw std::invalid_argument("element outside the function's part");
    return values.at(p);
}

long long& VFunction::at(int domain_idx) {
    int p = pos_of(*this, domain_idx);
    if (p < 0) throw std::invalid_argument("element outside the function's part");
    return values.at(p);
}

bool VFunction::covers(int domain_idx) const { return pos_of(*this, domain_idx) >= 0; }

VFunction make_vfunction(const StabilityDomain& d, Part part, long long chi,
                         std::vector<long long> values) {
    if (values.size() != part_indices(d, part).size())
        throw std::invalid_argument("value vector size does not match the domain part");
    return VFunction{&d, part, chi, std::move(values)};
}

bool pair_degenerate(const VFunction& f, int idx) {
    int c = f.dom->complement(idx);
    long long s = (idx == c) ? 2 * f.at(idx) : f.at(idx) + f.at(c);
    return s == f.chi;
}

ValidationReport validate(const VFunction& f) {
    ValidationReport rep;
    const StabilityDomain& d = *f.dom;

    for (int i : f.indices()) {
        int c = d.complement(i);
        if (c < i) continue;
        long long s = (i == c) ? 2 * f.at(i) : f.at(i) + f.at(c);
        long long diff = s - f.chi;
        if (diff != 0 && diff != 1) {
            std::ostringstream os;
            os << "pair {" << to_string(d.element(i)) << "," << to_string(d.element(c))
               << "}: sum-chi = " << diff << ", want 0 or 1";
            rep.violations.push_back({Violation::Kind::PairSum, i, -1, os.str()});
        }
    }
    if (f.part == Part::Sep) return rep;

    for (int t = 0; t < static_cast<int>(d.triangles().size()); ++t) {
        const auto& tri = d.triangles()[t];
        int deg = 0;
        long long sum = 0;
        bool pair_broken = false;
        for (int j = 0; j < 3; ++j) {
            int i = tri[j];
            int c = d.complement(i);
            long long s = (i == c) ? 2 * f.at(i) : f.at(i) + f.at(c);
            if (s - f.chi != 0 && s - f.chi != 1) pair_broken = true;
            if (s == f.chi) ++deg;
            sum += f.at(i);
        }
        if (pair_broken) continue;  // already reported above
        long long diff = sum - f.chi;
        auto describe = [&] {
            std::ostringstream os;
            os << "triangle [" << to_string(d.element(tri[0])) << ","
               << to_string(d.element(tri[1])) << "," << to_string(d.element(tri[2]))
               << "]: sum-chi = " << diff << " with " << deg << " degenerate member(s)";
            return os.str();
        };
        if (deg == 2) {
            rep.violations.push_back({Violation::Kind::TriangleTwoDegenerate, tri[0], t,
                                      describe() + "; two degenerate force the third"});
            continue;
        }
        bool ok = (deg == 0 && (diff == 1 || diff == 2)) || (deg == 1 && diff == 1) ||
                  (deg == 3 && diff == 0);
        if (!ok)
            rep.violations.push_back({Violation::Kind::TriangleSum, tri[0], t, describe()});
    }
    return rep;
}

bool DegSet::contains(int idx) const {
    return std::binary_search(indices.begin(), indices.end(), idx);
}

DegSet degeneracy_set(const VFunction& f) {
    DegSet out{f.dom, {}};
    for (int i : f.indices())
        if (pair_degenerate(f, i)) out.indices.push_back(i);
    return out;
}

bool is_general(const VFunction& f) {
    for (int i : f.indices())
        if (pair_degenerate(f, i)) return false;
    return true;
}

OrderRel compare(const VFunction& f1, const VFunction& f2) {
    if (!same_domain(*f1.dom, *f2.dom) || f1.part != f2.part)
        throw std::invalid_argument("comparing functions on different domains or parts");
    if (f1.chi != f2.chi) return OrderRel::Incomparable;
    bool ge = true, le = true;
    for (size_t k = 0; k < f1.values.size(); ++k) {
        if (f1.values[k] < f2.values[k]) ge = false;
        if (f1.values[k] > f2.values[k]) le = false;
    }
    if (ge && le) return OrderRel::Equal;
    if (ge) return OrderRel::Greater;
    if (le) return OrderRel::Less;
    return OrderRel::Incomparable;
}

bool leq(const VFunction& f1, const VFunction& f2) {
    OrderRel r = compare(f1, f2);
    return r == OrderRel::Less || r == OrderRel::Equal;
}

std::pair<VFunction, VFunction> split(const VFunction& f) {
    if (f.part != Part::Full) throw std::invalid_argument("split expects a full function");
    const StabilityDomain& d = *f.dom;
    VFunction s{&d, Part::Sep, f.chi, {}};
    VFunction ns{&d, Part::NonSep, f.chi, {}};
    for (int i : d.separating()) s.values.push_back(f.at(i));
    for (int i : d.nonseparating()) ns.values.push_back(f.at(i));
    return {std::move(s), std::move(ns)};
}

VFunction join(const VFunction& sep, const VFunction& nonsep) {
    if (sep.part != Part::Sep || nonsep.part != Part::NonSep)
        throw std::invalid_argument("join expects a separating and a non-separating part");
    if (!same_domain(*sep.dom, *nonsep.dom))
        throw std::invalid_argument("join across different domains");
    if (sep.chi != nonsep.chi)
        throw std::invalid_argument("join with mismatched characteristics");
    const StabilityDomain& d = *sep.dom;
    VFunction f{&d, Part::Full, sep.chi, std::vector<long long>(d.size(), 0)};
    for (int i = 0; i < d.size(); ++i)
        f.values[i] = d.is_separating(i) ? sep.at(i) : nonsep.at(i);
    return f;
}

VFunction canonical_vfunction(const StabilityDomain& d, long long chi) {
    if (d.n() != 0 || d.g() < 2)
        throw std::invalid_argument("canonical function needs n = 0 and g >= 2");
    VFunction f{&d, Part::Full, chi, {}};
    f.values.reserve(d.size());
    for (int i = 0; i < d.size(); ++i)
        f.values.push_back(ceil_div(chi * d.log_degree(i), 2 * d.g() - 2));
    return f;
}

VFunction classical_ns(const StabilityDomain& d, long long chi, const std::vector<Rat>& alpha) {
    if (static_cast<int>(alpha.size()) != d.n())
        throw std::invalid_argument("need one alpha per mark");
    Rat total = 0;
    for (const Rat& a : alpha) total += a;
    if (d.g() == 1 && total != rat(chi))
        throw std::invalid_argument("g = 1 requires sum alpha = chi");

    VFunction f{&d, Part::NonSep, chi, {}};
    for (int i : d.nonseparating()) {
        const HalfVine& x = d.element(i);
        Rat q = 0;
        if (d.g() >= 2) q = (rat(chi) - total) * rat(2 * x.h - 2 + x.e) / rat(2 * d.g() - 2);
        for (int m : mask_to_list(x.marks)) q += alpha[m - 1];
        f.values.push_back(to_ll(rat_ceil(q)));
    }
    return f;
}

bool is_uniform(const VFunction& f) {
    if (f.dom->n() != 1) throw std::invalid_argument("uniformity is defined for n = 1");
    std::map<int, long long> level;
    for (int i : primitive_indices(*f.dom)) {
        if (!f.covers(i)) continue;
        int delta = f.dom->log_degree(i);
        auto [it, inserted] = level.emplace(delta, f.at(i));
        if (!inserted && it->second != f.at(i)) return false;
    }
    return true;
}

std::vector<VFunction> upset(const VFunction& f) {
    // Per-pair moves: leave a degenerate pair, or raise exactly one of its
    // two sides by 1.  Self-complementary pairs admit no raise.
    std::vector<std::array<int, 2>> movable;
    for (int i : f.indices()) {
        int c = f.dom->complement(i);
        if (c <= i && c != i) continue;  // one representative per pair
        if (!f.covers(i)) continue;
        if (i != c && pair_degenerate(f, i)) movable.push_back({i, c});
    }
    std::vector<VFunction> out;
    std::vector<long long> base = f.values;
    std::function<void(size_t, VFunction&)> rec = [&](size_t k, VFunction& cur) {
        if (k == movable.size()) {
            if (validate(cur).ok()) out.push_back(cur);
            return;
        }
        rec(k + 1, cur);
        for (int side : {0, 1}) {
            cur.at(movable[k][side]) += 1;
            rec(k + 1, cur);
            cur.at(movable[k][side]) -= 1;
        }
    };
    VFunction cur = f;
    rec(0, cur);
    std::sort(out.begin(), out.end(),
              [](const VFunction& a, const VFunction& b) { return a.values < b.values; });
    return out;
}

int height(const VFunction& f) {
    std::vector<VFunction> up = upset(f);
    const int m = static_cast<int>(up.size());
    // Longest path in the strict-order DAG, ending at f.
    std::vector<int> depth(m, 0);
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    // Process in decreasing total sum so all strictly larger elements come first.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        long long sa = 0, sb = 0;
        for (auto v : up[a].values) sa += v;
        for (auto v : up[b].values) sb += v;
        return sa > sb;
    });
    int fpos = -1;
    for (int oi = 0; oi < m; ++oi) {
        int i = order[oi];
        for (int oj = 0; oj < oi; ++oj) {
            int j = order[oj];
            if (compare(up[j], up[i]) == OrderRel::Greater)
                depth[i] = std::max(depth[i], depth[j] + 1);
        }
        if (up[i].values == f.values) fpos = i;
    }
    assert(fpos >= 0);
    return depth[fpos];
}

}  // namespace vjac
