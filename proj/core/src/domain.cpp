#include "vjac/domain.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace vjac {

int popcount(Mask m) { return std::popcount(m); }

Mask full_mask(int n) {
    if (n < 0 || n > kMaxMarks) throw std::invalid_argument("mark count out of range");
    return n == 0 ? 0 : ((Mask{1} << n) - 1);
}

std::vector<int> mask_to_list(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

Mask list_to_mask(const std::vector<int>& marks, int n) {
    Mask m = 0;
    for (int i : marks) {
        if (i < 1 || i > n) throw std::invalid_argument("mark index out of range");
        m |= Mask{1} << (i - 1);
    }
    return m;
}

bool marks_lex_less(Mask a, Mask b) {
    while (a && b) {
        int i = std::countr_zero(a);
        int j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

bool canonical_less(const HalfVine& a, const HalfVine& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.h != b.h) return a.h < b.h;
    return marks_lex_less(a.marks, b.marks);
}

std::string to_string(const HalfVine& x) {
    std::ostringstream os;
    os << "(" << x.e << ";" << x.h;
    if (x.marks) {
        os << ",{";
        bool first = true;
        for (int i : mask_to_list(x.marks)) {
            if (!first) os << ",";
            os << i;
            first = false;
        }
        os << "}";
    }
    os << ")";
    return os.str();
}

int log_degree(const HalfVine& x) { return 2 * x.h - 2 + x.e + popcount(x.marks); }

StabilityDomain StabilityDomain::build(int g, int n) { return build_impl(g, n, false); }

StabilityDomain StabilityDomain::build_extended(int g, int n) { return build_impl(g, n, true); }

StabilityDomain StabilityDomain::build_impl(int g, int n, bool extended) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    if (n < 0 || n > kMaxMarks) throw std::invalid_argument("mark count out of range");
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("need 2g-2+n > 0");

    StabilityDomain d;
    d.g_ = g;
    d.n_ = n;
    d.extended_ = extended;

    const int lo = extended ? 0 : 1;  // both sides must be >= lo
    const Mask all = full_mask(n);
    for (int e = 1; e <= g + 1; ++e) {
        for (int h = 0; h + e - 1 <= g; ++h) {
            for (Mask a = 0;; ++a) {
                int sz = popcount(a);
                int d1 = 2 * h - 2 + e + sz;
                int d2 = 2 * g - 2 * h - e + (n - sz);
                if (d1 >= lo && d2 >= lo) d.elements_.push_back({e, h, a});
                if (a == all) break;
            }
        }
    }
    std::sort(d.elements_.begin(), d.elements_.end(), canonical_less);

    const int m = static_cast<int>(d.elements_.size());
    d.all_.resize(m);
    for (int i = 0; i < m; ++i) d.all_[i] = i;
    d.complement_.resize(m);
    d.in_core_.resize(m);
    d.sep_pos_.assign(m, -1);
    d.ns_pos_.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        const HalfVine& x = d.elements_[i];
        HalfVine xc{x.e, g - x.h - x.e + 1, all & ~x.marks};
        auto ci = d.index_of(xc);
        assert(ci.has_value());
        d.complement_[i] = *ci;
        int d1 = 2 * x.h - 2 + x.e + popcount(x.marks);
        int d2 = 2 * g - 2 * x.h - x.e + (n - popcount(x.marks));
        d.in_core_[i] = d1 > 0 && d2 > 0;
        if (x.e == 1) {
            d.sep_pos_[i] = static_cast<int>(d.sep_.size());
            d.sep_.push_back(i);
        } else {
            d.ns_pos_[i] = static_cast<int>(d.ns_.size());
            d.ns_.push_back(i);
        }
    }
    for (int i = 0; i < m; ++i) {
        if (i <= d.complement_[i]) {
            d.pair_reps_.push_back(i);
            if (d.elements_[i].e == 1)
                d.sep_pair_reps_.push_back(i);
            else
                d.ns_pair_reps_.push_back(i);
        }
    }

    // Triangles: unordered multisets [x1,x2,x3] with even total edge count,
    // e_i + e_j >= e_k + 2 for all permutations, marks partitioning [n] and
    // g = h1+h2+h3 + (e1+e2+e3)/2 - 2.  Every member necessarily has e >= 2.
    const auto& ns = d.ns_;
    for (size_t a = 0; a < ns.size(); ++a) {
        const HalfVine& x1 = d.elements_[ns[a]];
        for (size_t b = a; b < ns.size(); ++b) {
            const HalfVine& x2 = d.elements_[ns[b]];
            if (x1.marks & x2.marks) continue;
            for (size_t c = b; c < ns.size(); ++c) {
                const HalfVine& x3 = d.elements_[ns[c]];
                if ((x1.marks | x2.marks) & x3.marks) continue;
                if ((x1.marks | x2.marks | x3.marks) != all) continue;
                int es = x1.e + x2.e + x3.e;
                if (es % 2 != 0) continue;
                if (x1.e + x2.e < x3.e + 2) continue;
                if (x1.e + x3.e < x2.e + 2) continue;
                if (x2.e + x3.e < x1.e + 2) continue;
                if (x1.h + x2.h + x3.h + es / 2 - 2 != g) continue;
                d.triangles_.push_back({ns[a], static_cast<int>(ns[b]), ns[c]});
            }
        }
    }
    std::sort(d.triangles_.begin(), d.triangles_.end());
    d.tri_at_.resize(m);
    for (int t = 0; t < static_cast<int>(d.triangles_.size()); ++t) {
        auto tri = d.triangles_[t];
        for (int j = 0; j < 3; ++j) {
            if (j > 0 && tri[j] == tri[j - 1]) continue;
            d.tri_at_[tri[j]].push_back(t);
        }
    }
    return d;
}

std::optional<int> StabilityDomain::index_of(const HalfVine& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x, canonical_less);
    if (it == elements_.end() || !(*it == x)) return std::nullopt;
    return static_cast<int>(it - elements_.begin());
}

int StabilityDomain::log_degree(int idx) const { return vjac::log_degree(elements_.at(idx)); }

bool StabilityDomain::in_core(int idx) const { return in_core_.at(idx); }

bool same_domain(const StabilityDomain& a, const StabilityDomain& b) {
    return a.g() == b.g() && a.n() == b.n() && a.extended() == b.extended();
}

HalfVine complement_of(const StabilityDomain& d, const HalfVine& x) {
    if (!d.index_of(x)) throw std::invalid_argument("element not in domain: " + to_string(x));
    return {x.e, d.g() - x.h - x.e + 1, full_mask(d.n()) & ~x.marks};
}

bool is_primitive(const StabilityDomain& d, int idx) {
    const HalfVine& x = d.element(idx);
    return x.e >= 2 && x.marks == 0;
}

std::vector<int> primitive_indices(const StabilityDomain& d) {
    std::vector<int> out;
    for (int i : d.nonseparating())
        if (d.element(i).marks == 0) out.push_back(i);
    return out;
}

std::pair<int, int> compose_index_range(const StabilityDomain& d, const HalfVine& x1,
                                        const HalfVine& x2) {
    int lo = std::max(1, x1.h + x2.h + x1.e + x2.e - d.g() - 2);
    int hi = std::min(x1.e - 1, x2.e - 1);
    return {lo, hi};
}

HalfVine compose(const StabilityDomain& d, const HalfVine& x1, const HalfVine& x2, int i) {
    if (d.n() != 1) throw std::invalid_argument("composition requires n = 1");
    auto check = [&](const HalfVine& x) {
        auto idx = d.index_of(x);
        if (!idx || !is_primitive(d, *idx))
            throw std::invalid_argument("composition requires primitive operands, got " +
                                        to_string(x));
    };
    check(x1);
    check(x2);
    auto [lo, hi] = compose_index_range(d, x1, x2);
    if (i < lo || i > hi)
        throw std::invalid_argument("composition index " + std::to_string(i) +
                                    " outside [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "]");
    return {x1.e + x2.e - 2 * i, x1.h + x2.h + i - 1, 0};
}

bool primitive_leq(const HalfVine& x1, const HalfVine& x2) {
    if (x1.marks || x2.marks || x1.e < 2 || x2.e < 2)
        throw std::invalid_argument("order is defined on primitive types only");
    return x1.h <= x2.h && x1.e + x1.h <= x2.e + x2.h;
}

HalfVine xi(const StabilityDomain& d, int i, const HalfVine& x) {
    if (i < 1 || i > d.n()) throw std::invalid_argument("mark index out of range");
    if (!d.index_of(x)) throw std::invalid_argument("element not in domain: " + to_string(x));
    Mask bit = Mask{1} << d.n();  // mark n+1
    if (x.marks & (Mask{1} << (i - 1))) return {x.e, x.h, x.marks | bit};
    return x;
}

HalfVine varpi(const StabilityDomain& d_high, const HalfVine& x) {
    if (!d_high.index_of(x))
        throw std::invalid_argument("element not in domain: " + to_string(x));
    Mask bit = Mask{1} << (d_high.n() - 1);
    return {x.e, x.h, x.marks & ~bit};
}

}  // namespace vjac
