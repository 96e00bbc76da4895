#include "vjac/linsolve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace vjac {

void RationalSystem::add_eq(std::vector<Rat> coeff, Rat rhs) {
    if (static_cast<int>(coeff.size()) != nvars_) throw std::invalid_argument("bad row size");
    eqs_.push_back({std::move(coeff), std::move(rhs)});
}

void RationalSystem::add_le(std::vector<Rat> coeff, Rat rhs, bool strict) {
    if (static_cast<int>(coeff.size()) != nvars_) throw std::invalid_argument("bad row size");
    ineqs_.push_back({std::move(coeff), std::move(rhs), strict});
}

void RationalSystem::add_ge(std::vector<Rat> coeff, Rat rhs, bool strict) {
    for (Rat& c : coeff) c = -c;
    add_le(std::move(coeff), -rhs, strict);
}

namespace {

struct Row {
    std::vector<Rat> coeff;  // over the currently active variables
    Rat rhs;
    bool strict;
};

// Scale so the coefficients form a coprime integer vector; preserves direction.
void normalize(Row& r) {
    Int lcm = 1, gcd = 0;
    for (const Rat& c : r.coeff) {
        if (c == 0) continue;
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        lcm = l;
    }
    if (lcm != 1) {
        Rat s(lcm);
        for (Rat& c : r.coeff) c *= s;
        r.rhs *= s;
    }
    for (const Rat& c : r.coeff) {
        if (c == 0) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), gcd.get_mpz_t(), c.get_num_mpz_t());
        gcd = g;
    }
    if (gcd > 1) {
        Rat s(gcd);
        for (Rat& c : r.coeff) c /= s;
        r.rhs /= s;
    }
}

// Keep only the tightest bound per coefficient direction.
void dedup(std::vector<Row>& rows) {
    std::map<std::vector<Rat>, size_t> best;
    std::vector<Row> out;
    for (Row& r : rows) {
        auto it = best.find(r.coeff);
        if (it == best.end()) {
            best.emplace(r.coeff, out.size());
            out.push_back(std::move(r));
        } else {
            Row& keep = out[it->second];
            if (r.rhs < keep.rhs || (r.rhs == keep.rhs && r.strict && !keep.strict))
                keep = std::move(r);
        }
    }
    rows = std::move(out);
}

}  // namespace

std::optional<std::vector<Rat>> RationalSystem::solve() const {
    // Gaussian elimination on the equalities: record pivot expressions
    // x_pivot = rhs - sum coeff_j x_j over the still-active variables.
    std::vector<Eq> eqs = eqs_;
    struct Pivot {
        int var;
        std::vector<Rat> coeff;  // over all original variables, pivot entry 1
        Rat rhs;
    };
    std::vector<Pivot> pivots;
    std::vector<bool> eliminated(nvars_, false);
    for (Eq& eq : eqs) {
        // Substitute prior pivots.
        for (const Pivot& p : pivots) {
            if (eq.coeff[p.var] == 0) continue;
            Rat f = eq.coeff[p.var];
            for (int j = 0; j < nvars_; ++j) eq.coeff[j] -= f * p.coeff[j];
            eq.coeff[p.var] = 0;
            eq.rhs -= f * p.rhs;
        }
        int piv = -1;
        for (int j = 0; j < nvars_; ++j)
            if (eq.coeff[j] != 0) { piv = j; break; }
        if (piv < 0) {
            if (eq.rhs != 0) return std::nullopt;  // 0 = nonzero
            continue;
        }
        Rat lead = eq.coeff[piv];
        for (int j = 0; j < nvars_; ++j) eq.coeff[j] /= lead;
        eq.rhs /= lead;
        eq.coeff[piv] = 1;
        pivots.push_back({piv, eq.coeff, eq.rhs});
        eliminated[piv] = true;
    }

    std::vector<int> active;
    for (int j = 0; j < nvars_; ++j)
        if (!eliminated[j]) active.push_back(j);
    const int nact = static_cast<int>(active.size());

    // Rewrite inequalities over the active variables.
    std::vector<Row> rows;
    for (const Ineq& iq : ineqs_) {
        std::vector<Rat> c = iq.coeff;
        Rat rhs = iq.rhs;
        for (const Pivot& p : pivots) {
            if (c[p.var] == 0) continue;
            Rat f = c[p.var];
            for (int j = 0; j < nvars_; ++j) c[j] -= f * p.coeff[j];
            c[p.var] = 0;
            rhs -= f * p.rhs;
        }
        Row r;
        r.coeff.reserve(nact);
        for (int j : active) r.coeff.push_back(c[j]);
        r.rhs = rhs;
        r.strict = iq.strict;
        normalize(r);
        rows.push_back(std::move(r));
    }
    dedup(rows);

    // Fourier-Motzkin, last active variable first; remember each level's
    // bound rows for back-substitution.
    struct Level {
        std::vector<Row> lowers, uppers;  // in terms of the variables before this one
    };
    std::vector<Level> levels(nact);
    for (int k = nact - 1; k >= 0; --k) {
        std::vector<Row> next;
        Level& lv = levels[k];
        for (Row& r : rows) {
            const Rat& ck = r.coeff[k];
            if (ck == 0) {
                r.coeff.resize(k);
                next.push_back(std::move(r));
            } else if (ck > 0) {
                lv.uppers.push_back(std::move(r));
            } else {
                lv.lowers.push_back(std::move(r));
            }
        }
        for (const Row& up : lv.uppers) {
            for (const Row& lo : lv.lowers) {
                Row comb;
                comb.coeff.resize(k);
                Rat a = up.coeff[k];   // > 0
                Rat b = -lo.coeff[k];  // > 0
                for (int j = 0; j < k; ++j)
                    comb.coeff[j] = up.coeff[j] * b + lo.coeff[j] * a;
                comb.rhs = up.rhs * b + lo.rhs * a;
                comb.strict = up.strict || lo.strict;
                normalize(comb);
                next.push_back(std::move(comb));
            }
        }
        dedup(next);
        rows = std::move(next);
    }
    for (const Row& r : rows) {
        assert(r.coeff.empty());
        if (r.rhs < 0 || (r.strict && r.rhs == 0)) return std::nullopt;
    }

    // Back-substitute a sample point.
    std::vector<Rat> act_val(nact);
    for (int k = 0; k < nact; ++k) {
        bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
        Rat lo, up;
        auto eval = [&](const Row& r) {
            Rat v = r.rhs;
            for (int j = 0; j < k; ++j) v -= r.coeff[j] * act_val[j];
            return v;  // bound on coeff[k]*x_k
        };
        for (const Row& r : levels[k].lowers) {
            Rat v = eval(r) / r.coeff[k];  // negative coefficient: lower bound
            if (!has_lo || v > lo) {
                lo = v;
                lo_strict = r.strict;
                has_lo = true;
            } else if (v == lo) {
                lo_strict = lo_strict || r.strict;
            }
        }
        for (const Row& r : levels[k].uppers) {
            Rat v = eval(r) / r.coeff[k];
            if (!has_up || v < up) {
                up = v;
                up_strict = r.strict;
                has_up = true;
            } else if (v == up) {
                up_strict = up_strict || r.strict;
            }
        }
        Rat& x = act_val[k];
        if (has_lo && has_up) {
            if (lo == up) {
                assert(!lo_strict && !up_strict);
                x = lo;
            } else {
                assert(lo < up);
                x = (lo + up) / 2;
            }
        } else if (has_lo) {
            x = lo_strict ? lo + 1 : lo;
        } else if (has_up) {
            x = up_strict ? up - 1 : up;
        } else {
            x = 0;
        }
    }

    std::vector<Rat> full(nvars_);
    for (int k = 0; k < nact; ++k) full[active[k]] = act_val[k];
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Rat v = it->rhs;
        for (int j = 0; j < nvars_; ++j)
            if (j != it->var && it->coeff[j] != 0) v -= it->coeff[j] * full[j];
        full[it->var] = v;
    }
    return full;
}

}  // namespace vjac
