// Command line front end: every library operation behind one verb, with
// stable JSON/DOT output for scripting.
//
// Exit codes: 0 success, 1 domain or validation error, 2 malformed input,
// 3 search budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vjac/crossmaps.hpp"
#include "vjac/degposet.hpp"
#include "vjac/json_io.hpp"
#include "vjac/polarization.hpp"
#include "vjac/symmetry.hpp"

using namespace vjac;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

std::uint64_t budget_limit(std::uint64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("VJAC_BUDGET")) {
        std::uint64_t v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return UINT64_MAX;
}

std::vector<Rat> parse_rats(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_rat(item));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

// "1,2,3;1,2,4" -> list of subsets
std::vector<Mask> parse_subsets(const std::string& text, int n) {
    std::vector<Mask> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';'))
        if (!part.empty()) out.push_back(list_to_mask(parse_ints(part), n));
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_domain_table(const StabilityDomain& d) {
    std::cout << "# stability domain (g=" << d.g() << ", n=" << d.n() << "), " << d.size()
              << " elements, " << d.triangles().size() << " triangles\n";
    for (int i = 0; i < d.size(); ++i)
        std::cout << i << "\t" << to_string(d.element(i)) << "\tdelta=" << d.log_degree(i)
                  << "\tcompl=" << d.complement(i) << (d.is_separating(i) ? "\tsep" : "\tns")
                  << "\n";
}

VFunction plain_sep_join(const StabilityDomain& d, const VFunction& ns) {
    VFunction sep{&d, Part::Sep, ns.chi, std::vector<long long>(d.separating().size(), 0)};
    for (int i : d.sep_pair_reps()) {
        if (d.complement(i) == i)
            sep.at(i) = (ns.chi + 1) / 2;
        else
            sep.at(d.complement(i)) = ns.chi + 1;
    }
    return join(sep, ns);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability calculus for compactified universal Jacobians"};
    app.require_subcommand(1);

    int g = 0, n = 0;
    long long chi = 0;
    std::string format = "json";
    std::uint64_t budget_flag = 0;
    int threads = 1;
    unsigned seed = 12345;
    app.add_option("--budget", budget_flag, "node budget for searches (or env VJAC_BUDGET)");

    DomainCache cache;

    auto* cmd_domain = app.add_subcommand("domain", "build a stability domain");
    bool extended = false;
    cmd_domain->add_option("--g", g)->required();
    cmd_domain->add_option("--n", n)->required();
    cmd_domain->add_flag("--extended", extended);
    cmd_domain->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_tri = app.add_subcommand("triangles", "list the triangles of a domain");
    cmd_tri->add_option("--g", g)->required();
    cmd_tri->add_option("--n", n)->required();

    std::string file_a, file_b;
    auto* cmd_validate = app.add_subcommand("validate", "check the two defining conditions");
    cmd_validate->add_option("file", file_a)->required();

    auto* cmd_deg = app.add_subcommand("degeneracy", "degeneracy subset of a function");
    cmd_deg->add_option("file", file_a)->required();

    auto* cmd_canonical = app.add_subcommand("canonical", "canonical function at n = 0");
    cmd_canonical->add_option("--g", g)->required();
    cmd_canonical->add_option("--chi", chi)->required();

    std::string alpha_csv;
    auto* cmd_classical = app.add_subcommand("classical-ns", "classical non-separating part");
    cmd_classical->add_option("--g", g)->required();
    cmd_classical->add_option("--n", n)->required();
    cmd_classical->add_option("--chi", chi)->required();
    cmd_classical->add_option("--alpha", alpha_csv, "comma separated rationals a/b");

    auto* cmd_sigma = app.add_subcommand("sigma-of-L", "function of a polarization");
    cmd_sigma->add_option("file", file_a)->required();

    auto* cmd_region = app.add_subcommand("region", "region signature of a polarization");
    cmd_region->add_option("file", file_a)->required();
    cmd_region->add_option("file2", file_b);

    auto* cmd_feasible = app.add_subcommand("feasible", "search for a classical certificate");
    cmd_feasible->add_option("file", file_a)->required();

    std::string elem_file;
    auto* cmd_act = app.add_subcommand("act", "apply a group element");
    cmd_act->add_option("--elem", elem_file)->required();
    cmd_act->add_option("file", file_a)->required();

    auto* cmd_norm = app.add_subcommand("normalize", "translation normal form of the ns part");
    cmd_norm->add_option("file", file_a)->required();

    auto* cmd_enum = app.add_subcommand("enumerate-normalized",
                                        "all normalized non-separating parts, one per line");
    cmd_enum->add_option("--g", g)->required();
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_option("--threads", threads);

    auto* cmd_key = app.add_subcommand("orbit-key", "canonical form under the group action");
    cmd_key->add_option("file", file_a)->required();

    bool iso_space = false, iso_stack = false;
    auto* cmd_iso = app.add_subcommand("iso", "orbit equivalence of two functions");
    cmd_iso->add_flag("--space", iso_space);
    cmd_iso->add_flag("--stack", iso_stack);
    cmd_iso->add_option("file", file_a)->required();
    cmd_iso->add_option("file2", file_b)->required();

    bool dot = false;
    auto* cmd_submax = app.add_subcommand("submaximal", "height-one degeneracy subsets");
    cmd_submax->add_option("--g", g)->required();
    cmd_submax->add_option("--n", n)->required();
    cmd_submax->add_flag("--dot", dot);

    int delta = 0;
    std::string marks_csv;
    auto* cmd_walls = app.add_subcommand("walls", "wall degeneracy subsets");
    cmd_walls->add_option("--g", g)->required();
    cmd_walls->add_option("--n", n)->required();
    cmd_walls->add_option("--delta", delta)->required();
    cmd_walls->add_option("--A", marks_csv, "marks of a mixed wall");

    auto* cmd_wit = app.add_subcommand("witnesses", "witnesses for D1 >= D2");
    cmd_wit->add_option("file", file_a)->required();
    cmd_wit->add_option("file2", file_b)->required();

    std::string witness_csv, d1_file;
    auto* cmd_lift = app.add_subcommand("lift", "raise a function along a witness");
    cmd_lift->add_option("--f", file_a)->required();
    cmd_lift->add_option("--d1", d1_file)->required();
    cmd_lift->add_option("--witness", witness_csv)->required();

    auto* cmd_real = app.add_subcommand("realizable", "find a function with this degeneracy");
    cmd_real->add_option("file", file_a)->required();
    cmd_real->add_option("--chi", chi);

    auto* cmd_upset = app.add_subcommand("upset", "all functions above a function");
    cmd_upset->add_option("file", file_a)->required();
    cmd_upset->add_flag("--dot", dot);

    auto* cmd_height = app.add_subcommand("height", "longest ascending chain length");
    cmd_height->add_option("file", file_a)->required();

    auto* cmd_n1 = app.add_subcommand("n1-classify", "classify an n = 1 degeneracy subset");
    cmd_n1->add_option("file", file_a)->required();

    std::string from_sets;
    bool dynkin_from = false, dynkin_msa = false;
    auto* cmd_dynkin = app.add_subcommand("dynkin", "genus-1 Dynkin system conversions");
    cmd_dynkin->add_option("file", file_a, "degeneracy subset (or function with --msa)");
    cmd_dynkin->add_flag("--from", dynkin_from, "read a subset family instead");
    cmd_dynkin->add_flag("--msa", dynkin_msa, "emit the mildly superadditive avatar");
    cmd_dynkin->add_option("--sets", from_sets, "family as 1,2;3,4;...");
    cmd_dynkin->add_option("--g", g);
    cmd_dynkin->add_option("--n", n);

    std::string s_sets;
    auto* cmd_phis = app.add_subcommand("phi-s", "the characteristic-2 functions at (1,6)");
    cmd_phis->add_option("--s", s_sets, "3-subsets as 1,2,3;1,2,4;...");

    int mark_i = 1;
    auto* cmd_xi = app.add_subcommand("xi", "pull a function down one mark");
    cmd_xi->add_option("--i", mark_i)->required();
    cmd_xi->add_option("file", file_a)->required();

    auto* cmd_omega = app.add_subcommand("omega", "push a function up one mark");
    cmd_omega->add_option("file", file_a)->required();
    auto* cmd_omega_p = app.add_subcommand("omega-plus", "general raise carrying the new mark");
    cmd_omega_p->add_option("file", file_a)->required();
    auto* cmd_omega_m = app.add_subcommand("omega-minus", "general raise avoiding the new mark");
    cmd_omega_m->add_option("file", file_a)->required();

    auto* cmd_conn = app.add_subcommand("connectivity", "height-one paths between maxima");
    cmd_conn->add_option("--g", g);
    cmd_conn->add_option("--n", n);
    cmd_conn->add_option("--chi", chi);
    cmd_conn->add_option("--a", file_a);
    cmd_conn->add_option("--b", file_b);
    cmd_conn->add_option("--seed", seed);
    cmd_conn->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed command line
    }

    try {
        SearchBudget budget(budget_limit(budget_flag));

        if (*cmd_domain) {
            const StabilityDomain& d = cache.get(g, n, extended);
            if (format == "table")
                print_domain_table(d);
            else
                emit(domain_to_json(d));
        } else if (*cmd_tri) {
            const StabilityDomain& d = cache.get(g, n);
            json tris = json::array();
            for (const auto& t : d.triangles())
                tris.push_back(json::array({element_to_json(d.element(t[0])),
                                            element_to_json(d.element(t[1])),
                                            element_to_json(d.element(t[2]))}));
            emit(tris);
        } else if (*cmd_validate) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            ValidationReport rep = validate(f);
            json j = report_to_json(rep);
            if (rep.ok()) {
                json degs = json::array();
                for (int i : degeneracy_set(f).indices)
                    degs.push_back(element_to_json(f.dom->element(i)));
                j["degenerate"] = degs;
            }
            emit(j);
            return rep.ok() ? 0 : 1;
        } else if (*cmd_deg) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            if (!validate(f).ok()) throw std::invalid_argument("function is not valid");
            emit(degset_to_json(degeneracy_set(f)));
        } else if (*cmd_canonical) {
            emit(vfunction_to_json(canonical_vfunction(cache.get(g, 0), chi)));
        } else if (*cmd_classical) {
            emit(vfunction_to_json(classical_ns(cache.get(g, n), chi, parse_rats(alpha_csv))));
        } else if (*cmd_sigma) {
            emit(vfunction_to_json(sigma_of(polarization_from_json(read_json(file_a), cache))));
        } else if (*cmd_region) {
            Polarization L = polarization_from_json(read_json(file_a), cache);
            if (file_b.empty()) {
                emit(signature_to_json(region_signature(L), *L.dom));
            } else {
                Polarization M = polarization_from_json(read_json(file_b), cache);
                emit(json{{"same_region", same_region(L, M)}});
            }
        } else if (*cmd_feasible) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            auto L = classical_feasible(f);
            if (L)
                emit(json{{"feasible", true}, {"polarization", polarization_to_json(*L)}});
            else
                emit(json{{"feasible", false}});
        } else if (*cmd_act) {
            GroupElement e = group_element_from_json(read_json(elem_file), cache);
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            emit(vfunction_to_json(act(e, f)));
        } else if (*cmd_norm) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            VFunction ns = f.part == Part::NonSep ? f : split(f).second;
            NormalizedNs norm = normalize_ns(ns);
            emit(json{{"normalized", vfunction_to_json(norm.ns)},
                      {"translation", group_element_to_json(norm.translation)},
                      {"anchors_missing", norm.anchors_missing}});
        } else if (*cmd_enum) {
            const StabilityDomain& d = cache.get(g, n);
            for (const VFunction& f : enumerate_normalized(d, &budget, threads))
                std::cout << vfunction_to_json(f).dump() << "\n";
        } else if (*cmd_key) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            emit(canonical_key_to_json(canonical_form(f), *f.dom));
        } else if (*cmd_iso) {
            VFunction f1 = vfunction_from_json(read_json(file_a), cache);
            VFunction f2 = vfunction_from_json(read_json(file_b), cache);
            bool space = iso_space || !iso_stack;
            bool yes = space ? space_isomorphic(f1, f2) : stack_isomorphic(f1, f2);
            emit(json{{"mode", space ? "space" : "stack"}, {"isomorphic", yes}});
            std::cout << (yes ? "isomorphic" : "not isomorphic") << "\n";
        } else if (*cmd_submax) {
            const StabilityDomain& d = cache.get(g, n);
            std::vector<DegSet> subs;
            if (n >= 1) {
                subs = enumerate_submaximal(d);
            } else {
                RealizabilityIndex index(d, &budget);
                subs = submaximal_by_search(d, index);
            }
            if (dot) {
                std::cout << submaximal_dot(d, subs);
            } else {
                json out = json::array();
                for (const DegSet& D : subs) {
                    json j = degset_to_json(D);
                    j["label"] = degset_label(D);
                    out.push_back(std::move(j));
                }
                emit(out);
            }
        } else if (*cmd_walls) {
            const StabilityDomain& d = cache.get(g, n);
            DegSet D = marks_csv.empty()
                           ? wall_W(d, delta)
                           : wall_W_mixed(d, list_to_mask(parse_ints(marks_csv), n), delta);
            emit(degset_to_json(D));
        } else if (*cmd_wit) {
            DegSet D1 = degset_from_json(read_json(file_a), cache);
            DegSet D2 = degset_from_json(read_json(file_b), cache);
            auto ws = witnesses(D1, D2, &budget);
            json arr = json::array();
            for (const Witness& w : ws) arr.push_back(witness_to_json(w, *D1.dom));
            emit(json{{"dominates", !ws.empty()}, {"count", ws.size()}, {"witnesses", arr}});
        } else if (*cmd_lift) {
            VFunction f2 = vfunction_from_json(read_json(file_a), cache);
            DegSet D1 = degset_from_json(read_json(d1_file), cache);
            Witness w{parse_ints(witness_csv)};
            std::sort(w.indices.begin(), w.indices.end());
            emit(vfunction_to_json(lift(f2, D1, w)));
        } else if (*cmd_real) {
            DegSet D = degset_from_json(read_json(file_a), cache);
            RealizabilityIndex index(*D.dom, &budget);
            auto f = realize(D, chi, index);
            if (f)
                emit(json{{"realizable", true}, {"vfunction", vfunction_to_json(*f)}});
            else
                emit(json{{"realizable", false}});
        } else if (*cmd_upset) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            if (!validate(f).ok()) throw std::invalid_argument("function is not valid");
            auto up = upset(f);
            if (dot) {
                std::cout << functions_dot(up);
            } else {
                json out = json::array();
                for (const VFunction& u : up) out.push_back(vfunction_to_json(u));
                emit(out);
            }
        } else if (*cmd_height) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            if (!validate(f).ok()) throw std::invalid_argument("function is not valid");
            emit(json{{"height", height(f)}});
        } else if (*cmd_n1) {
            DegSet D = degset_from_json(read_json(file_a), cache);
            N1Class c = n1_classify(D);
            json j{{"label", degset_label(D)}};
            switch (c.kind) {
                case N1Class::Empty: j["kind"] = "empty"; break;
                case N1Class::Wall:
                    j["kind"] = "wall";
                    j["delta"] = c.delta;
                    break;
                case N1Class::Antichain: {
                    j["kind"] = "antichain";
                    json a = json::array();
                    for (int i : c.antichain) a.push_back(element_to_json(D.dom->element(i)));
                    j["antichain"] = a;
                    break;
                }
                case N1Class::NotRealizable: j["kind"] = "not-realizable"; break;
            }
            if (c.kind != N1Class::NotRealizable) j["height"] = n1_height(D);
            emit(j);
        } else if (*cmd_dynkin) {
            if (dynkin_from) {
                const StabilityDomain& d = cache.get(g, n);
                emit(degset_to_json(from_dynkin(d, parse_subsets(from_sets, n))));
            } else if (dynkin_msa) {
                VFunction f = vfunction_from_json(read_json(file_a), cache);
                auto m = msa_of(f);
                json out = json::array();
                for (Mask a = 0; a < (Mask{1} << f.dom->n()); ++a)
                    out.push_back(json{{"A", mask_to_list(a)}, {"value", m[a]}});
                emit(out);
            } else {
                DegSet D = degset_from_json(read_json(file_a), cache);
                json out = json::array();
                for (Mask m : to_dynkin(D)) out.push_back(mask_to_list(m));
                emit(out);
            }
        } else if (*cmd_phis) {
            const StabilityDomain& d = cache.get(1, 6);
            emit(vfunction_to_json(phi_S(d, parse_subsets(s_sets, 6))));
        } else if (*cmd_xi) {
            VFunction tau = vfunction_from_json(read_json(file_a), cache);
            if (tau.dom->n() < 1) throw std::invalid_argument("no marks to pull down");
            LevelPair lp(tau.dom->g(), tau.dom->n() - 1);
            VFunction moved{&lp.high(), tau.part, tau.chi, tau.values};
            emit(vfunction_to_json(level_down(lp, mark_i, moved)));
        } else if (*cmd_omega || *cmd_omega_p || *cmd_omega_m) {
            VFunction f = vfunction_from_json(read_json(file_a), cache);
            if (!validate(f).ok()) throw std::invalid_argument("function is not valid");
            LevelPair lp(f.dom->g(), f.dom->n());
            VFunction moved{&lp.low(), f.part, f.chi, f.values};
            VFunction out = *cmd_omega      ? level_up(lp, moved)
                            : *cmd_omega_p ? level_up_plus(lp, moved)
                                           : level_up_minus(lp, moved);
            emit(vfunction_to_json(out));
        } else if (*cmd_conn) {
            if (!file_a.empty() && !file_b.empty()) {
                VFunction a = vfunction_from_json(read_json(file_a), cache);
                VFunction b = vfunction_from_json(read_json(file_b), cache);
                auto path = connect_height_one(a, b, &budget);
                if (!path) {
                    emit(json{{"connected", false}});
                } else {
                    json nodes = json::array();
                    for (const VFunction& f : path->nodes) nodes.push_back(vfunction_to_json(f));
                    emit(json{{"connected", true},
                              {"verified", verify_height_one_path(*path, a, b)},
                              {"path", nodes}});
                }
            } else {
                // sample: the enumerated general normalized parts, moved to chi
                const StabilityDomain& d = cache.get(g, n);
                std::vector<VFunction> sample;
                for (const VFunction& ns : enumerate_normalized(d, &budget, threads)) {
                    if (!is_general(ns)) continue;
                    VFunction f = plain_sep_join(d, ns);
                    GroupElement t = identity_element(d);
                    if (n >= 1) {
                        t.alpha[0] = chi - f.chi;
                    } else if ((chi - f.chi) % (2 * g - 2) == 0) {
                        t.beta = (chi - f.chi) / (2 * g - 2);
                    } else {
                        continue;
                    }
                    sample.push_back(act(t, f));
                }
                json pairs = json::array();
                bool all = true;
                for (size_t a = 0; a < sample.size(); ++a)
                    for (size_t b = a + 1; b < sample.size(); ++b) {
                        auto path = connect_height_one(sample[a], sample[b], &budget);
                        bool ok = path.has_value() &&
                                  verify_height_one_path(*path, sample[a], sample[b]);
                        all &= ok;
                        pairs.push_back(json{{"a", a},
                                             {"b", b},
                                             {"connected", ok},
                                             {"length", path ? path->nodes.size() : 0}});
                    }
                emit(json{{"samples", sample.size()},
                          {"seed", seed},
                          {"all_connected", all},
                          {"pairs", pairs}});
                if (!all) return 1;
            }
        }
        return 0;
    } catch (const BudgetExceeded&) {
        std::cerr << "error: search budget exceeded\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
