#include "scrollsmith/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace scrollsmith;

int exit_for(Status v) {
    switch (v) {
    case Status::Established: return 0;
    case Status::Inconclusive: return 1;
    case Status::Refuted:
    case Status::NotVeryAmple: return 3;
    }
    return 1;
}

RuledBase parse_surface(const std::string& s) {
    try {
        if (s == "P2" || s == "p2") return RuledBase::projective_plane();
        if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
            return RuledBase::rational(std::stoll(s.substr(1)));
        }
        if (s.size() >= 3 && (s[0] == 'E' || s[0] == 'e') &&
            (s.back() == 'd' || s.back() == 'i')) {
            return RuledBase::elliptic(std::stoll(s.substr(1, s.size() - 2)),
                                       s.back() == 'd');
        }
    } catch (const std::domain_error& err) {
        throw std::runtime_error("surface '" + s + "': " + err.what());
    } catch (const std::exception&) {
        // fall through to the generic message
    }
    throw std::runtime_error("surface '" + s +
                             "': expected P2, F<e>, E<e>d or E<e>i");
}

std::vector<i64> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            const i64 v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error(what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw std::runtime_error(what + ": empty list");
    return out;
}

DivisorClass parse_class(const std::string& s, const RuledBase& base,
                         const std::string& what) {
    const std::vector<i64> v = parse_int_list(s, what);
    const bool plane = base.kind() == BaseKind::ProjectivePlane;
    if (plane) {
        if (v.size() != 1) throw std::runtime_error(what + ": expected a single degree on P2");
        return DivisorClass::plane(v[0]);
    }
    if (v.size() != 2) throw std::runtime_error(what + ": expected 'a,b' on a ruled base");
    return DivisorClass::ruled(v[0], v[1]);
}

ExtensionBundle load_bundle_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("spec '" + path + "': cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    return bundle_from_json(parse_json_text(buf.str(), "spec '" + path + "'"), "spec");
}

// multiplicity string: either "m x n" shorthand like "2x9" or a comma list
std::vector<i64> parse_mults(const std::string& s) {
    const auto x = s.find('x');
    if (x != std::string::npos) {
        const auto m = parse_int_list(s.substr(0, x), "--mults");
        const auto n = parse_int_list(s.substr(x + 1), "--mults");
        if (m.size() != 1 || n.size() != 1 || n[0] < 0) {
            throw std::runtime_error("--mults: expected '<m>x<count>'");
        }
        return std::vector<i64>(static_cast<size_t>(n[0]), m[0]);
    }
    return parse_int_list(s, "--mults");
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string default_catalog_path() {
    if (const char* env = std::getenv("SCROLLSMITH_CATALOG")) return env;
    return "catalog.jsonl";
}

struct CheckArgs {
    std::string criterion;
    std::string spec_path;
    std::string surface;
    std::string class_d, class_a;
    i64 x = 0, z = 0;
    bool scan = false;
    i64 x_max = 0, z_max = 0;
    i64 eps = 0;
    i64 bound = 64;
    i64 e = 0, t = 0, k = 0;
};

int run_check(const CheckArgs& a) {
    ordered_json out;
    out["v"] = 1;
    ConditionReport report;

    if (a.criterion == "valma" || a.criterion == "valmae") {
        const ExtensionBundle E = load_bundle_spec(a.spec_path);
        out["bundle"] = bundle_to_json(E);
        const bool elliptic = a.criterion == "valmae";
        if (a.scan) {
            const WitnessSearch ws = (a.x_max > 0 && a.z_max > 0)
                                         ? search_valma_witness(E, a.x_max, a.z_max)
                                         : search_valma_witness(E);
            report = ws.report;
            out["pairs_scanned"] = ws.pairs_scanned;
        } else {
            report = elliptic ? check_valmae(E, a.x, a.z) : check_valma(E, a.x, a.z);
        }
    } else if (a.criterion == "cinque") {
        const RuledBase base = parse_surface(a.surface);
        const DivisorClass D = parse_class(a.class_d, base, "--D");
        const DivisorClass A = parse_class(a.class_a, base, "--A");
        out["surface"] = base.label();
        out["D"] = divisor_to_json(D);
        out["A"] = divisor_to_json(A);
        out["z"] = a.z;
        report = check_prop_cinque(base, D, A, a.z);
    } else if (a.criterion == "brosius") {
        const BrosiusResult br = check_brosius(a.e, a.t, a.k);
        out["e"] = a.e;
        out["t"] = a.t;
        out["k"] = a.k;
        out["forced_L"] = divisor_to_json(br.forced_L);
        out["forced_M"] = divisor_to_json(br.forced_M);
        report = br.report;
    } else if (a.criterion == "due") {
        const ExtensionBundle E = load_bundle_spec(a.spec_path);
        const DivisorClass A = parse_class(a.class_a, E.base, "--A");
        out["bundle"] = bundle_to_json(E);
        out["A"] = divisor_to_json(A);
        report = check_prop_due(E, A, a.bound);
    } else if (a.criterion == "uno-b") {
        const ExtensionBundle E = load_bundle_spec(a.spec_path);
        const DivisorClass A = parse_class(a.class_a, E.base, "--A");
        out["bundle"] = bundle_to_json(E);
        out["A"] = divisor_to_json(A);
        out["eps"] = a.eps;
        report = check_prop_uno_b(E, A, a.eps);
    } else {
        throw std::runtime_error("--criterion '" + a.criterion +
                                 "': expected valma, valmae, cinque, brosius, due or uno-b");
    }

    out["report"] = report_to_json(report);
    print_json(out);
    return exit_for(report.verdict);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact very-ampleness checks for rank-2 bundles on ruled surfaces, "
                 "and a certified catalog of the 3-fold scrolls they embed"};
    app.require_subcommand(1);
    bool deterministic = false;
    app.add_flag("--deterministic", deterministic,
                 "omit timestamps so repeated runs are byte-identical");

    // cohomology
    auto* c_cmd = app.add_subcommand("cohomology", "exact cohomology of a divisor class");
    std::string c_surface, c_class;
    bool c_json = false;
    c_cmd->add_option("--surface", c_surface, "P2 or F<e>")->required();
    c_cmd->add_option("--class", c_class, "'a,b' on F<e>, 'd' on P2")->required();
    c_cmd->add_flag("--json", c_json, "emit JSON instead of one line of text");

    // check
    auto* k_cmd = app.add_subcommand("check", "run one criterion and report its conditions");
    CheckArgs ka;
    k_cmd->add_option("--criterion", ka.criterion,
                      "valma | valmae | cinque | brosius | due | uno-b")
        ->required();
    k_cmd->add_option("--spec", ka.spec_path, "bundle spec JSON file");
    k_cmd->add_option("--surface", ka.surface, "base surface (cinque)");
    k_cmd->add_option("--D", ka.class_d, "divisor class D (cinque)");
    k_cmd->add_option("--A", ka.class_a, "divisor class A (cinque, due, uno-b)");
    k_cmd->add_option("--x", ka.x, "unisecant level x");
    k_cmd->add_option("--z", ka.z, "multiplier z (valma, valmae, cinque)");
    k_cmd->add_flag("--scan", ka.scan, "search for the first witness (x, z)");
    k_cmd->add_option("--x-max", ka.x_max, "scan limit for x (with --scan)");
    k_cmd->add_option("--z-max", ka.z_max, "scan limit for z (with --scan)");
    k_cmd->add_option("--eps", ka.eps, "twist selector 0 or 1 (uno-b)");
    k_cmd->add_option("--bound", ka.bound, "decomposition scan width (due)")
        ->default_val(64);
    k_cmd->add_option("--e", ka.e, "invariant e of F_e (brosius)");
    k_cmd->add_option("--t", ka.t, "fibre-balance degree t (brosius)");
    k_cmd->add_option("--k", ka.k, "second Chern number k (brosius)");

    // ey
    auto* e_cmd = app.add_subcommand("ey", "the one-parameter family on F_1");
    e_cmd->set_help_flag("--help", "print help"); // frees -h/--h for the parameter below
    i64 e_y = 0, e_h = 3;
    bool e_inv = false, e_verdict = false, e_props = false;
    e_cmd->add_option("--y", e_y, "family parameter y in [-2, 4]")->required();
    e_cmd->add_option("--h", e_h, "family parameter h >= 3")->required();
    e_cmd->add_flag("--invariants", e_inv, "only the Chern/scroll invariants");
    e_cmd->add_flag("--verdict", e_verdict, "only the classification verdict");
    e_cmd->add_flag("--restriction-props", e_props, "only the restriction study");

    // reider
    auto* r_cmd = app.add_subcommand("reider",
                                     "adjoint test on the plane blown up in nine points");
    i64 r_d = 0;
    std::string r_mults;
    r_cmd->add_option("--d", r_d, "line degree d")->required();
    r_cmd->add_option("--mults", r_mults, "nine multiplicities: 'm x 9' shorthand or a comma list")
        ->required();

    // finalno
    auto* f_cmd = app.add_subcommand("finalno", "section-count floor for the plane model");
    i64 f_x = 0, f_points = 0, f_h0 = 0;
    f_cmd->add_option("--x", f_x, "model parameter x >= 0")->required();
    f_cmd->add_option("--points", f_points, "number of simple points n")->required();
    f_cmd->add_option("--h0", f_h0, "claimed section count")->required();

    // search
    auto* s_cmd = app.add_subcommand("search", "scan a parameter box and append certified "
                                               "scrolls to the catalog");
    std::string s_box, s_out;
    int s_jobs = 1;
    s_cmd->add_option("--box", s_box, "search box JSON file")->required();
    s_cmd->add_option("--out", s_out, "catalog path (default: SCROLLSMITH_CATALOG or catalog.jsonl)");
    s_cmd->add_option("--jobs", s_jobs, "worker threads")->default_val(1);

    // query
    auto* q_cmd = app.add_subcommand("query", "filter catalog entries");
    std::string q_path;
    Catalog::QueryFilter q_filter;
    i64 q_deg_min = 0, q_deg_max = 0, q_gen_min = 0, q_gen_max = 0;
    std::string q_base, q_criterion;
    q_cmd->add_option("--path", q_path, "catalog path (default: SCROLLSMITH_CATALOG or catalog.jsonl)");
    auto* qo1 = q_cmd->add_option("--degree-min", q_deg_min);
    auto* qo2 = q_cmd->add_option("--degree-max", q_deg_max);
    auto* qo3 = q_cmd->add_option("--genus-min", q_gen_min);
    auto* qo4 = q_cmd->add_option("--genus-max", q_gen_max);
    auto* qo5 = q_cmd->add_option("--base", q_base, "base label, e.g. F1");
    auto* qo6 = q_cmd->add_option("--criterion", q_criterion);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_cmd) {
            const RuledBase base = parse_surface(c_surface);
            const DivisorClass d = parse_class(c_class, base, "--class");
            const CohomologyBound b = cohomology_exact(d, base);
            const i64 chi = euler_characteristic(d, base);
            if (c_json) {
                ordered_json j;
                j["surface"] = base.label();
                j["class"] = divisor_to_json(d);
                j["h0"] = b.h0.lo;
                j["h1"] = b.h1.lo;
                j["h2"] = b.h2.lo;
                j["chi"] = chi;
                print_json(j);
            } else {
                std::cout << "h0=" << b.h0.lo << " h1=" << b.h1.lo << " h2=" << b.h2.lo
                          << " chi=" << chi << "\n";
            }
            return 0;
        }
        if (*k_cmd) {
            return run_check(ka);
        }
        if (*e_cmd) {
            const bool all = !e_inv && !e_verdict && !e_props;
            ordered_json j;
            j["v"] = 1;
            j["y"] = e_y;
            j["h"] = e_h;
            const ExtensionBundle E = ey_family(e_y, e_h);
            j["bundle"] = bundle_to_json(E);
            int code = 0;
            if (all || e_inv) {
                const ChernClasses cc = chern_classes(E);
                const ScrollInvariants inv = scroll_invariants(E);
                ordered_json ji;
                ji["c1"] = divisor_to_json(cc.c1);
                ji["c2"] = cc.c2;
                ji["degree"] = inv.degree;
                ji["sectional_genus"] = inv.sectional_genus;
                ji["ambient_dim"] =
                    inv.ambient_dim ? ordered_json(*inv.ambient_dim) : ordered_json(nullptr);
                j["invariants"] = std::move(ji);
            }
            if (all || e_verdict) {
                const ConditionReport v = teoy_verdict(e_y, e_h);
                j["verdict"] = report_to_json(v);
                code = exit_for(v.verdict);
            }
            if ((all && (e_h == 3 || e_h == 4)) || e_props) {
                j["restriction_props"] = report_to_json(check_restriction_props(e_y, e_h));
            }
            print_json(j);
            return code;
        }
        if (*r_cmd) {
            BlownPlaneClass M;
            M.d = r_d;
            M.mults = parse_mults(r_mults);
            const ReiderResult res = reider_exceptions(M);
            ordered_json j;
            j["v"] = 1;
            j["m_squared"] = res.m_squared;
            j["candidates"] = static_cast<i64>(res.candidates.size());
            j["report"] = report_to_json(res.report);
            print_json(j);
            return exit_for(res.report.verdict);
        }
        if (*f_cmd) {
            const BlownPlaneClass cls = finalno_class(f_x, f_points);
            const ConditionReport rep = finalno_obstruction(f_x, f_points, f_h0);
            ordered_json j;
            j["v"] = 1;
            j["class"] = ordered_json{{"d", cls.d}, {"mults", cls.mults}};
            j["forced_h0"] = h0_lower_bound_blown_plane(cls);
            j["claimed_h0"] = f_h0;
            j["report"] = report_to_json(rep);
            print_json(j);
            return exit_for(rep.verdict);
        }
        if (*s_cmd) {
            std::ifstream in(s_box);
            if (!in) throw std::runtime_error("box '" + s_box + "': cannot open");
            std::stringstream buf;
            buf << in.rdbuf();
            const SearchBox box =
                box_from_json(parse_json_text(buf.str(), "box '" + s_box + "'"), "box");
            const SearchOutcome outcome = enumerate_candidates(box, s_jobs, !deterministic);
            const std::string path = s_out.empty() ? default_catalog_path() : s_out;
            Catalog catalog(path);
            i64 appended = 0, duplicates = 0;
            for (const auto& entry : outcome.entries) {
                if (catalog.append(entry) == Catalog::AppendResult::Appended) {
                    ++appended;
                } else {
                    ++duplicates;
                }
            }
            ordered_json j;
            j["v"] = 1;
            j["catalog"] = path;
            j["tuples_scanned"] = outcome.tuples_scanned;
            j["bundles_searched"] = outcome.bundles_searched;
            j["witnesses_found"] = static_cast<i64>(outcome.entries.size());
            j["appended"] = appended;
            j["duplicates"] = duplicates;
            print_json(j);
            return 0;
        }
        if (*q_cmd) {
            if (*qo1) q_filter.degree_min = q_deg_min;
            if (*qo2) q_filter.degree_max = q_deg_max;
            if (*qo3) q_filter.genus_min = q_gen_min;
            if (*qo4) q_filter.genus_max = q_gen_max;
            if (*qo5) q_filter.base_label = q_base;
            if (*qo6) q_filter.criterion = q_criterion;
            const std::string path = q_path.empty() ? default_catalog_path() : q_path;
            const Catalog::QueryResult res = Catalog(path).query(q_filter);
            for (const auto& e : res.entries) {
                std::cout << entry_to_json(e, false).dump() << "\n";
            }
            std::cerr << "matched=" << res.entries.size()
                      << " corrupt_skipped=" << res.corrupt_lines_skipped << "\n";
            return 0;
        }
    } catch (const std::runtime_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
