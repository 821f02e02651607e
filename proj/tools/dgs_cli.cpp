// dgs: spectral radii, signless Laplacian bounds, extremal families and an
// exhaustive verification harness for strongly connected digraphs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgs/bounds.hpp"
#include "dgs/digraph.hpp"
#include "dgs/enumerate.hpp"
#include "dgs/families.hpp"
#include "dgs/spectral.hpp"
#include "dgs/transforms.hpp"
#include "dgs/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format = "plain";
    int workers = 1;
    double tolerance = 1e-10;
};

struct FamilyOpts {
    std::string name;
    int n = 0, d = 0, g = 0, k = 0, m = 0, a = -1, b = -1, c = -1;
};

dgs::Digraph build_family(const FamilyOpts& f) {
    using namespace dgs::families;
    if (f.name == "cycle") return cycle(f.n);
    if (f.name == "complete") return complete(f.n);
    if (f.name == "complete-minus-arc") return complete_minus_arc(f.n);
    if (f.name == "B") {
        if (f.d < 2 || f.d > f.n - 1)
            throw CLI::ValidationError("B requires 2 <= d <= n-1");
        return b_family(f.n, f.d);
    }
    if (f.name == "Bprime") {
        if (f.d < 2 || f.d > f.n - 1)
            throw CLI::ValidationError("Bprime requires 2 <= d <= n-1");
        return b_prime(f.n, f.d);
    }
    if (f.name == "C") {
        if (f.g < 2 || f.g > f.n - 1)
            throw CLI::ValidationError("C requires 2 <= g <= n-1");
        return c_family(f.n, f.g);
    }
    if (f.name == "Cprime") {
        if (f.g < 2 || f.g > f.n - 1)
            throw CLI::ValidationError("Cprime requires 2 <= g <= n-1");
        return c_prime(f.n, f.g);
    }
    if (f.name == "theta") {
        if (f.a < 0 || f.b < 0 || f.c < 0)
            throw CLI::ValidationError("theta requires --a --b --c >= 0");
        if (f.a == 0 && f.b == 0)
            throw CLI::ValidationError("theta requires a and b not both zero");
        return theta(f.a, f.b, f.c);
    }
    if (f.name == "theta-hat") {
        if (f.n < 4) throw CLI::ValidationError("theta-hat requires n >= 4");
        return theta_hat(f.n);
    }
    if (f.name == "K3") {
        if (f.k < 1 || f.k > f.n - 2)
            throw CLI::ValidationError("K3 requires 1 <= k <= n-2");
        if (f.m < 1 || f.m > f.n - f.k - 1)
            throw CLI::ValidationError("K3 requires 1 <= m <= n-k-1");
        return k3_family(f.n, f.k, f.m);
    }
    throw CLI::ValidationError("unknown family: " + f.name);
}

dgs::Digraph load_input(const std::string& path, const FamilyOpts& fam) {
    if (!fam.name.empty()) return build_family(fam);
    if (path.empty() || path == "-") return dgs::read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw dgs::ParseError("cannot open " + path);
    return dgs::read_edge_list(in);
}

void add_family_flags(CLI::App* cmd, FamilyOpts& f, bool required) {
    auto* name = cmd->add_option("--family", f.name,
                                 "cycle|complete|complete-minus-arc|B|Bprime|C|Cprime|"
                                 "theta|theta-hat|K3");
    if (required) name->required();
    cmd->add_option("--n", f.n, "vertex count");
    cmd->add_option("--d", f.d, "clique parameter of B / Bprime");
    cmd->add_option("--g", f.g, "girth parameter of C / Cprime");
    cmd->add_option("--k", f.k, "cut size of K3");
    cmd->add_option("--m", f.m, "first clique size of K3");
    cmd->add_option("--a", f.a, "theta path parameter a");
    cmd->add_option("--b", f.b, "theta path parameter b");
    cmd->add_option("--c", f.c, "theta path parameter c");
}

std::string fmt(double v) { return dgs::format_real(v); }

void cmd_compute(const GlobalOpts& go, const dgs::Digraph& d, bool allow_multi) {
    if (!d.simple() && !allow_multi) {
        std::cerr << "error: input has multiple arcs (use --allow-multi)\n";
        std::exit(3);
    }
    dgs::SpectralOptions sopt;
    sopt.tolerance = go.tolerance;
    auto rq = dgs::q(d, sopt);
    auto rr = dgs::rho(d, sopt);
    bool sc = dgs::is_strongly_connected(d);
    int g = dgs::girth(d);
    std::optional<int> clique, kappa;
    if (d.simple()) {
        clique = dgs::clique_number(d);
        if (sc) kappa = dgs::vertex_connectivity(d);
    }
    if (go.format == "json") {
        json j{{"n", d.n()},
               {"arcs", d.arc_count()},
               {"stronglyConnected", sc},
               {"rho", rr.radius},
               {"q", rq.radius}};
        j["girth"] = g == dgs::kInfiniteGirth ? json(nullptr) : json(g);
        if (clique) j["clique"] = *clique;
        if (kappa) j["kappa"] = *kappa;
        if (rq.has_perron()) j["perron"] = rq.perron_vector;
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (go.format == "csv") {
        std::cout << "n,arcs,stronglyConnected,girth,clique,kappa,rho,q\n"
                  << d.n() << "," << d.arc_count() << "," << (sc ? "true" : "false") << ","
                  << (g == dgs::kInfiniteGirth ? "inf" : std::to_string(g)) << ","
                  << (clique ? std::to_string(*clique) : "") << ","
                  << (kappa ? std::to_string(*kappa) : "") << "," << fmt(rr.radius) << ","
                  << fmt(rq.radius) << "\n";
        return;
    }
    std::cout << "n " << d.n() << "\narcs " << d.arc_count() << "\nstrongly_connected "
              << (sc ? "true" : "false") << "\ngirth "
              << (g == dgs::kInfiniteGirth ? std::string("inf") : std::to_string(g)) << "\n";
    if (clique) std::cout << "clique " << *clique << "\n";
    if (kappa) std::cout << "kappa " << *kappa << "\n";
    std::cout << "rho " << fmt(rr.radius) << "\nq " << fmt(rq.radius) << "\n";
    if (rq.has_perron()) {
        std::cout << "perron";
        for (double v : rq.perron_vector) std::cout << " " << fmt(v);
        std::cout << "\n";
    }
}

json bound_report_json(const dgs::BoundReport& r) {
    json j{{"name", r.name},           {"n", r.n},
           {"q", r.q_exact},           {"lower11", r.lower_11},
           {"upper11", r.upper_11},    {"lower12", r.lower_12},
           {"upper12", r.upper_12},    {"upper13", r.upper_13},
           {"upper14", r.upper_14},    {"phiStar", r.phi_star},
           {"s", r.phi_argmin},        {"tight", r.tightness.tight}};
    j["phi"] = r.phi_values;
    if (r.tightness.t) j["t"] = *r.tightness.t;
    return j;
}

void print_bound_reports(const GlobalOpts& go, const std::vector<dgs::BoundReport>& rows) {
    if (go.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(bound_report_json(r));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (go.format == "plain") {
        for (const auto& r : rows) {
            std::cout << (r.name.empty() ? "digraph" : r.name) << " (n=" << r.n << ")\n"
                      << "  q        " << fmt(r.q_exact) << "\n"
                      << "  (1.1)    [" << fmt(r.lower_11) << ", " << fmt(r.upper_11) << "]\n"
                      << "  (1.2)    [" << fmt(r.lower_12) << ", " << fmt(r.upper_12) << "]\n"
                      << "  (1.3)    " << fmt(r.upper_13) << "\n"
                      << "  (1.4)    " << fmt(r.upper_14) << "\n"
                      << "  phi*     " << fmt(r.phi_star) << " at l=" << r.phi_argmin << "\n"
                      << "  tight    " << (r.tightness.tight ? "true" : "false") << "\n";
        }
        return;
    }
    std::cout << dgs::bound_report_csv_header() << "\n";
    for (const auto& r : rows) std::cout << dgs::bound_report_csv_row(r) << "\n";
}

void cmd_enumerate(const GlobalOpts& go, int n, dgs::Metric metric, bool maximize, int top) {
    dgs::Ranking rk = dgs::extremal_ranking(n, metric, maximize, top, 1e-8, go.workers);
    if (go.format == "json") {
        json j{{"n", n},
               {"metric", dgs::metric_name(metric)},
               {"direction", maximize ? "max" : "min"},
               {"tolerance", rk.tolerance},
               {"nearTieFlagged", rk.near_tie_flagged}};
        json entries = json::array();
        for (const auto& e : rk.entries) {
            json classes = json::array();
            for (size_t i = 0; i < e.classes.size(); ++i) {
                std::ostringstream os;
                os << e.representatives[i];
                classes.push_back({{"canonical", e.classes[i]}, {"edgeList", os.str()}});
            }
            entries.push_back({{"value", e.value}, {"classes", classes}});
        }
        j["entries"] = entries;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "rankings of " << dgs::metric_name(metric) << " (" << (maximize ? "max" : "min")
              << ", n=" << n << ")\n";
    int rank = 1;
    for (const auto& e : rk.entries) {
        std::cout << "#" << rank++ << " value " << fmt(e.value) << " (" << e.classes.size()
                  << (e.classes.size() == 1 ? " class)\n" : " classes)\n");
        for (size_t i = 0; i < e.classes.size(); ++i) {
            std::ostringstream os;
            os << e.representatives[i];
            std::istringstream in(os.str());
            std::string line;
            while (std::getline(in, line)) std::cout << "    " << line << "\n";
            if (i + 1 < e.classes.size()) std::cout << "    --\n";
        }
    }
    if (rk.near_tie_flagged) std::cout << "note: near-tie between consecutive ranks\n";
}

int cmd_verify(const GlobalOpts& go, const std::string& theorem, const std::string& range) {
    int lo = 0, hi = 0;
    if (!range.empty()) {
        auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range);
            } else {
                lo = std::stoi(range.substr(0, dots));
                hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            std::cerr << "error: bad range '" << range << "'\n";
            return 2;
        }
    }
    dgs::TheoremReport rep;
    try {
        rep = dgs::verify_theorem(theorem, lo, hi, nullptr, go.workers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (go.format == "json") {
        json j{{"theorem", rep.id},
               {"params", rep.params},
               {"verdict", dgs::verdict_name(rep.verdict)},
               {"evidenceOnly", rep.evidence_only},
               {"elapsedSeconds", rep.elapsed_seconds}};
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        if (rep.counterexample) {
            std::ostringstream os;
            os << *rep.counterexample;
            j["counterexample"] = os.str();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << dgs::theorem_report_text(rep) << "\n";
    }
    return rep.verdict == dgs::Verdict::violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral radii and signless Laplacian bounds of strongly connected digraphs"};
    app.require_subcommand(1);

    GlobalOpts go;
    app.add_option("--format", go.format, "plain|json|csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--workers", go.workers, "worker threads for enumeration sweeps");
    app.add_option("--tolerance", go.tolerance, "certification tolerance");

    // compute
    auto* compute = app.add_subcommand("compute", "structural and spectral parameters");
    FamilyOpts comp_fam;
    std::string comp_input;
    bool allow_multi = false;
    compute->add_option("--input", comp_input, "edge-list file, '-' for stdin");
    add_family_flags(compute, comp_fam, false);
    compute->add_flag("--allow-multi", allow_multi, "accept multi-arcs");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "upper/lower bound report");
    FamilyOpts bnd_fam;
    std::string bnd_input;
    bool table1 = false;
    bounds->add_option("--input", bnd_input, "edge-list file, '-' for stdin");
    add_family_flags(bounds, bnd_fam, false);
    bounds->add_flag("--table1", table1, "the four-row bound comparison table");

    // family
    auto* family = app.add_subcommand("family", "emit a named family as an edge list");
    FamilyOpts fam_fam;
    add_family_flags(family, fam_fam, true);

    // transform
    auto* transform = app.add_subcommand("transform", "redirect / contract / insert");
    std::string action, tr_input;
    int tu = -1, tv = -1, tw = -1;
    transform->add_option("--action", action, "redirect|contract|insert")
        ->required()
        ->check(CLI::IsMember({"redirect", "contract", "insert"}));
    transform->add_option("--input", tr_input, "edge-list file, '-' for stdin");
    transform->add_option("--u", tu)->required();
    transform->add_option("--v", tv)->required();
    transform->add_option("--w", tw, "redirect target");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive extremal rankings");
    int en_n = 4, en_top = 4;
    std::string en_metric = "q";
    bool en_min = false, en_max = false;
    enumerate->add_option("--n", en_n, "vertex count (2..5)")->required();
    enumerate->add_option("--metric", en_metric, "q|rho")->check(CLI::IsMember({"q", "rho"}));
    enumerate->add_flag("--min", en_min, "rank smallest first");
    enumerate->add_flag("--max", en_max, "rank largest first");
    enumerate->add_option("--top", en_top, "number of ranks");

    // verify
    auto* verify = app.add_subcommand("verify", "check a numbered claim");
    std::string vf_theorem, vf_range;
    verify->add_option("--theorem", vf_theorem, "claim id, e.g. T6.3")->required();
    verify->add_option("--n", vf_range, "range lo..hi (default per claim)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            cmd_compute(go, load_input(comp_input, comp_fam), allow_multi);
        } else if (*bounds) {
            std::vector<dgs::BoundReport> rows;
            dgs::SpectralOptions sopt;
            sopt.tolerance = go.tolerance;
            if (table1) {
                rows.push_back(
                    dgs::bound_report(dgs::families::complete_minus_arc(6), "Kminus(6)", sopt));
                rows.push_back(dgs::bound_report(dgs::families::d1_example(6), "D1(6)", sopt));
                rows.push_back(dgs::bound_report(dgs::families::b_family(6, 4), "B(6,4)", sopt));
                rows.push_back(dgs::bound_report(dgs::families::c_family(6, 3), "C(6,3)", sopt));
            } else {
                dgs::Digraph d = load_input(bnd_input, bnd_fam);
                if (!d.simple()) {
                    std::cerr << "error: bounds require a simple digraph\n";
                    return 3;
                }
                rows.push_back(dgs::bound_report(d, bnd_fam.name, sopt));
            }
            print_bound_reports(go, rows);
        } else if (*family) {
            std::cout << build_family(fam_fam);
        } else if (*transform) {
            dgs::Digraph d = load_input(tr_input, FamilyOpts{});
            dgs::Digraph out(1);
            if (action == "redirect") {
                if (tw < 0) throw CLI::ValidationError("redirect requires --w");
                out = dgs::redirect_arc(d, tu, tv, tw);
            } else if (action == "contract") {
                if (!d.simple()) {
                    std::cerr << "error: contract requires a simple digraph\n";
                    return 3;
                }
                out = dgs::contract(d, tu, tv);
            } else {
                out = dgs::insert_vertex(d, tu, tv);
            }
            std::cout << out;
        } else if (*enumerate) {
            if (en_min && en_max) throw CLI::ValidationError("--min and --max conflict");
            cmd_enumerate(go, en_n, en_metric == "q" ? dgs::Metric::q : dgs::Metric::rho,
                          en_max, en_top);
        } else if (*verify) {
            return cmd_verify(go, vf_theorem, vf_range);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dgs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dgs::NotSimpleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
