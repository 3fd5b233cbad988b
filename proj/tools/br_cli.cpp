// br: command-line front end for the blowup Ramsey toolkit.
//
// Exit codes: 0 proved/computed, 1 refuted (certificate emitted when asked),
// 2 budget exhausted, 64 usage or input error.

#include "br/arrow.hpp"
#include "br/blowup_number.hpp"
#include "br/check.hpp"
#include "br/embedder.hpp"
#include "br/hom.hpp"
#include "br/io.hpp"
#include "br/nikiforov.hpp"
#include "br/regularity.hpp"
#include "br/robustness.hpp"
#include "br/subgraph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kProved = 0;
constexpr int kRefuted = 1;
constexpr int kBudget = 2;
constexpr int kUsage = 64;

int verdict_exit(br::Verdict v) {
    switch (v) {
    case br::Verdict::Proved: return kProved;
    case br::Verdict::Refuted: return kRefuted;
    default: return kBudget;
    }
}

const char* verdict_name(br::Verdict v) {
    switch (v) {
    case br::Verdict::Proved: return "proved";
    case br::Verdict::Refuted: return "refuted";
    default: return "budget-exhausted";
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw br::ParseError("cannot open output file " + path, 0);
    out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw br::ParseError("cannot open " + path, 0);
    json j;
    in >> j;
    return j;
}

void print_report(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

struct ArrowOpts {
    std::string g_path, h_path, cert_path;
    int r = 2;
    bool hom = false, minimal = false;
    std::int64_t budget = br::kDefaultBudget;
};

int run_arrow(const ArrowOpts& o) {
    br::Graph g = br::load_graph_file(o.g_path);
    br::Graph h = br::load_graph_file(o.h_path);
    br::SearchOutcome out = o.minimal ? br::is_ramsey_minimal(g, h, o.r, o.budget)
                          : o.hom    ? br::hom_arrows(g, h, o.r, o.budget)
                                     : br::arrows(g, h, o.r, o.budget);
    json report{{"command", "arrow"},
                {"mode", o.minimal ? "minimal" : o.hom ? "hom" : "plain"},
                {"r", o.r},
                {"verdict", verdict_name(out.verdict)},
                {"nodes", out.stats.nodes}};
    if (out.coloring && !o.cert_path.empty()) {
        write_json(o.cert_path, br::emit_coloring_json(*out.coloring));
        report["certificate"] = o.cert_path;
    }
    print_report(report);
    return verdict_exit(out.verdict);
}

struct BlowupOpts {
    std::string g_path, h_path, cert_path, mode = "canonical", strategy = "local";
    int r = 2, t = 1, n_max = 8, lower_n = 0;
    std::int64_t budget = br::kDefaultBudget;
    std::uint64_t seed = 1;
};

int run_blowup_number(const BlowupOpts& o) {
    br::Graph g = br::load_graph_file(o.g_path);
    br::Graph h = br::load_graph_file(o.h_path);
    if (o.lower_n > 0) {
        auto strat = o.strategy == "random" ? br::LowerBoundStrategy::Random
                                            : br::LowerBoundStrategy::Local;
        auto cert = br::lower_bound_search(g, h, o.r, o.t, o.lower_n, strat, o.budget, o.seed);
        json report{{"command", "blowup-number"}, {"op", "lower-bound"}, {"r", o.r},
                    {"t", o.t}, {"n", o.lower_n}, {"strategy", o.strategy},
                    {"found", cert.has_value()}};
        if (cert) {
            report["verified"] = br::verify_lower_certificate(*cert, g, h, o.r, o.t);
            if (!o.cert_path.empty() && cert->witness) {
                write_json(o.cert_path, br::emit_coloring_json(*cert->witness));
                report["certificate"] = o.cert_path;
            }
        }
        print_report(report);
        return cert ? kProved : kBudget;
    }
    br::BlowupNumberResult res = o.mode == "any"
        ? br::blowup_ramsey_noncanonical(g, h, o.r, o.t, o.n_max, o.budget)
        : br::blowup_ramsey_exact(g, h, o.r, o.t, o.n_max, o.budget);
    json report{{"command", "blowup-number"}, {"mode", o.mode}, {"r", o.r}, {"t", o.t},
                {"n_max", o.n_max}, {"verdict", verdict_name(res.verdict)},
                {"nodes", res.nodes}};
    if (res.value) report["value"] = *res.value;
    if (res.best_lower) {
        report["best_lower_n"] = res.best_lower->n;
        if (!o.cert_path.empty() && res.best_lower->witness) {
            write_json(o.cert_path, br::emit_coloring_json(*res.best_lower->witness));
            report["certificate"] = o.cert_path;
        }
    }
    print_report(report);
    return verdict_exit(res.verdict);
}

struct EmbedOpts {
    std::string gamma_path, h_path, cert_path;
    double alpha = 0.05;
    std::vector<int> order;
};

int run_embed(const EmbedOpts& o) {
    br::PartiteGraph gamma = br::parse_partite_json(read_json_file(o.gamma_path));
    br::Graph h = br::load_graph_file(o.h_path);
    br::EmbedderParams params;
    params.alpha = o.alpha;
    params.order = o.order;
    br::EmbedderResult res = br::find_blowup_greedy(gamma, h, params);
    json stages = json::array();
    for (const auto& s : res.stages)
        stages.push_back({{"i", s.i}, {"q", s.q}, {"target_t", s.target_t},
                          {"achieved_t", s.achieved_t}, {"good_fraction", s.good_fraction}});
    json report{{"command", "embed"}, {"alpha", o.alpha}, {"achieved_t", res.achieved_t},
                {"order", res.order}, {"epsilon", res.epsilon}, {"delta", res.delta},
                {"p12", res.p12}, {"target_formula_t", res.target_formula_t},
                {"used_exact_fallback", res.used_exact_fallback}, {"stages", stages}};
    if (res.achieved_t >= 1 && !o.cert_path.empty()) {
        write_json(o.cert_path, br::emit_embedding_json(res.certificate));
        report["certificate"] = o.cert_path;
    }
    print_report(report);
    return res.achieved_t >= 1 ? kProved : kRefuted;
}

struct RegularityOpts {
    std::string graph_path, coloring_path, h_path, xs, ys;
    double eps = 0.1;
    std::string mode = "exact";
    int max_splits = 64;
    std::uint64_t seed = 1;
};

int run_reg_check_pair(const RegularityOpts& o) {
    br::Graph g = br::load_graph_file(o.graph_path);
    std::vector<int> xs = parse_int_list(o.xs), ys = parse_int_list(o.ys);
    auto mode = o.mode == "heuristic" ? br::RegularityMode::Heuristic : br::RegularityMode::Exact;
    br::RegularityResult res = br::is_regular_pair(g, xs, ys, o.eps, mode, o.seed);
    const char* v = res.verdict == br::RegularityVerdict::Regular ? "regular"
                  : res.verdict == br::RegularityVerdict::Irregular ? "irregular" : "unknown";
    json report{{"command", "regularity"}, {"op", "check-pair"}, {"eps", o.eps},
                {"mode", o.mode}, {"verdict", v},
                {"density", br::density(g, xs, ys).str()}};
    if (res.witness) report["witness"] = {{"X", res.witness->first}, {"Y", res.witness->second}};
    print_report(report);
    return res.verdict == br::RegularityVerdict::Irregular ? kRefuted
         : res.verdict == br::RegularityVerdict::Regular   ? kProved : kBudget;
}

int run_reg_partition(const RegularityOpts& o) {
    br::PartiteGraph pg = br::parse_partite_json(read_json_file(o.graph_path));
    br::EdgeColoring coloring = br::parse_coloring_json(read_json_file(o.coloring_path));
    br::CylinderPartition part = br::cylinder_partition(pg, coloring, o.eps, o.max_splits, o.seed);
    json cyls = json::array();
    for (const auto& c : part.cylinders)
        cyls.push_back({{"parts", c.parts}, {"regular_all_colors", c.regular_all_colors},
                        {"tuples", c.tuple_count()}});
    json report{{"command", "regularity"}, {"op", "partition"}, {"eps", o.eps},
                {"regular", part.regular}, {"splits", part.splits_performed},
                {"irregular_tuple_mass", part.irregular_tuple_mass},
                {"total_tuples", part.total_tuples}, {"cylinders", cyls}};
    print_report(report);
    return part.regular ? kProved : kBudget;
}

int run_reg_count(const RegularityOpts& o) {
    br::PartiteGraph pg = br::parse_partite_json(read_json_file(o.graph_path));
    br::Graph h = br::load_graph_file(o.h_path);
    std::vector<double> densities;
    std::vector<int> sizes;
    for (const auto& part : pg.parts) sizes.push_back(static_cast<int>(part.size()));
    for (auto [i, j] : h.edges())
        densities.push_back(br::density(pg.g, pg.parts[i], pg.parts[j]).value());
    br::CountingBound bound = br::counting_lemma_bound(densities, sizes, o.eps, h);
    std::int64_t exact = br::count_canonical_copies(pg, h);
    json report{{"command", "regularity"}, {"op", "count"}, {"eps", o.eps},
                {"densities", densities}, {"lo", bound.lo}, {"hi", bound.hi},
                {"center", bound.center}, {"exact_count", exact},
                {"contains", bound.contains(static_cast<double>(exact))}};
    print_report(report);
    return kProved;
}

struct RobustnessOpts {
    std::string g_path, h_path, cert_path;
    int r = 2, scan_max_n = 0;
    bool witness = false, labeled = false;
    std::int64_t budget = br::kDefaultBudget;
};

int run_robustness(const RobustnessOpts& o) {
    br::Graph h = br::load_graph_file(o.h_path);
    if (o.scan_max_n > 0) {
        br::MinimalFamilyScan scan = br::minimal_family_scan(h, o.r, o.scan_max_n, o.budget);
        json found = json::array();
        for (const auto& g : scan.minimal) found.push_back(br::emit_graph6(g));
        json report{{"command", "robustness"}, {"op", "scan"}, {"r", o.r},
                    {"max_n", o.scan_max_n}, {"complete", scan.complete},
                    {"graphs_scanned", scan.graphs_scanned}, {"minimal", found}};
        print_report(report);
        return scan.complete ? kProved : kBudget;
    }
    br::Graph g = br::load_graph_file(o.g_path);
    br::RobustnessReport rep = br::robustness_exact(g, h, o.r, o.budget, o.labeled);
    json report{{"command", "robustness"}, {"r", o.r}, {"beta", rep.beta.str()},
                {"mono_count", rep.mono_count}, {"total_copies", rep.total_copies},
                {"lemma_bound", rep.lemma_bound.str()}, {"exact", rep.exact},
                {"nodes", rep.nodes}};
    if (o.witness) {
        br::WitnessColoring w = br::lemma_witness_coloring(g, h, o.r, o.budget);
        report["witness_achieved"] = w.achieved.str();
        report["witness_pivot"] = {w.pivot_edge_u, w.pivot_edge_v};
        if (!o.cert_path.empty()) {
            write_json(o.cert_path, br::emit_coloring_json(w.coloring));
            report["certificate"] = o.cert_path;
        }
    }
    print_report(report);
    return rep.exact ? kProved : kBudget;
}

struct NikiforovOpts {
    std::string g_path, h_path, cert_path, n_grid;
    double eta = 0.05;
    int trials = 32, r = 2;
    std::uint64_t seed = 7;
    bool demo = false;
};

int run_nikiforov(const NikiforovOpts& o) {
    br::Graph g = br::load_graph_file(o.g_path);
    br::Graph h = br::load_graph_file(o.h_path);
    if (o.demo) {
        auto rows = br::blowup_upper_bound_demo(g, h, o.r, parse_int_list(o.n_grid), o.trials, o.seed);
        json table = json::array();
        for (const auto& row : rows)
            table.push_back({{"n", row.n}, {"trial", row.trial},
                             {"t_achieved", row.t_achieved}, {"t_reference", row.t_reference}});
        print_report(json{{"command", "nikiforov"}, {"op", "demo"}, {"r", o.r},
                          {"trials", o.trials}, {"seed", o.seed}, {"rows", table}});
        return kProved;
    }
    br::DenseBlowupReport rep = br::find_blowup_in_dense(g, h, o.eta, o.trials, o.seed);
    json report{{"command", "nikiforov"}, {"eta", o.eta}, {"trials", o.trials},
                {"seed", o.seed}, {"refused", rep.refused},
                {"measured_density", rep.measured_density},
                {"labeled_copies", rep.labeled_copies}};
    if (rep.refused) {
        print_report(report);
        return kRefuted;
    }
    report["achieved_t"] = rep.embedding.achieved_t;
    report["lambda_log_n"] = rep.lambda_log_n;
    report["density_product"] = rep.density_product;
    if (rep.embedding.achieved_t >= 1 && !o.cert_path.empty()) {
        write_json(o.cert_path, br::emit_embedding_json(rep.embedding.certificate));
        report["certificate"] = o.cert_path;
    }
    print_report(report);
    return rep.embedding.achieved_t >= 1 ? kProved : kRefuted;
}

struct ConstantsOpts {
    double eta = 0.05, gamma = 0.01;
    int eh = 3, r = 2;
    bool lambda = false, souza_b = false;
};

int run_constants(const ConstantsOpts& o) {
    json report{{"command", "constants"}};
    if (o.lambda) report["lambda"] = br::lambda_reference(o.eta, o.eh);
    if (o.souza_b) {
        br::SouzaB b = br::souza_b_reference(o.r, o.eh, o.gamma);
        report["souza_b"] = {{"log_value", b.log_value}, {"value", b.value},
                             {"gamma_warning", b.gamma_warning}};
    }
    print_report(report);
    return kProved;
}

struct VerifyOpts {
    std::string cert_path, kind, host_path, h_path;
    int t = 1, r = 2;
};

int run_verify(const VerifyOpts& o) {
    json cert = read_json_file(o.cert_path);
    br::Graph h = br::load_graph_file(o.h_path);
    br::CheckResult res;
    if (o.kind == "embedding") {
        br::Graph host;
        std::vector<std::vector<int>> parts;
        if (o.host_path.size() > 5 && o.host_path.substr(o.host_path.size() - 5) == ".json") {
            json hj = read_json_file(o.host_path);
            if (hj.contains("parts")) {
                br::PartiteGraph pg = br::parse_partite_json(hj);
                host = pg.g;
                parts = pg.parts;
            } else {
                host = br::parse_graph_json(hj);
            }
        } else {
            host = br::load_graph_file(o.host_path);
        }
        res = br::check_embedding_certificate(host, parts, h, br::parse_embedding_json(cert), o.t);
    } else if (o.kind == "coloring") {
        br::Graph host = br::load_graph_file(o.host_path);
        res = br::check_coloring_certificate(br::parse_coloring_json(cert), host, h);
    } else {
        std::cerr << "verify: kind must be embedding or coloring\n";
        return kUsage;
    }
    print_report(json{{"command", "verify"}, {"kind", o.kind}, {"ok", res.ok},
                      {"reason", res.reason}});
    return res.ok ? kProved : kRefuted;
}

struct GenOpts {
    std::string type = "clique", format = "g6", out_path;
    int n = 5, a = 2, b = 2, t = 2;
    double p = 0.5;
    std::uint64_t seed = 1;
};

int run_gen(const GenOpts& o) {
    br::Graph g;
    std::vector<std::vector<int>> parts;
    if (o.type == "clique") g = br::complete_graph(o.n);
    else if (o.type == "path") g = br::path_graph(o.n);
    else if (o.type == "cycle") g = br::cycle_graph(o.n);
    else if (o.type == "star") g = br::star_graph(o.n);
    else if (o.type == "biclique") g = br::complete_bipartite(o.a, o.b);
    else if (o.type == "empty") g = br::empty_graph(o.n);
    else if (o.type == "gnp") { br::Rng rng(o.seed); g = br::gnp(o.n, o.p, rng); }
    else if (o.type == "blowup") {
        br::PartiteGraph pg = br::blowup(br::complete_graph(o.n), o.t);
        g = pg.g;
        parts = pg.parts;
    } else {
        std::cerr << "gen: unknown type " << o.type << "\n";
        return kUsage;
    }
    std::string text;
    if (o.format == "g6") text = br::emit_graph6(g) + "\n";
    else if (!parts.empty()) text = br::emit_partite_json(br::PartiteGraph(g, parts)).dump(2) + "\n";
    else text = br::emit_graph_json(g).dump(2) + "\n";
    if (o.out_path.empty()) std::cout << text;
    else {
        std::ofstream f(o.out_path);
        f << text;
    }
    return kProved;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blowup Ramsey number toolkit"};
    app.require_subcommand(1);

    ArrowOpts ao;
    auto* arrow_cmd = app.add_subcommand("arrow", "decide G ->_r H");
    arrow_cmd->add_option("--G", ao.g_path)->required();
    arrow_cmd->add_option("--H", ao.h_path)->required();
    arrow_cmd->add_option("-r", ao.r);
    arrow_cmd->add_flag("--hom", ao.hom);
    arrow_cmd->add_flag("--minimal", ao.minimal);
    arrow_cmd->add_option("--budget", ao.budget);
    arrow_cmd->add_option("--emit-cert", ao.cert_path);

    BlowupOpts bo;
    auto* bn_cmd = app.add_subcommand("blowup-number", "compute B(G->H;t) up to n_max");
    bn_cmd->add_option("--G", bo.g_path)->required();
    bn_cmd->add_option("--H", bo.h_path)->required();
    bn_cmd->add_option("-r", bo.r);
    bn_cmd->add_option("-t", bo.t);
    bn_cmd->add_option("--n-max", bo.n_max);
    bn_cmd->add_option("--mode", bo.mode)->check(CLI::IsMember({"canonical", "any"}));
    bn_cmd->add_option("--budget", bo.budget);
    bn_cmd->add_option("--emit-cert", bo.cert_path);
    bn_cmd->add_option("--lower-n", bo.lower_n,
                       "search for a lower-bound coloring of G[n] instead of scanning");
    bn_cmd->add_option("--strategy", bo.strategy)->check(CLI::IsMember({"local", "random"}));
    bn_cmd->add_option("--seed", bo.seed);

    EmbedOpts eo;
    auto* embed_cmd = app.add_subcommand("embed", "greedy blowup extraction from a partite host");
    embed_cmd->add_option("--graph", eo.gamma_path)->required();
    embed_cmd->add_option("--H", eo.h_path)->required();
    embed_cmd->add_option("--alpha", eo.alpha);
    embed_cmd->add_option("--order", eo.order);
    embed_cmd->add_option("--emit-cert", eo.cert_path);

    RegularityOpts ro;
    auto* reg_cmd = app.add_subcommand("regularity", "regularity primitives");
    auto* cp_cmd = reg_cmd->add_subcommand("check-pair", "decide eps-regularity of a pair");
    cp_cmd->add_option("--graph", ro.graph_path)->required();
    cp_cmd->add_option("--X", ro.xs)->required();
    cp_cmd->add_option("--Y", ro.ys)->required();
    cp_cmd->add_option("--eps", ro.eps);
    cp_cmd->add_option("--mode", ro.mode)->check(CLI::IsMember({"exact", "heuristic"}));
    cp_cmd->add_option("--seed", ro.seed);
    auto* pt_cmd = reg_cmd->add_subcommand("partition", "cylinder partition of a colored host");
    pt_cmd->add_option("--graph", ro.graph_path)->required();
    pt_cmd->add_option("--coloring", ro.coloring_path)->required();
    pt_cmd->add_option("--eps", ro.eps);
    pt_cmd->add_option("--max-splits", ro.max_splits);
    pt_cmd->add_option("--seed", ro.seed);
    auto* ct_cmd = reg_cmd->add_subcommand("count", "counting-lemma interval vs exact count");
    ct_cmd->add_option("--graph", ro.graph_path)->required();
    ct_cmd->add_option("--H", ro.h_path)->required();
    ct_cmd->add_option("--eps", ro.eps);
    reg_cmd->require_subcommand(1);

    RobustnessOpts rbo;
    auto* rb_cmd = app.add_subcommand("robustness", "robustness beta_r(H;G) and minimal scans");
    rb_cmd->add_option("--G", rbo.g_path);
    rb_cmd->add_option("--H", rbo.h_path)->required();
    rb_cmd->add_option("-r", rbo.r);
    rb_cmd->add_flag("--witness", rbo.witness);
    rb_cmd->add_flag("--labeled", rbo.labeled);
    rb_cmd->add_option("--scan-max-n", rbo.scan_max_n);
    rb_cmd->add_option("--budget", rbo.budget);
    rb_cmd->add_option("--emit-cert", rbo.cert_path);

    NikiforovOpts no;
    auto* nk_cmd = app.add_subcommand("nikiforov", "dense-graph-to-blowup pipeline");
    nk_cmd->add_option("--G", no.g_path)->required();
    nk_cmd->add_option("--H", no.h_path)->required();
    nk_cmd->add_option("--eta", no.eta);
    nk_cmd->add_option("--trials", no.trials);
    nk_cmd->add_option("--seed", no.seed);
    nk_cmd->add_flag("--demo", no.demo);
    nk_cmd->add_option("-r", no.r);
    nk_cmd->add_option("--n-grid", no.n_grid);
    nk_cmd->add_option("--emit-cert", no.cert_path);

    ConstantsOpts co;
    auto* cn_cmd = app.add_subcommand("constants", "reference constant calculators");
    cn_cmd->add_flag("--lambda", co.lambda);
    cn_cmd->add_flag("--souza-b", co.souza_b);
    cn_cmd->add_option("--eta", co.eta);
    cn_cmd->add_option("--eh", co.eh);
    cn_cmd->add_option("-r", co.r);
    cn_cmd->add_option("--gamma", co.gamma);

    VerifyOpts vo;
    auto* vf_cmd = app.add_subcommand("verify", "independent certificate verification");
    vf_cmd->add_option("--cert", vo.cert_path)->required();
    vf_cmd->add_option("--kind", vo.kind)->required()
        ->check(CLI::IsMember({"embedding", "coloring"}));
    vf_cmd->add_option("--host", vo.host_path)->required();
    vf_cmd->add_option("--H", vo.h_path)->required();
    vf_cmd->add_option("-t", vo.t);

    GenOpts go;
    auto* gen_cmd = app.add_subcommand("gen", "generate corpus graphs");
    gen_cmd->add_option("--type", go.type)
        ->check(CLI::IsMember({"clique", "path", "cycle", "star", "biclique", "empty", "gnp", "blowup"}));
    gen_cmd->add_option("--n", go.n);
    gen_cmd->add_option("--a", go.a);
    gen_cmd->add_option("--b", go.b);
    gen_cmd->add_option("-t", go.t);
    gen_cmd->add_option("--p", go.p);
    gen_cmd->add_option("--seed", go.seed);
    gen_cmd->add_option("--format", go.format)->check(CLI::IsMember({"g6", "json"}));
    gen_cmd->add_option("-o,--out", go.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kUsage;
    }

    try {
        if (*arrow_cmd) return run_arrow(ao);
        if (*bn_cmd) return run_blowup_number(bo);
        if (*embed_cmd) return run_embed(eo);
        if (*cp_cmd) return run_reg_check_pair(ro);
        if (*pt_cmd) return run_reg_partition(ro);
        if (*ct_cmd) return run_reg_count(ro);
        if (*rb_cmd) return run_robustness(rbo);
        if (*nk_cmd) return run_nikiforov(no);
        if (*cn_cmd) return run_constants(co);
        if (*vf_cmd) return run_verify(vo);
        if (*gen_cmd) return run_gen(go);
    } catch (const br::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
