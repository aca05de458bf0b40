// Command-line front end for the signed-graph spectral toolkit.
//
// Exit status: 0 on success, 1 when a verification-style command finds a
// failure (a beating class, a failed identity, a present unbalanced clique),
// 2 on usage or input errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgt/bounds.hpp"
#include "sgt/canonical.hpp"
#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/spectral.hpp"
#include "sgt/subgraphs.hpp"
#include "sgt/verify.hpp"

namespace {

using nlohmann::json;

struct Output {
    std::string format = "table";  // "table" or "json"
    std::string out_path;          // optional file for the JSON report

    // Prints the chosen rendering to stdout and, when requested, writes the
    // JSON form to a file.
    void emit(const json& j, const std::string& text) const {
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot write " + out_path);
            f << j.dump(2) << "\n";
        }
    }
};

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", out.out_path, "write the JSON report to a file");
}

json wrap_payload(const char* type, json payload) {
    return {{"schema_version", 1},
            {"report_type", type},
            {"payload", std::move(payload)}};
}

std::string format_double(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

int cmd_spectrum(const std::string& path, const Output& out) {
    sgt::SignedGraph g = sgt::read_graph_file(path);
    sgt::Spectrum sp = sgt::eigenvalues(g);

    json payload = {{"n", g.order()},
                    {"m", g.size()},
                    {"eigenvalues", sp.values},
                    {"lambda1", sp.index()},
                    {"rho", sp.radius()}};
    std::ostringstream text;
    text << "n=" << g.order() << " m=" << g.size() << "\neigenvalues:";
    for (double v : sp.values) text << ' ' << format_double(v);
    text << "\nlambda1 = " << format_double(sp.index())
         << "\nrho     = " << format_double(sp.radius()) << "\n";
    out.emit(wrap_payload("spectrum", std::move(payload)), text.str());
    return 0;
}

int cmd_construct(const std::string& family, int n, const std::string& path,
                  const Output& out) {
    sgt::SignedGraph g = sgt::build_family(family, n);
    if (!path.empty()) sgt::write_graph_file(g, path);

    sgt::Spectrum sp = sgt::eigenvalues(g);
    json payload = {{"family", family},
                    {"n", g.order()},
                    {"m", g.size()},
                    {"negative_edges", g.negative_edge_count()},
                    {"lambda1", sp.index()},
                    {"rho", sp.radius()},
                    {"graph", sgt::graph_json(g)}};
    std::ostringstream text;
    text << family << ": n=" << g.order() << " m=" << g.size()
         << " negative=" << g.negative_edge_count()
         << " lambda1=" << format_double(sp.index())
         << " rho=" << format_double(sp.radius()) << "\n";
    if (!path.empty()) text << "written to " << path << "\n";
    out.emit(wrap_payload("construct", std::move(payload)), text.str());
    return 0;
}

int cmd_check_free(const std::string& path, int k, const Output& out) {
    sgt::SignedGraph g = sgt::read_graph_file(path);
    auto witness = sgt::contains_unbalanced_clique(g, k);

    json payload = {{"k", k}, {"free", !witness.has_value()}};
    std::ostringstream text;
    text << "K" << k << "^- -free: " << (witness ? "false" : "true") << "\n";
    if (witness) {
        payload["witness"] = witness->vertices;
        text << "unbalanced K" << k << " on vertices:";
        for (int v : witness->vertices) text << ' ' << v;
        text << "\n";
    }
    out.emit(wrap_payload("check-free", std::move(payload)), text.str());
    return witness ? 1 : 0;
}

int cmd_frustration(const std::string& path, const Output& out) {
    sgt::SignedGraph g = sgt::read_graph_file(path);
    sgt::FrustrationCertificate cert = sgt::frustration_certificate(g);

    json payload = {{"frustration", cert.eps},
                    {"switch_set", cert.switch_set},
                    {"balanced", cert.eps == 0}};
    std::ostringstream text;
    text << "frustration index = " << cert.eps << "\nminimizing switch set:";
    for (int v : cert.switch_set) text << ' ' << v;
    text << "\n";
    out.emit(wrap_payload("frustration", std::move(payload)), text.str());
    return 0;
}

int cmd_bounds(const std::string& path, const Output& out) {
    sgt::SignedGraph g = sgt::read_graph_file(path);
    std::vector<sgt::BoundResult> rows = sgt::audit(g);

    json jrows = json::array();
    bool all_ok = true;
    std::ostringstream text;
    text << "bound            applicable  bound          actual         "
            "satisfied  slack\n";
    for (const auto& r : rows) {
        jrows.push_back({{"name", r.name},
                         {"applicable", r.applicable},
                         {"reason", r.reason},
                         {"bound", r.bound},
                         {"actual", r.actual},
                         {"satisfied", r.satisfied},
                         {"slack", r.slack}});
        all_ok = all_ok && r.satisfied;
        text << std::left << std::setw(17) << r.name << std::setw(12)
             << (r.applicable ? "yes" : "no");
        if (r.applicable)
            text << std::setw(15) << format_double(r.bound) << std::setw(15)
                 << format_double(r.actual) << std::setw(11)
                 << (r.satisfied ? "yes" : "NO") << format_double(r.slack);
        else
            text << "(" << r.reason << ")";
        text << "\n";
    }
    out.emit(wrap_payload("bounds", json{{"rows", std::move(jrows)},
                                         {"all_satisfied", all_ok}}),
             text.str());
    return all_ok ? 0 : 1;
}

int cmd_canonicalize(const std::string& path, const Output& out) {
    sgt::SignedGraph g = sgt::read_graph_file(path);
    sgt::CanonicalForm form = sgt::canonical_form(g);
    sgt::SignedGraph rep = sgt::canonical_representative(form);

    json payload = {{"canonical",
                     {{"n", form.n},
                      {"mask", form.mask},
                      {"signature", form.sig},
                      {"cotree_size", form.cotree_size},
                      {"text", sgt::to_string(form)}}},
                    {"representative", sgt::graph_json(rep)}};
    std::ostringstream text;
    text << sgt::to_string(form) << "\nrepresentative:\n" << sgt::to_text(rep);
    out.emit(wrap_payload("canonicalize", std::move(payload)), text.str());
    return 0;
}

int cmd_verify_theorem(int n, const std::string& mode, int jobs,
                       const Output& out) {
    sgt::EnumerationMode m = mode == "pruned" ? sgt::EnumerationMode::Pruned
                                              : sgt::EnumerationMode::Exhaustive;
    sgt::TheoremReport rep = sgt::verify_theorem(n, m, jobs);
    out.emit(sgt::to_json(rep), sgt::render_text(rep));
    return rep.radius_reading_verified ? 0 : 1;
}

int cmd_verify_lemma22(int n_min, int n_max, const Output& out) {
    sgt::Lemma22Report rep = sgt::verify_lemma22(n_min, n_max);
    out.emit(sgt::to_json(rep), sgt::render_text(rep));
    return rep.all_pass ? 0 : 1;
}

int cmd_search(int n, int k, std::uint64_t iters, std::uint64_t seed,
               const Output& out) {
    sgt::SearchReport rep = sgt::extremal_search(n, k, iters, seed);
    out.emit(sgt::to_json(rep), sgt::render_text(rep));
    return rep.feasible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph spectral toolkit"};
    app.require_subcommand(1);

    // spectrum <file>
    Output spectrum_out;
    std::string spectrum_path;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "eigenvalues, index and spectral radius of a graph file");
    spectrum->add_option("file", spectrum_path, "graph file")->required();
    add_output_options(spectrum, spectrum_out);

    // construct <family> --n N [-o file]
    Output construct_out;
    std::string construct_family, construct_path;
    int construct_n = 0;
    CLI::App* construct =
        app.add_subcommand("construct", "build a named signed graph family");
    construct
        ->add_option("family", construct_family,
                     "gamma1|gamma2|gamma3|gamma5|complete-balanced|"
                     "unbalanced-complete")
        ->required();
    construct->add_option("--n", construct_n, "order (ignored for gamma5)");
    construct->add_option("-o,--output", construct_path,
                          "write the graph to this file");
    add_output_options(construct, construct_out);

    // check-free --k K <file>
    Output checkfree_out;
    std::string checkfree_path;
    int checkfree_k = 5;
    CLI::App* checkfree = app.add_subcommand(
        "check-free",
        "test for unbalanced complete k-vertex subgraphs (exit 1 if found)");
    checkfree->add_option("file", checkfree_path, "graph file")->required();
    checkfree->add_option("--k", checkfree_k, "clique order (default 5)")
        ->check(CLI::Range(3, 64));
    add_output_options(checkfree, checkfree_out);

    // frustration <file>
    Output frustration_out;
    std::string frustration_path;
    CLI::App* frustration = app.add_subcommand(
        "frustration", "frustration index and a minimizing switch set");
    frustration->add_option("file", frustration_path, "graph file")
        ->required();
    add_output_options(frustration, frustration_out);

    // bounds <file>
    Output bounds_out;
    std::string bounds_path;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "audit all eigenvalue bounds against a graph");
    bounds->add_option("file", bounds_path, "graph file")->required();
    add_output_options(bounds, bounds_out);

    // canonicalize <file>
    Output canon_out;
    std::string canon_path;
    CLI::App* canon = app.add_subcommand(
        "canonicalize",
        "canonical form (up to relabeling and switching) and representative");
    canon->add_option("file", canon_path, "graph file")->required();
    add_output_options(canon, canon_out);

    // verify theorem|lemma22
    CLI::App* verify =
        app.add_subcommand("verify", "run a verification driver");
    verify->require_subcommand(1);

    Output theorem_out;
    int theorem_n = 0, theorem_jobs = 0;
    std::string theorem_mode;
    CLI::App* theorem = verify->add_subcommand(
        "theorem", "sweep all unbalanced five-clique-free graphs at order n");
    theorem->add_option("--n", theorem_n, "order")->required();
    theorem->add_option("--mode", theorem_mode, "exhaustive|pruned")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "pruned"}));
    theorem->add_option("--jobs", theorem_jobs,
                        "worker threads (default: SG_JOBS or hardware)");
    add_output_options(theorem, theorem_out);

    Output lemma_out;
    int lemma_min = 0, lemma_max = 0;
    CLI::App* lemma = verify->add_subcommand(
        "lemma22", "quotient polynomial identities over a range of orders");
    lemma->add_option("--n-min", lemma_min, "first order")->required();
    lemma->add_option("--n-max", lemma_max, "last order")->required();
    add_output_options(lemma, lemma_out);

    // search --n N --k K --iters I --seed S
    Output search_out;
    int search_n = 0, search_k = 5;
    std::uint64_t search_iters = 10000, search_seed = 1;
    CLI::App* search = app.add_subcommand(
        "search",
        "seeded stochastic search for large-radius unbalanced graphs with no "
        "unbalanced complete k-subgraph");
    search->add_option("--n", search_n, "order")->required();
    search->add_option("--k", search_k, "forbidden clique order (>= 5)");
    search->add_option("--iters", search_iters, "iterations (default 10000)");
    search->add_option("--seed", search_seed, "RNG seed (default 1)");
    add_output_options(search, search_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(spectrum_path, spectrum_out);
        if (construct->parsed())
            return cmd_construct(construct_family, construct_n, construct_path,
                                 construct_out);
        if (checkfree->parsed())
            return cmd_check_free(checkfree_path, checkfree_k, checkfree_out);
        if (frustration->parsed())
            return cmd_frustration(frustration_path, frustration_out);
        if (bounds->parsed()) return cmd_bounds(bounds_path, bounds_out);
        if (canon->parsed()) return cmd_canonicalize(canon_path, canon_out);
        if (theorem->parsed())
            return cmd_verify_theorem(theorem_n, theorem_mode, theorem_jobs,
                                      theorem_out);
        if (lemma->parsed())
            return cmd_verify_lemma22(lemma_min, lemma_max, lemma_out);
        if (search->parsed())
            return cmd_search(search_n, search_k, search_iters, search_seed,
                              search_out);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const sgt::CounterexampleFound& e) {
        std::cerr << "counterexample: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
