// Command-line driver: exact tiling counts from independent engines,
// closed-form verification sweeps, identity checks, rewrite-script replay,
// and region rendering (ASCII or SVG).
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

#include "tilecount/engines.hpp"
#include "tilecount/formulas.hpp"
#include "tilecount/graph.hpp"
#include "tilecount/region.hpp"
#include "tilecount/render.hpp"
#include "tilecount/rewrites.hpp"
#include "tilecount/spec_json.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace tilecount;

// Options shared by every region-taking command.  A region is named either
// by --family plus the numeric flags that family needs, or by --spec FILE
// (a JSON region-spec document).
struct RegionOpts {
    std::string family;
    std::string file;
    std::optional<int> m, n, order;
    std::vector<int> a;
};

void add_region_options(CLI::App* cmd, RegionOpts& opts) {
    cmd->add_option("--family", opts.family,
                    "Region family tag: AD, TA, AR, TR, R, Ka, Kna, RE, RO, TE, TO, "
                    "BarRE, BarRO, BarTE, BarTO, QH, BarQH, SH, HoleyAR, HoleyARBar");
    cmd->add_option("--spec", opts.file, "JSON region-spec file (replaces the flags below)");
    cmd->add_option("--m", opts.m, "Row parameter (SH: the side length a)");
    cmd->add_option("--n", opts.n, "Column parameter / order (SH: the base excess b)");
    cmd->add_option("--order", opts.order, "Order of the one-parameter quartered families R, Ka, Kna");
    cmd->add_option("--a", opts.a, "Comma-separated label list, e.g. 1,3 (SH: the dent list)")
        ->delimiter(',');
}

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot open ") + what + ": " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RegionSpec region_from_opts(const RegionOpts& o) {
    if (!o.file.empty()) {
        if (!o.family.empty() || o.m || o.n || o.order || !o.a.empty())
            throw std::invalid_argument("--spec replaces --family/--m/--n/--order/--a");
        return parse_region_spec(read_file(o.file, "region-spec file"));
    }
    if (o.family.empty()) throw std::invalid_argument("one of --family or --spec is required");

    RegionSpec spec;
    spec.family = family_from_name(o.family);
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v)
            throw std::invalid_argument("--" + std::string(flag) + " is required for family " +
                                        family_name(spec.family));
        return *v;
    };
    auto forbid = [&](bool given, const char* flag) {
        if (given)
            throw std::invalid_argument("--" + std::string(flag) + " does not apply to family " +
                                        family_name(spec.family));
    };
    switch (spec.family) {
        case Family::AztecDiamond:
        case Family::TrimmedAztecDiamond:
            spec.n = need(o.n, "n");
            forbid(o.m.has_value(), "m");
            forbid(o.order.has_value(), "order");
            forbid(!o.a.empty(), "a");
            break;
        case Family::AztecRectangle:
        case Family::TrimmedAztecRectangle:
            spec.m = need(o.m, "m");
            spec.n = need(o.n, "n");
            forbid(o.order.has_value(), "order");
            forbid(!o.a.empty(), "a");
            break;
        case Family::QuarteredR:
        case Family::QuarteredKa:
        case Family::QuarteredKna:
            if (o.order && o.n) throw std::invalid_argument("give --order or --n, not both");
            spec.n = o.order ? *o.order : need(o.n, "order");
            forbid(o.m.has_value(), "m");
            forbid(!o.a.empty(), "a");
            break;
        default:  // labeled square families, QH/BarQH, SH, HoleyAR(Bar)
            spec.m = need(o.m, "m");
            spec.n = need(o.n, "n");
            spec.a = o.a;
            forbid(o.order.has_value(), "order");
            break;
    }
    return spec;
}

bool has_closed_form(Family f) {
    return f != Family::TrimmedAztecDiamond && f != Family::TrimmedAztecRectangle;
}

// ---- count ---------------------------------------------------------------

int run_count(const RegionOpts& ropts, const std::string& engine, std::size_t guard) {
    RegionSpec spec = region_from_opts(ropts);
    Region region = build_region(spec);
    std::cout << "region: " << spec_str(spec) << "\n";
    std::cout << "cells: " << region.cells.size() << "\n";

    if (engine != "all") {
        std::string value;
        if (engine == "brute")
            value = rat_str(count_brute(dual_graph(region), guard));
        else if (engine == "kasteleyn")
            value = rat_str(count_kasteleyn(dual_graph(region)));
        else if (engine == "lgv")
            value = count_lgv(spec).str();
        else
            value = rat_str(closed_form(spec));
        std::cout << engine << ": " << value << "\n";
        return 0;
    }

    // all: every engine that applies to this region, then a verdict.
    MatchGraph g = dual_graph(region);
    std::vector<Rat> values;
    if (g.vertex_count() <= guard) {
        values.push_back(count_brute(g, guard));
        std::cout << "brute: " << rat_str(values.back()) << "\n";
    } else {
        std::cout << "brute: skipped (" << g.vertex_count() << " vertices, guard " << guard
                  << ")\n";
    }
    values.push_back(count_kasteleyn(g));
    std::cout << "kasteleyn: " << rat_str(values.back()) << "\n";
    if (spec.family == Family::QH) {
        values.push_back(Rat(count_lgv(spec)));
        std::cout << "lgv: " << rat_str(values.back()) << "\n";
    }
    if (has_closed_form(spec.family)) {
        values.push_back(closed_form(spec));
        std::cout << "formula: " << rat_str(values.back()) << "\n";
    }
    bool agree = true;
    for (const Rat& v : values) agree = agree && v == values.front();
    std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
    return agree ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::vector<std::string>& family_names, int kmax, int nmax,
               bool allow_large) {
    if (kmax < 1 || nmax < 1) throw std::invalid_argument("verify: kmax and nmax must be >= 1");
    if ((kmax > 3 || nmax > 8) && !allow_large)
        throw std::invalid_argument("verify: sweeps beyond kmax 3 / nmax 8 need --allow-large");

    std::vector<Family> families;
    if (family_names.empty()) {
        for (Family f :
             {Family::AztecDiamond, Family::AztecRectangle, Family::QuarteredR,
              Family::QuarteredKa, Family::QuarteredKna, Family::RE, Family::RO, Family::TE,
              Family::TO, Family::BarRE, Family::BarRO, Family::BarTE, Family::BarTO, Family::QH,
              Family::BarQH, Family::SemiHexagon, Family::HoleyAR, Family::HoleyARBar})
            families.push_back(f);
    } else {
        for (const std::string& name : family_names) families.push_back(family_from_name(name));
    }

    auto start = std::chrono::steady_clock::now();
    std::size_t total = 0, failed = 0;
    for (Family f : families) {
        std::vector<VerifyCase> cases = verify_family(f, kmax, nmax);
        std::size_t bad = 0;
        for (const VerifyCase& c : cases) bad += c.pass ? 0 : 1;
        std::cout << family_name(f) << ": " << cases.size() << " cases, " << cases.size() - bad
                  << " pass\n";
        for (const VerifyCase& c : cases) {
            if (!c.pass)
                std::cout << "  FAIL " << c.description << ": formula " << rat_str(c.formula)
                          << ", engine " << rat_str(c.engine) << "\n";
        }
        total += cases.size();
        failed += bad;
    }
    std::cout << "total: " << total << " cases, " << total - failed << " pass, " << failed
              << " fail\n";
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "elapsed: " << ms << " ms\n";
    return failed == 0 ? 0 : 1;
}

// ---- identity --------------------------------------------------------------

int run_eq9(std::optional<int> n, int nmax) {
    int lo = n ? *n : 1;
    int hi = n ? *n : nmax;
    int failed = 0;
    for (int i = lo; i <= hi; ++i) {
        Eq9Report rep = check_eq9(i);
        std::cout << "eq9 n=" << i << ": even " << rat_str(rep.even_side) << ", odd "
                  << rat_str(rep.odd_side) << ", product " << rat_str(rep.product) << ": "
                  << (rep.pass ? "pass" : "FAIL") << "\n";
        failed += rep.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

int run_krattenthaler(int instances, int nmax, std::uint64_t seed) {
    if (instances < 1) throw std::invalid_argument("--random must be >= 1");
    if (nmax < 1) throw std::invalid_argument("--nmax must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&] { return Int(static_cast<long long>(rng() % 41) - 20); };
    int failed = 0;
    for (int i = 0; i < instances; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax));
        std::vector<Int> x(n), a(n);
        for (Int& v : x) v = draw();
        for (Int& v : a) v = draw();
        Int c = draw();
        KratReport rep = check_krattenthaler(x, a, c);
        if (!rep.pass) {
            std::cout << "  FAIL instance " << i << ": det " << rep.det.str() << ", product "
                      << rep.product.str() << "\n";
            ++failed;
        }
    }
    std::cout << "krattenthaler: " << instances << " instances, nmax " << nmax << ", seed "
              << seed << ": " << instances - failed << " pass\n";
    return failed == 0 ? 0 : 1;
}

int run_identity(const std::string& name, std::optional<int> k, std::optional<int> n,
                 const std::vector<int>& a, int kmax, int nmax, int instances,
                 std::uint64_t seed) {
    if (name == "eq9") return run_eq9(n, nmax > 0 ? nmax : 8);
    if (name == "krattenthaler")
        return run_krattenthaler(instances, nmax > 0 ? nmax : 5, seed);

    if (k || n) {
        // One concrete instance of one named identity.
        if (name.empty() || !k || !n)
            throw std::invalid_argument("a single instance needs --name, --k and --n");
        std::vector<int> labels = a;
        if (labels.empty()) {
            labels.resize(static_cast<std::size_t>(*k));
            std::iota(labels.begin(), labels.end(), 1);
        }
        IdentityReport rep = check_identity(name, *k, *n, labels);
        std::cout << rep.description << "\n";
        std::cout << "lhs: " << rat_str(rep.lhs) << "\n";
        std::cout << "rhs: " << rat_str(rep.rhs) << "\n";
        std::cout << (rep.pass ? "pass" : "FAIL") << "\n";
        return rep.pass ? 0 : 1;
    }

    // Sweep one tag, or all tags when --name is omitted.
    std::vector<std::string> tags;
    if (name.empty())
        tags = identity_tags();
    else
        tags.push_back(name);
    int km = kmax > 0 ? kmax : 2;
    int nm = nmax > 0 ? nmax : 4;
    std::size_t total = 0, failed = 0;
    for (const std::string& tag : tags) {
        auto instances_for_tag = identity_instances(tag, km, nm);
        std::vector<std::string> fails;
        for (const auto& [ik, in, ia] : instances_for_tag) {
            IdentityReport rep = check_identity(tag, ik, in, ia);
            if (!rep.pass)
                fails.push_back(rep.description + ": lhs " + rat_str(rep.lhs) + ", rhs " +
                                rat_str(rep.rhs));
        }
        std::cout << tag << ": " << instances_for_tag.size() << " instances, "
                  << instances_for_tag.size() - fails.size() << " pass\n";
        for (const std::string& line : fails) std::cout << "  FAIL " << line << "\n";
        total += instances_for_tag.size();
        failed += fails.size();
    }
    if (tags.size() > 1)
        std::cout << "total: " << total << " instances, " << total - failed << " pass, " << failed
                  << " fail\n";
    return failed == 0 ? 0 : 1;
}

// ---- render / dump ---------------------------------------------------------

int run_render(const RegionOpts& ropts, const std::string& format, bool with_tiling,
               const std::string& out_path) {
    RegionSpec spec = region_from_opts(ropts);
    Region region = build_region(spec);
    std::string text;
    if (format == "ascii") {
        if (with_tiling) throw std::invalid_argument("--tiling requires --format svg");
        text = render_ascii(region);
    } else {
        std::vector<std::pair<int, int>> tiling;
        if (with_tiling) {
            auto matching = first_matching(dual_graph(region));
            if (matching)
                tiling = *matching;
            else
                std::cerr << "note: region has no tiling; rendering without overlay\n";
        }
        text = render_svg(region, tiling);
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << text;
    }
    return 0;
}

int run_dump(const RegionOpts& ropts) {
    Region region = build_region(region_from_opts(ropts));
    std::cout << dump_graph(dual_graph(region));
    return 0;
}

// ---- rewrite ---------------------------------------------------------------

int run_rewrite(const std::string& graph_path, const std::string& script_path,
                const std::string& out_path, std::size_t guard) {
    MatchGraph g = parse_graph_string(read_file(graph_path, "graph file"));
    std::vector<ScriptStep> steps = parse_script_string(read_file(script_path, "script file"));
    ReplayResult res = replay_script(g, steps);
    std::cout << "steps: " << res.steps.size() << "\n";
    std::cout << "factor: " << rat_str(res.factor) << "\n";
    std::cout << "vertices: " << res.graph.vertex_count() << ", edges: " << res.graph.edge_count()
              << "\n";
    int rc = 0;
    if (g.vertex_count() <= guard && res.graph.vertex_count() <= guard) {
        Rat before = count_brute(g, guard);
        Rat after = count_brute(res.graph, guard);
        bool ok = before == res.factor * after;
        std::cout << "M(before): " << rat_str(before) << "\n";
        std::cout << "M(after): " << rat_str(after) << "\n";
        std::cout << "M(before) = factor * M(after): " << (ok ? "verified" : "VIOLATED") << "\n";
        rc = ok ? 0 : 1;
    } else {
        std::cout << "count check: skipped (guard " << guard << " vertices exceeded)\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << dump_graph(res.graph);
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of lattice-region tilings: counting engines, closed forms, "
                 "identity checks, graph rewrites, and renderers"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "Count the tilings of a region");
    RegionOpts count_region;
    add_region_options(count_cmd, count_region);
    std::string engine = "all";
    count_cmd->add_option("--engine", engine, "brute | kasteleyn | lgv | formula | all")
        ->check(CLI::IsMember({"brute", "kasteleyn", "lgv", "formula", "all"}));
    std::size_t count_guard = 40;
    count_cmd->add_option("--guard", count_guard, "Vertex limit for the brute engine");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Sweep families and compare closed forms against engines");
    std::vector<std::string> verify_families;
    verify_cmd->add_option("--family", verify_families,
                           "Restrict to these families (default: all with closed forms)");
    int verify_kmax = 2, verify_nmax = 4;
    verify_cmd->add_option("--kmax", verify_kmax, "Largest label-list size");
    verify_cmd->add_option("--nmax", verify_nmax, "Largest column parameter / order");
    bool allow_large = false;
    verify_cmd->add_flag("--allow-large", allow_large, "Lift the kmax 3 / nmax 8 sweep guard");

    // identity
    auto* id_cmd = app.add_subcommand("identity", "Check named cross-family identities");
    std::string id_name;
    id_cmd->add_option("--name", id_name,
                       "Identity tag (default: sweep all region identities); also eq9 and "
                       "krattenthaler");
    std::optional<int> id_k, id_n;
    id_cmd->add_option("--k", id_k, "Label-list size for a single instance");
    id_cmd->add_option("--n", id_n, "Column parameter for a single instance (eq9: the order)");
    std::vector<int> id_a;
    id_cmd->add_option("--a", id_a, "Label list for a single instance (default 1..k)")
        ->delimiter(',');
    int id_kmax = 0, id_nmax = 0;
    id_cmd->add_option("--kmax", id_kmax, "Sweep bound on the label-list size (default 2)");
    id_cmd->add_option("--nmax", id_nmax,
                       "Sweep bound on the column parameter (default 4; eq9 8; krattenthaler 5)");
    int id_random = 100;
    id_cmd->add_option("--random", id_random, "Instance count for krattenthaler");
    std::uint64_t id_seed = 1;
    id_cmd->add_option("--seed", id_seed, "Random seed for krattenthaler");

    // render
    auto* render_cmd = app.add_subcommand("render", "Draw a region as SVG or ASCII");
    RegionOpts render_region;
    add_region_options(render_cmd, render_region);
    std::string format = "svg";
    render_cmd->add_option("--format", format, "svg | ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));
    bool with_tiling = false;
    render_cmd->add_flag("--tiling", with_tiling, "Overlay one sample tiling (svg only)");
    std::string render_out;
    render_cmd->add_option("--out", render_out, "Output file (default: stdout)");

    // rewrite
    auto* rewrite_cmd =
        app.add_subcommand("rewrite", "Replay a rewrite script against a graph file");
    std::string graph_path, script_path, rewrite_out;
    rewrite_cmd->add_option("graph", graph_path, "Graph file (dump format)")->required();
    rewrite_cmd->add_option("script", script_path, "JSON script file")->required();
    rewrite_cmd->add_option("--out", rewrite_out, "Write the rewritten graph here");
    std::size_t rewrite_guard = 40;
    rewrite_cmd->add_option("--guard", rewrite_guard, "Vertex limit for the count check");

    // dump
    auto* dump_cmd = app.add_subcommand("dump", "Print the dual graph of a region");
    RegionOpts dump_region;
    add_region_options(dump_cmd, dump_region);

    try {
        app.parse(argc, argv);
        if (*count_cmd) return run_count(count_region, engine, count_guard);
        if (*verify_cmd)
            return run_verify(verify_families, verify_kmax, verify_nmax, allow_large);
        if (*id_cmd)
            return run_identity(id_name, id_k, id_n, id_a, id_kmax, id_nmax, id_random, id_seed);
        if (*render_cmd) return run_render(render_region, format, with_tiling, render_out);
        if (*rewrite_cmd) return run_rewrite(graph_path, script_path, rewrite_out, rewrite_guard);
        if (*dump_cmd) return run_dump(dump_region);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
