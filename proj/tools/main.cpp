// queuelay command-line tool: generate k-trees, build and check layouts,
// run the exact solvers and density bounds, play the adversarial game, and
// render arc diagrams. Artifacts are deterministic: identical invocations
// produce identical bytes.
//
// Exit codes: 0 success, 1 negative mathematical result (invalid layout,
// decision answered no, opponent survives), 2 usage or input error,
// 3 budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "queuelay/bounds.hpp"
#include "queuelay/certificates.hpp"
#include "queuelay/common.hpp"
#include "queuelay/construction.hpp"
#include "queuelay/game.hpp"
#include "queuelay/graph.hpp"
#include "queuelay/json_io.hpp"
#include "queuelay/layout.hpp"
#include "queuelay/lifts.hpp"
#include "queuelay/render.hpp"
#include "queuelay/solver.hpp"
#include "queuelay/stars.hpp"
#include "queuelay/strategies.hpp"

namespace {

using namespace queuelay;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

bool color_enabled() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(2) != 0;
}

void fail(const std::string& msg) {
    if (color_enabled())
        std::cerr << "\x1b[31merror:\x1b[0m " << msg << "\n";
    else
        std::cerr << "error: " << msg << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IOError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IOError("cannot open " + path + " for writing");
    f << bytes;
    if (!f) throw IOError("short write to " + path);
}

Graph load_graph(const std::string& path) {
    return parse_edge_list(read_input(path));
}

// Game levels are spoken of in roman numerals as often as arabic; take both.
int parse_level(const std::string& text) {
    static const char* kRoman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
    for (int i = 0; i < 7; ++i)
        if (text == kRoman[i]) return i + 1;
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size() && v >= 1 && v <= 7) return v;
    } catch (...) {
    }
    throw IOError("level must be 1..7 or i..vii, got '" + text + "'");
}

// Strategy literal -> strategy + the level it natively plays at.
// lifted:<n> wraps the pinning chain in enough reduction layers to play
// level n; each layer buys one level down from 7.
std::pair<std::unique_ptr<Strategy>, int> make_strategy(
    const std::string& name, std::shared_ptr<LiftCounters> counters) {
    if (name == "witness") return {witness_strategy(), 5};
    if (name == "pinning-chain") return {pinning_chain_strategy(), 7};
    if (name.rfind("lifted:", 0) == 0) {
        int target = parse_level(name.substr(7));
        if (target == 7) return {pinning_chain_strategy(), 7};
        auto s = ensure_copy_diverse(pinning_chain_strategy());
        if (target <= 5) s = ensure_paired_start(std::move(s));
        if (target <= 4) s = ensure_right_placement(std::move(s));
        if (target <= 3) s = ensure_twin_queues(std::move(s), counters);
        if (target <= 2) s = ensure_consecutive(std::move(s), counters);
        return {std::move(s), target};
    }
    throw IOError("unknown strategy '" + name +
                  "' (expected witness, pinning-chain, or lifted:<2..7>)");
}

struct GenArgs {
    std::string family;
    int arity = 3, depth = 2, k = 2, n = 10, children = 4;
    bool edges = false;
    std::string out = "-";
};

int run_gen(const GenArgs& a, unsigned long long seed) {
    ConstructionSequence seq;
    if (a.family == "fanout") {
        seq = fanout_two_tree(a.arity, a.depth).seq;
    } else if (a.family == "witness") {
        seq = witness_two_tree();
    } else if (a.family == "shared") {
        seq = shared_clique_family(a.k, a.children);
    } else if (a.family == "random") {
        Rng rng(seed);
        seq = random_ktree(a.k, a.n, rng);
    } else {
        throw IOError("unknown family '" + a.family +
                      "' (expected fanout, witness, shared, or random)");
    }
    if (a.edges)
        write_output(a.out, emit_edge_list(expand_construction(seq)));
    else
        write_output(a.out, construction_to_json(seq));
    return kExitOk;
}

struct LayoutArgs {
    std::string input = "-";
    std::string method = "construction";
    std::string stars = "degeneracy";
    int root = 0;
    std::string out = "-";
};

int run_layout(const LayoutArgs& a) {
    Graph g = load_graph(a.input);
    QueueLayout L;
    if (a.method == "construction") {
        L = construction_order_layout(g);
    } else if (a.method == "star") {
        std::vector<int> stars = a.stars == "min" ? min_endpoint_stars(g)
                                                  : degeneracy_stars(g);
        L = star_layout(g, stars, LinearOrder::identity(g.vertex_count()));
    } else if (a.method == "bfs") {
        L = bfs_tree_layout(g, a.root);
    } else {
        throw IOError("unknown method '" + a.method +
                      "' (expected construction, star, or bfs)");
    }
    write_output(a.out, layout_to_json(g, L));
    return kExitOk;
}

struct CheckArgs {
    std::string graph, layout;
    int local = -1;
    std::string out = "-";
};

int run_check(const CheckArgs& a) {
    Graph g = load_graph(a.graph);
    QueueLayout L = layout_from_json(g, read_input(a.layout));
    std::optional<int> ell;
    if (a.local >= 0) ell = a.local;
    ValidationResult r = validate_layout(g, L, ell);
    write_output(a.out, validation_to_json(r));
    return validation_ok(r) ? kExitOk : kExitNegative;
}

struct SolveArgs {
    std::string input = "-";
    std::string mode = "lqn";
    int local = -1;
    double budget_seconds = 0;
    long long nodes = 0;
    int cap = 10;
    std::string out = "-";
};

int run_solve(const SolveArgs& a) {
    Graph g = load_graph(a.input);
    SolveBudget budget;
    budget.vertex_cap = a.cap;
    if (a.budget_seconds > 0)
        budget.max_millis = static_cast<long long>(a.budget_seconds * 1000.0);
    if (a.nodes > 0) budget.max_nodes = a.nodes;
    SolveResult r;
    if (a.mode == "lqn")
        r = exact_lqn(g, budget);
    else if (a.mode == "qn")
        r = exact_qn(g, budget);
    else
        throw IOError("unknown mode '" + a.mode + "' (expected lqn or qn)");
    write_output(a.out, solve_to_json(g, r));
    if (!r.exact) {
        fail("budget exceeded before the search finished");
        return kExitBudget;
    }
    if (a.local >= 0 && r.value > a.local) return kExitNegative;
    return kExitOk;
}

struct BoundsArgs {
    std::string input = "-";
    std::string out = "-";
};

int run_bounds(const BoundsArgs& a) {
    Graph g = load_graph(a.input);
    write_output(a.out, bounds_to_json(density_bounds(g)));
    return kExitOk;
}

struct GameArgs {
    std::string strategy = "witness";
    std::string level;  // empty -> strategy's native level
    int k = 2, ell = 2;
    std::vector<int> caps;
    bool prune = false;
    std::string out = "-";
};

int run_game(const GameArgs& a) {
    auto counters = std::make_shared<LiftCounters>();
    auto [strat, native_level] = make_strategy(a.strategy, counters);
    GameConfig cfg;
    cfg.k = a.k;
    cfg.ell = a.ell;
    cfg.level = a.level.empty() ? native_level : parse_level(a.level);
    if (!a.caps.empty()) {
        if (a.caps.size() != 3)
            throw IOError("--caps needs three values: vertices,rounds,nodes");
        cfg.caps.max_vertices = a.caps[0];
        cfg.caps.max_rounds = a.caps[1];
        cfg.caps.max_tree_nodes = a.caps[2];
    }
    GameOutcome out = verify_alice_wins(*strat, cfg);
    switch (out.verdict) {
        case GameVerdict::AliceWins:
            write_output(a.out, win_tree_to_json(out.tree, a.prune));
            return kExitOk;
        case GameVerdict::BobSurvives:
            if (out.counter) write_output(a.out, counter_to_json(*out.counter));
            fail("the opponent survives this strategy");
            return kExitNegative;
        case GameVerdict::CapExceeded:
            fail("game tree exceeded its caps after " +
                 std::to_string(out.nodes_expanded) + " nodes");
            return kExitBudget;
    }
    return kExitUsage;  // unreachable
}

struct RenderArgs {
    std::string graph, layout, witness;
    std::string out = "-";
};

int run_render(const RenderArgs& a) {
    Graph g = load_graph(a.graph);
    QueueLayout L = layout_from_json(g, read_input(a.layout));
    RainbowWitness w;
    const RainbowWitness* highlight = nullptr;
    if (!a.witness.empty()) {
        w = rainbow_from_json(read_input(a.witness));
        highlight = &w;
    } else {
        // Invalid layouts render with the offending pair thickened.
        ValidationResult r = validate_layout(g, L);
        if (const auto* rv = std::get_if<RainbowViolation>(&r)) {
            w.edges = {rv->a, rv->b};
            w.queue = rv->queue;
            highlight = &w;
        }
    }
    write_output(a.out, render_arc_diagram(g, L, highlight));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "queue layouts with bounded per-vertex locality: generators, "
        "solvers, bounds, games, and diagrams"};
    app.require_subcommand(1);
    unsigned long long seed = 1;
    app.add_option("--seed", seed, "seed for all randomized operations");

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a k-tree construction");
    cgen->add_option("--family", gen.family,
                     "fanout | witness | shared | random")
        ->required();
    cgen->add_option("--arity", gen.arity, "children per edge (fanout)");
    cgen->add_option("--depth", gen.depth, "tree depth (fanout)");
    cgen->add_option("--k", gen.k, "clique size (shared, random)");
    cgen->add_option("--n", gen.n, "vertex count (random)");
    cgen->add_option("--children", gen.children, "children count (shared)");
    cgen->add_flag("--edges", gen.edges, "emit edge-list text, not JSON");
    cgen->add_option("-o,--out", gen.out, "output path ('-' = stdout)");

    LayoutArgs lay;
    auto* clay = app.add_subcommand("layout", "build a queue layout");
    clay->add_option("input", lay.input, "edge-list path ('-' = stdin)");
    clay->add_option("--method", lay.method, "construction | star | bfs");
    clay->add_option("--stars", lay.stars, "star partition: min | degeneracy");
    clay->add_option("--root", lay.root, "root vertex (bfs)");
    clay->add_option("-o,--out", lay.out, "output path ('-' = stdout)");

    CheckArgs chk;
    auto* cchk = app.add_subcommand("check", "validate a layout");
    cchk->add_option("-g,--graph", chk.graph, "edge-list path")->required();
    cchk->add_option("-L,--layout", chk.layout, "layout JSON path")->required();
    cchk->add_option("--local", chk.local, "also require locality <= this");
    cchk->add_option("-o,--out", chk.out, "output path ('-' = stdout)");

    SolveArgs sol;
    auto* csol = app.add_subcommand("solve", "exact minimum by brute force");
    csol->add_option("input", sol.input, "edge-list path ('-' = stdin)");
    csol->add_option("--mode", sol.mode, "lqn (local) | qn (total)");
    csol->add_option("--local", sol.local,
                     "decision mode: exit 1 when the value exceeds this");
    csol->add_option("--budget", sol.budget_seconds, "time budget in seconds");
    csol->add_option("--nodes", sol.nodes, "search-node budget");
    csol->add_option("--cap", sol.cap, "refuse graphs above this many vertices");
    csol->add_option("-o,--out", sol.out, "output path ('-' = stdout)");

    BoundsArgs bnd;
    auto* cbnd = app.add_subcommand("bounds", "density-based bounds report");
    cbnd->add_option("input", bnd.input, "edge-list path ('-' = stdin)");
    cbnd->add_option("-o,--out", bnd.out, "output path ('-' = stdout)");

    GameArgs gam;
    auto* cgam = app.add_subcommand("game", "play the adversarial game");
    cgam->add_option("--strategy", gam.strategy,
                     "witness | pinning-chain | lifted:<2..7>");
    cgam->add_option("--level", gam.level,
                     "game level 1..7 or i..vii (default: strategy's native)");
    cgam->add_option("--k", gam.k, "clique size");
    cgam->add_option("--l,--ell", gam.ell, "locality bound for the opponent");
    cgam->add_option("--caps", gam.caps,
                     "vertices,rounds,nodes caps")
        ->delimiter(',')
        ->expected(0, 3);
    cgam->add_flag("--prune", gam.prune,
                   "keep one refutation per leaf in the output tree");
    cgam->add_option("-o,--out", gam.out, "output path ('-' = stdout)");

    RenderArgs ren;
    auto* cren = app.add_subcommand("render", "arc diagram as SVG");
    cren->add_option("-g,--graph", ren.graph, "edge-list path")->required();
    cren->add_option("-L,--layout", ren.layout, "layout JSON path")->required();
    cren->add_option("--witness", ren.witness,
                     "rainbow witness JSON to highlight");
    cren->add_option("-o,--out", ren.out, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cgen) return run_gen(gen, seed);
        if (*clay) return run_layout(lay);
        if (*cchk) return run_check(chk);
        if (*csol) return run_solve(sol);
        if (*cbnd) return run_bounds(bnd);
        if (*cgam) return run_game(gam);
        if (*cren) return run_render(ren);
    } catch (const BudgetError& e) {
        fail(e.what());
        return kExitBudget;
    } catch (const ParseError& e) {
        fail(e.what());
        return kExitUsage;
    } catch (const IOError& e) {
        fail(e.what());
        return kExitUsage;
    } catch (const GraphError& e) {
        fail(e.what());
        return kExitUsage;
    } catch (const Error& e) {
        fail(e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
