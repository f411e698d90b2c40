#include "queuelay/json_io.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace queuelay {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "queuelay/1";

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
}

json parse_document(const std::string& text) {
    json j = parse_text(text);
    try {
        if (!j.is_object() || j.at("schema").get<std::string>() != kSchema)
            throw ParseError(std::string("expected schema ") + kSchema);
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("expected schema ") + kSchema);
    }
    return j;
}

// Field access that converts the library's exceptions into ParseError.
template <typename T>
T field(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

std::string edge_name(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

int edge_index_of_name(const Graph& g, const std::string& name) {
    const auto dash = name.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == name.size())
        throw ParseError("bad edge key '" + name + "'");
    int u = 0, v = 0;
    try {
        u = std::stoi(name.substr(0, dash));
        v = std::stoi(name.substr(dash + 1));
    } catch (const std::exception&) {
        throw ParseError("bad edge key '" + name + "'");
    }
    if (u >= v) throw ParseError("edge key '" + name + "' is not ascending");
    const int i = g.edge_index(u, v);
    if (i < 0) throw ParseError("edge '" + name + "' is not in the graph");
    return i;
}

// --- nested (schema-free) forms shared by several documents ---

json construction_to_j(const ConstructionSequence& seq) {
    json steps = json::array();
    for (const ConstructionStep& s : seq.steps)
        steps.push_back(json{{"parent", s.parent_clique}, {"child", s.child}});
    return json{{"k", seq.k}, {"init", seq.init}, {"steps", std::move(steps)}};
}

ConstructionSequence construction_from_j(const json& j) {
    ConstructionSequence seq;
    seq.k = field<int>(j, "k");
    seq.init = field<std::vector<int>>(j, "init");
    if (!j.contains("steps") || !j.at("steps").is_array())
        throw ParseError("field 'steps': expected an array");
    for (const json& s : j.at("steps")) {
        ConstructionStep st;
        st.parent_clique = field<std::vector<int>>(s, "parent");
        st.child = field<int>(s, "child");
        seq.steps.push_back(std::move(st));
    }
    return seq;
}

json layout_to_j(const Graph& g, const QueueLayout& L) {
    if (static_cast<int>(L.queue_of.size()) != g.edge_count())
        throw ParseError("layout does not cover the edge set");
    json queues = json::object();
    for (int i = 0; i < g.edge_count(); ++i)  // edges() is sorted, keys stay ordered
        queues[edge_name(g.edges()[i])] = L.queue_of[i];
    return json{{"order", L.order.sequence()}, {"queues", std::move(queues)}};
}

QueueLayout layout_from_j(const Graph& g, const json& j) {
    QueueLayout L;
    L.order = LinearOrder::from_sequence(field<std::vector<int>>(j, "order"));
    if (L.order.size() != g.vertex_count())
        throw ParseError("order does not cover the vertex set");
    L.queue_of.assign(g.edge_count(), -1);
    if (!j.contains("queues") || !j.at("queues").is_object())
        throw ParseError("field 'queues': expected an object");
    for (const auto& [name, qid] : j.at("queues").items()) {
        const int i = edge_index_of_name(g, name);
        if (L.queue_of[i] != -1) throw ParseError("edge '" + name + "' listed twice");
        if (!qid.is_number_integer()) throw ParseError("queue id for '" + name + "'");
        L.queue_of[i] = qid.get<int>();
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (L.queue_of[i] < 0)
            throw ParseError("edge '" + edge_name(g.edges()[i]) + "' has no queue");
    return L;
}

json rational_to_j(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}};
}

Rational rational_from_j(const json& j) {
    return Rational(field<long long>(j, "num"), field<long long>(j, "den"));
}

json validation_to_j(const ValidationResult& r) {
    if (std::holds_alternative<ValidationOk>(r)) return json{{"result", "ok"}};
    if (const auto* rv = std::get_if<RainbowViolation>(&r))
        return json{{"result", "rainbow"},
                    {"queue", rv->queue},
                    {"outer", edge_name(rv->a)},
                    {"inner", edge_name(rv->b)}};
    const auto& lv = std::get<LocalityViolation>(r);
    return json{{"result", "locality"}, {"vertex", lv.vertex}, {"queues", lv.queues}};
}

Edge edge_from_name(const std::string& name) {
    const auto dash = name.find('-');
    if (dash == std::string::npos) throw ParseError("bad edge key '" + name + "'");
    try {
        return Edge(std::stoi(name.substr(0, dash)), std::stoi(name.substr(dash + 1)));
    } catch (const GraphError&) {
        throw ParseError("bad edge key '" + name + "'");
    } catch (const std::exception&) {
        throw ParseError("bad edge key '" + name + "'");
    }
}

ValidationResult validation_from_j(const json& j) {
    const std::string kind = field<std::string>(j, "result");
    if (kind == "ok") return ValidationOk{};
    if (kind == "rainbow") {
        RainbowViolation rv;
        rv.queue = field<int>(j, "queue");
        rv.a = edge_from_name(field<std::string>(j, "outer"));
        rv.b = edge_from_name(field<std::string>(j, "inner"));
        return rv;
    }
    if (kind == "locality") {
        LocalityViolation lv;
        lv.vertex = field<int>(j, "vertex");
        lv.queues = field<std::vector<int>>(j, "queues");
        return lv;
    }
    throw ParseError("unknown validation result '" + kind + "'");
}

json config_to_j(const GameConfig& c) {
    return json{{"k", c.k},
                {"ell", c.ell},
                {"level", c.level},
                {"caps",
                 json{{"max_vertices", c.caps.max_vertices},
                      {"max_rounds", c.caps.max_rounds},
                      {"max_tree_nodes", c.caps.max_tree_nodes}}}};
}

GameConfig config_from_j(const json& j) {
    GameConfig c;
    c.k = field<int>(j, "k");
    c.ell = field<int>(j, "ell");
    c.level = field<int>(j, "level");
    if (!j.contains("caps")) throw ParseError("field 'caps': missing");
    const json& caps = j.at("caps");
    c.caps.max_vertices = field<int>(caps, "max_vertices");
    c.caps.max_rounds = field<int>(caps, "max_rounds");
    c.caps.max_tree_nodes = field<long long>(caps, "max_tree_nodes");
    return c;
}

json move_to_j(const AliceMove& mv) {
    return json{{"clique", mv.clique}, {"m", mv.m}};
}

AliceMove move_from_j(const json& j) {
    AliceMove mv;
    mv.clique = field<std::vector<int>>(j, "clique");
    mv.m = field<int>(j, "m");
    return mv;
}

json reply_to_j(const BobMove& b) {
    return json{{"spine", b.spine_after}, {"queues", b.queues}};
}

BobMove reply_from_j(const json& j) {
    BobMove b;
    b.spine_after = field<std::vector<int>>(j, "spine");
    b.queues = field<std::vector<int>>(j, "queues");
    return b;
}

json state_to_j(const GameState& s) {
    json edges = json::array();
    for (const Edge& e : s.edges) edges.push_back(json::array({e.u, e.v}));
    json rounds = json::array();
    for (const RoundRecord& r : s.rounds)
        rounds.push_back(json{{"clique", r.clique},
                              {"clique_copy", r.clique_copy},
                              {"children", r.children},
                              {"children_copy", r.children_copy}});
    return json{{"config", config_to_j(s.config)}, {"spine", s.spine},
                {"edges", std::move(edges)},       {"equeue", s.equeue},
                {"side", s.side},                  {"copy_of", s.copy_of},
                {"born", s.born},                  {"parent", s.parent},
                {"rounds", std::move(rounds)}};
}

GameState state_from_j(const json& j) {
    GameState s;
    s.config = config_from_j(j.at("config"));
    s.spine = field<std::vector<int>>(j, "spine");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw ParseError("field 'edges': expected an array");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge entries are pairs");
        s.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    s.equeue = field<std::vector<int>>(j, "equeue");
    s.side = field<std::vector<int>>(j, "side");
    s.copy_of = field<std::vector<int>>(j, "copy_of");
    s.born = field<std::vector<int>>(j, "born");
    s.parent = field<std::vector<std::vector<int>>>(j, "parent");
    if (!j.contains("rounds") || !j.at("rounds").is_array())
        throw ParseError("field 'rounds': expected an array");
    for (const json& r : j.at("rounds")) {
        RoundRecord rec;
        rec.clique = field<std::vector<int>>(r, "clique");
        rec.clique_copy = field<std::vector<int>>(r, "clique_copy");
        rec.children = field<std::vector<int>>(r, "children");
        rec.children_copy = field<std::vector<int>>(r, "children_copy");
        s.rounds.push_back(std::move(rec));
    }
    return s;
}

json refutation_to_j(const LeafRefutation& r) {
    return json{{"reply", reply_to_j(r.reply)}, {"fault", validation_to_j(r.fault)}};
}

LeafRefutation refutation_from_j(const json& j) {
    LeafRefutation r;
    r.reply = reply_from_j(j.at("reply"));
    r.fault = validation_from_j(j.at("fault"));
    return r;
}

json win_node_to_j(const WinTree& t, int idx, bool prune) {
    const WinNode& n = t.nodes[idx];
    json node{{"move", move_to_j(n.move)}};
    if (!n.replies.empty()) {
        json replies = json::array();
        for (std::size_t i = 0; i < n.replies.size(); ++i)
            replies.push_back(json{{"reply", reply_to_j(n.replies[i])},
                                   {"next", win_node_to_j(t, n.children[i], prune)}});
        node["replies"] = std::move(replies);
    } else {
        json refs = json::array();
        for (const LeafRefutation& r : n.refutations) {
            refs.push_back(refutation_to_j(r));
            if (prune) break;
        }
        node["refutations"] = std::move(refs);
    }
    return node;
}

// Rebuilds the node (and its subtree) at the position `state`, appending to
// t.nodes in preorder and returning the node's index.
int win_node_from_j(const json& j, const GameState& state, WinTree& t) {
    WinNode n;
    n.state = state;
    n.move = move_from_j(j.at("move"));
    const int idx = static_cast<int>(t.nodes.size());
    t.nodes.push_back(std::move(n));
    if (j.contains("replies")) {
        for (const json& r : j.at("replies")) {
            const BobMove reply = reply_from_j(r.at("reply"));
            const GameState next = apply_move(state, t.nodes[idx].move, reply);
            t.nodes[idx].replies.push_back(reply);
            const int child = win_node_from_j(r.at("next"), next, t);
            t.nodes[idx].children.push_back(child);
        }
    } else if (j.contains("refutations")) {
        for (const json& r : j.at("refutations"))
            t.nodes[idx].refutations.push_back(refutation_from_j(r));
    } else {
        throw ParseError("win node carries neither replies nor refutations");
    }
    return idx;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

std::string construction_to_json(const ConstructionSequence& seq) {
    json j{{"schema", kSchema}};
    j.update(construction_to_j(seq));
    return dump(j);
}

ConstructionSequence construction_from_json(const std::string& text) {
    return construction_from_j(parse_document(text));
}

std::string layout_to_json(const Graph& g, const QueueLayout& L) {
    json j{{"schema", kSchema}};
    j.update(layout_to_j(g, L));
    return dump(j);
}

QueueLayout layout_from_json(const Graph& g, const std::string& text) {
    return layout_from_j(g, parse_document(text));
}

std::string stars_to_json(const Graph& g, const std::vector<int>& stars) {
    if (static_cast<int>(stars.size()) != g.edge_count())
        throw ParseError("star classes do not cover the edge set");
    std::map<int, std::vector<std::string>> by_center;
    for (int i = 0; i < g.edge_count(); ++i)
        by_center[stars[i]].push_back(edge_name(g.edges()[i]));
    json arr = json::array();
    for (const auto& [center, edges] : by_center)
        arr.push_back(json{{"center", center}, {"edges", edges}});
    return dump(json{{"schema", kSchema}, {"stars", std::move(arr)}});
}

std::vector<int> stars_from_json(const Graph& g, const std::string& text) {
    const json j = parse_document(text);
    std::vector<int> stars(g.edge_count(), -1);
    if (!j.contains("stars") || !j.at("stars").is_array())
        throw ParseError("field 'stars': expected an array");
    for (const json& s : j.at("stars")) {
        const int center = field<int>(s, "center");
        for (const std::string& name : field<std::vector<std::string>>(s, "edges")) {
            const int i = edge_index_of_name(g, name);
            if (stars[i] != -1) throw ParseError("edge '" + name + "' listed twice");
            stars[i] = center;
        }
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (stars[i] < 0)
            throw ParseError("edge '" + edge_name(g.edges()[i]) + "' has no class");
    return stars;
}

std::string bounds_to_json(const BoundsReport& r) {
    return dump(json{{"schema", kSchema},
                     {"mad", rational_to_j(r.mad)},
                     {"degeneracy", r.degeneracy},
                     {"arboricity_nw", r.arboricity_nw},
                     {"lqn_lower", rational_to_j(r.lqn_lower)},
                     {"lqn_upper", rational_to_j(r.lqn_upper)}});
}

BoundsReport bounds_from_json(const std::string& text) {
    const json j = parse_document(text);
    BoundsReport r;
    r.mad = rational_from_j(j.at("mad"));
    r.degeneracy = field<int>(j, "degeneracy");
    r.arboricity_nw = field<int>(j, "arboricity_nw");
    r.lqn_lower = rational_from_j(j.at("lqn_lower"));
    r.lqn_upper = rational_from_j(j.at("lqn_upper"));
    return r;
}

std::string solve_to_json(const Graph& g, const SolveResult& r) {
    return dump(json{{"schema", kSchema},
                     {"value", r.value},
                     {"exact", r.exact},
                     {"nodes", r.stats.nodes},
                     {"witness", layout_to_j(g, r.witness)}});
}

SolveResult solve_from_json(const Graph& g, const std::string& text) {
    const json j = parse_document(text);
    SolveResult r;
    r.value = field<int>(j, "value");
    r.exact = field<bool>(j, "exact");
    r.stats.nodes = field<long long>(j, "nodes");
    r.witness = layout_from_j(g, j.at("witness"));
    return r;
}

std::string validation_to_json(const ValidationResult& r) {
    json j{{"schema", kSchema}};
    j.update(validation_to_j(r));
    return dump(j);
}

ValidationResult validation_from_json(const std::string& text) {
    return validation_from_j(parse_document(text));
}

std::string non_nesting_to_json(const NonNestingWitness& w) {
    return dump(json{{"schema", kSchema},
                     {"kind", "non-nesting"},
                     {"clique", w.clique},
                     {"children", w.children}});
}

NonNestingWitness non_nesting_from_json(const std::string& text) {
    const json j = parse_document(text);
    if (field<std::string>(j, "kind") != "non-nesting")
        throw ParseError("expected a non-nesting witness");
    NonNestingWitness w;
    w.clique = field<std::vector<int>>(j, "clique");
    w.children = field<std::vector<int>>(j, "children");
    return w;
}

std::string rainbow_to_json(const RainbowWitness& w) {
    json edges = json::array();
    for (const Edge& e : w.edges) edges.push_back(edge_name(e));
    json j{{"schema", kSchema}, {"kind", "rainbow"}, {"edges", std::move(edges)}};
    j["queue"] = w.queue ? json(*w.queue) : json(nullptr);
    return dump(j);
}

RainbowWitness rainbow_from_json(const std::string& text) {
    const json j = parse_document(text);
    if (field<std::string>(j, "kind") != "rainbow")
        throw ParseError("expected a rainbow witness");
    RainbowWitness w;
    for (const std::string& name : field<std::vector<std::string>>(j, "edges"))
        w.edges.push_back(edge_from_name(name));
    if (!j.contains("queue")) throw ParseError("field 'queue': missing");
    if (!j.at("queue").is_null()) w.queue = field<int>(j, "queue");
    return w;
}

std::string game_state_to_json(const GameState& s) {
    json j{{"schema", kSchema}};
    j.update(state_to_j(s));
    return dump(j);
}

GameState game_state_from_json(const std::string& text) {
    return state_from_j(parse_document(text));
}

std::string win_tree_to_json(const WinTree& t, bool prune) {
    json roots = json::array();
    for (int r : t.roots) roots.push_back(win_node_to_j(t, r, prune));
    return dump(json{
        {"schema", kSchema}, {"config", config_to_j(t.config)}, {"roots", std::move(roots)}});
}

WinTree win_tree_from_json(const std::string& text) {
    const json j = parse_document(text);
    WinTree t;
    t.config = config_from_j(j.at("config"));
    const std::vector<GameState> inits = initial_states(t.config);
    if (!j.contains("roots") || !j.at("roots").is_array())
        throw ParseError("field 'roots': expected an array");
    if (j.at("roots").size() != inits.size())
        throw ParseError("root count does not match the config's starting positions");
    for (std::size_t i = 0; i < inits.size(); ++i)
        t.roots.push_back(win_node_from_j(j.at("roots")[i], inits[i], t));
    return t;
}

std::string counter_to_json(const CounterLayout& c) {
    return dump(json{
        {"schema", kSchema}, {"state", state_to_j(c.state)}, {"reason", c.reason}});
}

CounterLayout counter_from_json(const std::string& text) {
    const json j = parse_document(text);
    CounterLayout c;
    c.state = state_from_j(j.at("state"));
    c.reason = field<std::string>(j, "reason");
    return c;
}

std::string composed_to_json(const ComposedLowerBound& c) {
    return dump(json{{"schema", kSchema},
                     {"demands", c.demands},
                     {"rounds_materialized", c.rounds_materialized},
                     {"verified", c.verified},
                     {"note", c.note},
                     {"seq", construction_to_j(c.seq)}});
}

ComposedLowerBound composed_from_json(const std::string& text) {
    const json j = parse_document(text);
    ComposedLowerBound c;
    c.demands = field<std::vector<int>>(j, "demands");
    c.rounds_materialized = field<int>(j, "rounds_materialized");
    c.verified = field<bool>(j, "verified");
    c.note = field<std::string>(j, "note");
    c.seq = construction_from_j(j.at("seq"));
    return c;
}

}  // namespace queuelay
