#include "queuelay/lifts.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "queuelay/layout.hpp"

namespace queuelay {
namespace {

long long class_bound(const GameConfig& c) {
    long long f = 1;
    for (int i = 0; i < c.k; ++i) {
        f *= c.ell;
        if (f > (1 << 20)) throw SizeOverflowError("queue-tuple class bound ell^k is too large to lift");
    }
    return f;
}

// Shared frame for the three child-selection lifts. choose() rebuilds the
// game one level up by replaying every recorded round: it re-asks the inner
// strategy, checks the recorded round is the lifted form of that answer,
// keeps the children the selection rule keeps, and applies the induced move
// to the inner state. Vertices keep their relative order and queue ids are
// relabeled dense in inner first-use order, so the inner state is canonical.
class SelectionLift : public Strategy {
public:
    explicit SelectionLift(std::unique_ptr<Strategy> inner) : inner_(std::move(inner)) {}

    std::optional<AliceMove> choose(const GameState& s) const override {
        if (s.config.paired()) throw GameError(name() + ": single-component games only");
        if (s.config.level != outer_level())
            throw GameError(name() + ": expects a level-" + std::to_string(outer_level()) + " game");
        const Replayed rep = replay(s);
        std::optional<AliceMove> im = inner_->choose(rep.inner);
        if (!im) return std::nullopt;
        check_move(s.config, s.round_count(), *im);
        AliceMove out;
        out.clique.reserve(im->clique.size());
        for (int v : im->clique) out.clique.push_back(rep.to_outer[v]);
        std::sort(out.clique.begin(), out.clique.end());
        out.m = inflate(im->m, s, s.vertex_count(), s.round_count());
        return out;
    }

protected:
    struct Replayed {
        GameState inner;
        std::vector<int> to_outer;  // inner vertex -> outer vertex, ascending
        std::vector<int> to_inner;  // outer vertex -> inner vertex or -1
    };

    virtual int outer_level() const = 0;
    virtual int inflate(int m_inner, const GameState& s, int vertices_before, int round_index) const = 0;
    // Outer ids of the children kept from round r, ascending; must have
    // exactly m_inner members.
    virtual std::vector<int> select(const GameState& s, int r, int m_inner) const = 0;
    // Veto hook for moves the lift cannot support (round_index counts the
    // rounds already played when the move is made).
    virtual void check_move(const GameConfig& /*cfg*/, int /*round_index*/,
                            const AliceMove& /*im*/) const {}

    Replayed replay(const GameState& s) const {
        const int k = s.config.k;
        const int init_edges = k * (k - 1) / 2;
        Replayed rep;
        rep.to_inner.assign(s.vertex_count(), -1);
        GameState t;
        t.config = s.config;
        t.config.level = s.config.level + 1;
        t.spine.resize(k);
        std::iota(t.spine.begin(), t.spine.end(), 0);
        t.edges.assign(s.edges.begin(), s.edges.begin() + init_edges);
        t.equeue.assign(s.equeue.begin(), s.equeue.begin() + init_edges);
        t.side.assign(k, 0);
        t.copy_of.assign(k, -1);
        t.born.assign(k, 0);
        t.parent.assign(k, {});
        for (int v = 0; v < k; ++v) {
            rep.to_outer.push_back(v);
            rep.to_inner[v] = v;
        }

        std::map<int, int> qmap;  // outer queue -> inner queue
        int next_q = 0;
        for (int i = 0; i < init_edges; ++i)
            if (!qmap.count(s.equeue[i])) qmap[s.equeue[i]] = next_q++;

        int outer_n = k;
        for (int r = 0; r < s.round_count(); ++r) {
            const RoundRecord& rec = s.rounds[r];
            std::optional<AliceMove> im = inner_->choose(t);
            if (!im) throw GameError(name() + ": inner strategy conceded a replayed position");
            check_move(s.config, r, *im);
            std::vector<int> want;
            want.reserve(im->clique.size());
            for (int v : im->clique) want.push_back(rep.to_outer[v]);
            if (want != rec.clique ||
                inflate(im->m, s, outer_n, r) != static_cast<int>(rec.children.size()))
                throw GameError(name() + ": replayed state was not produced by this strategy");

            const std::vector<int> sel = select(s, r, im->m);
            for (int x : sel) {
                rep.to_inner[x] = static_cast<int>(rep.to_outer.size());
                rep.to_outer.push_back(x);
            }
            std::vector<int> ispine;
            for (int v : s.spine)
                if (rep.to_inner[v] >= 0) ispine.push_back(rep.to_inner[v]);
            std::vector<int> iq;
            iq.reserve(sel.size() * want.size());
            for (int x : sel)
                for (int c : want) {
                    const int q = s.queue_of(c, x);
                    if (q < 0) throw GameError(name() + ": kept child is missing a clique edge");
                    auto it = qmap.find(q);
                    int v;
                    if (it == qmap.end()) {
                        v = next_q++;
                        qmap.emplace(q, v);
                    } else {
                        v = it->second;
                    }
                    iq.push_back(v);
                }
            GameState t2 = apply_move(t, *im, BobMove{ispine, iq});
            ValidationResult fault;
            const int viol = first_violated_condition(t2, &fault);
            if (viol != 0)
                throw PigeonholeError(
                    name() + ": kept children break condition " + std::to_string(viol) +
                    " of the lifted game (" + describe(fault) +
                    "); the selection argument rules this out for legal replies, so the "
                    "engine must have accepted an illegal reply");
            t = std::move(t2);
            outer_n += static_cast<int>(rec.children.size());
        }
        rep.inner = std::move(t);
        return rep;
    }

    std::unique_ptr<Strategy> inner_;
};

class RightPlacementLift final : public SelectionLift {
public:
    using SelectionLift::SelectionLift;

    std::string name() const override { return "right-placement(" + inner_->name() + ")"; }

protected:
    int outer_level() const override { return 4; }

    int inflate(int m_inner, const GameState&, int, int) const override { return m_inner + 2; }

    std::vector<int> select(const GameState& s, int r, int m_inner) const override {
        const auto& kids = s.rounds[r].children;
        if (static_cast<int>(kids.size()) != m_inner + 2)
            throw GameError(name() + ": recorded round is missing the sentinel children");
        return std::vector<int>(kids.begin() + 1, kids.end() - 1);
    }

    void check_move(const GameConfig& cfg, int round_index, const AliceMove& im) const override {
        if (round_index == 0) return;
        // A clique drawn entirely from the initial vertices has no member the
        // sentinel argument can anchor to once older children exist, so the
        // kept children could legally land on the left of it.
        for (int v : im.clique)
            if (v >= cfg.k) return;
        throw GameError(
            "right-placement lift: the inner strategy re-picked the initial clique after "
            "round 1, and placement of its children cannot be forced");
    }
};

class TwinQueuesLift final : public SelectionLift {
public:
    TwinQueuesLift(std::unique_ptr<Strategy> inner, std::shared_ptr<LiftCounters> counters)
        : SelectionLift(std::move(inner)), counters_(std::move(counters)) {}

    std::string name() const override { return "twin-queues(" + inner_->name() + ")"; }

protected:
    int outer_level() const override { return 3; }

    int inflate(int m_inner, const GameState& s, int, int) const override {
        const long long out = class_bound(s.config) * m_inner;
        if (out > (1 << 20)) throw SizeOverflowError("twin-queues lift would request too many children");
        return static_cast<int>(out);
    }

    std::vector<int> select(const GameState& s, int r, int m_inner) const override {
        const RoundRecord& rec = s.rounds[r];
        std::map<std::vector<int>, std::vector<int>> classes;
        for (int x : rec.children) {
            std::vector<int> tup;
            tup.reserve(rec.clique.size());
            for (int c : rec.clique) tup.push_back(s.queue_of(c, x));
            classes[tup].push_back(x);
        }
        if (counters_) {
            ++counters_->twin_selections;
            counters_->max_twin_classes =
                std::max(counters_->max_twin_classes, static_cast<int>(classes.size()));
        }
        if (static_cast<long long>(classes.size()) > class_bound(s.config))
            throw PigeonholeError(
                "twin-queues lift: more queue-tuple classes than ell^k, although each "
                "clique vertex offers at most ell queues to its children");
        const std::vector<int>* best = nullptr;
        for (const auto& [tup, xs] : classes)
            if (!best || xs.size() > best->size() ||
                (xs.size() == best->size() && xs.front() < best->front()))
                best = &xs;
        if (!best || static_cast<int>(best->size()) < m_inner)
            throw PigeonholeError(
                "twin-queues lift: the largest queue-tuple class is smaller than the "
                "lifted child count, although ell^k classes over ell^k * m children "
                "guarantee one of size m");
        return std::vector<int>(best->begin(), best->begin() + m_inner);
    }

private:
    std::shared_ptr<LiftCounters> counters_;
};

class ConsecutiveLift final : public SelectionLift {
public:
    ConsecutiveLift(std::unique_ptr<Strategy> inner, std::shared_ptr<LiftCounters> counters)
        : SelectionLift(std::move(inner)), counters_(std::move(counters)) {}

    std::string name() const override { return "consecutive-block(" + inner_->name() + ")"; }

protected:
    int outer_level() const override { return 2; }

    int inflate(int m_inner, const GameState&, int vertices_before, int round_index) const override {
        if (round_index == 0) return m_inner;
        const long long a = (m_inner + 1LL) * vertices_before;
        const long long b = (m_inner - 1LL) * (vertices_before + 1LL) + 1;
        const long long out = std::max(a, b);
        if (out > (1 << 20)) throw SizeOverflowError("consecutive-block lift would request too many children");
        return static_cast<int>(out);
    }

    std::vector<int> select(const GameState& s, int r, int m_inner) const override {
        const RoundRecord& rec = s.rounds[r];
        if (r == 0) {
            // Round-1 children all sit right of the initial clique and nothing
            // else exists yet, so they are one consecutive block as they are.
            if (static_cast<int>(rec.children.size()) != m_inner)
                throw GameError(name() + ": recorded first round has the wrong child count");
            return rec.children;
        }
        const std::set<int> kids(rec.children.begin(), rec.children.end());
        std::vector<std::vector<int>> runs;
        bool open = false;
        for (int v : s.spine) {
            if (s.born[v] > r + 1) continue;  // vertex did not exist in round r+1 yet
            if (kids.count(v)) {
                if (!open) {
                    runs.emplace_back();
                    open = true;
                }
                runs.back().push_back(v);
            } else {
                open = false;
            }
        }
        const std::vector<int>* best = nullptr;
        for (const auto& run : runs)
            if (!best || run.size() > best->size()) best = &run;  // tie: leftmost wins
        const int longest = best ? static_cast<int>(best->size()) : 0;
        if (counters_) {
            ++counters_->run_selections;
            counters_->min_run_slack = std::min(counters_->min_run_slack, longest - m_inner);
        }
        if (longest < m_inner)
            throw PigeonholeError(
                "consecutive-block lift: no spine run holds enough children, although "
                "the old vertices can split the block into at most |V|+1 runs");
        return std::vector<int>(best->begin(), best->begin() + m_inner);
    }

private:
    std::shared_ptr<LiftCounters> counters_;
};

class CopyDiverseLift final : public Strategy {
public:
    explicit CopyDiverseLift(std::unique_ptr<Strategy> inner) : inner_(std::move(inner)) {}

    std::string name() const override { return "copy-diversity(" + inner_->name() + ")"; }

    std::optional<AliceMove> choose(const GameState& s) const override {
        if (s.config.level != 6) throw GameError(name() + ": expects a level-6 game");
        GameState view = s;
        view.config.level = 7;
        ValidationResult fault;
        const int viol = first_violated_condition(view, &fault);
        if (viol != 0)
            throw PigeonholeError(
                name() + ": a legal mirrored state breaks condition " + std::to_string(viol) +
                " of the stronger game (" + describe(fault) +
                "); reusing a clique-edge queue on a later child of the edge's spine-first "
                "endpoint nests the mirrored copy, so this is impossible for legal replies");
        return inner_->choose(view);
    }

private:
    std::unique_ptr<Strategy> inner_;
};

// One clone thread of the paired-start lift: the k clone vertices grown over
// the initial clique, the virtual mirrored board the inner strategy plays on,
// and the thread's queue history used for the pigeonhole grouping.
struct ThreadRec {
    std::vector<int> clones;  // global ids, creation order (= spine order)
    GameState virt;
    std::vector<int> vmap;    // virt id -> global id for the left half, else -1
    std::map<int, int> gmap;  // global id -> virt left id
    std::map<int, int> qmap;  // global queue -> virt queue
    int next_q = 0;
    std::vector<int> history;
};

int virt_queue(ThreadRec& th, int gq) {
    const auto it = th.qmap.find(gq);
    if (it != th.qmap.end()) return it->second;
    const int v = th.next_q++;
    th.qmap.emplace(gq, v);
    return v;
}

class PairedStartLift final : public Strategy {
public:
    explicit PairedStartLift(std::unique_ptr<Strategy> inner) : inner_(std::move(inner)) {}

    std::string name() const override { return "paired-start(" + inner_->name() + ")"; }

    std::optional<AliceMove> choose(const GameState& s) const override {
        if (s.config.paired()) throw GameError(name() + ": plays the single-clique game");
        if (s.config.level != 5) throw GameError(name() + ": expects a level-5 game");
        const int k = s.config.k;
        if (s.config.ell > k) throw GameError(name() + ": needs ell <= k");
        if (s.config.ell < k) {
            // Each child must put its k clique edges into pairwise different
            // queues, which already exceeds the locality bound: any opening
            // move wins on the spot.
            if (s.round_count() > 0)
                throw GameError(name() + ": no reply survives the first round when ell < k");
            std::vector<int> init(k);
            std::iota(init.begin(), init.end(), 0);
            return AliceMove{init, 1};
        }
        if (s.queue_count() > k * k)
            throw PigeonholeError(
                name() + ": more than k*k queues in play, although with ell == k every "
                "queue must contain an initial-clique vertex");
        return plan(s);
    }

private:
    // Re-derives the whole thread schedule from the recorded rounds and
    // returns the next move (or concedes). Threads run one after another:
    // k clone rounds, then mirrored-script rounds until the virtual board
    // kills the inner game or Bob's replies stop being mirrorable.
    std::optional<AliceMove> plan(const GameState& s) const {
        const int k = s.config.k;
        const int R = s.round_count();
        int r = 0;
        std::vector<std::vector<int>> seen;
        while (true) {
            ThreadRec th;
            for (int i = 0; i < k; ++i) {
                std::vector<int> clique;
                for (int c = i; c < k; ++c) clique.push_back(c);
                for (int j = 0; j < i; ++j) clique.push_back(th.clones[j]);
                std::sort(clique.begin(), clique.end());
                if (r == R) return AliceMove{clique, 1};
                expect(s, r, clique, 1);
                th.clones.push_back(s.rounds[r].children.front());
                ++r;
            }
            for (int i = 0; i < k; ++i) {
                const RoundRecord& rec = s.rounds[r - k + i];
                for (int c : rec.clique)
                    th.history.push_back(s.queue_of(c, rec.children.front()));
            }
            make_virtual(s, th);
            bool done = false;
            while (!done) {
                std::optional<AliceMove> im = inner_->choose(th.virt);
                if (!im) {
                    if (r == R) return std::nullopt;
                    throw GameError(name() +
                                    ": recorded rounds continue past a position the inner "
                                    "strategy concedes");
                }
                std::vector<int> oc;
                oc.reserve(im->clique.size());
                for (int v : im->clique) {
                    if (v < 0 || v >= static_cast<int>(th.vmap.size()) || th.vmap[v] < 0)
                        throw GameError(name() + ": inner strategy picked a right-half vertex");
                    oc.push_back(th.vmap[v]);
                }
                std::sort(oc.begin(), oc.end());
                const bool kill = legal_bob_moves(th.virt, *im).empty();
                if (r == R) return AliceMove{oc, im->m};
                expect(s, r, oc, im->m);
                append_script(s, r, th, *im);
                if (kill) {
                    th.history.push_back(-4);
                    done = true;
                } else if (!mirror_reply(s, r, th, *im)) {
                    th.history.push_back(-5);
                    done = true;
                }
                ++r;
            }
            for (const auto& h : seen)
                if (h == th.history)
                    throw PigeonholeError(
                        name() +
                        ": two clone threads completed with identical queue histories; "
                        "their union forces a same-queue nesting, so legal play can never "
                        "reach this and the engine must have missed a violation");
            seen.push_back(std::move(th.history));
        }
    }

    void expect(const GameState& s, int r, const std::vector<int>& clique, int m) const {
        const RoundRecord& rec = s.rounds[r];
        if (rec.clique != clique || static_cast<int>(rec.children.size()) != m)
            throw GameError(name() + ": replayed state was not produced by this strategy");
    }

    // Builds the mirrored board for a freshly cloned clique: the left half is
    // the thread's clone clique with its real queues relabeled dense, the
    // right half is a verbatim mirror.
    void make_virtual(const GameState& s, ThreadRec& th) const {
        const int k = s.config.k;
        GameState v;
        v.config = s.config;
        v.config.level = 6;
        for (int i = 0; i < 2 * k; ++i) {
            v.side.push_back(i < k ? 0 : 1);
            v.copy_of.push_back(i < k ? i + k : i - k);
            v.born.push_back(0);
            v.parent.emplace_back();
        }
        for (int i = 0; i < k; ++i) {
            v.spine.push_back(i);
            v.spine.push_back(k + i);
        }
        std::vector<int> lq;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                const int gq = s.queue_of(th.clones[a], th.clones[b]);
                if (gq < 0) throw GameError(name() + ": clone vertices do not span a clique");
                lq.push_back(virt_queue(th, gq));
                v.edges.emplace_back(a, b);
            }
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) v.edges.emplace_back(k + a, k + b);
        v.equeue = lq;
        v.equeue.insert(v.equeue.end(), lq.begin(), lq.end());
        th.vmap.assign(2 * k, -1);
        for (int i = 0; i < k; ++i) {
            th.vmap[i] = th.clones[i];
            th.gmap.emplace(th.clones[i], i);
        }
        th.virt = std::move(v);
        const int viol = first_violated_condition(th.virt);
        if (viol != 0)
            throw PigeonholeError(name() + ": mirrored clone board breaks condition " +
                                  std::to_string(viol) +
                                  ", although mirroring a legal clique cannot nest");
    }

    void append_script(const GameState& s, int r, ThreadRec& th, const AliceMove& im) const {
        const RoundRecord& rec = s.rounds[r];
        th.history.push_back(-2);
        for (int v : im.clique) th.history.push_back(v);
        th.history.push_back(-3);
        for (int gx : rec.children)
            for (int vcl : im.clique) th.history.push_back(s.queue_of(th.vmap[vcl], gx));
    }

    // Replays Bob's thread reply on the virtual board: each thread vertex is
    // followed by its mirror copy, queues are copied verbatim. Returns false
    // when the mirrored round is no longer a legal mirrored-game position --
    // the thread then ends as a divergence.
    bool mirror_reply(const GameState& s, int r, ThreadRec& th, const AliceMove& im) const {
        const RoundRecord& rec = s.rounds[r];
        const int m = static_cast<int>(rec.children.size());
        const std::set<int> newkids(rec.children.begin(), rec.children.end());
        const int n0 = th.virt.vertex_count();
        std::map<int, int> newmap;
        std::vector<int> vspine;
        int next_child = 0;
        for (int gv : s.spine) {
            if (s.born[gv] > r + 1) continue;
            if (newkids.count(gv)) {
                const int lv = n0 + next_child;
                ++next_child;
                newmap.emplace(gv, lv);
                vspine.push_back(lv);
                vspine.push_back(lv + m);
            } else {
                const auto it = th.gmap.find(gv);
                if (it == th.gmap.end()) continue;
                vspine.push_back(it->second);
                vspine.push_back(th.virt.copy_of[it->second]);
            }
        }
        std::vector<int> vq;
        vq.reserve(2 * newkids.size() * im.clique.size());
        for (int gx : rec.children)
            for (int vcl : im.clique) {
                const int gq = s.queue_of(th.vmap[vcl], gx);
                if (gq < 0) throw GameError(name() + ": recorded child is missing a clique edge");
                vq.push_back(virt_queue(th, gq));
            }
        const std::size_t half = vq.size();
        for (std::size_t i = 0; i < half; ++i) vq.push_back(vq[i]);
        GameState v2 = apply_move(th.virt, im, BobMove{vspine, vq});
        if (first_violated_condition(v2) != 0) return false;
        th.virt = std::move(v2);
        th.vmap.resize(th.virt.vertex_count(), -1);
        for (const auto& [g, lv] : newmap) {
            th.gmap.emplace(g, lv);
            th.vmap[lv] = g;
        }
        return true;
    }

    std::unique_ptr<Strategy> inner_;
};

}  // namespace

std::unique_ptr<Strategy> ensure_right_placement(std::unique_ptr<Strategy> inner) {
    return std::make_unique<RightPlacementLift>(std::move(inner));
}

std::unique_ptr<Strategy> ensure_twin_queues(std::unique_ptr<Strategy> inner,
                                             std::shared_ptr<LiftCounters> counters) {
    return std::make_unique<TwinQueuesLift>(std::move(inner), std::move(counters));
}

std::unique_ptr<Strategy> ensure_consecutive(std::unique_ptr<Strategy> inner,
                                             std::shared_ptr<LiftCounters> counters) {
    return std::make_unique<ConsecutiveLift>(std::move(inner), std::move(counters));
}

std::unique_ptr<Strategy> ensure_copy_diverse(std::unique_ptr<Strategy> inner) {
    return std::make_unique<CopyDiverseLift>(std::move(inner));
}

std::unique_ptr<Strategy> ensure_paired_start(std::unique_ptr<Strategy> inner) {
    return std::make_unique<PairedStartLift>(std::move(inner));
}

}  // namespace queuelay
