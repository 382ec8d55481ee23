#include "modalkit/games.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "modalkit/errors.hpp"

namespace modalkit {

Game build_game(int points, std::span<const std::pair<int, int>> order_edges,
                const std::set<int>& ties, int players) {
    if (points < 0) throw input_error("game: negative point count");
    if (players < 1) throw input_error("game: player count must be at least 1");

    Game g;
    g.order = transitive_closure(Frame::from_edges(points, order_edges));
    g.players = players;
    for (int t = 0; t < points; ++t)
        if (g.order.get(t, t))
            throw input_error("not a strict order: point " + std::to_string(t) +
                              " lies on a cycle");
    // antisymmetry follows: u<v and v<u would close into u<u

    // covers: order minus pairs with an intermediate point
    g.covers = Frame(points);
    for (int a = 0; a < points; ++a)
        for (int b = 0; b < points; ++b) {
            if (!g.order.get(a, b)) continue;
            bool skipped = false;
            for (int c = 0; c < points && !skipped; ++c)
                skipped = g.order.get(a, c) && g.order.get(c, b);
            if (!skipped) g.covers.set(a, b);
        }

    g.past_size.assign((std::size_t)points, 0);
    int minima = 0, min_point = -1;
    for (int t = 0; t < points; ++t) {
        int past = 0;
        for (int s = 0; s < points; ++s)
            if (g.order.get(s, t)) ++past;
        g.past_size[t] = past;
        if (past == 0) {
            ++minima;
            min_point = t;
        }
    }
    if (points > 0 && minima == 1) g.root = min_point;

    for (int t : ties) {
        if (t < 0 || t >= points)
            throw input_error("tie point " + std::to_string(t) + " out of range");
        if (!g.order.row_empty(t))
            throw input_error("tie marker on non-terminal point " + std::to_string(t));
    }
    g.ties = ties;
    return g;
}

namespace {

std::vector<int> cover_successors(const Game& g, int t) {
    std::vector<int> out;
    for (int v = 0; v < g.points(); ++v)
        if (g.covers.get(t, v)) out.push_back(v);
    return out;
}

std::vector<int> minimal_points(const Game& g) {
    std::vector<int> out;
    for (int t = 0; t < g.points(); ++t)
        if (g.past_size[t] == 0) out.push_back(t);
    return out;
}

void require_root(const Game& g, const char* who) {
    if (!g.root)
        throw input_error(std::string(who) + ": no initial turn t_0 (game has " +
                          std::to_string(minimal_points(g).size()) + " minimal points)");
}

}  // namespace

std::vector<std::vector<int>> histories(const Game& g) {
    // maximal chains = cover paths from a minimal point to a sink; DFS in
    // ascending order yields the list lexicographically sorted
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    std::function<void(int)> walk = [&](int t) {
        chain.push_back(t);
        auto next = cover_successors(g, t);
        if (next.empty())
            out.push_back(chain);
        else
            for (int v : next) walk(v);
        chain.pop_back();
    };
    for (int t : minimal_points(g)) walk(t);
    return out;
}

std::vector<Instant> instants(const Game& g) {
    std::map<int, std::vector<int>> by_past;
    for (int t = 0; t < g.points(); ++t) by_past[g.past_size[t]].push_back(t);
    std::vector<Instant> out;
    out.reserve(by_past.size());
    for (auto& [past, points] : by_past) out.push_back({past + 1, std::move(points)});
    return out;
}

Articulated articulated(const Game& g, int t) {
    if (t < 0 || t >= g.points())
        throw input_error("articulated: unknown point " + std::to_string(t));
    Articulated out;
    for (int s = 0; s < g.points(); ++s)
        if (g.order.get(s, t)) out.past.push_back(s);
    std::set<std::vector<int>> futures;
    for (const auto& h : histories(g)) {
        auto at = std::find(h.begin(), h.end(), t);
        if (at == h.end()) continue;
        futures.emplace(at + 1, h.end());
    }
    out.future_sets.assign(futures.begin(), futures.end());
    return out;
}

int game_length(const Game& g) {
    require_root(g, "game_length");
    int best = 0;
    for (const auto& h : histories(g)) best = std::max(best, (int)h.size() - 1);
    return best;
}

std::optional<int> winner_at(const Game& g, int t) {
    if (t < 0 || t >= g.points()) return std::nullopt;
    if (!g.terminal(t) || g.ties.count(t)) return std::nullopt;
    // k ≡ i-1 (mod m) with i = past+1, normalized into {1..m}
    const int m = g.players;
    return ((g.past_size[t] - 1) % m + m) % m + 1;
}

namespace {

// longest cover path from each point; points processed by decreasing level
std::vector<int> remaining_lengths(const Game& g) {
    std::vector<int> order_by_level((std::size_t)g.points());
    for (int t = 0; t < g.points(); ++t) order_by_level[(std::size_t)t] = t;
    std::sort(order_by_level.begin(), order_by_level.end(),
              [&](int a, int b) { return g.past_size[a] > g.past_size[b]; });
    std::vector<int> len((std::size_t)g.points(), 0);
    for (int t : order_by_level)
        for (int v : cover_successors(g, t)) len[t] = std::max(len[t], len[v] + 1);
    return len;
}

void require_graded(const Game& g) {
    for (int a = 0; a < g.points(); ++a)
        for (int b = 0; b < g.points(); ++b)
            if (g.covers.get(a, b) && g.past_size[b] != g.past_size[a] + 1)
                throw input_error("solve requires a graded game: cover " + std::to_string(a) +
                                  " -> " + std::to_string(b) + " jumps from instant " +
                                  std::to_string(g.instant_index(a)) + " to " +
                                  std::to_string(g.instant_index(b)));
}

}  // namespace

SolveResult solve(const Game& g) {
    require_root(g, "solve");
    require_graded(g);
    const int n = g.points();
    const int m = g.players;

    SolveResult res;
    res.lengths = remaining_lengths(g);

    std::vector<int> by_level((std::size_t)n);
    for (int t = 0; t < n; ++t) by_level[(std::size_t)t] = t;
    std::sort(by_level.begin(), by_level.end(),
              [&](int a, int b) { return g.past_size[a] > g.past_size[b]; });

    if (m <= 2) {
        // value from the mover's perspective: win beats tie beats loss
        constexpr int TIE = 0;
        std::vector<int> value((std::size_t)n, TIE);  // 0 = tie, else winning player
        for (int t : by_level) {
            if (g.terminal(t)) {
                auto w = winner_at(g, t);
                value[t] = w ? *w : TIE;
                continue;
            }
            const int mv = g.mover(t);
            int best_child = -1, best_rank = -1;  // rank: 2 win, 1 tie, 0 loss
            for (int v : cover_successors(g, t)) {
                int rank = value[v] == mv ? 2 : (value[v] == TIE ? 1 : 0);
                if (rank > best_rank) {
                    best_rank = rank;
                    best_child = v;
                }
            }
            value[t] = value[best_child];
            res.strategy[t] = best_child;
        }
        if (value[*g.root] == TIE) {
            res.outcome = SolveResult::Outcome::tie;
        } else {
            res.outcome = SolveResult::Outcome::winner;
            res.winner = value[*g.root];
        }
        return res;
    }

    // m >= 3: per-player forcing induction, everyone else adversarial
    std::vector<std::vector<char>> force((std::size_t)m + 1,
                                         std::vector<char>((std::size_t)n, 0));
    for (int k = 1; k <= m; ++k) {
        for (int t : by_level) {
            if (g.terminal(t)) {
                force[k][t] = winner_at(g, t) == std::optional<int>(k);
                continue;
            }
            bool mine = g.mover(t) == k;
            bool acc = !mine;
            for (int v : cover_successors(g, t)) {
                if (mine)
                    acc = acc || force[k][v];
                else
                    acc = acc && force[k][v];
            }
            force[k][t] = acc;
        }
    }
    int forcer = 0;
    for (int k = 1; k <= m; ++k)
        if (force[k][*g.root]) forcer = k;
    if (forcer == 0) {
        res.outcome = SolveResult::Outcome::tie;
    } else {
        res.outcome = SolveResult::Outcome::winner;
        res.winner = forcer;
    }
    for (int t = 0; t < n; ++t) {
        if (g.terminal(t)) continue;
        auto succ = cover_successors(g, t);
        int pick = succ.front();
        const int mv = g.mover(t);
        if (force[mv][t])
            for (int v : succ)
                if (force[mv][v]) {
                    pick = v;
                    break;
                }
        res.strategy[t] = pick;
    }
    return res;
}

Game nim(int tokens) {
    if (tokens < 1) throw input_error("nim: token count must be positive");
    if (tokens > 16)
        throw limit_error("nim: piles above 16 tokens build game trees past the "
                          "supported size (16 tokens is already 4180 points)");
    // depth-first expansion, take-1 child before take-2
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    std::function<int(int)> expand = [&](int remaining) {
        const int id = (int)labels.size();
        labels.push_back(std::to_string(remaining));
        for (int take = 1; take <= 2 && take <= remaining; ++take) {
            int child = expand(remaining - take);
            edges.emplace_back(id, child);
        }
        return id;
    };
    expand(tokens);
    Game g = build_game((int)labels.size(), edges, {}, 2);
    g.labels = std::move(labels);
    return g;
}

int chi(int taken) {
    switch (taken) {
        case 2: return 1;
        case 1: return 2;
        case 0: return 0;
    }
    throw input_error("chi: take must be 0, 1, or 2");
}

Model game_to_model(const Game& g) {
    const int n = g.points();
    Model m;
    m.frame = g.covers;
    auto& val = m.valuation;
    val["tie"].assign((std::size_t)n, false);
    val["terminal"].assign((std::size_t)n, false);
    for (int k = 1; k <= g.players; ++k) {
        val["win_" + std::to_string(k)].assign((std::size_t)n, false);
        val["lose_" + std::to_string(k)].assign((std::size_t)n, false);
        val["open_" + std::to_string(k)].assign((std::size_t)n, false);
    }
    for (int t = 0; t < n; ++t) {
        const bool tie = g.ties.count(t) > 0;
        const bool term = g.terminal(t);
        if (tie) val["tie"][t] = true;
        if (term) val["terminal"][t] = true;
        const auto w = winner_at(g, t);
        for (int k = 1; k <= g.players; ++k) {
            const bool wins = w == std::optional<int>(k);
            if (wins) val["win_" + std::to_string(k)][t] = true;
            if (term && !tie && !wins) val["lose_" + std::to_string(k)][t] = true;
            if (!tie && !wins) val["open_" + std::to_string(k)][t] = true;
        }
    }
    return m;
}

bool check_winning_strategy(const Game& g, int player, const std::map<int, int>& strategy) {
    require_root(g, "check_winning_strategy");
    if (player < 1 || player > g.players)
        throw input_error("check_winning_strategy: no player " + std::to_string(player));
    const Model model = game_to_model(g);
    const FormulaPtr win = mk_atom("win_" + std::to_string(player));

    // enumerate complete plays consistent with the strategy
    std::vector<std::vector<int>> plays;
    std::vector<int> cur;
    std::function<void(int)> walk = [&](int t) {
        cur.push_back(t);
        if (g.terminal(t)) {
            plays.push_back(cur);
        } else if (g.mover(t) == player) {
            auto it = strategy.find(t);
            if (it == strategy.end())
                throw input_error("strategy missing a decision at point " + std::to_string(t));
            if (!g.covers.get(t, it->second))
                throw input_error("strategy at point " + std::to_string(t) +
                                  " does not move to a cover successor");
            walk(it->second);
        } else {
            for (int v : cover_successors(g, t)) walk(v);
        }
        cur.pop_back();
    };
    walk(*g.root);

    for (const auto& play : plays) {
        if (winner_at(g, play.back()) != std::optional<int>(player)) return false;
        for (std::size_t i = 0; i < play.size(); ++i) {
            const int remaining = (int)(play.size() - 1 - i);
            if (!eval(model, play[i], diamond_pow(remaining, win))) return false;
        }
    }
    return true;
}

std::string to_dot(const Game& g) {
    std::ostringstream out;
    out << "digraph game {\n";
    out << "  rankdir=TB;\n";
    out << "  node [style=filled];\n";
    for (int t = 0; t < g.points(); ++t) {
        const int mv = g.mover(t);
        const char* color = mv == 1 ? "gold" : (mv == 2 ? "skyblue" : "gray");
        std::string label = t < (int)g.labels.size() ? g.labels[t] : std::to_string(t);
        if (auto w = winner_at(g, t)) label += "\\nwin: P" + std::to_string(*w);
        if (g.ties.count(t)) label += "\\ntie";
        out << "  n" << t << " [label=\"" << label << "\", fillcolor=" << color << "];\n";
    }
    for (int u = 0; u < g.points(); ++u)
        for (int v = 0; v < g.points(); ++v)
            if (g.covers.get(u, v)) out << "  n" << u << " -> n" << v << ";\n";
    out << "}\n";
    return out.str();
}

bool is_tree_like(const Game& g) {
    // linear past: any two predecessors of a point are comparable
    for (int t = 0; t < g.points(); ++t)
        for (int a = 0; a < g.points(); ++a) {
            if (!g.order.get(a, t)) continue;
            for (int b = a + 1; b < g.points(); ++b)
                if (g.order.get(b, t) && !g.order.get(a, b) && !g.order.get(b, a))
                    return false;
        }
    return true;
}

bool past_strictly_ordered(const Game& g) {
    // restriction of a strict order is a strict order; checked literally
    for (int t = 0; t < g.points(); ++t) {
        std::vector<int> past;
        for (int s = 0; s < g.points(); ++s)
            if (g.order.get(s, t)) past.push_back(s);
        for (int a : past) {
            if (g.order.get(a, a)) return false;
            for (int b : past) {
                if (g.order.get(a, b) && g.order.get(b, a)) return false;
                for (int c : past)
                    if (g.order.get(a, b) && g.order.get(b, c) && !g.order.get(a, c))
                        return false;
            }
        }
    }
    return true;
}

}  // namespace modalkit
