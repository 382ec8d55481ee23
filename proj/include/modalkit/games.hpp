#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modalkit/modal.hpp"
#include "modalkit/relations.hpp"

namespace modalkit {

// Branching-time frame read as a game: a strict order of time points
// (stored transitively closed), its cover relation, tie markers on
// terminals, and a player count. Derived data is computed at build time;
// values are immutable afterwards.
struct Game {
    Frame order;                      // strict partial order, closed
    Frame covers;                     // immediate successors
    std::vector<int> past_size;       // |{t' : t' < t}| per point
    std::set<int> ties;
    int players = 2;
    std::optional<int> root;          // unique minimum, when it exists
    std::vector<std::string> labels;  // optional display labels (nim: tokens left)

    int points() const { return order.worlds(); }
    bool terminal(int t) const { return order.row_empty(t); }
    int instant_index(int t) const { return past_size[t] + 1; }
    // player whose turn the point's instant is: k ≡ i (mod players)
    int mover(int t) const { return past_size[t] % players + 1; }
};

Game build_game(int points, std::span<const std::pair<int, int>> order_edges,
                const std::set<int>& ties, int players);

// All maximal chains, ascending within each, listed lexicographically.
std::vector<std::vector<int>> histories(const Game& g);

struct Instant {
    int index;                // 1-based; root sits in instant 1
    std::vector<int> points;  // ascending
};
std::vector<Instant> instants(const Game& g);

struct Articulated {
    std::vector<int> past;                     // ascending
    std::vector<std::vector<int>> future_sets; // per history through t, deduplicated
};
Articulated articulated(const Game& g, int t);

// max |h_f(root)| over all histories
int game_length(const Game& g);

// The player who wins at t: terminal, not a tie, k ≡ i-1 (mod players)
// normalized into {1..players}; nullopt otherwise.
std::optional<int> winner_at(const Game& g, int t);

struct SolveResult {
    enum class Outcome { winner, tie };
    Outcome outcome = Outcome::tie;
    int winner = 0;                 // meaningful when outcome == winner
    std::map<int, int> strategy;    // non-terminal point -> chosen cover successor
    std::vector<int> lengths;       // point -> max remaining play length
};

// Backward induction over covers. Requires a unique root and gradedness
// along covers (every cover step advances the instant by one). For two
// players the mover optimizes win > tie > loss; for more, a per-player
// forcing induction decides which player (if any) can force a win.
SolveResult solve(const Game& g);

// Single-pile Nim, take 1 or 2 per move, two players; point labels carry
// the remaining token count.
Game nim(int tokens);

// the mirrored response: 2 -> 1, 1 -> 2, 0 -> 0
int chi(int taken);

// True iff every play consistent with s (player k follows s, everyone else
// is free) ends at a point player k wins, and at every point along every
// such play the modal certificate <>^r win_k holds in game_to_model(g),
// r being the remaining length of the play.
bool check_winning_strategy(const Game& g, int player, const std::map<int, int>& strategy);

// Model over the cover relation with reserved atoms: "tie", "terminal",
// and per player k: "win_k" (winner_at == k), "lose_k" (terminal non-tie,
// winner_at != k), and "open_k" (non-tie and not a win for k — the
// disjunctive loss reading, true at interior points where play continues).
Model game_to_model(const Game& g);

// DOT digraph of covers: player-1 instants gold, player-2 skyblue, others
// gray; terminal winners and ties annotated. Byte-stable for fixed input.
std::string to_dot(const Game& g);

// every point's past is linearly ordered (the standard branching condition)
bool is_tree_like(const Game& g);
// the literal condition that each past is strictly partially ordered —
// vacuously true for any strict order; exposed for completeness
bool past_strictly_ordered(const Game& g);

}  // namespace modalkit
