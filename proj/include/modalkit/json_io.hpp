#pragma once

#include <string>
#include <string_view>

#include "modalkit/games.hpp"
#include "modalkit/relations.hpp"

namespace modalkit {

// Frame wire format: {"worlds": <int>, "edges": [[u,v], ...]}.
// Emission sorts the edge list lexicographically.
Frame frame_from_json(std::string_view text);
std::string frame_to_json(const Frame& f);

// Game wire format: {"points": <int>, "order": [[a,b], ...],
// "ties": [t, ...], "players": <int>}; order may be any generator set.
Game game_from_json(std::string_view text);
std::string game_to_json(const Game& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace modalkit
