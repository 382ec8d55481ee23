#include "modalkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modalkit/errors.hpp"

namespace modalkit {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<std::pair<int, int>> require_pairs(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw input_error(std::string("missing array field \"") + key + "\"");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j[key]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error(std::string("field \"") + key + "\" must hold [a,b] pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json edges_json(const Frame& f) {
    json arr = json::array();
    for (auto [u, v] : f.edges()) arr.push_back(json::array({u, v}));
    return arr;
}

}  // namespace

Frame frame_from_json(std::string_view text) {
    json j = parse(text);
    const int worlds = require_int(j, "worlds");
    auto edges = require_pairs(j, "edges");
    return Frame::from_edges(worlds, edges);
}

std::string frame_to_json(const Frame& f) {
    json j;
    j["worlds"] = f.worlds();
    j["edges"] = edges_json(f);
    return j.dump();
}

Game game_from_json(std::string_view text) {
    json j = parse(text);
    const int points = require_int(j, "points");
    auto order = require_pairs(j, "order");
    std::set<int> ties;
    if (j.contains("ties")) {
        if (!j["ties"].is_array()) throw input_error("field \"ties\" must be an array");
        for (const auto& t : j["ties"]) {
            if (!t.is_number_integer()) throw input_error("tie entries must be integers");
            ties.insert(t.get<int>());
        }
    }
    const int players = j.contains("players") ? require_int(j, "players") : 2;
    return build_game(points, order, ties, players);
}

std::string game_to_json(const Game& g) {
    json j;
    j["points"] = g.points();
    j["order"] = edges_json(g.order);
    json ties = json::array();
    for (int t : g.ties) ties.push_back(t);
    j["ties"] = ties;
    j["players"] = g.players;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << contents;
}

}  // namespace modalkit
