// Copyright 2026 The SEQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqc/backend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace seqc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Table values for the simulated device.
constexpr double kXDuration = 25.0, kXError = 0.00109;
constexpr double kCzDuration = 34.0, kCzError = 0.00605;
constexpr double kInterSwapDuration = 702.4, kInterSwapError = 0.1023;
constexpr double kResetDuration = 500.0, kResetError = 0.00186;
constexpr double kMeasureDuration = 500.0, kMeasureError = 0.00196;

void dijkstra(std::size_t n, const std::vector<std::vector<std::pair<std::uint32_t, double>>>& adj,
              std::uint32_t source, double* out) {
    std::fill(out, out + n, kInf);
    out[source] = 0.0;
    using Entry = std::pair<double, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.push({0.0, source});
    while (!queue.empty()) {
        auto [dist, u] = queue.top();
        queue.pop();
        if (dist > out[u]) continue;
        for (auto [v, w] : adj[u]) {
            if (out[u] + w < out[v]) {
                out[v] = out[u] + w;
                queue.push({out[v], v});
            }
        }
    }
}

double link_weight(const Link& link, DistanceWeighting w) {
    if (w == DistanceWeighting::Hops) return 1.0;
    return -std::log(1.0 - link.error);
}

DistanceMatrix all_pairs(std::size_t n,
                         const std::vector<std::vector<std::pair<std::uint32_t, double>>>& adj,
                         DistanceWeighting w) {
    DistanceMatrix m;
    m.weighting = w;
    m.size = n;
    m.d.resize(n * n, kInf);
    for (std::uint32_t s = 0; s < n; ++s) {
        dijkstra(n, adj, s, m.d.data() + static_cast<std::size_t>(s) * n);
    }
    return m;
}

}  // namespace

const std::vector<std::uint32_t>& ChipletGraph::links_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = links.find({a, b});
    if (it == links.end()) {
        throw std::invalid_argument("chiplets are not adjacent");
    }
    return it->second;
}

std::vector<std::vector<int>> ChipletGraph::hop_distances() const {
    std::vector<std::vector<int>> dist(num_chiplets, std::vector<int>(num_chiplets, -1));
    for (std::size_t s = 0; s < num_chiplets; ++s) {
        std::queue<int> queue;
        dist[s][s] = 0;
        queue.push(static_cast<int>(s));
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : neighbors[u]) {
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push(v);
                }
            }
        }
    }
    return dist;
}

void Backend::finalize() {
    std::uint32_t max_q = 0;
    for (const auto& chip : chiplets) {
        for (auto q : chip.qubits) max_q = std::max(max_q, q);
    }
    for (const auto& link : links) max_q = std::max({max_q, link.a, link.b});
    num_qubits_ = chiplets.empty() && links.empty() ? 0 : max_q + 1;

    chiplet_of_.assign(num_qubits_, -1);
    for (const auto& chip : chiplets) {
        for (auto q : chip.qubits) {
            if (chiplet_of_[q] != -1) {
                throw std::invalid_argument("qubit assigned to two chiplets");
            }
            chiplet_of_[q] = chip.id;
        }
    }
    for (auto owner : chiplet_of_) {
        if (owner == -1) throw std::invalid_argument("qubit not covered by any chiplet");
    }

    links_of_.assign(num_qubits_, {});
    link_lookup_.clear();
    for (std::uint32_t i = 0; i < links.size(); ++i) {
        const Link& link = links[i];
        bool same_chiplet = chiplet_of_[link.a] == chiplet_of_[link.b];
        if (same_chiplet != (link.scope == LinkScope::Intra)) {
            throw std::invalid_argument("link scope inconsistent with chiplet membership");
        }
        links_of_[link.a].push_back(i);
        links_of_[link.b].push_back(i);
        auto key = std::minmax(link.a, link.b);
        link_lookup_[{key.first, key.second}] = i;
    }
}

int Backend::link_between(std::uint32_t a, std::uint32_t b) const {
    auto key = std::minmax(a, b);
    auto it = link_lookup_.find({key.first, key.second});
    return it == link_lookup_.end() ? -1 : static_cast<int>(it->second);
}

const InstructionSpec& Backend::two_qubit_spec(GateKind kind, LinkScope scope) const {
    if (scope == LinkScope::Inter) {
        if (kind != GateKind::Swap) throw std::invalid_argument("inter links support SWAP only");
        return inter_swap;
    }
    if (kind == GateKind::CZ) return intra_cz;
    if (kind == GateKind::Swap) return intra_swap;
    throw std::invalid_argument("no intra-link spec for gate kind");
}

double Backend::gate_duration_ns(const Gate& g) const {
    if (g.kind == GateKind::Barrier) return 0.0;
    if (g.is_two_qubit()) {
        int link = link_between(g.qubits[0], g.qubits[1]);
        if (link < 0) throw std::invalid_argument("two-qubit gate off any link");
        return two_qubit_spec(g.kind, links[link].scope).duration_ns;
    }
    auto it = single_qubit_instrs.find(g.kind);
    if (it == single_qubit_instrs.end()) {
        throw std::invalid_argument("no duration for gate kind " + std::string(to_string(g.kind)));
    }
    return it->second.duration_ns;
}

double Backend::gate_error(const Gate& g) const {
    if (g.kind == GateKind::Barrier) return 0.0;
    if (g.is_two_qubit()) {
        int link = link_between(g.qubits[0], g.qubits[1]);
        if (link < 0) throw std::invalid_argument("two-qubit gate off any link");
        return two_qubit_spec(g.kind, links[link].scope).error;
    }
    auto it = single_qubit_instrs.find(g.kind);
    if (it == single_qubit_instrs.end()) {
        throw std::invalid_argument("no error rate for gate kind " + std::string(to_string(g.kind)));
    }
    return it->second.error;
}

std::pair<int, int> most_square_grid(int num_chiplets) {
    if (num_chiplets < 1) throw std::invalid_argument("chiplet count must be positive");
    for (int r = static_cast<int>(std::sqrt(static_cast<double>(num_chiplets))); r >= 1; --r) {
        if (num_chiplets % r == 0) return {r, num_chiplets / r};
    }
    return {1, num_chiplets};
}

// The device is cut from one global heavy-hexagon lattice: qubits sit on the
// vertices (degree <= 3) and on every edge (degree 2) of a brick-wall
// honeycomb. Tiles own a 2m x 2 block of honeycomb vertices plus the edge
// qubits to their right and below, which yields congruent 10m-qubit tiles and
// makes the crossing lattice edges the inter-chiplet links.
//
// Doubled coordinates: vertices at (2x, 2y); horizontal edge qubits at
// (2x+1, 2y) between (x,y)-(x+1,y); vertical edge qubits at (2x, 2y+1)
// between (x,y)-(x,y+1), present iff x+y is even.
Backend generate_backend(int num_chiplets, int qubits_per_chiplet, double inter_penalty) {
    if (num_chiplets < 1) throw std::invalid_argument("chiplet count must be positive");
    if (qubits_per_chiplet < 10 || qubits_per_chiplet % 10 != 0) {
        throw std::invalid_argument("chiplet size must be a positive multiple of 10");
    }
    if (inter_penalty <= 0.0) throw std::invalid_argument("inter penalty must be positive");

    const int m = qubits_per_chiplet / 10;
    const auto [rows, cols] = most_square_grid(num_chiplets);
    const int vx_count = 2 * m * cols;  // honeycomb vertex columns
    const int vy_count = 2 * rows;      // honeycomb vertex rows

    Backend b;
    b.name = "heavyhex-c" + std::to_string(num_chiplets) + "-q" +
             std::to_string(qubits_per_chiplet) + "-p" + std::to_string(inter_penalty);
    b.grid = {rows, cols};
    b.qubit_spec = PhysicalQubitSpec{};
    b.single_qubit_instrs[GateKind::X] = {kXDuration, kXError};
    b.single_qubit_instrs[GateKind::SX] = {kXDuration, kXError};
    b.single_qubit_instrs[GateKind::Rz] = {0.0, 0.0};
    b.single_qubit_instrs[GateKind::Measure] = {kMeasureDuration, kMeasureError};
    b.single_qubit_instrs[GateKind::Reset] = {kResetDuration, kResetError};
    b.intra_cz = {kCzDuration, kCzError};
    b.intra_swap = {kInterSwapDuration / 4.0, kInterSwapError / 4.0};
    b.inter_swap = {inter_penalty * (kInterSwapDuration / 4.0), kInterSwapError};

    // Enumerate each tile's qubits in (v, u) order; ids are dense per tile.
    std::map<std::pair<int, int>, std::uint32_t> id_at;  // doubled (u, v) -> qubit id
    std::uint32_t next_id = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            Chiplet chip;
            chip.id = r * cols + c;
            chip.grid_pos = {r, c};
            const int u0 = 4 * m * c;
            auto claim = [&](int u, int v) {
                id_at[{u, v}] = next_id;
                chip.qubits.push_back(next_id);
                ++next_id;
            };
            for (int v = 4 * r; v < 4 * r + 4; ++v) {
                for (int u = u0; u < u0 + 4 * m; ++u) {
                    if (v % 2 == 0) {
                        claim(u, v);  // vertex row plus horizontal edge qubits
                    } else if (u % 2 == 0) {
                        int x = u / 2, y = (v - 1) / 2;
                        if ((x + y) % 2 == 0) claim(u, v);  // vertical edge qubit
                    }
                }
            }
            b.chiplets.push_back(std::move(chip));
        }
    }

    auto chiplet_of = [&](std::uint32_t q) { return static_cast<int>(q / (10u * m)); };
    auto add_link = [&](std::uint32_t a, std::uint32_t q) {
        Link link;
        link.a = a;
        link.b = q;
        if (chiplet_of(a) == chiplet_of(q)) {
            link.scope = LinkScope::Intra;
            link.duration_ns = b.intra_cz.duration_ns;
            link.error = b.intra_cz.error;
        } else {
            link.scope = LinkScope::Inter;
            link.duration_ns = b.inter_swap.duration_ns;
            link.error = b.inter_swap.error;
        }
        b.links.push_back(link);
    };

    for (const auto& [coord, id] : id_at) {
        auto [u, v] = coord;
        if (v % 2 == 0 && u % 2 == 1) {  // horizontal edge qubit
            add_link(id_at.at({u - 1, v}), id);
            auto right = id_at.find({u + 1, v});
            if (right != id_at.end()) add_link(id, right->second);
        } else if (v % 2 == 1) {  // vertical edge qubit
            add_link(id_at.at({u, v - 1}), id);
            auto below = id_at.find({u, v + 1});
            if (below != id_at.end()) add_link(id, below->second);
        }
    }
    // Deterministic link order independent of the emission pattern above.
    std::sort(b.links.begin(), b.links.end(), [](const Link& l, const Link& r) {
        return std::minmax(l.a, l.b) < std::minmax(r.a, r.b);
    });

    for (const auto& link : b.links) {
        if (link.scope != LinkScope::Inter) continue;
        b.chiplets[chiplet_of(link.a)].halo.push_back(link.a);
        b.chiplets[chiplet_of(link.b)].halo.push_back(link.b);
    }
    for (auto& chip : b.chiplets) {
        std::sort(chip.halo.begin(), chip.halo.end());
        chip.halo.erase(std::unique(chip.halo.begin(), chip.halo.end()), chip.halo.end());
    }

    b.finalize();
    return b;
}

DistanceMatrix distance_matrix(const Backend& b, DistanceWeighting w) {
    std::size_t n = b.num_qubits();
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
    for (const auto& link : b.links) {
        double weight = link_weight(link, w);
        adj[link.a].push_back({link.b, weight});
        adj[link.b].push_back({link.a, weight});
    }
    DistanceMatrix m = all_pairs(n, adj, w);
    for (double v : m.d) {
        if (v == kInf) throw std::invalid_argument("backend qubit graph is disconnected");
    }
    return m;
}

DistanceMatrix chiplet_distance_matrix(const Backend& b, int chiplet, DistanceWeighting w) {
    const auto& qubits = b.chiplets.at(chiplet).qubits;
    std::size_t n = qubits.size();
    std::map<std::uint32_t, std::uint32_t> local;
    for (std::uint32_t i = 0; i < n; ++i) local[qubits[i]] = i;

    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
    for (const auto& link : b.links) {
        if (link.scope != LinkScope::Intra) continue;
        auto a = local.find(link.a), bb = local.find(link.b);
        if (a == local.end() || bb == local.end()) continue;
        double weight = link_weight(link, w);
        adj[a->second].push_back({bb->second, weight});
        adj[bb->second].push_back({a->second, weight});
    }
    DistanceMatrix m = all_pairs(n, adj, w);
    for (double v : m.d) {
        if (v == kInf) throw std::invalid_argument("chiplet subgraph is disconnected");
    }
    return m;
}

ChipletGraph chiplet_graph(const Backend& b) {
    ChipletGraph g;
    g.num_chiplets = b.chiplets.size();
    g.neighbors.resize(g.num_chiplets);
    for (std::uint32_t i = 0; i < b.links.size(); ++i) {
        const Link& link = b.links[i];
        if (link.scope != LinkScope::Inter) continue;
        int ca = b.chiplet_of(link.a), cb = b.chiplet_of(link.b);
        auto key = std::minmax(ca, cb);
        g.links[{key.first, key.second}].push_back(i);
    }
    for (const auto& [pair, _] : g.links) {
        g.neighbors[pair.first].push_back(pair.second);
        g.neighbors[pair.second].push_back(pair.first);
    }
    for (auto& n : g.neighbors) std::sort(n.begin(), n.end());
    return g;
}

std::string Backend::to_json_string(int indent) const {
    nlohmann::json j;
    j["name"] = name;
    j["grid"] = {grid.first, grid.second};
    j["qubit_spec"] = {{"t1_s", qubit_spec.t1_s},
                       {"t2_s", qubit_spec.t2_s},
                       {"freq_hz", qubit_spec.frequency_hz}};
    nlohmann::json instrs;
    for (const auto& [kind, spec] : single_qubit_instrs) {
        instrs[std::string(to_string(kind))] = {{"duration_ns", spec.duration_ns},
                                                {"error", spec.error}};
    }
    instrs["cz_intra"] = {{"duration_ns", intra_cz.duration_ns}, {"error", intra_cz.error}};
    instrs["swap_intra"] = {{"duration_ns", intra_swap.duration_ns}, {"error", intra_swap.error}};
    instrs["swap_inter"] = {{"duration_ns", inter_swap.duration_ns}, {"error", inter_swap.error}};
    j["instructions"] = std::move(instrs);

    auto& jc = j["chiplets"] = nlohmann::json::array();
    for (const auto& chip : chiplets) {
        jc.push_back({{"id", chip.id},
                      {"qubits", chip.qubits},
                      {"halo", chip.halo},
                      {"grid_pos", {chip.grid_pos.first, chip.grid_pos.second}}});
    }
    auto& jl = j["links"] = nlohmann::json::array();
    for (const auto& link : links) {
        std::vector<std::string> kinds;
        if (link.scope == LinkScope::Intra) kinds = {"cz", "swap"};
        else kinds = {"swap"};
        jl.push_back({{"a", link.a},
                      {"b", link.b},
                      {"scope", link.scope == LinkScope::Intra ? "intra" : "inter"},
                      {"kinds", kinds},
                      {"duration_ns", link.duration_ns},
                      {"error", link.error}});
    }
    return indent >= 0 ? j.dump(indent) : j.dump();
}

Backend Backend::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Backend b;
    b.name = j.value("name", "backend");
    b.grid = {j.at("grid")[0].get<int>(), j.at("grid")[1].get<int>()};
    const auto& spec = j.at("qubit_spec");
    b.qubit_spec = {spec.at("t1_s").get<double>(), spec.at("t2_s").get<double>(),
                    spec.at("freq_hz").get<double>()};
    const auto& instrs = j.at("instructions");
    auto read_spec = [&](const std::string& key) -> InstructionSpec {
        const auto& s = instrs.at(key);
        return {s.at("duration_ns").get<double>(), s.at("error").get<double>()};
    };
    for (auto kind : {GateKind::X, GateKind::SX, GateKind::Rz, GateKind::Measure, GateKind::Reset}) {
        b.single_qubit_instrs[kind] = read_spec(std::string(to_string(kind)));
    }
    b.intra_cz = read_spec("cz_intra");
    b.intra_swap = read_spec("swap_intra");
    b.inter_swap = read_spec("swap_inter");
    for (const auto& jc : j.at("chiplets")) {
        Chiplet chip;
        chip.id = jc.at("id").get<int>();
        chip.qubits = jc.at("qubits").get<std::vector<std::uint32_t>>();
        chip.halo = jc.at("halo").get<std::vector<std::uint32_t>>();
        chip.grid_pos = {jc.at("grid_pos")[0].get<int>(), jc.at("grid_pos")[1].get<int>()};
        b.chiplets.push_back(std::move(chip));
    }
    for (const auto& jl : j.at("links")) {
        Link link;
        link.a = jl.at("a").get<std::uint32_t>();
        link.b = jl.at("b").get<std::uint32_t>();
        link.scope = jl.at("scope").get<std::string>() == "intra" ? LinkScope::Intra
                                                                  : LinkScope::Inter;
        link.duration_ns = jl.at("duration_ns").get<double>();
        link.error = jl.at("error").get<double>();
        b.links.push_back(link);
    }
    b.finalize();
    return b;
}

}  // namespace seqc
