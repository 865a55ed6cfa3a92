// Copyright 2026 The Spincast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spincast/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace spincast {

namespace {

constexpr double kPauliBasisTolerance = 1e-12;
constexpr double kBranchNormTolerance = 1e-10;

OmegaState make_omega_x_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return OmegaState{Complex(s, 0.0), Complex(s, 0.0), "X+"};
}

OmegaState make_omega_z_plus() { return OmegaState{Complex(1.0, 0.0), Complex(0.0, 0.0), "Z+"}; }

// ---------------------------------------------------------------------------
// Router
//
// The term-spin incidence graph is bipartite, so a checkerboard placement
// (vertex qubits and outputs on even-parity cells, interaction transit sites
// on odd-parity cells) makes every lattice path between connected nodes pick
// up an even number of interior sites. Projecting those interiors on X
// contracts the path to an exact controlled-phase link, projecting unused
// sites on Z deletes them, and the odd pendant wire on each interaction
// transit site applies the basis change its output needs. The search below
// just has to find vertex-disjoint induced paths realizing the incidence
// graph; everything else is forced.
// ---------------------------------------------------------------------------

struct TannerNode {
    bool interaction = false;
    int id = 0;                   // spin index or interaction index
    std::vector<int> neighbors;   // node indices
    int route_degree = 0;         // lattice degree demand (edges + pendant)
};

struct TannerEdge {
    int u = 0;  // vertex node
    int v = 0;  // interaction node
};

struct Embedding {
    int rows = 0;
    int cols = 0;
    std::vector<int> node_cell;              // node index -> cell
    std::vector<int> pendant_cell;           // node index -> cell (-1 if none)
    std::vector<std::vector<int>> path_cells;  // edge index -> interior cells
};

class GridEmbedder {
  public:
    GridEmbedder(const std::vector<TannerNode>& nodes, const std::vector<TannerEdge>& edges,
                 int rows, int cols, long long budget)
        : nodes_(nodes),
          edges_(edges),
          rows_(rows),
          cols_(cols),
          budget_(budget),
          kept_(static_cast<std::size_t>(rows * cols), 0),
          node_cell_(nodes.size(), -1),
          pendant_cell_(nodes.size(), -1),
          path_cells_(edges.size()),
          edge_done_(edges.size(), 0) {
        build_order();
    }

    bool solve(Embedding* out) {
        if (!place(0)) {
            return false;
        }
        out->rows = rows_;
        out->cols = cols_;
        out->node_cell = node_cell_;
        out->pendant_cell = pendant_cell_;
        out->path_cells = path_cells_;
        return true;
    }

  private:
    int cell(int r, int c) const { return r * cols_ + c; }
    int color(int c) const { return (c / cols_ + c % cols_) & 1; }

    std::vector<int> cell_neighbors(int c) const {
        const int r = c / cols_, k = c % cols_;
        std::vector<int> out;
        if (r > 0) out.push_back(cell(r - 1, k));
        if (k > 0) out.push_back(cell(r, k - 1));
        if (k + 1 < cols_) out.push_back(cell(r, k + 1));
        if (r + 1 < rows_) out.push_back(cell(r + 1, k));
        return out;
    }

    bool adjacent(int a, int b) const {
        const int ra = a / cols_, ca = a % cols_;
        const int rb = b / cols_, cb = b % cols_;
        return std::abs(ra - rb) + std::abs(ca - cb) == 1;
    }

    int manhattan(int a, int b) const {
        return std::abs(a / cols_ - b / cols_) + std::abs(a % cols_ - b % cols_);
    }

    bool spend() { return --budget_ > 0; }

    // Visit high-demand nodes first, preferring nodes with already-ordered
    // neighbors so routing stays local.
    void build_order() {
        std::vector<char> chosen(nodes_.size(), 0);
        for (std::size_t step = 0; step < nodes_.size(); ++step) {
            int best = -1;
            int best_placed = -1, best_degree = -1;
            for (std::size_t n = 0; n < nodes_.size(); ++n) {
                if (chosen[n]) continue;
                int placed = 0;
                for (int nb : nodes_[n].neighbors) {
                    if (chosen[nb]) ++placed;
                }
                const int degree = nodes_[n].route_degree;
                if (placed > best_placed || (placed == best_placed && degree > best_degree)) {
                    best = static_cast<int>(n);
                    best_placed = placed;
                    best_degree = degree;
                }
            }
            chosen[best] = 1;
            order_.push_back(best);
        }
    }

    std::vector<int> placement_candidates(int node) const {
        std::vector<int> anchors;
        for (int nb : nodes_[node].neighbors) {
            if (node_cell_[nb] >= 0) anchors.push_back(node_cell_[nb]);
        }
        const int want = nodes_[node].interaction ? 1 : 0;
        std::vector<std::pair<int, int>> scored;
        for (int c = 0; c < rows_ * cols_; ++c) {
            if (kept_[c] || color(c) != want) continue;
            int score = 0;
            for (int a : anchors) score += manhattan(c, a);
            scored.emplace_back(score, c);
        }
        std::sort(scored.begin(), scored.end());
        std::vector<int> out;
        out.reserve(scored.size());
        for (const auto& [score, c] : scored) out.push_back(c);
        return out;
    }

    bool place(std::size_t k) {
        if (k == order_.size()) {
            return check_induced();
        }
        const int node = order_[k];
        for (int c : placement_candidates(node)) {
            if (!spend()) return false;

            // Every kept lattice-neighbor of the candidate must be a placed
            // Tanner-neighbor whose edge then routes directly.
            std::vector<int> direct;
            bool ok = true;
            for (int nb : cell_neighbors(c)) {
                if (!kept_[nb]) continue;
                int matched = -1;
                for (std::size_t e = 0; e < edges_.size(); ++e) {
                    if (edge_done_[e]) continue;
                    const int other = edges_[e].u == node   ? edges_[e].v
                                      : edges_[e].v == node ? edges_[e].u
                                                            : -1;
                    if (other >= 0 && node_cell_[other] == nb) {
                        matched = static_cast<int>(e);
                        break;
                    }
                }
                if (matched < 0) {
                    ok = false;
                    break;
                }
                direct.push_back(matched);
            }
            if (!ok) continue;

            node_cell_[node] = c;
            kept_[c] = 1;
            for (int e : direct) edge_done_[e] = 1;

            std::vector<int> pending;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (edge_done_[e]) continue;
                const int other = edges_[e].u == node   ? edges_[e].v
                                  : edges_[e].v == node ? edges_[e].u
                                                        : -1;
                if (other >= 0 && node_cell_[other] >= 0) {
                    pending.push_back(static_cast<int>(e));
                }
            }
            if (route(k, node, pending, 0)) {
                return true;
            }

            for (int e : direct) edge_done_[e] = 0;
            kept_[c] = 0;
            node_cell_[node] = -1;
        }
        return false;
    }

    bool route(std::size_t k, int node, const std::vector<int>& pending, std::size_t idx) {
        if (idx == pending.size()) {
            return pendant_then_next(k, node);
        }
        const int e = pending[idx];
        const int other = edges_[e].u == node ? edges_[e].v : edges_[e].u;
        const int from = node_cell_[node];
        const int target = node_cell_[other];
        // Interior counts are even by the checkerboard parity; sweep short
        // paths first.
        for (int interiors = 2; interiors <= kMaxInteriors; interiors += 2) {
            if (interiors + 1 < manhattan(from, target)) continue;
            std::vector<int> path;
            if (dfs_path(from, target, interiors, path)) {
                edge_done_[e] = 1;
                path_cells_[e] = path;
                for (int c : path) kept_[c] = 1;
                if (route(k, node, pending, idx + 1)) {
                    return true;
                }
                for (int c : path) kept_[c] = 0;
                path_cells_[e].clear();
                edge_done_[e] = 0;
                // fall through: retry with a longer path
            }
            if (budget_ <= 0) return false;
        }
        return false;
    }

    // Depth-first search for an induced path with exactly `remaining` more
    // interior cells. Interiors may touch no kept cell except their
    // predecessor, and may touch the target only as the final interior.
    bool dfs_path(int from, int target, int remaining, std::vector<int>& path) {
        if (!spend()) return false;
        const int cur = path.empty() ? from : path.back();
        for (int next : cell_neighbors(cur)) {
            if (kept_[next]) continue;
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            bool ok = true;
            bool touches_target = false;
            for (int nb : cell_neighbors(next)) {
                if (nb == cur) continue;
                if (nb == target) {
                    touches_target = true;
                    if (remaining != 1) ok = false;
                    continue;
                }
                if (kept_[nb] || std::find(path.begin(), path.end(), nb) != path.end()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (remaining == 1 && !touches_target) continue;
            path.push_back(next);
            if (remaining == 1) return true;
            if (dfs_path(from, target, remaining - 1, path)) return true;
            path.pop_back();
            if (budget_ <= 0) return false;
        }
        return false;
    }

    bool pendant_then_next(std::size_t k, int node) {
        if (!nodes_[node].interaction) {
            return place(k + 1);
        }
        const int c = node_cell_[node];
        for (int p : cell_neighbors(c)) {
            if (kept_[p]) continue;
            bool ok = true;
            for (int nb : cell_neighbors(p)) {
                if (nb != c && kept_[nb]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pendant_cell_[node] = p;
            kept_[p] = 1;
            if (place(k + 1)) return true;
            kept_[p] = 0;
            pendant_cell_[node] = -1;
            if (budget_ <= 0) return false;
        }
        return false;
    }

    // Final sanity pass: the kept cells' adjacency graph must equal exactly
    // the intended edge set. The incremental constraints already enforce
    // this; a routing bug would otherwise surface as a wrong layout.
    bool check_induced() {
        std::set<std::pair<int, int>> intended;
        auto add = [&intended](int a, int b) {
            intended.insert({std::min(a, b), std::max(a, b)});
        };
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const int from = node_cell_[edges_[e].u];
            const int to = node_cell_[edges_[e].v];
            const auto& path = path_cells_[e];
            if (path.empty()) {
                add(from, to);
            } else {
                add(from, path.front());
                for (std::size_t i = 0; i + 1 < path.size(); ++i) add(path[i], path[i + 1]);
                add(path.back(), to);
            }
        }
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            if (pendant_cell_[n] >= 0) add(node_cell_[n], pendant_cell_[n]);
        }
        std::set<std::pair<int, int>> actual;
        for (int c = 0; c < rows_ * cols_; ++c) {
            if (!kept_[c]) continue;
            for (int nb : cell_neighbors(c)) {
                if (nb > c && kept_[nb]) actual.insert({c, nb});
            }
        }
        return intended == actual;
    }

    static constexpr int kMaxInteriors = 8;

    const std::vector<TannerNode>& nodes_;
    const std::vector<TannerEdge>& edges_;
    int rows_, cols_;
    long long budget_;
    std::vector<int> order_;
    std::vector<char> kept_;
    std::vector<int> node_cell_;
    std::vector<int> pendant_cell_;
    std::vector<std::vector<int>> path_cells_;
    std::vector<char> edge_done_;
};

ClusterLayout layout_from_embedding(const CliqueSystem& system, const Embedding& emb,
                                    const std::vector<TannerNode>& nodes,
                                    const std::vector<TannerEdge>& edges, double epsilon) {
    ClusterLayout layout{LatticeGraph(emb.rows, emb.cols),
                         std::vector<Role>(static_cast<std::size_t>(emb.rows * emb.cols), Role::A),
                         {},
                         {},
                         system,
                         epsilon};
    // Default: every site deleted (Z projection).
    for (int c = 0; c < emb.rows * emb.cols; ++c) {
        layout.omega[c] = make_omega_z_plus();
    }
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const int c = emb.node_cell[n];
        if (nodes[n].interaction) {
            // Transit site: one X hop carries the interaction qubit to the
            // pendant output with the required basis change.
            layout.omega[c] = make_omega_x_plus();
            const int p = emb.pendant_cell[n];
            layout.roles[p] = Role::B;
            layout.omega.erase(p);
            layout.target_map[p] = system.interaction_qubit(nodes[n].id);
        } else {
            layout.roles[c] = Role::C;
            layout.omega.erase(c);
            layout.target_map[c] = system.vertex_qubit(nodes[n].id);
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (int c : emb.path_cells[e]) {
            layout.omega[c] = make_omega_x_plus();
        }
    }
    return layout;
}

}  // namespace

bool OmegaState::is_pauli_basis() const {
    const SingleQubitOp paulis[3] = {SingleQubitOp::pauli_x(), SingleQubitOp::pauli_y(),
                                     SingleQubitOp::pauli_z()};
    for (const auto& sigma : paulis) {
        const Complex value = std::conj(a0) * (sigma.at(0, 0) * a0 + sigma.at(0, 1) * a1) +
                              std::conj(a1) * (sigma.at(1, 0) * a0 + sigma.at(1, 1) * a1);
        if (std::abs(std::abs(value) - 1.0) <= kPauliBasisTolerance) {
            return true;
        }
    }
    return false;
}

std::vector<int> ClusterLayout::a_qubits() const {
    std::vector<int> out;
    for (int q = 0; q < lattice.n_sites(); ++q) {
        if (roles[q] == Role::A) out.push_back(q);
    }
    return out;
}

std::vector<int> ClusterLayout::output_qubits() const {
    std::vector<int> out;
    for (int q = 0; q < lattice.n_sites(); ++q) {
        if (roles[q] != Role::A) out.push_back(q);
    }
    return out;
}

std::vector<int> ClusterLayout::c_qubits_in_spin_order() const {
    std::vector<std::pair<int, int>> pairs;  // (clique qubit, lattice qubit)
    for (const auto& [lattice_q, clique_q] : target_map) {
        if (roles[lattice_q] == Role::C) pairs.emplace_back(clique_q, lattice_q);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> out;
    out.reserve(pairs.size());
    for (const auto& [clique_q, lattice_q] : pairs) out.push_back(lattice_q);
    return out;
}

bool ClusterLayout::all_pauli() const {
    for (const auto& [q, w] : omega) {
        if (!w.is_pauli_basis()) return false;
    }
    return true;
}

int ClusterLayout::lattice_qubit_of_clique(int clique_qubit) const {
    for (const auto& [lattice_q, clique_q] : target_map) {
        if (clique_q == clique_qubit) return lattice_q;
    }
    throw InputError("clique qubit " + std::to_string(clique_qubit) + " not in target map");
}

ClusterLayout compile_layout(const CliqueSystem& system, const CompileOptions& options) {
    // Term-spin incidence graph.
    std::vector<TannerNode> nodes;
    for (int spin = 0; spin < system.n_vertex(); ++spin) {
        nodes.push_back(TannerNode{false, spin, {}, 0});
    }
    std::vector<TannerEdge> edges;
    for (int j = 0; j < system.n_interaction(); ++j) {
        const int node = static_cast<int>(nodes.size());
        nodes.push_back(TannerNode{true, j, {}, 0});
        for (int site : system.interaction_sites(j)) {
            nodes[site].neighbors.push_back(node);
            nodes[node].neighbors.push_back(site);
            edges.push_back(TannerEdge{site, node});
        }
    }
    for (auto& n : nodes) {
        n.route_degree = static_cast<int>(n.neighbors.size()) + (n.interaction ? 1 : 0);
        if (n.route_degree > 4 && !n.interaction) {
            throw InputError("no embedding found: spin " + std::to_string(n.id) +
                             " participates in " + std::to_string(n.neighbors.size()) +
                             " interaction terms; the nearest-neighbor router places each "
                             "spin on a single site with at most 4 links");
        }
    }

    int min_cells = static_cast<int>(nodes.size()) + system.n_interaction();
    std::vector<std::pair<int, int>> shapes;
    for (int rows = 1; rows <= options.max_lattice_qubits; ++rows) {
        for (int cols = 1; rows * cols <= options.max_lattice_qubits; ++cols) {
            if (rows * cols >= min_cells) shapes.emplace_back(rows, cols);
        }
    }
    std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
        const int area_a = a.first * a.second, area_b = b.first * b.second;
        if (area_a != area_b) return area_a < area_b;
        return a.first < b.first;
    });

    for (const auto& [rows, cols] : shapes) {
        GridEmbedder embedder(nodes, edges, rows, cols, 2'000'000);
        Embedding emb;
        if (!embedder.solve(&emb)) continue;
        ClusterLayout layout = layout_from_embedding(system, emb, nodes, edges, options.epsilon);
        if (options.verify && layout.lattice.n_sites() <= options.dense_cap) {
            verify_carving(layout, options.dense_cap);
        }
        return layout;
    }
    throw ResourceError("no embedding found within " + std::to_string(options.max_lattice_qubits) +
                        " lattice sites; raise the lattice cap to keep searching");
}

CarvingCertificate evaluate_carving(const ClusterLayout& layout, int dense_cap) {
    CarvingCertificate cert;
    cert.a_size = static_cast<int>(layout.a_qubits().size());
    cert.expected_branch_norm = std::pow(2.0, -0.5 * cert.a_size);
    cert.pauli_pattern = layout.all_pauli();
    if (layout.lattice.n_sites() > dense_cap) {
        return cert;  // unverified
    }

    StateVector projected = cluster_state(layout.lattice, dense_cap);
    for (const auto& [q, w] : layout.omega) {
        projected.apply_local_inplace(q, SingleQubitOp::projector(w.a0, w.a1));
    }
    cert.branch_norm = projected.norm();
    cert.verified = true;

    if (cert.branch_norm <= 0.0) {
        cert.fidelity = 0.0;
        cert.local_corrections.assign(layout.output_qubits().size(), "?");
        return cert;
    }

    const StateVector reference = reference_state(layout, nullptr, dense_cap);
    cert.fidelity = fidelity(projected, reference);

    bool norm_ok = true;
    if (cert.pauli_pattern) {
        norm_ok = std::abs(cert.branch_norm - cert.expected_branch_norm) <= kBranchNormTolerance;
    }
    cert.valid = norm_ok && std::abs(1.0 - cert.fidelity) <= kCarvingTolerance;
    // Fidelity against the correction-free reference is the correction
    // check: any residual output Pauli would show up as lost fidelity.
    cert.local_corrections.assign(layout.output_qubits().size(), cert.valid ? "I" : "?");
    return cert;
}

CarvingCertificate verify_carving(const ClusterLayout& layout, int dense_cap) {
    CarvingCertificate cert = evaluate_carving(layout, dense_cap);
    if (!cert.verified) {
        throw ResourceError("carving verification needs a dense state over " +
                            std::to_string(layout.lattice.n_sites()) +
                            " qubits, above the cap of " + std::to_string(dense_cap));
    }
    if (!cert.valid) {
        throw VerificationError(
            "projection pattern does not reproduce the clique state: fidelity " +
            std::to_string(cert.fidelity) + ", branch norm " + std::to_string(cert.branch_norm) +
            " (expected " + std::to_string(cert.expected_branch_norm) + ")");
    }
    return cert;
}

std::vector<double> branch_norm_census(const ClusterLayout& layout, int census_cap,
                                       int dense_cap) {
    const std::vector<int> a = layout.a_qubits();
    if (static_cast<int>(a.size()) > census_cap) {
        throw ResourceError("branch census over " + std::to_string(a.size()) +
                            " projected qubits exceeds the cap of " + std::to_string(census_cap));
    }
    // Rotating each omega onto |0> turns the census into a computational
    // marginal: branch bit 0 means the omega outcome, 1 the orthogonal one.
    StateVector state = cluster_state(layout.lattice, dense_cap);
    for (int q : a) {
        const OmegaState& w = layout.omega.at(q);
        const auto [p0, p1] = w.perp();
        state.apply_local_inplace(
            q, SingleQubitOp(std::conj(w.a0), std::conj(w.a1), std::conj(p0), std::conj(p1)));
    }
    return basis_marginal(state, a);
}

SingleQubitOp OmegaDeformation::inverse_factor(int lattice_qubit) const {
    return factors.at(lattice_qubit).inverse();
}

OmegaDeformation smooth(const ClusterLayout& layout, double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
        throw InputError("smoothing parameter must lie strictly between 0 and 1/2, got " +
                         std::to_string(epsilon));
    }
    OmegaDeformation deformation;
    deformation.epsilon = epsilon;
    for (const auto& [q, w] : layout.omega) {
        const auto [p0, p1] = w.perp();
        const SingleQubitOp keep = SingleQubitOp::projector(w.a0, w.a1);
        const SingleQubitOp drop = SingleQubitOp::projector(p0, p1);
        Eigen::Matrix2cd m = (1.0 - epsilon) * keep.matrix() + epsilon * drop.matrix();
        deformation.factors.emplace(q, SingleQubitOp(m));
    }
    return deformation;
}

LambdaDeformation lattice_lambda(const ClusterLayout& layout, double beta) {
    LambdaDeformation lambda;
    lambda.beta = beta;
    lambda.couplings.assign(layout.lattice.n_sites(), 0.0);
    for (const auto& [lattice_q, clique_q] : layout.target_map) {
        lambda.couplings[lattice_q] = layout.system.coupling(clique_q);
        if (std::abs(beta * lambda.couplings[lattice_q]) > kOverflowCap) {
            throw ResourceError("|beta * J| exceeds the overflow cap on lattice qubit " +
                                std::to_string(lattice_q));
        }
    }
    return lambda;
}

StateVector build_deformed_cluster(const ClusterLayout& layout, const OmegaDeformation& omega,
                                   const LambdaDeformation& lambda, int dense_cap) {
    StateVector state = cluster_state(layout.lattice, dense_cap);
    for (const auto& [q, factor] : omega.factors) {
        state.apply_local_inplace(q, factor);
    }
    for (int q : layout.output_qubits()) {
        state.apply_local_inplace(q, lambda.factor(q));
    }
    return state.normalized();
}

StateVector carve_project(const ClusterLayout& layout, const LambdaDeformation& lambda,
                          int dense_cap) {
    StateVector state = cluster_state(layout.lattice, dense_cap);
    for (const auto& [q, w] : layout.omega) {
        state.apply_local_inplace(q, SingleQubitOp::projector(w.a0, w.a1));
    }
    for (int q : layout.output_qubits()) {
        state.apply_local_inplace(q, lambda.factor(q));
    }
    return state.normalized();
}

StateVector reference_state(const ClusterLayout& layout, const LambdaDeformation* lambda,
                            int dense_cap) {
    const int n = layout.lattice.n_sites();
    if (n > dense_cap) {
        throw ResourceError("reference state exceeds the dense cap");
    }
    StateVector phi = build_clique_state(layout.system, dense_cap);
    if (lambda != nullptr) {
        for (int q = 0; q < layout.system.n_qubits(); ++q) {
            const int lattice_q = layout.lattice_qubit_of_clique(q);
            phi.apply_local_inplace(
                q, SingleQubitOp::diagonal(std::exp(-0.5 * lambda->beta *
                                                    lambda->couplings.at(lattice_q)),
                                           std::exp(0.5 * lambda->beta *
                                                    lambda->couplings.at(lattice_q))));
        }
        phi = phi.normalized();
    }

    const int n_clique = layout.system.n_qubits();
    StateVector out(n);
    for (std::size_t i = 0; i < out.dimension(); ++i) {
        Complex amp(1.0, 0.0);
        for (const auto& [q, w] : layout.omega) {
            amp *= (i & out.qubit_mask(q)) ? w.a1 : w.a0;
        }
        if (amp == Complex(0.0, 0.0)) continue;
        std::size_t clique_index = 0;
        for (const auto& [lattice_q, clique_q] : layout.target_map) {
            if (i & out.qubit_mask(lattice_q)) {
                clique_index |= std::size_t{1} << (n_clique - 1 - clique_q);
            }
        }
        out.amplitude(i) = amp * phi.amplitude(clique_index);
    }
    return out;
}

std::vector<double> lattice_thermal_readout(const ClusterLayout& layout,
                                            const StateVector& state) {
    return basis_marginal(state, layout.c_qubits_in_spin_order());
}

}  // namespace spincast
