#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcl/errors.hpp"
#include "kcl/io.hpp"
#include "kcl/kc_code.hpp"

namespace kcl {

// Directed prerequisite graph over KC codes: an edge a -> b means skill a is
// a prerequisite of (learned before) skill b. Validated acyclic on
// construction and immutable afterwards, so concurrent read-only queries are
// safe. Directed adjacency answers subsequent-relation queries; the
// undirected view feeds the structural-similarity random walks.
class CoherenceGraph {
public:
    CoherenceGraph() = default;

    // Builds from (prerequisite, successor) code-string pairs. Codes are
    // canonicalized, duplicate edges dropped, cycles (including self-loops)
    // rejected with one offending cycle in the message.
    static CoherenceGraph from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
        CoherenceGraph g;
        for (size_t i = 0; i < edges.size(); ++i) {
            std::string a, b;
            try {
                a = canonical_kc_code(edges[i].first);
                b = canonical_kc_code(edges[i].second);
            } catch (const MalformedCode& e) {
                throw MalformedCode("edge " + std::to_string(i + 1) + ": " + e.what());
            }
            const int ia = g.intern(a);
            const int ib = g.intern(b);
            g.add_edge_dedup(ia, ib);
        }
        g.finalize();
        return g;
    }

    // Loads a CSV edge list (header "prerequisite,successor") or a JSON array
    // of 2-element arrays, dispatched on file extension (.json / anything else).
    static CoherenceGraph load(const std::string& path) {
        const std::string ext = std::filesystem::path(path).extension().string();
        std::vector<std::pair<std::string, std::string>> edges;
        if (ext == ".json") {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(read_file(path));
            } catch (const nlohmann::json::exception& e) {
                throw IoError("bad JSON edge list " + path + ": " + e.what());
            }
            if (!doc.is_array()) throw IoError("JSON edge list must be an array: " + path);
            for (const auto& row : doc) {
                if (!row.is_array() || row.size() != 2 || !row[0].is_string() || !row[1].is_string()) {
                    throw IoError("JSON edge rows must be [prerequisite, successor] string pairs: " + path);
                }
                edges.emplace_back(row[0].get<std::string>(), row[1].get<std::string>());
            }
        } else {
            const auto rows = parse_csv(read_file(path));
            if (rows.empty()) return CoherenceGraph();
            size_t start = 0;
            if (rows[0].size() >= 2 && trim(rows[0][0]) == "prerequisite" && trim(rows[0][1]) == "successor") {
                start = 1;
            }
            for (size_t r = start; r < rows.size(); ++r) {
                if (rows[r].size() < 2) {
                    throw MalformedCode("edge list row " + std::to_string(r + 1) + " needs two columns in " + path);
                }
                edges.emplace_back(rows[r][0], rows[r][1]);
            }
        }
        return from_edges(edges);
    }

    size_t node_count() const { return codes_.size(); }
    size_t edge_count() const { return edge_total_; }

    bool has_node(std::string_view code) const { return index_of(code) >= 0; }

    int index_of(std::string_view code) const {
        const auto it = index_.find(std::string(code));
        return it == index_.end() ? -1 : it->second;
    }

    const std::string& code_at(int idx) const { return codes_[static_cast<size_t>(idx)]; }

    // Node codes in first-seen order.
    const std::vector<std::string>& nodes() const { return codes_; }

    const std::vector<int>& successors(int idx) const { return out_[static_cast<size_t>(idx)]; }
    const std::vector<int>& predecessors(int idx) const { return in_[static_cast<size_t>(idx)]; }

    // Sorted unique neighbor list on the undirected view.
    const std::vector<int>& undirected_neighbors(int idx) const {
        return undirected_[static_cast<size_t>(idx)];
    }

    bool undirected_adjacent(int a, int b) const {
        const auto& n = undirected_[static_cast<size_t>(a)];
        return std::binary_search(n.begin(), n.end(), b);
    }

private:
    int intern(const std::string& code) {
        const auto it = index_.find(code);
        if (it != index_.end()) return it->second;
        const int idx = static_cast<int>(codes_.size());
        index_.emplace(code, idx);
        codes_.push_back(code);
        out_.emplace_back();
        in_.emplace_back();
        undirected_.emplace_back();
        return idx;
    }

    void add_edge_dedup(int a, int b) {
        auto& succ = out_[static_cast<size_t>(a)];
        if (std::find(succ.begin(), succ.end(), b) != succ.end()) return;
        succ.push_back(b);
        in_[static_cast<size_t>(b)].push_back(a);
        ++edge_total_;
    }

    void finalize() {
        check_acyclic();
        for (size_t i = 0; i < codes_.size(); ++i) {
            auto n = out_[i];
            n.insert(n.end(), in_[i].begin(), in_[i].end());
            std::sort(n.begin(), n.end());
            n.erase(std::unique(n.begin(), n.end()), n.end());
            undirected_[i] = std::move(n);
        }
    }

    void check_acyclic() const {
        // Kahn's algorithm; leftovers contain a cycle, which we surface by
        // walking successors among the leftover set until a repeat.
        const size_t n = codes_.size();
        std::vector<int> indegree(n, 0);
        for (size_t i = 0; i < n; ++i) {
            for (int s : out_[i]) indegree[static_cast<size_t>(s)]++;
        }
        std::deque<int> ready;
        for (size_t i = 0; i < n; ++i) {
            if (indegree[i] == 0) ready.push_back(static_cast<int>(i));
        }
        size_t removed = 0;
        std::vector<int> degree = indegree;
        while (!ready.empty()) {
            const int v = ready.front();
            ready.pop_front();
            ++removed;
            for (int s : out_[static_cast<size_t>(v)]) {
                if (--degree[static_cast<size_t>(s)] == 0) ready.push_back(s);
            }
        }
        if (removed == n) return;

        int start = -1;
        for (size_t i = 0; i < n; ++i) {
            if (degree[i] > 0) { start = static_cast<int>(i); break; }
        }
        std::vector<int> path;
        std::vector<int> seen_at(n, -1);
        int cur = start;
        while (seen_at[static_cast<size_t>(cur)] < 0) {
            seen_at[static_cast<size_t>(cur)] = static_cast<int>(path.size());
            path.push_back(cur);
            for (int s : out_[static_cast<size_t>(cur)]) {
                if (degree[static_cast<size_t>(s)] > 0) { cur = s; break; }
            }
        }
        std::string msg = "coherence map contains a cycle: ";
        for (size_t i = static_cast<size_t>(seen_at[static_cast<size_t>(cur)]); i < path.size(); ++i) {
            msg += codes_[static_cast<size_t>(path[i])] + " -> ";
        }
        msg += codes_[static_cast<size_t>(cur)];
        throw CycleDetected(msg);
    }

    std::vector<std::string> codes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> undirected_;
    size_t edge_total_ = 0;
};

// True iff `predicted` is reachable from `truth` along one or more directed
// prerequisite -> successor edges, i.e. predicted is a skill learned after
// the ground truth. Codes absent from the graph (and the zero-length path)
// yield false, keeping such predictions eligible for score-based recovery.
inline bool is_subsequent(const CoherenceGraph& g, std::string_view truth, std::string_view predicted) {
    const int src = g.index_of(truth);
    const int dst = g.index_of(predicted);
    if (src < 0 || dst < 0 || src == dst) return false;
    std::vector<char> visited(g.node_count(), 0);
    std::vector<int> stack;
    stack.push_back(src);
    visited[static_cast<size_t>(src)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int s : g.successors(v)) {
            if (s == dst) return true;
            if (!visited[static_cast<size_t>(s)]) {
                visited[static_cast<size_t>(s)] = 1;
                stack.push_back(s);
            }
        }
    }
    return false;
}

// Convenience overload for cases where the caller holds parsed codes.
inline bool is_subsequent(const CoherenceGraph& g, const KcCode& truth, const KcCode& predicted) {
    return is_subsequent(g, format_kc_code(truth), format_kc_code(predicted));
}

} // namespace kcl
