#include "purerank/classification.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "purerank/errors.hpp"

namespace purerank {

std::string ClassRef::name() const {
    switch (kind) {
    case Label::Dangling:
        return "D";
    case Label::Transient:
        return "T";
    case Label::Recurrent:
        return "R_" + std::to_string(index + 1);
    }
    return "?";
}

std::span<const NodeId> Classification::members(ClassRef c) const {
    switch (c.kind) {
    case Label::Dangling:
        return dangling_;
    case Label::Transient:
        return transient_;
    case Label::Recurrent:
        if (c.index < 0 || c.index >= recurrent_class_count())
            throw ValidationError("unknown recurrent class " + c.name());
        return recurrent_[c.index];
    }
    throw ValidationError("unknown class kind");
}

std::vector<ClassRef> Classification::nonempty_classes() const {
    std::vector<ClassRef> out;
    for (int k = 0; k < recurrent_class_count(); ++k)
        out.push_back(ClassRef::recurrent(k));
    if (!transient_.empty())
        out.push_back(ClassRef::transient());
    if (!dangling_.empty())
        out.push_back(ClassRef::dangling());
    return out;
}

std::vector<std::vector<NodeId>> scc_decompose(const Graph& g, std::span<const NodeId> subset) {
    const std::size_t n = g.node_count();
    constexpr int kUnvisited = -1;
    std::vector<int> dfs_number(n, kUnvisited);
    std::vector<int> low_link(n, 0);
    std::vector<bool> in_subset(n, false);
    std::vector<bool> on_stack(n, false);
    for (NodeId v : subset)
        in_subset[v] = true;

    std::vector<NodeId> scc_stack;
    std::vector<std::vector<NodeId>> sccs;
    int next_number = 0;

    // Iterative Tarjan; frames keep a cursor into the node's out-edges so no
    // recursion depth limits apply on deep chains.
    struct Frame {
        NodeId node;
        std::size_t edge_cursor;
    };
    std::vector<Frame> frames;

    for (NodeId root : subset) {
        if (dfs_number[root] != kUnvisited)
            continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            NodeId v = f.node;
            if (f.edge_cursor == 0) {
                dfs_number[v] = low_link[v] = next_number++;
                scc_stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            auto targets = g.out_targets(v);
            while (f.edge_cursor < targets.size()) {
                NodeId w = targets[f.edge_cursor++];
                if (!in_subset[w])
                    continue;
                if (dfs_number[w] == kUnvisited) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w])
                    low_link[v] = std::min(low_link[v], dfs_number[w]);
            }
            if (descended)
                continue;
            if (low_link[v] == dfs_number[v]) {
                std::vector<NodeId> scc;
                NodeId w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = false;
                    scc.push_back(w);
                } while (w != v);
                sccs.push_back(std::move(scc));
            }
            frames.pop_back();
            if (!frames.empty()) {
                NodeId parent = frames.back().node;
                low_link[parent] = std::min(low_link[parent], low_link[v]);
            }
        }
    }
    return sccs;
}

Classification classify(const Graph& g) {
    const std::size_t n = g.node_count();
    Classification c;
    c.label_.assign(n, Label::Transient);
    c.recurrent_index_.assign(n, -1);
    c.local_index_.assign(n, 0);
    c.scc_id_.assign(n, -1);

    // Step 1: dangling nodes.
    std::vector<NodeId> non_dangling;
    non_dangling.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        if (g.dangling(i)) {
            c.label_[i] = Label::Dangling;
            c.dangling_.push_back(i);
        } else {
            non_dangling.push_back(i);
        }
    }

    // Step 2: SCC decomposition of the non-dangling subgraph.
    auto sccs = scc_decompose(g, non_dangling);
    std::vector<int> scc_of(n, -1);
    for (std::size_t s = 0; s < sccs.size(); ++s)
        for (NodeId v : sccs[s]) {
            scc_of[v] = static_cast<int>(s);
            c.scc_id_[v] = static_cast<int>(s);
        }

    // Step 3: a closed SCC (no edge to any node outside itself, dangling
    // targets included) becomes a recurrent class; the rest is Class T.
    std::vector<std::size_t> closed;
    for (std::size_t s = 0; s < sccs.size(); ++s) {
        bool is_closed = true;
        for (NodeId v : sccs[s]) {
            for (NodeId t : g.out_targets(v)) {
                if (scc_of[t] != static_cast<int>(s)) {
                    is_closed = false;
                    break;
                }
            }
            if (!is_closed)
                break;
        }
        if (is_closed)
            closed.push_back(s);
        else
            for (NodeId v : sccs[s])
                c.transient_.push_back(v);
    }

    // Recurrent classes numbered by ascending minimum dense node id.
    std::vector<std::pair<NodeId, std::size_t>> order;
    order.reserve(closed.size());
    for (std::size_t s : closed)
        order.emplace_back(*std::min_element(sccs[s].begin(), sccs[s].end()), s);
    std::sort(order.begin(), order.end());
    c.recurrent_.reserve(order.size());
    for (auto [min_id, s] : order) {
        auto& members = sccs[s];
        std::sort(members.begin(), members.end());
        int k = static_cast<int>(c.recurrent_.size());
        for (NodeId v : members) {
            c.label_[v] = Label::Recurrent;
            c.recurrent_index_[v] = k;
        }
        c.recurrent_.push_back(std::move(members));
    }
    std::sort(c.transient_.begin(), c.transient_.end());

    auto assign_local = [&](std::span<const NodeId> members) {
        for (std::size_t i = 0; i < members.size(); ++i)
            c.local_index_[members[i]] = i;
    };
    assign_local(c.dangling_);
    assign_local(c.transient_);
    for (const auto& r : c.recurrent_)
        assign_local(r);
    return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t class_fingerprint(const Graph& g, const Classification& c, ClassRef cls) {
    auto members = c.members(cls);
    if (members.empty())
        throw ValidationError("class " + cls.name() + " is empty");
    // Commutative sums make the digest independent of iteration order.
    std::uint64_t member_hash = 0;
    std::uint64_t edge_hash = 0;
    for (NodeId v : members) {
        member_hash += splitmix64(v + 1);
        auto targets = g.out_targets(v);
        auto weights = g.out_weights(v);
        for (std::size_t e = 0; e < targets.size(); ++e) {
            std::uint64_t h = splitmix64(v + 1);
            h = splitmix64(h ^ (static_cast<std::uint64_t>(targets[e]) + 1));
            h = splitmix64(h ^ std::bit_cast<std::uint64_t>(weights[e]));
            edge_hash += h;
        }
    }
    std::uint64_t digest = splitmix64(member_hash ^ std::rotl(edge_hash, 32));
    return splitmix64(digest ^ (static_cast<std::uint64_t>(members.size()) << 32));
}

ClassificationSummary summarize(const Graph& g, const Classification& c) {
    ClassificationSummary s;
    s.total_links = g.edge_count();
    s.total_nodes = g.node_count();
    s.nodes_dangling = c.dangling_members().size();
    s.nodes_transient = c.transient_members().size();
    for (int k = 0; k < c.recurrent_class_count(); ++k) {
        std::size_t size = c.recurrent_members(k).size();
        s.nodes_recurrent += size;
        s.recurrent_size_histogram[size] += 1;
    }
    return s;
}

} // namespace purerank
