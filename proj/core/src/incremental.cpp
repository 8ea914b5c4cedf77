#include "purerank/incremental.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "purerank/errors.hpp"
#include "src/parallel.hpp"

namespace purerank {

namespace {

// Edge map in label space with deterministic ordering for rebuilds.
struct EdgeTable {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, double> weights;

    std::size_t intern(const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, labels.size());
        if (inserted)
            labels.push_back(label);
        return it->second;
    }
};

EdgeTable table_of(const Graph& g) {
    EdgeTable t;
    t.labels = g.labels();
    for (std::size_t i = 0; i < t.labels.size(); ++i)
        t.index.emplace(t.labels[i], i);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto targets = g.out_targets(u);
        auto weights = g.out_weights(u);
        for (std::size_t e = 0; e < targets.size(); ++e)
            t.weights[{u, targets[e]}] = weights[e];
    }
    return t;
}

} // namespace

Graph apply_delta(const Graph& g, const GraphDelta& delta) {
    EdgeTable t = table_of(g);
    for (const auto& op : delta.ops) {
        if (op.weight) {
            if (!std::isfinite(*op.weight) || *op.weight <= 0.0)
                throw ValidationError("delta weight must be finite and > 0");
            std::size_t u = t.intern(op.src);
            std::size_t v = t.intern(op.dst);
            t.weights[{u, v}] = *op.weight;
        } else {
            auto u = t.index.find(op.src);
            auto v = t.index.find(op.dst);
            if (u == t.index.end() || v == t.index.end() ||
                t.weights.erase({u->second, v->second}) == 0)
                throw ValidationError("delta removes nonexistent edge " + op.src + " -> " +
                                      op.dst);
        }
    }
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    edges.reserve(t.weights.size());
    for (const auto& [key, w] : t.weights)
        edges.emplace_back(static_cast<NodeId>(key.first), static_cast<NodeId>(key.second), w);
    return Graph::from_dense_edges(t.labels.size(), std::move(edges), std::move(t.labels));
}

GraphDelta inverse_delta(const Graph& g, const GraphDelta& delta) {
    // Track weights as the delta replays so later ops see earlier effects.
    EdgeTable t = table_of(g);
    GraphDelta inverse;
    for (const auto& op : delta.ops) {
        std::size_t u = t.intern(op.src);
        std::size_t v = t.intern(op.dst);
        auto it = t.weights.find({u, v});
        GraphDelta::Op undo{op.src, op.dst,
                            it == t.weights.end() ? std::nullopt
                                                  : std::optional<double>(it->second)};
        if (op.weight)
            t.weights[{u, v}] = *op.weight;
        else if (it != t.weights.end())
            t.weights.erase(it);
        inverse.ops.push_back(std::move(undo));
    }
    std::reverse(inverse.ops.begin(), inverse.ops.end());
    return inverse;
}

SolverCache make_cache(const Graph& g, const PureRankResult& result) {
    SolverCache cache;
    const Classification& c = result.classification;
    auto push = [&](const LocalVector& vec, std::optional<double> theta) {
        SolverCache::Entry e;
        e.fingerprint = class_fingerprint(g, c, vec.class_ref);
        e.vec = vec;
        e.vec.reused = false;
        e.theta = theta;
        cache.entries.push_back(std::move(e));
    };
    if (result.locals.dangling)
        push(*result.locals.dangling, std::nullopt);
    for (const auto& vec : result.locals.recurrent)
        push(vec, std::nullopt);
    if (result.locals.transient)
        push(*result.locals.transient, result.locals.theta_T);
    return cache;
}

PureRankResult compute_incremental(const Graph& g_new, const GraphDelta& delta,
                                   const SolverCache& cache, unsigned workers) {
    // Necessary consistency check: the end state of every delta op must be
    // visible in g_new. Reuse correctness itself rests on fingerprints.
    for (const auto& op : delta.ops) {
        auto u = g_new.find(op.src);
        auto v = g_new.find(op.dst);
        double found = 0.0;
        if (u && v) {
            auto targets = g_new.out_targets(*u);
            auto weights = g_new.out_weights(*u);
            for (std::size_t e = 0; e < targets.size(); ++e)
                if (targets[e] == *v)
                    found = weights[e];
        }
        if (op.weight ? found != *op.weight : found != 0.0)
            throw ValidationError("delta does not reconcile with graph at edge " + op.src +
                                  " -> " + op.dst);
    }

    const SolverOptions& opts = cache.options;
    opts.validate();
    const bool usable = cache.version == SolverCache::kVersion;
    std::unordered_map<std::uint64_t, const SolverCache::Entry*> by_fingerprint;
    if (usable)
        for (const auto& e : cache.entries)
            by_fingerprint.emplace(e.fingerprint, &e);

    Classification c = classify(g_new);
    LocalSolveSet locals;
    locals.recurrent.resize(c.recurrent_class_count());

    auto lookup = [&](ClassRef cls) -> const SolverCache::Entry* {
        if (!usable)
            return nullptr;
        auto it = by_fingerprint.find(class_fingerprint(g_new, c, cls));
        if (it == by_fingerprint.end())
            return nullptr;
        if (it->second->vec.values.size() != c.class_size(cls))
            return nullptr;
        return it->second;
    };

    if (!c.dangling_members().empty()) {
        if (const auto* hit = lookup(ClassRef::dangling())) {
            locals.dangling = hit->vec;
            locals.dangling->class_ref = ClassRef::dangling();
            locals.dangling->reused = true;
        } else {
            locals.dangling = lambda_dangling(c);
        }
    }

    std::vector<std::size_t> to_solve;
    for (int k = 0; k < c.recurrent_class_count(); ++k) {
        if (const auto* hit = lookup(ClassRef::recurrent(k))) {
            locals.recurrent[k] = hit->vec;
            locals.recurrent[k].class_ref = ClassRef::recurrent(k);
            locals.recurrent[k].reused = true;
        } else {
            to_solve.push_back(static_cast<std::size_t>(k));
        }
    }
    bool solve_transient = false;
    if (!c.transient_members().empty()) {
        if (const auto* hit = lookup(ClassRef::transient()); hit && hit->theta) {
            locals.transient = hit->vec;
            locals.transient->reused = true;
            locals.theta_T = hit->theta;
        } else {
            solve_transient = true;
            to_solve.push_back(static_cast<std::size_t>(c.recurrent_class_count()));
        }
    }

    detail::parallel_tasks(to_solve.size(), workers, [&](std::size_t i) {
        std::size_t task = to_solve[i];
        if (solve_transient && task == static_cast<std::size_t>(c.recurrent_class_count())) {
            auto t = lambda_transient(g_new, c, opts);
            locals.transient = std::move(t->vec);
            locals.theta_T = t->theta;
        } else {
            locals.recurrent[task] = lambda_recurrent(g_new, c, static_cast<int>(task), opts);
        }
    });

    return assemble(g_new, std::move(c), std::move(locals));
}

namespace {

nlohmann::json vector_to_json(const LocalVector& v) {
    nlohmann::json j;
    j["class"] = v.class_ref.name();
    j["values"] = v.values;
    j["beta_star"] = v.beta_star;
    j["delta"] = v.delta;
    j["iterations"] = v.iterations;
    j["residual"] = v.residual;
    return j;
}

LocalVector vector_from_json(const nlohmann::json& j) {
    LocalVector v;
    std::string name = j.at("class").get<std::string>();
    if (name == "D")
        v.class_ref = ClassRef::dangling();
    else if (name == "T")
        v.class_ref = ClassRef::transient();
    else if (name.starts_with("R_"))
        v.class_ref = ClassRef::recurrent(std::stoi(name.substr(2)) - 1);
    else
        throw ParseError("unknown class name in cache: " + name);
    v.values = j.at("values").get<std::vector<double>>();
    v.beta_star = j.at("beta_star").get<double>();
    v.delta = j.at("delta").get<double>();
    v.iterations = j.at("iterations").get<std::size_t>();
    v.residual = j.at("residual").get<double>();
    return v;
}

} // namespace

std::string cache_to_json(const SolverCache& cache) {
    nlohmann::json j;
    j["version"] = cache.version;
    j["options"] = {{"tolerance", cache.options.tolerance},
                    {"max_iterations", cache.options.max_iterations},
                    {"lazy_factor", cache.options.lazy_factor}};
    auto& entries = j["entries"] = nlohmann::json::array();
    for (const auto& e : cache.entries) {
        nlohmann::json je;
        je["fingerprint"] = e.fingerprint;
        je["local"] = vector_to_json(e.vec);
        if (e.theta)
            je["theta"] = *e.theta;
        entries.push_back(std::move(je));
    }
    return j.dump();
}

SolverCache cache_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cache blob is not valid JSON: ") + e.what());
    }
    try {
        SolverCache cache;
        cache.version = j.at("version").get<std::uint32_t>();
        const auto& opts = j.at("options");
        cache.options.tolerance = opts.at("tolerance").get<double>();
        cache.options.max_iterations = opts.at("max_iterations").get<std::size_t>();
        cache.options.lazy_factor = opts.at("lazy_factor").get<double>();
        for (const auto& je : j.at("entries")) {
            SolverCache::Entry e;
            e.fingerprint = je.at("fingerprint").get<std::uint64_t>();
            e.vec = vector_from_json(je.at("local"));
            if (je.contains("theta"))
                e.theta = je.at("theta").get<double>();
            cache.entries.push_back(std::move(e));
        }
        return cache;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cache blob: ") + e.what());
    }
}

} // namespace purerank
