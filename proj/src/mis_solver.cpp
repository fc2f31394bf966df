#include "detail/bitgraph.hpp"

#include <limits>

#include "strongmatch/errors.hpp"

namespace strongmatch::detail {

namespace {

// Branch and bound over one connected component. Branching vertex is always
// the smallest undecided id and the include branch is explored first, so the
// DFS visits candidate sets in ascending lexicographic order of their sorted
// member sequences; the incumbent is replaced only on a strict improvement,
// which makes the returned witness the lexicographically smallest optimum.
struct Search {
    const BitGraph& bg;
    const double* weights;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;

    int best_size = -1;
    double best_weight = std::numeric_limits<double>::infinity();
    std::vector<int> best_members;
    std::vector<int> current;
    double current_weight = 0.0;

    // Greedy clique partition of the candidate set; the part count bounds
    // the independence number from above.
    int clique_cover_bound(const BitRow& cand) const {
        BitRow rest = cand;
        int cliques = 0;
        while (true) {
            int v = rest.lowest();
            if (v < 0) break;
            ++cliques;
            rest.clear(v);
            BitRow common = rest;
            common.and_with(bg.adj(v));
            while (true) {
                int u = common.lowest();
                if (u < 0) break;
                rest.clear(u);
                common.clear(u);
                common.and_with(bg.adj(u));
            }
        }
        return cliques;
    }

    void dfs(const BitRow& cand) {
        if (++nodes > max_nodes) fail(errc::budget_exceeded, "search node budget exhausted");

        int v = cand.lowest();
        if (v < 0) {
            int size = static_cast<int>(current.size());
            if (size > best_size ||
                (size == best_size && weights && current_weight < best_weight)) {
                best_size = size;
                best_weight = current_weight;
                best_members = current;
            }
            return;
        }

        int potential = static_cast<int>(current.size()) + clique_cover_bound(cand);
        if (potential < best_size) return;
        if (potential == best_size && (!weights || current_weight >= best_weight)) return;

        // include v
        current.push_back(v);
        if (weights) current_weight += weights[v];
        BitRow next = cand;
        next.clear(v);
        next.and_not_with(bg.adj(v));
        dfs(next);
        if (weights) current_weight -= weights[v];
        current.pop_back();

        // exclude v
        BitRow without = cand;
        without.clear(v);
        dfs(without);
    }
};

} // namespace

MisResult max_independent_set(const BitGraph& bg, const double* weights,
                              std::uint64_t max_nodes) {
    // Solve per connected component; sizes and weights add, and the
    // smallest-first branching order keeps the combined witness
    // lexicographically minimal (the first differing id between two
    // same-size sets always lies inside a single component).
    std::vector<int> comp(static_cast<std::size_t>(bg.n), -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < bg.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = ncomp;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bg.adj(u).for_each([&](int v) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = ncomp;
                    stack.push_back(v);
                }
            });
        }
        ++ncomp;
    }

    std::uint64_t nodes_used = 0;
    MisResult out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> members;
        for (int v = 0; v < bg.n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);

        BitGraph sub(static_cast<int>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (bg.adj(members[i]).test(members[j]))
                    sub.add_edge(static_cast<int>(i), static_cast<int>(j));

        std::vector<double> wsub;
        if (weights) {
            wsub.reserve(members.size());
            for (int v : members) wsub.push_back(weights[v]);
        }

        Search search{sub, weights ? wsub.data() : nullptr, max_nodes - nodes_used};
        BitRow all(sub.n);
        for (int v = 0; v < sub.n; ++v) all.set(v);
        search.dfs(all);
        nodes_used += search.nodes;

        out.size += search.best_size;
        out.weight += search.best_weight;
        for (int v : search.best_members) out.members.push_back(members[static_cast<std::size_t>(v)]);
    }
    std::sort(out.members.begin(), out.members.end());
    if (!weights) out.weight = 0.0;
    return out;
}

} // namespace strongmatch::detail
