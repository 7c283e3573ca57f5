#include <bit>

#include "cubeturan/constructions.hpp"
#include "cubeturan/errors.hpp"
#include "cubeturan/partite_rep.hpp"
#include "detail.hpp"

namespace cubeturan {

std::uint64_t PoleDistanceReport::total() const {
    std::uint64_t sum = 0;
    for (const auto& [_, count] : distances) sum += count;
    return sum;
}

namespace {

struct ScanTask {
    int k = 0;
    bool root_top = true;
    std::map<int, std::uint64_t> distances;
    std::uint64_t embeddings = 0;
    std::optional<std::vector<VertexSubset>> counterexample;
    bool closed = false;
    std::uint64_t nodes = 0;
};

}  // namespace

PoleDistanceReport pole_distance_scan(int q, int n, const SearchBudget& budget, int threads) {
    if (q < 2) throw DomainError("pole_distance_scan needs q >= 2");
    if (n < 1 || n > kMaxGroundSet) throw ResourceLimitError("pole_distance_scan: n outside [1, 30]");
    budget.validate();
    const MarkedGraph guest = theta(q);
    const Vertex pole_a = guest.marked(roles::kMainPoles)[0];
    const Vertex pole_b = guest.marked(roles::kMainPoles)[1];

    std::vector<ScanTask> tasks;
    for (int k = 1; k <= n; ++k) {
        for (bool top : {true, false}) {
            ScanTask task;
            task.k = k;
            task.root_top = top;
            tasks.push_back(std::move(task));
        }
    }
    detail::parallel_for(tasks.size(), threads, [&](std::size_t i) {
        ScanTask& task = tasks[i];
        BudgetTracker tracker(budget);
        detail::LayerEmbedder embedder(guest.graph, task.k, n, tracker);
        detail::LayerEmbedder::Hooks hooks;
        hooks.complete = [&](const std::vector<std::uint32_t>& image) {
            const int d = std::popcount(image[pole_a] ^ image[pole_b]);
            ++task.distances[d];
            ++task.embeddings;
            if (d != 2 && !task.counterexample) {
                std::vector<VertexSubset> copy;
                for (std::uint32_t b : image) copy.emplace_back(b, n);
                task.counterexample = std::move(copy);
            }
            return true;
        };
        task.closed = embedder.run(task.root_top, hooks);
        task.nodes = tracker.nodes();
    });

    PoleDistanceReport report;
    report.q = q;
    report.n = n;
    bool all_closed = true;
    for (std::size_t i = 0; i < tasks.size(); i += 2) {
        for (std::size_t t = i; t < i + 2; ++t) {
            const ScanTask& task = tasks[t];
            for (const auto& [d, count] : task.distances) report.distances[d] += count;
            report.embeddings_per_layer[task.k] += task.embeddings;
            if (!report.counterexample && task.counterexample) report.counterexample = task.counterexample;
            report.nodes_explored += task.nodes;
        }
        if (tasks[i].closed && tasks[i + 1].closed) {
            ++report.layers_closed;
        } else {
            all_closed = false;
        }
    }
    report.status = !all_closed ? SearchStatus::inconclusive
                    : report.total() > 0 ? SearchStatus::found
                                         : SearchStatus::exhausted_none;
    return report;
}

}  // namespace cubeturan
