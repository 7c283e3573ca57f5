#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cubeturan {

/// Limits for a single exhaustive search.
struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;

    /// Throws DomainError unless both limits are positive.
    void validate() const;

    static SearchBudget nodes(std::uint64_t max_nodes) { return {max_nodes, 600.0}; }
};

enum class SearchStatus { found, exhausted_none, inconclusive };

std::string_view to_string(SearchStatus status);

template <typename T>
struct SearchOutcome {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<T> witness;
    std::uint64_t nodes_explored = 0;

    bool found() const { return status == SearchStatus::found; }
};

/// Counts search nodes against a budget. The clock is sampled every 1024 nodes.
class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& budget);

    /// Charges one node; returns false once the budget is spent. Sticky.
    bool charge() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > budget_.max_nodes) {
            exhausted_ = true;
            return false;
        }
        if ((nodes_ & 1023U) == 0 && over_time()) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool over_time() const;

    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace cubeturan
