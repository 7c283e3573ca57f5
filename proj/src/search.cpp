#include "cubeturan/search.hpp"

#include "cubeturan/errors.hpp"

namespace cubeturan {

void SearchBudget::validate() const {
    if (max_nodes == 0 || !(max_seconds > 0.0)) throw DomainError("search budget must be positive");
}

std::string_view to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::found:
            return "found";
        case SearchStatus::exhausted_none:
            return "exhausted_none";
        case SearchStatus::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

BudgetTracker::BudgetTracker(const SearchBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {
    budget_.validate();
}

bool BudgetTracker::over_time() const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > budget_.max_seconds;
}

}  // namespace cubeturan
