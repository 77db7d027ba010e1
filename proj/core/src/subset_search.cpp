#include "sigmakit/subset_search.hpp"

#include <algorithm>

namespace sigmakit {

namespace {

class Searcher {
public:
    Searcher(std::span<const std::uint64_t> elems, NodeBudget& budget) : elems_(elems), budget_(budget) {
        prefix_.resize(elems.size() + 1, 0);
        for (std::size_t i = 0; i < elems.size(); ++i) prefix_[i + 1] = prefix_[i] + elems[i];
    }

    SearchOutcome run(std::size_t start, std::uint64_t target, std::uint32_t slots) {
        if (!budget_.charge()) return SearchOutcome::Undecided;
        const std::size_t n = elems_.size();
        if (slots == 0) return target == 0 ? SearchOutcome::Found : SearchOutcome::Impossible;
        if (n - start < slots) return SearchOutcome::Impossible;
        if (slots == 1) {
            auto it = std::lower_bound(elems_.begin() + static_cast<std::ptrdiff_t>(start), elems_.end(), target);
            if (it == elems_.end() || *it != target) return SearchOutcome::Impossible;
            path_.push_back(*it);
            return SearchOutcome::Found;
        }
        bool undecided = false;
        const std::uint64_t top = prefix_[n] - prefix_[n - (slots - 1)];
        for (std::size_t j = start; j + slots <= n; ++j) {
            const std::uint64_t x = elems_[j];
            if (prefix_[j + slots] - prefix_[j] > target) break;
            if (x + top < target) continue;
            path_.push_back(x);
            const auto sub = run(j + 1, target - x, slots - 1);
            if (sub == SearchOutcome::Found) return sub;
            path_.pop_back();
            if (sub == SearchOutcome::Undecided) {
                undecided = true;
                break;
            }
        }
        return undecided ? SearchOutcome::Undecided : SearchOutcome::Impossible;
    }

    std::vector<std::uint64_t> take_path() { return std::move(path_); }

private:
    std::span<const std::uint64_t> elems_;
    NodeBudget& budget_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> path_;
};

}  // namespace

SubsetSearchResult find_subset_of_size(std::span<const std::uint64_t> ascending, std::uint64_t target,
                                       std::uint32_t size, NodeBudget& budget) {
    Searcher s(ascending, budget);
    SubsetSearchResult result;
    result.outcome = s.run(0, target, size);
    if (result.outcome == SearchOutcome::Found) result.witness = s.take_path();
    return result;
}

std::optional<bool> subset_sum_reachable(std::span<const std::uint64_t> elements, std::uint64_t target,
                                         std::uint64_t max_target) {
    if (target == 0) return true;
    if (target > max_target) return std::nullopt;
    const std::size_t words = static_cast<std::size_t>(target / 64 + 1);
    std::vector<std::uint64_t> bits(words, 0);
    bits[0] = 1;
    for (std::uint64_t d : elements) {
        if (d == 0 || d > target) continue;
        const std::size_t ws = static_cast<std::size_t>(d / 64);
        const unsigned bs = static_cast<unsigned>(d % 64);
        for (std::size_t w = words; w-- > ws;) {
            std::uint64_t v = bits[w - ws] << bs;
            if (bs != 0 && w - ws >= 1) v |= bits[w - ws - 1] >> (64 - bs);
            bits[w] |= v;
        }
        if ((bits[target / 64] >> (target % 64)) & 1) return true;
    }
    return ((bits[target / 64] >> (target % 64)) & 1) != 0;
}

}  // namespace sigmakit
