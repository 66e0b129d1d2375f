#include "cmgen/vocabulary.hpp"

#include <algorithm>
#include <map>

#include "cmgen/error.hpp"

namespace cmgen {

Vocabulary::Id Vocabulary::add(std::string token, std::uint64_t frequency) {
    if (token.empty()) throw ArgumentError("empty token");
    if (index_.contains(token)) throw ArgumentError("duplicate token '" + token + "'");
    const Id id = tokens_.size();
    index_.emplace(token, id);
    tokens_.push_back(std::move(token));
    frequencies_.push_back(frequency);
    total_ += frequency;
    return id;
}

std::optional<Vocabulary::Id> Vocabulary::find(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vocabulary::Id Vocabulary::id(std::string_view token) const {
    if (auto found = find(token)) return *found;
    throw LookupError("token '" + std::string(token) + "' is not in the vocabulary");
}

Vocabulary build_vocab(std::span<const TrainingWindow> windows, std::uint64_t min_count) {
    std::map<std::string, std::uint64_t, std::less<>> counts;
    for (const auto& w : windows) {
        ++counts[w.center];
        for (const auto& t : w.context) ++counts[t];
    }

    std::vector<std::pair<std::string, std::uint64_t>> kept;
    for (auto& [token, count] : counts)
        if (count >= min_count || is_frame_token(token)) kept.emplace_back(token, count);
    if (kept.empty()) throw EmptyInputError("vocabulary is empty");

    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    Vocabulary vocab;
    for (auto& [token, count] : kept) vocab.add(std::move(token), count);
    return vocab;
}

}  // namespace cmgen
