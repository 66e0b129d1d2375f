#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cmgen/corpus.hpp"

namespace cmgen {

/// Token <-> id bijection with corpus frequencies.
///
/// Ids are assigned by descending frequency, ties by token, so the same
/// input always yields the same ids.
class Vocabulary {
public:
    using Id = std::size_t;

    Vocabulary() = default;

    /// Appends a token. Throws ArgumentError on duplicates or empty tokens.
    Id add(std::string token, std::uint64_t frequency = 0);

    [[nodiscard]] std::optional<Id> find(std::string_view token) const;
    /// Throws LookupError for out-of-vocabulary tokens.
    [[nodiscard]] Id id(std::string_view token) const;
    [[nodiscard]] bool contains(std::string_view token) const { return find(token).has_value(); }

    [[nodiscard]] const std::string& token(Id id) const { return tokens_.at(id); }
    [[nodiscard]] std::uint64_t frequency(Id id) const { return frequencies_.at(id); }
    [[nodiscard]] bool is_frame(Id id) const { return is_frame_token(tokens_.at(id)); }
    [[nodiscard]] std::size_t size() const noexcept { return tokens_.size(); }
    [[nodiscard]] bool empty() const noexcept { return tokens_.empty(); }
    [[nodiscard]] std::uint64_t total_count() const noexcept { return total_; }
    [[nodiscard]] const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    bool operator==(const Vocabulary& other) const {
        return tokens_ == other.tokens_ && frequencies_ == other.frequencies_;
    }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
    };

    std::vector<std::string> tokens_;
    std::vector<std::uint64_t> frequencies_;
    std::unordered_map<std::string, Id, Hash, std::equal_to<>> index_;
    std::uint64_t total_ = 0;
};

/// Counts every token of every window (center included). Word tokens below
/// `min_count` are dropped; frame tokens are always kept.
/// Throws EmptyInputError when nothing survives.
Vocabulary build_vocab(std::span<const TrainingWindow> windows, std::uint64_t min_count);

}  // namespace cmgen
