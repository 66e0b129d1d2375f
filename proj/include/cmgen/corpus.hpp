#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmgen {

enum class Morph { base, third_singular, past, past_participle, gerund };

/// FTC1 spelling: base, 3sg, past, pastpart, gerund.
std::string_view to_string(Morph m) noexcept;
std::optional<Morph> parse_morph(std::string_view s) noexcept;

struct TaggedSentence {
    std::vector<std::string> tokens;
    std::size_t focus_index = 0;
    std::string frame_label;
    std::string focus_lemma;
    Morph focus_morph = Morph::base;

    [[nodiscard]] const std::string& focus_token() const { return tokens.at(focus_index); }
    [[nodiscard]] std::string text() const;

    bool operator==(const TaggedSentence&) const = default;
};

/// Throws ArgumentError when the sentence violates its invariants.
void validate(const TaggedSentence& s);

/// Prefix that marks a frame token inside the joint vocabulary.
inline constexpr std::string_view frame_prefix = "__frame__:";

std::string frame_token(std::string_view frame);
bool is_frame_token(std::string_view token) noexcept;
/// "__frame__:death" -> "death"; word tokens are returned unchanged.
std::string_view frame_of_token(std::string_view token) noexcept;

/// A center token with its surrounding context. `center_offset` is the number
/// of context tokens that precede the center in the original sentence.
struct TrainingWindow {
    std::string center;
    std::vector<std::string> context;
    std::size_t center_offset = 0;

    /// Context with the center spliced back in at its position.
    [[nodiscard]] std::vector<std::string> sequence() const;

    bool operator==(const TrainingWindow&) const = default;
};

TrainingWindow extract_window(const TaggedSentence& s, std::size_t radius = 5);
TrainingWindow substitute_frame_label(TrainingWindow w, std::string_view frame);

struct LiteralMetaphoricPair {
    TaggedSentence literal;
    TaggedSentence metaphoric;
};

/// True iff the two 5-symbol lists share at least `threshold` distinct
/// symbols after lowercasing.
bool symbol_overlap_filter(const std::vector<std::string>& a, const std::vector<std::string>& b,
                           std::size_t threshold = 4);

/// `<source> <EOT> <pre> <V> <focus> : <target> <V> <post>`, single-space joined.
std::string emit_control_record(const LiteralMetaphoricPair& pair);

struct ControlRecord {
    std::string source_frame;
    std::string target_frame;
    std::vector<std::string> tokens;
    std::size_t focus_index = 0;

    bool operator==(const ControlRecord&) const = default;
};

ControlRecord parse_control_record(std::string_view record);

using FramePair = std::pair<std::string, std::string>;  ///< (target, source)

struct MappingFrequencyTable {
    std::map<FramePair, std::size_t> counts;

    [[nodiscard]] std::size_t total() const;
    /// Observed sources for `target` with their counts.
    [[nodiscard]] std::map<std::string, std::size_t> sources_for(std::string_view target) const;

    bool operator==(const MappingFrequencyTable&) const = default;
};

MappingFrequencyTable build_mapping_table(const std::vector<LiteralMetaphoricPair>& pairs);

/// `target<TAB>source<TAB>count` per line.
void save_mapping_table(const MappingFrequencyTable& table, std::ostream& out);
MappingFrequencyTable load_mapping_table(std::istream& in);

/// Collects record-level problems instead of throwing on the first one.
struct RecordError {
    std::size_t line;
    std::string message;
};

struct FtcParseResult {
    std::vector<TaggedSentence> sentences;
    std::vector<RecordError> errors;
};

TaggedSentence parse_ftc_record(std::string_view line);
/// One record per non-empty, non-comment line. Bad records go to `errors`.
FtcParseResult parse_ftc(std::istream& in);
std::string format_ftc_record(const TaggedSentence& s);

std::vector<LiteralMetaphoricPair> parse_pfc(std::istream& in);

/// Window file: `left context<TAB>center<TAB>right context`.
std::string format_window(const TrainingWindow& w);
TrainingWindow parse_window(std::string_view line);
std::vector<TrainingWindow> read_windows(std::istream& in);

}  // namespace cmgen
