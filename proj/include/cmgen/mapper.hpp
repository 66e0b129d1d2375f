#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cmgen/corpus.hpp"
#include "cmgen/embedding.hpp"
#include "cmgen/frame_inventory.hpp"
#include "cmgen/inflect.hpp"
#include "cmgen/random.hpp"

namespace cmgen {

/// Target -> source frame pairing with offset = E_source - E_target.
template <typename Scalar = double>
struct ConceptualMapping {
    std::string target_frame;
    std::string source_frame;
    Vector<Scalar> offset;
};

/// Throws LookupError when either frame token is missing from the space.
template <typename Scalar>
ConceptualMapping<Scalar> compute_mapping(const EmbeddingSpace<Scalar>& space, std::string_view target_frame,
                                          std::string_view source_frame) {
    const std::string target = normalize_frame_name(frame_of_token(target_frame));
    const std::string source = normalize_frame_name(frame_of_token(source_frame));
    ConceptualMapping<Scalar> m{target, source, {}};
    m.offset = space.vector(frame_token(source)) - space.vector(frame_token(target));
    return m;
}

/// Ranked replacements for `verb_lemma`: neighbours of E_verb + offset.
/// Frame tokens are never candidates.
template <typename Scalar>
std::vector<Neighbor<Scalar>> map_verb(const EmbeddingSpace<Scalar>& space, const ConceptualMapping<Scalar>& mapping,
                                       std::string_view verb_lemma, std::size_t k,
                                       const std::set<std::string, std::less<>>& exclusions = {}) {
    if (is_frame_token(verb_lemma)) throw ArgumentError("map_verb expects a word token, got a frame token");
    const Vector<Scalar> query = space.vector(verb_lemma) + mapping.offset;
    if (!(query.norm() > Scalar(0))) return {};
    return nearest(space, query, k, exclusions, /*include_frames=*/false);
}

struct GenerationRequest {
    TaggedSentence sentence;
    std::string target_frame;
    std::string source_frame;
    std::size_t candidates_k = 10;
    bool exclude_input = false;
};

template <typename Scalar = double>
struct GenerationResult {
    std::vector<Neighbor<Scalar>> candidates;
    std::string chosen_lemma;
    std::string surface;
    std::vector<std::string> tokens;

    [[nodiscard]] std::string text() const { return detail::join(tokens, " "); }
};

/// Optional hook that may reorder candidates using the sentence context.
/// Receives the candidates in embedding order and returns them reordered.
template <typename Scalar = double>
using CandidateReranker =
    std::function<std::vector<Neighbor<Scalar>>(const TaggedSentence&, std::vector<Neighbor<Scalar>>)>;

/// Mapping, nearest-neighbour substitution, inflection and splice.
///
/// When the chosen lemma equals the input lemma the original token is kept
/// as-is; otherwise the lemma is inflected to the input verb's morph tag and
/// given the original token's capitalization.
template <typename Scalar>
GenerationResult<Scalar> generate(const GenerationRequest& request, const EmbeddingSpace<Scalar>& space,
                                  const CandidateReranker<Scalar>& reranker = {}) {
    const TaggedSentence& s = request.sentence;
    validate(s);
    const auto mapping = compute_mapping(space, request.target_frame, request.source_frame);
    std::set<std::string, std::less<>> exclusions;
    if (request.exclude_input) exclusions.insert(s.focus_lemma);

    GenerationResult<Scalar> result;
    result.candidates = map_verb(space, mapping, s.focus_lemma, request.candidates_k, exclusions);
    if (reranker) result.candidates = reranker(s, std::move(result.candidates));
    if (result.candidates.empty()) throw NoCandidateError("no replacement candidate for '" + s.focus_lemma + "'");

    result.chosen_lemma = result.candidates.front().token;
    const std::string& original = s.focus_token();
    result.surface = result.chosen_lemma == s.focus_lemma
                         ? original
                         : match_case(inflect(result.chosen_lemma, s.focus_morph), original);
    result.tokens = s.tokens;
    result.tokens[s.focus_index] = result.surface;
    return result;
}

/// A source frame drawn uniformly among those observed for `target` at the
/// (lower) median frequency. Throws LookupError when `target` has no
/// observed mapping.
std::string select_rare_mapping(const MappingFrequencyTable& table, std::string_view target, Rng& rng);

/// A source frame drawn uniformly among inventory frames never observed as
/// a source for `target` (the target itself excluded). Throws
/// ExhaustedError when none is left.
std::string select_unseen_mapping(const MappingFrequencyTable& table, const FrameInventory& inv,
                                  std::string_view target, Rng& rng);

}  // namespace cmgen
