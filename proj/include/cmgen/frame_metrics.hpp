#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmgen/corpus.hpp"
#include "cmgen/embedding.hpp"
#include "cmgen/frame_inventory.hpp"
#include "cmgen/random.hpp"

namespace cmgen {

struct MetricConfig {
    std::size_t sample_size = 100;  ///< distant-sample size, capped at the universe size
    std::uint64_t seed = 1;
    bool verbs_only = false;  ///< restrict lexical units to pos "v"
};

struct FrameScore {
    std::string frame;
    std::optional<double> lex;  ///< empty when the frame was skipped for this metric
    std::optional<double> str;
};

struct MetricReport {
    std::vector<FrameScore> frames;
    std::optional<double> mean_lex;
    std::optional<double> mean_str;
    std::optional<double> mean;  ///< (mean_lex + mean_str) / 2
    std::size_t skipped_lex = 0;
    std::size_t skipped_str = 0;
};

namespace detail {

/// Mean cosine of `anchor` against the rows `ids`; zero-norm rows are an error.
template <typename Scalar, typename Derived>
double mean_cosine(const EmbeddingSpace<Scalar>& space, const Eigen::MatrixBase<Derived>& anchor,
                   const std::vector<Vocabulary::Id>& ids) {
    double sum = 0.0;
    for (auto id : ids)
        sum += static_cast<double>(cosine(space.input.row(static_cast<Eigen::Index>(id)).transpose(), anchor));
    return sum / static_cast<double>(ids.size());
}

/// k ids drawn without replacement (partial Fisher-Yates) from `pool`.
inline std::vector<Vocabulary::Id> sample_without_replacement(std::vector<Vocabulary::Id> pool, std::size_t k,
                                                              Rng& rng) {
    k = std::min(k, pool.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.index(pool.size() - i)]);
    pool.resize(k);
    return pool;
}

/// local mean minus sampled distant mean, or empty when either side is empty.
template <typename Scalar>
std::optional<double> contrast(const EmbeddingSpace<Scalar>& space, Vocabulary::Id anchor,
                               const std::vector<Vocabulary::Id>& local, std::vector<Vocabulary::Id> universe,
                               std::size_t k, Rng& rng) {
    if (local.empty() || universe.empty() || k == 0) return std::nullopt;
    const auto e = space.input.row(static_cast<Eigen::Index>(anchor)).transpose();
    const auto distant = sample_without_replacement(std::move(universe), k, rng);
    return mean_cosine(space, e, local) - mean_cosine(space, e, distant);
}

}  // namespace detail

/// Lexical similarity of a frame: mean cosine of its lexical units to the
/// frame token minus the mean over a sample of other word tokens.
/// Empty when the frame token or all of its units are out of vocabulary.
template <typename Scalar>
std::optional<double> lex_similarity(const EmbeddingSpace<Scalar>& space, const FrameInventory& inv,
                                     const std::string& frame, const MetricConfig& config) {
    const auto lemmas = inv.lexical_units_of(frame, config.verbs_only ? "v" : "");
    const auto anchor = space.vocab.find(frame_token(frame));
    if (!anchor) return std::nullopt;
    std::vector<Vocabulary::Id> local, universe;
    for (Vocabulary::Id id = 0; id < space.vocab.size(); ++id) {
        if (space.vocab.is_frame(id)) continue;
        (lemmas.contains(space.vocab.token(id)) ? local : universe).push_back(id);
    }
    Rng rng(derive_seed(config.seed, "lex/" + frame));
    return detail::contrast(space, *anchor, local, std::move(universe), config.sample_size, rng);
}

/// Structural similarity of a frame: mean cosine of its one-hop neighbours'
/// frame tokens minus the mean over a sample of non-neighbouring frame tokens.
template <typename Scalar>
std::optional<double> str_similarity(const EmbeddingSpace<Scalar>& space, const FrameInventory& inv,
                                     const std::string& frame, const MetricConfig& config) {
    const auto nbrs = inv.neighbors(frame);
    const auto anchor = space.vocab.find(frame_token(frame));
    if (!anchor) return std::nullopt;
    std::vector<Vocabulary::Id> local, universe;
    for (Vocabulary::Id id = 0; id < space.vocab.size(); ++id) {
        if (!space.vocab.is_frame(id) || id == *anchor) continue;
        const std::string name(frame_of_token(space.vocab.token(id)));
        (nbrs.contains(name) ? local : universe).push_back(id);
    }
    Rng rng(derive_seed(config.seed, "str/" + frame));
    return detail::contrast(space, *anchor, local, std::move(universe), config.sample_size, rng);
}

/// Scores every inventory frame. Throws EmptyInputError when no frame can be
/// scored by either metric.
template <typename Scalar>
MetricReport evaluate_space(const EmbeddingSpace<Scalar>& space, const FrameInventory& inv,
                            const MetricConfig& config) {
    MetricReport report;
    double sum_lex = 0.0, sum_str = 0.0;
    std::size_t n_lex = 0, n_str = 0;
    for (const auto& [name, _] : inv.frames()) {
        FrameScore score{name, lex_similarity(space, inv, name, config), str_similarity(space, inv, name, config)};
        if (score.lex) {
            sum_lex += *score.lex;
            ++n_lex;
        } else {
            ++report.skipped_lex;
        }
        if (score.str) {
            sum_str += *score.str;
            ++n_str;
        } else {
            ++report.skipped_str;
        }
        report.frames.push_back(std::move(score));
    }
    if (n_lex == 0 && n_str == 0) throw EmptyInputError("no frame could be scored");
    if (n_lex) report.mean_lex = sum_lex / static_cast<double>(n_lex);
    if (n_str) report.mean_str = sum_str / static_cast<double>(n_str);
    if (report.mean_lex && report.mean_str) report.mean = (*report.mean_lex + *report.mean_str) / 2.0;
    return report;
}

/// `frame<TAB>lex<TAB>str` rows ("NA" when skipped), a blank line, then the
/// aggregate block.
void write_report(const MetricReport& report, std::ostream& out);

}  // namespace cmgen
