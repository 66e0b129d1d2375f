#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "cmgen/corpus.hpp"
#include "cmgen/embedding.hpp"
#include "cmgen/error.hpp"
#include "cmgen/random.hpp"
#include "cmgen/vocabulary.hpp"

namespace cmgen {

struct TrainerConfig {
    Eigen::Index dim = 50;
    std::size_t negatives = 5;
    std::size_t epochs = 5;
    double learning_rate = 0.025;  ///< decays linearly to 1e-4 of itself
    std::size_t window = 5;        ///< skip-gram radius inside each training window
    double subsample = 1e-3;       ///< 0 disables; frame tokens are never dropped
    std::uint64_t min_count = 1;
    std::uint64_t seed = 1;
    std::size_t threads = 1;

    /// Throws ConfigError on an invalid combination.
    void validate() const {
        if (dim < 1) throw ConfigError("dim must be positive");
        if (negatives < 1) throw ConfigError("negatives must be at least 1");
        if (!(learning_rate > 0.0)) throw ConfigError("learning rate must be positive");
        if (window < 1) throw ConfigError("window must be at least 1");
        if (subsample < 0.0) throw ConfigError("subsample threshold must be non-negative");
        if (threads < 1) throw ConfigError("threads must be at least 1");
    }
};

namespace detail {

template <typename Scalar>
Scalar sigmoid(Scalar x) {
    return x >= Scalar(0) ? Scalar(1) / (Scalar(1) + std::exp(-x)) : std::exp(x) / (Scalar(1) + std::exp(x));
}

/// log(sigmoid(x)) without overflow.
template <typename Scalar>
Scalar log_sigmoid(Scalar x) {
    return x >= Scalar(0) ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

}  // namespace detail

/// -log s(u_ctx . v) - sum_neg log s(-u_neg . v), v the center's input vector.
template <typename Scalar>
Scalar sgns_loss(const EmbeddingSpace<Scalar>& space, Vocabulary::Id center, Vocabulary::Id context,
                 std::span<const Vocabulary::Id> negatives) {
    const auto v = space.input.row(static_cast<Eigen::Index>(center));
    Scalar loss = -detail::log_sigmoid<Scalar>(space.output.row(static_cast<Eigen::Index>(context)).dot(v));
    for (auto n : negatives) loss -= detail::log_sigmoid<Scalar>(-space.output.row(static_cast<Eigen::Index>(n)).dot(v));
    return loss;
}

/// One gradient-descent step on sgns_loss with step size `lr`. All gradients
/// are taken at the pre-step parameters, so repeated ids accumulate.
/// Returns the pre-step loss.
template <typename Scalar>
Scalar sgns_step(EmbeddingSpace<Scalar>& space, Vocabulary::Id center, Vocabulary::Id context,
                 std::span<const Vocabulary::Id> negatives, Scalar lr) {
    const auto c = static_cast<Eigen::Index>(center);
    const Eigen::Index dim = space.dim();
    // Stack scratch for typical sizes keeps the hot loop allocation-free.
    constexpr std::size_t kInline = 32;
    Scalar inline_coef[kInline];
    std::vector<Scalar> heap_coef;
    Scalar* coef = inline_coef;
    if (negatives.size() + 1 > kInline) {
        heap_coef.resize(negatives.size() + 1);
        coef = heap_coef.data();
    }

    Scalar loss = 0;
    Vector<Scalar> grad_center = Vector<Scalar>::Zero(dim);
    const auto v = space.input.row(c);
    for (std::size_t i = 0; i <= negatives.size(); ++i) {
        const auto target = static_cast<Eigen::Index>(i == 0 ? context : negatives[i - 1]);
        const Scalar s = space.output.row(target).dot(v);
        if (i == 0) {
            loss -= detail::log_sigmoid(s);
            coef[i] = detail::sigmoid(s) - Scalar(1);
        } else {
            loss -= detail::log_sigmoid(-s);
            coef[i] = detail::sigmoid(s);
        }
        grad_center.noalias() += coef[i] * space.output.row(target).transpose();
    }
    for (std::size_t i = 0; i <= negatives.size(); ++i) {
        const auto target = static_cast<Eigen::Index>(i == 0 ? context : negatives[i - 1]);
        space.output.row(target) -= (lr * coef[i]) * space.input.row(c);
    }
    space.input.row(c) -= lr * grad_center.transpose();
    return loss;
}

/// Unigram^0.75 sampler over word tokens only.
class NegativeSampler {
public:
    explicit NegativeSampler(const Vocabulary& vocab) {
        double acc = 0.0;
        for (Vocabulary::Id id = 0; id < vocab.size(); ++id) {
            if (vocab.is_frame(id)) continue;
            acc += std::pow(static_cast<double>(std::max<std::uint64_t>(vocab.frequency(id), 1)), 0.75);
            cumulative_.push_back(acc);
            ids_.push_back(id);
        }
    }

    [[nodiscard]] bool empty() const noexcept { return ids_.empty(); }

    Vocabulary::Id operator()(Rng& rng) const {
        const double r = rng.uniform() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
        if (it == cumulative_.end()) --it;
        return ids_[static_cast<std::size_t>(it - cumulative_.begin())];
    }

private:
    std::vector<double> cumulative_;
    std::vector<Vocabulary::Id> ids_;
};

/// Input rows uniform in [-0.5/dim, 0.5/dim], output rows zero.
template <typename Scalar = double>
EmbeddingSpace<Scalar> initialize_space(Vocabulary vocab, Eigen::Index dim, std::uint64_t seed) {
    EmbeddingSpace<Scalar> space(std::move(vocab), dim);
    Rng rng(derive_seed(seed, "sgns/init"));
    const double half = 0.5 / static_cast<double>(dim);
    for (Eigen::Index i = 0; i < space.input.rows(); ++i)
        for (Eigen::Index j = 0; j < dim; ++j) space.input(i, j) = static_cast<Scalar>(rng.uniform(-half, half));
    return space;
}

namespace detail {

template <typename Scalar>
struct TrainState {
    EmbeddingSpace<Scalar>& space;
    const TrainerConfig& config;
    const NegativeSampler& sampler;
    std::vector<double> keep_prob;
    std::uint64_t total_work = 0;
    std::atomic<std::uint64_t> processed{0};
};

template <typename Scalar>
void train_slice(TrainState<Scalar>& st, std::span<const std::vector<Vocabulary::Id>> windows, Rng& rng) {
    const auto& cfg = st.config;
    std::vector<Vocabulary::Id> kept;
    std::vector<Vocabulary::Id> negs(cfg.negatives);
    std::uint64_t local = 0;
    double lr = cfg.learning_rate;
    for (const auto& seq : windows) {
        kept.clear();
        for (auto id : seq)
            if (st.keep_prob[id] >= 1.0 || rng.uniform() < st.keep_prob[id]) kept.push_back(id);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            const std::size_t lo = i >= cfg.window ? i - cfg.window : 0;
            const std::size_t hi = std::min(kept.size(), i + cfg.window + 1);
            for (std::size_t j = lo; j < hi; ++j) {
                if (j == i) continue;
                for (auto& n : negs) n = st.sampler(rng);
                sgns_step(st.space, kept[i], kept[j], std::span<const Vocabulary::Id>(negs), static_cast<Scalar>(lr));
            }
        }
        local += seq.size();
        if (local >= 1024) {
            st.processed += local;
            local = 0;
        }
        const double progress = static_cast<double>(st.processed.load(std::memory_order_relaxed) + local) /
                                static_cast<double>(st.total_work + 1);
        lr = cfg.learning_rate * std::max(1e-4, 1.0 - progress);
    }
    st.processed += local;
}

}  // namespace detail

/// Skip-gram with negative sampling over the token sequences of `windows`.
///
/// Each window is treated as a short sentence; every in-vocabulary token is a
/// center in turn. With threads == 1 the result is a pure function of
/// (windows, vocab, config). With more threads the parameter matrices are
/// updated without synchronization and results vary between runs.
template <typename Scalar = double>
EmbeddingSpace<Scalar> train(std::span<const TrainingWindow> windows, Vocabulary vocab, const TrainerConfig& config) {
    config.validate();
    if (vocab.empty()) throw EmptyInputError("cannot train on an empty vocabulary");
    auto space = initialize_space<Scalar>(std::move(vocab), config.dim, config.seed);
    const NegativeSampler sampler(space.vocab);
    if (config.epochs == 0 || sampler.empty()) return space;

    std::vector<std::vector<Vocabulary::Id>> encoded;
    encoded.reserve(windows.size());
    std::uint64_t corpus_tokens = 0;
    for (const auto& w : windows) {
        std::vector<Vocabulary::Id> ids;
        for (const auto& t : w.sequence())
            if (auto id = space.vocab.find(t)) ids.push_back(*id);
        corpus_tokens += ids.size();
        encoded.push_back(std::move(ids));
    }

    detail::TrainState<Scalar> st{space, config, sampler, {}, corpus_tokens * config.epochs, {}};
    st.keep_prob.assign(space.vocab.size(), 1.0);
    if (config.subsample > 0.0) {
        const double total = static_cast<double>(std::max<std::uint64_t>(space.vocab.total_count(), 1));
        for (Vocabulary::Id id = 0; id < space.vocab.size(); ++id) {
            if (space.vocab.is_frame(id) || space.vocab.frequency(id) == 0) continue;
            const double f = static_cast<double>(space.vocab.frequency(id));
            const double t = config.subsample * total;
            st.keep_prob[id] = (std::sqrt(f / t) + 1.0) * t / f;
        }
    }

    const std::size_t nthreads = std::min(config.threads, std::max<std::size_t>(encoded.size(), 1));
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        if (nthreads == 1) {
            Rng rng(derive_seed(config.seed, "sgns/epoch/" + std::to_string(epoch)));
            detail::train_slice<Scalar>(st, encoded, rng);
            continue;
        }
        std::vector<std::jthread> workers;
        const std::size_t chunk = (encoded.size() + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            const std::size_t lo = std::min(encoded.size(), t * chunk);
            const std::size_t hi = std::min(encoded.size(), lo + chunk);
            workers.emplace_back([&st, &encoded, &config, lo, hi, epoch, t] {
                Rng rng(derive_seed(config.seed,
                                    "sgns/epoch/" + std::to_string(epoch) + "/thread/" + std::to_string(t)));
                detail::train_slice<Scalar>(
                    st, std::span<const std::vector<Vocabulary::Id>>(encoded).subspan(lo, hi - lo), rng);
            });
        }
    }
    return space;
}

}  // namespace cmgen
