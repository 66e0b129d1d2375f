#pragma once

// Reference implementations used only by tests. Each one follows a
// different computational route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cmgen/agreement.hpp"
#include "cmgen/corpus.hpp"
#include "cmgen/frame_inventory.hpp"
#include "cmgen/random.hpp"

namespace oracle {

inline std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

/// Krippendorff's alpha straight from the pairwise definition:
///   D_o = 1/n * sum_u 1/(m_u - 1) * sum_{i != j in u} delta(v_i, v_j)
///   D_e = 1/(n(n-1)) * sum_{i != j over all pairable values} delta(v_i, v_j)
inline double alpha_pairwise(const cmgen::AnnotationMatrix& m, cmgen::AgreementLevel level) {
    std::vector<std::vector<double>> units;
    for (std::size_t u = 0; u < m.items(); ++u) {
        std::vector<double> vals;
        for (const auto& row : m.ratings)
            if (row[u]) vals.push_back(*row[u]);
        if (vals.size() >= 2) units.push_back(vals);
    }
    std::vector<double> pooled;
    for (const auto& u : units) pooled.insert(pooled.end(), u.begin(), u.end());
    const double n = static_cast<double>(pooled.size());

    std::map<double, double> freq;
    for (double v : pooled) freq[v] += 1.0;
    const auto delta = [&](double a, double b) -> double {
        switch (level) {
            case cmgen::AgreementLevel::nominal: return a == b ? 0.0 : 1.0;
            case cmgen::AgreementLevel::interval: return (a - b) * (a - b);
            case cmgen::AgreementLevel::ordinal: {
                const double lo = std::min(a, b), hi = std::max(a, b);
                double s = 0.0;
                for (const auto& [g, f] : freq)
                    if (g >= lo && g <= hi) s += f;
                s -= (freq[a] + freq[b]) / 2.0;
                return s * s;
            }
        }
        return 0.0;
    };

    double d_o = 0.0;
    for (const auto& u : units) {
        double s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j)
                if (i != j) s += delta(u[i], u[j]);
        d_o += s / static_cast<double>(u.size() - 1);
    }
    d_o /= n;
    double d_e = 0.0;
    for (std::size_t i = 0; i < pooled.size(); ++i)
        for (std::size_t j = 0; j < pooled.size(); ++j)
            if (i != j) d_e += delta(pooled[i], pooled[j]);
    d_e /= n * (n - 1.0);
    if (d_e == 0.0) return 1.0;
    return 1.0 - d_o / d_e;
}

/// P(|T| < t) for integer degrees of freedom via the finite trigonometric
/// series (Abramowitz & Stegun 26.7.3 / 26.7.4).
inline long double t_central_probability(long double t, int df) {
    const long double theta = std::atan(std::fabs(t) / std::sqrt(static_cast<long double>(df)));
    const long double s = std::sin(theta), c = std::cos(theta);
    if (df % 2 == 1) {
        long double sum = 0.0L, term = c;
        if (df > 1) {
            sum = term;
            for (int k = 3; k <= df - 2; k += 2) {
                term *= c * c * static_cast<long double>(k - 1) / static_cast<long double>(k);
                sum += term;
            }
        }
        return 2.0L / std::numbers::pi_v<long double> * (theta + s * sum);
    }
    long double sum = 1.0L, term = 1.0L;
    for (int k = 2; k <= df - 2; k += 2) {
        term *= c * c * static_cast<long double>(k - 1) / static_cast<long double>(k);
        sum += term;
    }
    return s * sum;
}

struct TTest {
    double t;
    double p;
};

/// Paired t via the textbook sum-of-squares formula in long double.
inline TTest paired_t(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    long double sum = 0.0L, sum_sq = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double d = static_cast<long double>(a[i]) - static_cast<long double>(b[i]);
        sum += d;
        sum_sq += d * d;
    }
    const long double nn = static_cast<long double>(n);
    const long double var = (sum_sq - sum * sum / nn) / (nn - 1.0L);
    const long double t = (sum / nn) / std::sqrt(var / nn);
    const long double p = 1.0L - t_central_probability(t, static_cast<int>(n) - 1);
    return {static_cast<double>(t), static_cast<double>(p)};
}

/// Skip-gram negative-sampling loss over plain arrays.
inline double sgns_loss(const std::vector<double>& v, const std::vector<std::vector<double>>& outputs,
                        std::size_t context, const std::vector<std::size_t>& negatives) {
    const auto dot = [&](const std::vector<double>& u) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += u[i] * v[i];
        return s;
    };
    double loss = std::log(1.0 + std::exp(-dot(outputs[context])));
    for (auto n : negatives) loss += std::log(1.0 + std::exp(dot(outputs[n])));
    return loss;
}

/// Windows for `frames` synthetic frames, each owning `words_per_frame`
/// words that only ever co-occur with that frame's token.
struct ClusteredCorpus {
    std::vector<cmgen::TrainingWindow> windows;
    cmgen::FrameInventory inventory;
    std::vector<std::string> words;  ///< all words, frame-major order
};

inline ClusteredCorpus lexical_clusters(std::size_t frames, std::size_t words_per_frame, std::size_t n_windows,
                                        std::size_t context_size, std::uint64_t seed) {
    ClusteredCorpus c;
    cmgen::Rng rng(seed);
    for (std::size_t f = 0; f < frames; ++f) {
        cmgen::Frame frame{"frame" + std::to_string(f), {}};
        for (std::size_t w = 0; w < words_per_frame; ++w) {
            const auto word = "f" + std::to_string(f) + "w" + std::to_string(w);
            frame.lexical_units.insert({word, "v"});
            c.words.push_back(word);
        }
        c.inventory.add_frame(frame);
    }
    for (std::size_t i = 0; i < n_windows; ++i) {
        const std::size_t f = i % frames;
        cmgen::TrainingWindow w;
        w.center = cmgen::frame_token("frame" + std::to_string(f));
        for (std::size_t j = 0; j < context_size; ++j)
            w.context.push_back(c.words[f * words_per_frame + rng.index(words_per_frame)]);
        w.center_offset = context_size / 2;
        c.windows.push_back(std::move(w));
    }
    return c;
}

/// Same frames, lexical units re-dealt at random across frames.
inline cmgen::FrameInventory shuffle_lexical_units(const ClusteredCorpus& c, std::size_t words_per_frame,
                                                   std::uint64_t seed) {
    auto words = c.words;
    cmgen::Rng rng(seed);
    for (std::size_t i = words.size(); i > 1; --i) std::swap(words[i - 1], words[rng.index(i)]);
    cmgen::FrameInventory inv;
    std::size_t k = 0;
    for (const auto& [name, _] : c.inventory.frames()) {
        cmgen::Frame frame{name, {}};
        for (std::size_t w = 0; w < words_per_frame; ++w) frame.lexical_units.insert({words[k++], "v"});
        inv.add_frame(frame);
    }
    return inv;
}

}  // namespace oracle
