#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cmgen/error.hpp"
#include "cmgen/linalg.hpp"
#include "cmgen/text.hpp"
#include "cmgen/vocabulary.hpp"

namespace cmgen {

/// Cosine of two vectors. Throws UndefinedError if either has zero norm.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    if (a.size() != b.size()) throw ArgumentError("cosine of vectors with different dimensions");
    const Scalar aa = a.dot(a);
    const Scalar bb = b.dot(b);
    if (!(aa > Scalar(0)) || !(bb > Scalar(0))) throw UndefinedError("cosine of a zero vector is undefined");
    // sqrt(aa * bb) rather than |a||b|: makes cosine(x, x) exactly 1.
    const Scalar c = a.dot(b) / std::sqrt(aa * bb);
    return std::clamp(c, Scalar(-1), Scalar(1));
}

/// Joint word/frame space. `input` rows are the embeddings proper; `output`
/// rows are the negative-sampling context vectors used only while training.
template <typename Scalar = double>
struct EmbeddingSpace {
    Vocabulary vocab;
    RowMatrix<Scalar> input;
    RowMatrix<Scalar> output;

    EmbeddingSpace() = default;
    EmbeddingSpace(Vocabulary v, Eigen::Index dim)
        : vocab(std::move(v)),
          input(RowMatrix<Scalar>::Zero(static_cast<Eigen::Index>(vocab.size()), dim)),
          output(RowMatrix<Scalar>::Zero(static_cast<Eigen::Index>(vocab.size()), dim)) {
        if (dim < 1) throw ConfigError("embedding dimension must be positive");
    }

    [[nodiscard]] Eigen::Index dim() const noexcept { return input.cols(); }
    [[nodiscard]] std::size_t size() const noexcept { return vocab.size(); }

    /// Input vector of `token`; throws LookupError when out of vocabulary.
    [[nodiscard]] auto vector(std::string_view token) const {
        return input.row(static_cast<Eigen::Index>(vocab.id(token))).transpose();
    }
};

template <typename Scalar>
Scalar cosine(const EmbeddingSpace<Scalar>& space, std::string_view a, std::string_view b) {
    return cosine(space.vector(a), space.vector(b));
}

template <typename Scalar>
struct Neighbor {
    std::string token;
    Vocabulary::Id id;
    Scalar cosine;
};

/// Exhaustive top-k by cosine against the input vectors.
///
/// Frame tokens are skipped unless `include_frames` is set; zero-norm rows
/// are skipped. Ties go to the lower id. Returns fewer than k entries when
/// the candidate pool is smaller.
template <typename Scalar, typename Derived>
std::vector<Neighbor<Scalar>> nearest(const EmbeddingSpace<Scalar>& space, const Eigen::MatrixBase<Derived>& query,
                                      std::size_t k, const std::set<std::string, std::less<>>& exclusions = {},
                                      bool include_frames = false) {
    if (k < 1) throw ArgumentError("k must be at least 1");
    if (query.size() != space.dim()) throw ArgumentError("query dimension does not match the space");
    const Scalar qn = query.norm();
    if (!(qn > Scalar(0))) throw UndefinedError("nearest-neighbour query is the zero vector");

    const Vector<Scalar> dots = space.input * query;
    const Vector<Scalar> norms = space.input.rowwise().norm();

    std::vector<Neighbor<Scalar>> pool;
    for (Vocabulary::Id id = 0; id < space.vocab.size(); ++id) {
        const auto row = static_cast<Eigen::Index>(id);
        if (!(norms(row) > Scalar(0))) continue;
        const auto& token = space.vocab.token(id);
        if (!include_frames && is_frame_token(token)) continue;
        if (exclusions.contains(token)) continue;
        const Scalar c = std::clamp(dots(row) / (norms(row) * qn), Scalar(-1), Scalar(1));
        pool.push_back({token, id, c});
    }
    const auto better = [](const Neighbor<Scalar>& a, const Neighbor<Scalar>& b) {
        return a.cosine != b.cosine ? a.cosine > b.cosine : a.id < b.id;
    };
    const auto keep = std::min(k, pool.size());
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep), pool.end(), better);
    pool.resize(keep);
    return pool;
}

/// EMB1 text format: "<vocab_size> <dim>" then "token v1 ... vdim" per row.
template <typename Scalar>
void save_embeddings(const EmbeddingSpace<Scalar>& space, std::ostream& out) {
    out << space.size() << ' ' << space.dim() << '\n';
    char buf[64];
    for (Vocabulary::Id id = 0; id < space.size(); ++id) {
        out << space.vocab.token(id);
        for (Eigen::Index j = 0; j < space.dim(); ++j) {
            const double v = static_cast<double>(space.input(static_cast<Eigen::Index>(id), j));
            std::snprintf(buf, sizeof buf, " %.6f", v == 0.0 ? 0.0 : v);
            out << buf;
        }
        out << '\n';
    }
}

/// Inverse of save_embeddings. Output vectors come back zero and
/// frequencies unknown (0). Throws ParseError on any header/row mismatch.
template <typename Scalar = double>
EmbeddingSpace<Scalar> load_embeddings(std::istream& in) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line)) throw ParseError(1, "missing EMB1 header");
    const auto header = detail::split_ws(line);
    long long rows = -1, dim = -1;
    try {
        if (header.size() != 2) throw std::invalid_argument("fields");
        std::size_t used = 0;
        rows = std::stoll(header[0], &used);
        if (used != header[0].size()) throw std::invalid_argument("rows");
        dim = std::stoll(header[1], &used);
        if (used != header[1].size()) throw std::invalid_argument("dim");
    } catch (const std::exception&) {
        throw ParseError(1, "EMB1 header must be '<vocab_size> <dim>'");
    }
    if (rows < 0 || dim < 1) throw ParseError(1, "EMB1 header has invalid sizes");

    std::vector<std::string> tokens;
    std::vector<std::vector<Scalar>> values;
    tokens.reserve(static_cast<std::size_t>(rows));
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (static_cast<long long>(tokens.size()) == rows) throw ParseError(lineno, "more rows than the header declares");
        const auto parts = detail::split_ws(line);
        if (static_cast<long long>(parts.size()) != dim + 1)
            throw ParseError(lineno, "expected token plus " + std::to_string(dim) + " values");
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(dim));
        for (std::size_t j = 1; j < parts.size(); ++j) {
            char* end = nullptr;
            const double v = std::strtod(parts[j].c_str(), &end);
            if (end != parts[j].c_str() + parts[j].size() || !std::isfinite(v))
                throw ParseError(lineno, "bad value '" + parts[j] + "'");
            row.push_back(static_cast<Scalar>(v));
        }
        tokens.push_back(parts[0]);
        values.push_back(std::move(row));
    }
    if (static_cast<long long>(tokens.size()) != rows)
        throw ParseError(lineno, "expected " + std::to_string(rows) + " rows, found " + std::to_string(tokens.size()));

    Vocabulary vocab;
    for (auto& t : tokens) {
        try {
            vocab.add(std::move(t));
        } catch (const ArgumentError& e) {
            throw ParseError(e.what());
        }
    }
    EmbeddingSpace<Scalar> space(std::move(vocab), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < space.input.rows(); ++i)
        for (Eigen::Index j = 0; j < dim; ++j) space.input(i, j) = values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return space;
}

}  // namespace cmgen
