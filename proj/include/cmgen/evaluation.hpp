#pragma once

#include <cmath>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmgen/embedding.hpp"
#include "cmgen/linalg.hpp"

namespace cmgen {

/// Cosine distance between gold and generated sentence vectors, in [0, 2].
template <typename DerivedM, typename DerivedG>
typename DerivedM::Scalar dis_metric(const Eigen::MatrixBase<DerivedM>& gold, const Eigen::MatrixBase<DerivedG>& generated) {
    using Scalar = typename DerivedM::Scalar;
    return Scalar(1) - cosine(gold, generated);
}

/// How far the generated output moves the literal-side cosine away from the
/// gold's: |cos(L, M) - cos(L, G)|, or the signed difference when `signed_diff`.
template <typename DerivedL, typename DerivedM, typename DerivedG>
typename DerivedL::Scalar rel_metric(const Eigen::MatrixBase<DerivedL>& literal, const Eigen::MatrixBase<DerivedM>& gold,
                                     const Eigen::MatrixBase<DerivedG>& generated, bool signed_diff = false) {
    const auto d = cosine(literal, gold) - cosine(literal, generated);
    return signed_diff ? d : std::abs(d);
}

/// Lowercase, collapse whitespace, strip trailing punctuation.
std::string normalize_for_match(std::string_view s);
bool exact_match(std::string_view gold, std::string_view generated);

struct SentenceEmbedding {
    std::string id;
    std::string surface;
    Vector<double> vector;
};

struct EvalTriple {
    std::string id;
    SentenceEmbedding literal;
    SentenceEmbedding gold;
    SentenceEmbedding generated;
};

struct EvalReport {
    std::size_t count = 0;
    double mean_dis = 0.0;
    double mean_rel = 0.0;
    double mean = 0.0;  ///< (mean_dis + mean_rel) / 2
    double exact_match = 0.0;
};

/// The "mean" column of a system's report row.
inline double combined_mean(double mean_dis, double mean_rel) { return (mean_dis + mean_rel) / 2.0; }

/// Per-item dis/rel averaged over items. Throws EmptyInputError on no input.
EvalReport aggregate_report(std::span<const EvalTriple> triples, bool signed_rel = false);
void write_report(const EvalReport& report, std::ostream& out);

/// SEB1: "<count> <dim>" header, then `id<TAB>surface<TAB>v1 ... vdim`.
std::vector<SentenceEmbedding> load_seb(std::istream& in);
void save_seb(std::span<const SentenceEmbedding> rows, std::ostream& out);

/// Groups rows whose ids end in "/L", "/M" and "/G" into triples, in order
/// of first appearance. Throws ParseError on a missing or repeated role.
std::vector<EvalTriple> assemble_triples(std::span<const SentenceEmbedding> rows);

}  // namespace cmgen
