#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace cmgen {

enum class AgreementLevel { nominal, ordinal, interval };

std::optional<AgreementLevel> parse_level(std::string_view s) noexcept;

/// Raters x items; std::nullopt marks a missing rating.
struct AnnotationMatrix {
    std::vector<std::vector<std::optional<double>>> ratings;

    [[nodiscard]] std::size_t raters() const noexcept { return ratings.size(); }
    [[nodiscard]] std::size_t items() const noexcept { return ratings.empty() ? 0 : ratings.front().size(); }
};

/// Krippendorff's alpha from the value-coincidence matrix. Items with fewer
/// than two ratings are not pairable and are ignored. Returns 1 when the
/// expected disagreement is zero.
/// Throws ArgumentError unless there are >= 2 raters, rows of equal length
/// and at least one item with two ratings.
double krippendorff_alpha(const AnnotationMatrix& matrix, AgreementLevel level = AgreementLevel::interval);

/// Tab-separated, one rater per row, "NA" for missing.
AnnotationMatrix load_annotation_matrix(std::istream& in);

}  // namespace cmgen
