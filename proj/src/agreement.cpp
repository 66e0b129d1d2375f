#include "cmgen/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <string>

#include "cmgen/error.hpp"
#include "cmgen/text.hpp"

namespace cmgen {

std::optional<AgreementLevel> parse_level(std::string_view s) noexcept {
    if (s == "nominal") return AgreementLevel::nominal;
    if (s == "ordinal") return AgreementLevel::ordinal;
    if (s == "interval") return AgreementLevel::interval;
    return std::nullopt;
}

double krippendorff_alpha(const AnnotationMatrix& matrix, AgreementLevel level) {
    if (matrix.raters() < 2) throw ArgumentError("agreement needs at least two raters");
    const std::size_t items = matrix.items();
    for (const auto& row : matrix.ratings)
        if (row.size() != items) throw ArgumentError("rater rows have different lengths");

    std::vector<double> values;
    for (const auto& row : matrix.ratings)
        for (const auto& v : row)
            if (v) values.push_back(*v);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t V = values.size();
    const auto index_of = [&](double v) {
        return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
    };

    // o[c][k]: coincidences of value c with value k across pairable items.
    std::vector<double> o(V * V, 0.0);
    std::vector<std::size_t> counts(V);
    bool pairable = false;
    for (std::size_t u = 0; u < items; ++u) {
        std::fill(counts.begin(), counts.end(), 0);
        std::size_t m = 0;
        for (const auto& row : matrix.ratings)
            if (row[u]) {
                ++counts[index_of(*row[u])];
                ++m;
            }
        if (m < 2) continue;
        pairable = true;
        const double w = 1.0 / static_cast<double>(m - 1);
        for (std::size_t c = 0; c < V; ++c) {
            if (!counts[c]) continue;
            for (std::size_t k = 0; k < V; ++k) {
                const double pairs = c == k ? static_cast<double>(counts[c]) * static_cast<double>(counts[c] - 1)
                                            : static_cast<double>(counts[c]) * static_cast<double>(counts[k]);
                o[c * V + k] += pairs * w;
            }
        }
    }
    if (!pairable) throw ArgumentError("agreement needs at least one item with two ratings");

    std::vector<double> n_c(V, 0.0);
    for (std::size_t c = 0; c < V; ++c)
        for (std::size_t k = 0; k < V; ++k) n_c[c] += o[c * V + k];
    double n = 0.0;
    for (double x : n_c) n += x;

    const auto delta = [&](std::size_t c, std::size_t k) -> double {
        switch (level) {
            case AgreementLevel::nominal: return c == k ? 0.0 : 1.0;
            case AgreementLevel::interval: {
                const double d = values[c] - values[k];
                return d * d;
            }
            case AgreementLevel::ordinal: {
                const auto [lo, hi] = std::minmax(c, k);
                double s = 0.0;
                for (std::size_t g = lo; g <= hi; ++g) s += n_c[g];
                s -= (n_c[c] + n_c[k]) / 2.0;
                return s * s;
            }
        }
        return 0.0;
    };

    double observed = 0.0, expected = 0.0;
    for (std::size_t c = 0; c < V; ++c)
        for (std::size_t k = 0; k < V; ++k) {
            const double d = delta(c, k);
            observed += o[c * V + k] * d;
            expected += n_c[c] * n_c[k] * d;
        }
    if (expected == 0.0) return 1.0;
    return 1.0 - (n - 1.0) * observed / expected;
}

AnnotationMatrix load_annotation_matrix(std::istream& in) {
    AnnotationMatrix m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::optional<double>> row;
        for (const auto& cell : detail::split(line, '\t')) {
            if (cell == "NA") {
                row.emplace_back();
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v))
                throw ParseError(lineno, "bad rating '" + cell + "'");
            row.emplace_back(v);
        }
        if (!m.ratings.empty() && row.size() != m.items())
            throw ParseError(lineno, "expected " + std::to_string(m.items()) + " ratings");
        m.ratings.push_back(std::move(row));
    }
    return m;
}

}  // namespace cmgen
