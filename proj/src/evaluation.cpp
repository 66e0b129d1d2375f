#include "cmgen/evaluation.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>

#include "cmgen/error.hpp"
#include "cmgen/text.hpp"

namespace cmgen {

std::string normalize_for_match(std::string_view s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    while (!out.empty() && (std::ispunct(static_cast<unsigned char>(out.back())) || out.back() == ' ')) out.pop_back();
    return out;
}

bool exact_match(std::string_view gold, std::string_view generated) {
    return normalize_for_match(gold) == normalize_for_match(generated);
}

EvalReport aggregate_report(std::span<const EvalTriple> triples, bool signed_rel) {
    if (triples.empty()) throw EmptyInputError("no evaluation triples");
    EvalReport r;
    std::size_t matches = 0;
    for (const auto& t : triples) {
        r.mean_dis += dis_metric(t.gold.vector, t.generated.vector);
        r.mean_rel += rel_metric(t.literal.vector, t.gold.vector, t.generated.vector, signed_rel);
        matches += exact_match(t.gold.surface, t.generated.surface) ? 1 : 0;
    }
    r.count = triples.size();
    const auto n = static_cast<double>(r.count);
    r.mean_dis /= n;
    r.mean_rel /= n;
    r.mean = combined_mean(r.mean_dis, r.mean_rel);
    r.exact_match = static_cast<double>(matches) / n;
    return r;
}

void write_report(const EvalReport& report, std::ostream& out) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "n\tdis\trel\tmean\texact\n%zu\t%.6f\t%.6f\t%.6f\t%.6f\n", report.count,
                  report.mean_dis, report.mean_rel, report.mean, report.exact_match);
    out << buf;
}

std::vector<SentenceEmbedding> load_seb(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing SEB1 header");
    const auto header = detail::split_ws(line);
    long long count = -1, dim = -1;
    if (header.size() != 2 || std::sscanf(header[0].c_str(), "%lld", &count) != 1 ||
        std::sscanf(header[1].c_str(), "%lld", &dim) != 1 || count < 0 || dim < 1)
        throw ParseError(1, "SEB1 header must be '<count> <dim>'");

    std::vector<SentenceEmbedding> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = detail::split(line, '\t');
        if (f.size() != 3 || f[0].empty()) throw ParseError(lineno, "expected 'id<TAB>surface<TAB>vector'");
        const auto values = detail::split_ws(f[2]);
        if (static_cast<long long>(values.size()) != dim)
            throw ParseError(lineno, "expected " + std::to_string(dim) + " values, got " + std::to_string(values.size()));
        SentenceEmbedding row{f[0], f[1], Vector<double>(dim)};
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto& v = values[static_cast<std::size_t>(j)];
            char* end = nullptr;
            row.vector(j) = std::strtod(v.c_str(), &end);
            if (end != v.c_str() + v.size() || !std::isfinite(row.vector(j)))
                throw ParseError(lineno, "bad value '" + v + "'");
        }
        if (!(row.vector.norm() > 0.0)) throw ParseError(lineno, "zero sentence vector for '" + row.id + "'");
        rows.push_back(std::move(row));
    }
    if (static_cast<long long>(rows.size()) != count)
        throw ParseError(lineno, "header declares " + std::to_string(count) + " rows, found " + std::to_string(rows.size()));
    return rows;
}

void save_seb(std::span<const SentenceEmbedding> rows, std::ostream& out) {
    const Eigen::Index dim = rows.empty() ? 1 : rows.front().vector.size();
    out << rows.size() << ' ' << dim << '\n';
    char buf[64];
    for (const auto& r : rows) {
        out << r.id << '\t' << r.surface << '\t';
        for (Eigen::Index j = 0; j < r.vector.size(); ++j) {
            std::snprintf(buf, sizeof buf, j ? " %.9g" : "%.9g", r.vector(j));
            out << buf;
        }
        out << '\n';
    }
}

std::vector<EvalTriple> assemble_triples(std::span<const SentenceEmbedding> rows) {
    std::vector<std::string> order;
    std::map<std::string, std::array<const SentenceEmbedding*, 3>> slots;
    for (const auto& r : rows) {
        const auto slash = r.id.rfind('/');
        if (slash == std::string::npos || slash + 2 != r.id.size())
            throw ParseError("id '" + r.id + "' lacks a /L, /M or /G role suffix");
        const std::string item = r.id.substr(0, slash);
        const char role = r.id.back();
        const int k = role == 'L' ? 0 : role == 'M' ? 1 : role == 'G' ? 2 : -1;
        if (k < 0) throw ParseError("id '" + r.id + "' has unknown role");
        auto [it, fresh] = slots.try_emplace(item, std::array<const SentenceEmbedding*, 3>{});
        if (fresh) order.push_back(item);
        if (it->second[static_cast<std::size_t>(k)]) throw ParseError("duplicate row '" + r.id + "'");
        it->second[static_cast<std::size_t>(k)] = &r;
    }
    std::vector<EvalTriple> triples;
    for (const auto& item : order) {
        const auto& s = slots.at(item);
        if (!s[0] || !s[1] || !s[2]) throw ParseError("item '" + item + "' is missing a role");
        if (s[0]->vector.size() != s[1]->vector.size() || s[0]->vector.size() != s[2]->vector.size())
            throw ParseError("item '" + item + "' mixes vector dimensions");
        triples.push_back({item, *s[0], *s[1], *s[2]});
    }
    return triples;
}

}  // namespace cmgen
