#include "cmgen/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>

#include "cmgen/error.hpp"
#include "cmgen/frame_inventory.hpp"
#include "cmgen/text.hpp"

namespace cmgen {

std::string_view to_string(Morph m) noexcept {
    switch (m) {
        case Morph::base: return "base";
        case Morph::third_singular: return "3sg";
        case Morph::past: return "past";
        case Morph::past_participle: return "pastpart";
        case Morph::gerund: return "gerund";
    }
    return "base";
}

std::optional<Morph> parse_morph(std::string_view s) noexcept {
    if (s == "base") return Morph::base;
    if (s == "3sg" || s == "3rd-person-singular") return Morph::third_singular;
    if (s == "past") return Morph::past;
    if (s == "pastpart" || s == "past-participle") return Morph::past_participle;
    if (s == "gerund") return Morph::gerund;
    return std::nullopt;
}

std::string TaggedSentence::text() const { return detail::join(tokens, " "); }

void validate(const TaggedSentence& s) {
    if (s.tokens.empty()) throw ArgumentError("sentence has no tokens");
    if (s.focus_index >= s.tokens.size())
        throw ArgumentError("focus index " + std::to_string(s.focus_index) + " out of range for " +
                            std::to_string(s.tokens.size()) + " tokens");
    if (s.frame_label.empty()) throw ArgumentError("empty frame label");
    if (s.focus_lemma.empty()) throw ArgumentError("empty focus lemma");
}

std::string frame_token(std::string_view frame) { return std::string(frame_prefix) + std::string(frame); }

bool is_frame_token(std::string_view token) noexcept { return token.starts_with(frame_prefix); }

std::string_view frame_of_token(std::string_view token) noexcept {
    return is_frame_token(token) ? token.substr(frame_prefix.size()) : token;
}

std::vector<std::string> TrainingWindow::sequence() const {
    std::vector<std::string> seq;
    seq.reserve(context.size() + 1);
    const auto split = std::min(center_offset, context.size());
    seq.insert(seq.end(), context.begin(), context.begin() + static_cast<std::ptrdiff_t>(split));
    seq.push_back(center);
    seq.insert(seq.end(), context.begin() + static_cast<std::ptrdiff_t>(split), context.end());
    return seq;
}

TrainingWindow extract_window(const TaggedSentence& s, std::size_t radius) {
    validate(s);
    const std::size_t lo = s.focus_index >= radius ? s.focus_index - radius : 0;
    const std::size_t hi = std::min(s.tokens.size(), s.focus_index + radius + 1);
    TrainingWindow w;
    w.center = s.tokens[s.focus_index];
    for (std::size_t i = lo; i < hi; ++i)
        if (i != s.focus_index) w.context.push_back(s.tokens[i]);
    w.center_offset = s.focus_index - lo;
    return w;
}

TrainingWindow substitute_frame_label(TrainingWindow w, std::string_view frame) {
    if (frame.empty()) throw ArgumentError("empty frame label");
    w.center = frame_token(normalize_frame_name(frame_of_token(frame)));
    return w;
}

bool symbol_overlap_filter(const std::vector<std::string>& a, const std::vector<std::string>& b,
                           std::size_t threshold) {
    if (a.size() != 5 || b.size() != 5) throw ArgumentError("symbol lists must have exactly 5 entries");
    std::set<std::string> sa, sb;
    for (const auto& s : a) sa.insert(detail::lowercase(s));
    for (const auto& s : b) sb.insert(detail::lowercase(s));
    std::size_t shared = 0;
    for (const auto& s : sa) shared += sb.count(s);
    return shared >= threshold;
}

namespace {

constexpr std::string_view kEot = "<EOT>";
constexpr std::string_view kVerb = "<V>";

}  // namespace

std::string emit_control_record(const LiteralMetaphoricPair& pair) {
    const auto& lit = pair.literal;
    validate(lit);
    validate(pair.metaphoric);
    for (const auto& t : lit.tokens)
        if (t == kVerb || t == kEot) throw ArgumentError("literal sentence contains a reserved delimiter");

    std::vector<std::string> parts{pair.metaphoric.frame_label, std::string(kEot)};
    parts.insert(parts.end(), lit.tokens.begin(), lit.tokens.begin() + static_cast<std::ptrdiff_t>(lit.focus_index));
    parts.emplace_back(kVerb);
    parts.push_back(lit.focus_token());
    parts.emplace_back(":");
    parts.push_back(lit.frame_label);
    parts.emplace_back(kVerb);
    parts.insert(parts.end(), lit.tokens.begin() + static_cast<std::ptrdiff_t>(lit.focus_index) + 1, lit.tokens.end());
    return detail::join(parts, " ");
}

ControlRecord parse_control_record(std::string_view record) {
    const auto parts = detail::split_ws(record);
    if (parts.size() < 7 || parts[1] != kEot) throw ParseError("control record: missing '<EOT>' after source frame");
    const auto first_v = std::find(parts.begin() + 2, parts.end(), kVerb);
    if (first_v == parts.end() || parts.end() - first_v < 5)
        throw ParseError("control record: incomplete '<V> focus : target <V>' segment");
    if (first_v[2] != ":" || first_v[4] != kVerb) throw ParseError("control record: malformed focus segment");

    ControlRecord r;
    r.source_frame = parts[0];
    r.tokens.assign(parts.begin() + 2, first_v);
    r.focus_index = r.tokens.size();
    r.tokens.push_back(first_v[1]);
    r.target_frame = first_v[3];
    r.tokens.insert(r.tokens.end(), first_v + 5, parts.end());
    return r;
}

std::size_t MappingFrequencyTable::total() const {
    std::size_t n = 0;
    for (const auto& [_, c] : counts) n += c;
    return n;
}

std::map<std::string, std::size_t> MappingFrequencyTable::sources_for(std::string_view target) const {
    std::map<std::string, std::size_t> out;
    for (auto it = counts.lower_bound({std::string(target), std::string()});
         it != counts.end() && it->first.first == target; ++it)
        out.emplace(it->first.second, it->second);
    return out;
}

MappingFrequencyTable build_mapping_table(const std::vector<LiteralMetaphoricPair>& pairs) {
    MappingFrequencyTable table;
    for (const auto& p : pairs) ++table.counts[{normalize_frame_name(p.literal.frame_label), normalize_frame_name(p.metaphoric.frame_label)}];
    return table;
}

void save_mapping_table(const MappingFrequencyTable& table, std::ostream& out) {
    for (const auto& [key, count] : table.counts) out << key.first << '\t' << key.second << '\t' << count << '\n';
}

namespace {

template <typename Int>
bool parse_int(std::string_view s, Int& value) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    return ec == std::errc() && ptr == end && !s.empty();
}

}  // namespace

MappingFrequencyTable load_mapping_table(std::istream& in) {
    MappingFrequencyTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        const auto f = detail::split(line, '\t');
        std::size_t count = 0;
        if (f.size() != 3 || !parse_int(f[2], count) || count == 0)
            throw ParseError(lineno, "expected 'target<TAB>source<TAB>positive count'");
        table.counts[{normalize_frame_name(f[0]), normalize_frame_name(f[1])}] += count;
    }
    return table;
}

TaggedSentence parse_ftc_record(std::string_view line) {
    const auto f = detail::split(line, '\t');
    if (f.size() != 5) throw ArgumentError("expected 5 tab-separated fields, got " + std::to_string(f.size()));
    TaggedSentence s;
    s.tokens = detail::split_ws(f[0]);
    long long idx = 0;
    if (!parse_int(f[1], idx) || idx < 0) throw ArgumentError("focus index '" + f[1] + "' is not a non-negative integer");
    s.focus_index = static_cast<std::size_t>(idx);
    s.frame_label = normalize_frame_name(f[2]);
    s.focus_lemma = f[3];
    const auto morph = parse_morph(f[4]);
    if (!morph) throw ArgumentError("unknown morph tag '" + f[4] + "'");
    s.focus_morph = *morph;
    validate(s);
    return s;
}

FtcParseResult parse_ftc(std::istream& in) {
    FtcParseResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            result.sentences.push_back(parse_ftc_record(line));
        } catch (const ArgumentError& e) {
            result.errors.push_back({lineno, e.what()});
        }
    }
    return result;
}

std::string format_ftc_record(const TaggedSentence& s) {
    return s.text() + '\t' + std::to_string(s.focus_index) + '\t' + s.frame_label + '\t' + s.focus_lemma + '\t' +
           std::string(to_string(s.focus_morph));
}

std::vector<LiteralMetaphoricPair> parse_pfc(std::istream& in) {
    std::vector<LiteralMetaphoricPair> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto sep = line.find("\t|\t");
        if (sep == std::string::npos) throw ParseError(lineno, "missing '<TAB>|<TAB>' separator");
        try {
            pairs.push_back({parse_ftc_record(std::string_view(line).substr(0, sep)),
                             parse_ftc_record(std::string_view(line).substr(sep + 3))});
        } catch (const ArgumentError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return pairs;
}

std::string format_window(const TrainingWindow& w) {
    const auto split = static_cast<std::ptrdiff_t>(std::min(w.center_offset, w.context.size()));
    const std::vector<std::string> left(w.context.begin(), w.context.begin() + split);
    const std::vector<std::string> right(w.context.begin() + split, w.context.end());
    return detail::join(left, " ") + '\t' + w.center + '\t' + detail::join(right, " ");
}

TrainingWindow parse_window(std::string_view line) {
    const auto f = detail::split(line, '\t');
    if (f.size() != 3 || f[1].empty()) throw ArgumentError("expected 'left<TAB>center<TAB>right'");
    TrainingWindow w;
    w.center = f[1];
    w.context = detail::split_ws(f[0]);
    w.center_offset = w.context.size();
    for (auto& t : detail::split_ws(f[2])) w.context.push_back(std::move(t));
    return w;
}

std::vector<TrainingWindow> read_windows(std::istream& in) {
    std::vector<TrainingWindow> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_window(line));
        } catch (const ArgumentError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

}  // namespace cmgen
