#include "cmgen/frame_inventory.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include "cmgen/error.hpp"
#include "cmgen/text.hpp"

namespace cmgen {

std::string normalize_frame_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (c == ' ' || c == '-')
            out.push_back('_');
        else
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

namespace {

bool valid_name(std::string_view name) {
    return !name.empty() &&
           std::none_of(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

void FrameInventory::add_frame(Frame frame) {
    frame.name = normalize_frame_name(frame.name);
    if (!valid_name(frame.name)) throw ArgumentError("invalid frame name '" + frame.name + "'");
    for (const auto& lu : frame.lexical_units)
        if (lu.lemma.empty()) throw ArgumentError("empty lemma in frame '" + frame.name + "'");
    if (frames_.contains(frame.name)) throw ArgumentError("duplicate frame '" + frame.name + "'");
    adjacency_[frame.name];
    auto name = frame.name;
    frames_.emplace(std::move(name), std::move(frame));
}

void FrameInventory::add_relation(FrameRelation relation) {
    relation.from_frame = normalize_frame_name(relation.from_frame);
    relation.to_frame = normalize_frame_name(relation.to_frame);
    for (const auto* end : {&relation.from_frame, &relation.to_frame})
        if (!frames_.contains(*end)) throw IntegrityError("relation references unknown frame '" + *end + "'");
    if (relation.from_frame != relation.to_frame) {
        adjacency_[relation.from_frame].insert(relation.to_frame);
        adjacency_[relation.to_frame].insert(relation.from_frame);
    }
    relations_.push_back(std::move(relation));
}

bool FrameInventory::contains(std::string_view frame) const { return frames_.contains(frame); }

const Frame& FrameInventory::frame(std::string_view name) const {
    auto it = frames_.find(name);
    if (it == frames_.end()) throw LookupError("unknown frame '" + std::string(name) + "'");
    return it->second;
}

std::size_t FrameInventory::lexical_unit_count() const {
    std::size_t n = 0;
    for (const auto& [_, f] : frames_) n += f.lexical_units.size();
    return n;
}

std::set<std::string> FrameInventory::neighbors(std::string_view frame) const {
    auto it = adjacency_.find(frame);
    if (it == adjacency_.end()) throw LookupError("unknown frame '" + std::string(frame) + "'");
    return it->second;
}

std::set<std::string> FrameInventory::lexical_units_of(std::string_view frame, std::string_view pos_filter) const {
    const std::string pos = detail::lowercase(pos_filter);
    std::set<std::string> out;
    for (const auto& lu : this->frame(frame).lexical_units)
        if (pos.empty() || lu.pos == pos) out.insert(lu.lemma);
    return out;
}

FrameInventory load_inventory(std::istream& in) {
    FrameInventory inv;
    std::vector<Frame> pending;
    std::vector<std::pair<std::size_t, FrameRelation>> relations;
    std::string line;
    std::size_t lineno = 0;
    bool seen_relation = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = detail::split(line, '\t');
        const std::string& tag = fields.front();
        if (tag == "F") {
            if (fields.size() != 2) throw ParseError(lineno, "F line needs 1 field");
            if (seen_relation) throw ParseError(lineno, "frame declared after relations");
            pending.push_back(Frame{fields[1], {}});
        } else if (tag == "L") {
            if (fields.size() != 3) throw ParseError(lineno, "L line needs 2 fields");
            if (pending.empty()) throw ParseError(lineno, "lexical unit before any frame");
            if (fields[1].empty()) throw ParseError(lineno, "empty lemma");
            pending.back().lexical_units.insert({fields[1], detail::lowercase(fields[2])});
        } else if (tag == "R") {
            if (fields.size() != 4) throw ParseError(lineno, "R line needs 3 fields");
            if (fields[2].empty()) throw ParseError(lineno, "empty relation type");
            seen_relation = true;
            relations.emplace_back(lineno, FrameRelation{fields[1], fields[2], fields[3]});
        } else {
            throw ParseError(lineno, "unknown record tag '" + tag + "'");
        }
    }
    for (auto& f : pending) {
        try {
            inv.add_frame(std::move(f));
        } catch (const ArgumentError& e) {
            throw ParseError(e.what());
        }
    }
    for (auto& [ln, r] : relations) inv.add_relation(std::move(r));
    return inv;
}

void save_inventory(const FrameInventory& inventory, std::ostream& out) {
    for (const auto& [name, f] : inventory.frames()) {
        out << "F\t" << name << '\n';
        for (const auto& lu : f.lexical_units) out << "L\t" << lu.lemma << '\t' << lu.pos << '\n';
    }
    for (const auto& r : inventory.relations())
        out << "R\t" << r.from_frame << '\t' << r.relation_type << '\t' << r.to_frame << '\n';
}

}  // namespace cmgen
