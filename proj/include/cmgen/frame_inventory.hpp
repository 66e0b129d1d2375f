#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cmgen {

struct LexicalUnit {
    std::string lemma;
    std::string pos;  ///< coarse tag, lowercased ("v", "n", "a", ...)

    auto operator<=>(const LexicalUnit&) const = default;
};

struct Frame {
    std::string name;
    std::set<LexicalUnit> lexical_units;

    bool operator==(const Frame&) const = default;
};

struct FrameRelation {
    std::string from_frame;
    std::string relation_type;
    std::string to_frame;

    bool operator==(const FrameRelation&) const = default;
};

/// Lowercases and maps spaces/hyphens to underscores ("Cause_to_end" -> "cause_to_end").
std::string normalize_frame_name(std::string_view name);

/// Frames, their lexical units and the relation graph. Immutable once built.
class FrameInventory {
public:
    FrameInventory() = default;

    /// Throws ArgumentError on a duplicate or invalid name.
    void add_frame(Frame frame);
    /// Throws IntegrityError if either endpoint is unknown.
    void add_relation(FrameRelation relation);

    [[nodiscard]] bool contains(std::string_view frame) const;
    [[nodiscard]] const Frame& frame(std::string_view name) const;
    [[nodiscard]] const std::map<std::string, Frame, std::less<>>& frames() const noexcept { return frames_; }
    [[nodiscard]] const std::vector<FrameRelation>& relations() const noexcept { return relations_; }
    [[nodiscard]] std::size_t lexical_unit_count() const;

    /// One-hop neighborhood, relations taken as undirected. Never contains `frame`.
    [[nodiscard]] std::set<std::string> neighbors(std::string_view frame) const;

    /// Lemmas evoking `frame`; with `pos_filter` set only units of that coarse tag.
    [[nodiscard]] std::set<std::string> lexical_units_of(std::string_view frame,
                                                         std::string_view pos_filter = {}) const;

    bool operator==(const FrameInventory&) const = default;

private:
    std::map<std::string, Frame, std::less<>> frames_;
    std::vector<FrameRelation> relations_;
    std::map<std::string, std::set<std::string>, std::less<>> adjacency_;
};

/// Reads the FIV1 text format. Errors carry the offending line number.
FrameInventory load_inventory(std::istream& in);
void save_inventory(const FrameInventory& inventory, std::ostream& out);

}  // namespace cmgen
