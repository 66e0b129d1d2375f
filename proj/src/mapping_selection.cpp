#include <algorithm>

#include "cmgen/error.hpp"
#include "cmgen/mapper.hpp"

namespace cmgen {

std::string select_rare_mapping(const MappingFrequencyTable& table, std::string_view target, Rng& rng) {
    const auto sources = table.sources_for(target);
    if (sources.empty()) throw LookupError("no observed mapping for target frame '" + std::string(target) + "'");

    std::vector<std::size_t> counts;
    for (const auto& [_, c] : sources) counts.push_back(c);
    std::sort(counts.begin(), counts.end());
    const std::size_t median = counts[(counts.size() - 1) / 2];

    std::vector<std::string> pool;
    for (const auto& [name, c] : sources)
        if (c == median) pool.push_back(name);
    return pool[rng.index(pool.size())];
}

std::string select_unseen_mapping(const MappingFrequencyTable& table, const FrameInventory& inv,
                                  std::string_view target, Rng& rng) {
    const auto observed = table.sources_for(target);
    std::vector<std::string> pool;
    for (const auto& [name, _] : inv.frames())
        if (name != target && !observed.contains(name)) pool.push_back(name);
    if (pool.empty()) throw ExhaustedError("every frame is already a source for '" + std::string(target) + "'");
    return pool[rng.index(pool.size())];
}

}  // namespace cmgen
