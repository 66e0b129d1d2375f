#pragma once

#include <string>
#include <string_view>

#include "cmgen/corpus.hpp"

namespace cmgen {

/// English verb form for `lemma`. Irregular verbs come from a bundled
/// lexicon; everything else follows the regular spelling rules
/// (+s/+es/-ies, +ed/+d/-ied, +ing with e-drop and ie->y, final-consonant
/// doubling). Lowercase in, lowercase out.
std::string inflect(std::string_view lemma, Morph morph);

/// Copies the capitalization pattern of `model` (all caps or leading capital)
/// onto `word`.
std::string match_case(std::string_view word, std::string_view model);

}  // namespace cmgen
