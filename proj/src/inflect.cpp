#include "cmgen/inflect.hpp"

#include <array>
#include <cctype>
#include <unordered_map>

#include "cmgen/text.hpp"

namespace cmgen {

namespace {

struct Irregular {
    const char* third;  // nullptr: regular
    const char* past;
    const char* participle;
    const char* gerund;  // nullptr: regular
};

// clang-format off
const std::unordered_map<std::string_view, Irregular>& irregular_lexicon() {
    static const std::unordered_map<std::string_view, Irregular> table{
        {"be", {"is", "was", "been", "being"}},
        {"have", {"has", "had", "had", nullptr}},
        {"do", {"does", "did", "done", nullptr}},
        {"go", {"goes", "went", "gone", nullptr}},
        {"arise", {nullptr, "arose", "arisen", nullptr}},
        {"awake", {nullptr, "awoke", "awoken", nullptr}},
        {"bear", {nullptr, "bore", "borne", nullptr}},
        {"beat", {nullptr, "beat", "beaten", nullptr}},
        {"become", {nullptr, "became", "become", nullptr}},
        {"begin", {nullptr, "began", "begun", "beginning"}},
        {"bend", {nullptr, "bent", "bent", nullptr}},
        {"bet", {nullptr, "bet", "bet", nullptr}},
        {"bind", {nullptr, "bound", "bound", nullptr}},
        {"bite", {nullptr, "bit", "bitten", nullptr}},
        {"bleed", {nullptr, "bled", "bled", nullptr}},
        {"blow", {nullptr, "blew", "blown", nullptr}},
        {"break", {nullptr, "broke", "broken", nullptr}},
        {"breed", {nullptr, "bred", "bred", nullptr}},
        {"bring", {nullptr, "brought", "brought", nullptr}},
        {"build", {nullptr, "built", "built", nullptr}},
        {"burn", {nullptr, "burnt", "burnt", nullptr}},
        {"burst", {nullptr, "burst", "burst", nullptr}},
        {"buy", {nullptr, "bought", "bought", nullptr}},
        {"cast", {nullptr, "cast", "cast", nullptr}},
        {"catch", {nullptr, "caught", "caught", nullptr}},
        {"choose", {nullptr, "chose", "chosen", nullptr}},
        {"cling", {nullptr, "clung", "clung", nullptr}},
        {"come", {nullptr, "came", "come", nullptr}},
        {"cost", {nullptr, "cost", "cost", nullptr}},
        {"creep", {nullptr, "crept", "crept", nullptr}},
        {"cut", {nullptr, "cut", "cut", "cutting"}},
        {"deal", {nullptr, "dealt", "dealt", nullptr}},
        {"dig", {nullptr, "dug", "dug", "digging"}},
        {"draw", {nullptr, "drew", "drawn", nullptr}},
        {"dream", {nullptr, "dreamt", "dreamt", nullptr}},
        {"drink", {nullptr, "drank", "drunk", nullptr}},
        {"drive", {nullptr, "drove", "driven", nullptr}},
        {"eat", {nullptr, "ate", "eaten", nullptr}},
        {"fall", {nullptr, "fell", "fallen", nullptr}},
        {"feed", {nullptr, "fed", "fed", nullptr}},
        {"feel", {nullptr, "felt", "felt", nullptr}},
        {"fight", {nullptr, "fought", "fought", nullptr}},
        {"find", {nullptr, "found", "found", nullptr}},
        {"flee", {nullptr, "fled", "fled", nullptr}},
        {"fling", {nullptr, "flung", "flung", nullptr}},
        {"fly", {"flies", "flew", "flown", nullptr}},
        {"forbid", {nullptr, "forbade", "forbidden", "forbidding"}},
        {"forget", {nullptr, "forgot", "forgotten", "forgetting"}},
        {"forgive", {nullptr, "forgave", "forgiven", nullptr}},
        {"freeze", {nullptr, "froze", "frozen", nullptr}},
        {"get", {nullptr, "got", "gotten", "getting"}},
        {"give", {nullptr, "gave", "given", nullptr}},
        {"grind", {nullptr, "ground", "ground", nullptr}},
        {"grow", {nullptr, "grew", "grown", nullptr}},
        {"hang", {nullptr, "hung", "hung", nullptr}},
        {"hear", {nullptr, "heard", "heard", nullptr}},
        {"hide", {nullptr, "hid", "hidden", nullptr}},
        {"hit", {nullptr, "hit", "hit", "hitting"}},
        {"hold", {nullptr, "held", "held", nullptr}},
        {"hurt", {nullptr, "hurt", "hurt", nullptr}},
        {"keep", {nullptr, "kept", "kept", nullptr}},
        {"kneel", {nullptr, "knelt", "knelt", nullptr}},
        {"know", {nullptr, "knew", "known", nullptr}},
        {"lay", {nullptr, "laid", "laid", nullptr}},
        {"lead", {nullptr, "led", "led", nullptr}},
        {"leap", {nullptr, "leapt", "leapt", nullptr}},
        {"leave", {nullptr, "left", "left", nullptr}},
        {"lend", {nullptr, "lent", "lent", nullptr}},
        {"let", {nullptr, "let", "let", "letting"}},
        {"lie", {nullptr, "lay", "lain", "lying"}},
        {"light", {nullptr, "lit", "lit", nullptr}},
        {"lose", {nullptr, "lost", "lost", nullptr}},
        {"make", {nullptr, "made", "made", nullptr}},
        {"mean", {nullptr, "meant", "meant", nullptr}},
        {"meet", {nullptr, "met", "met", nullptr}},
        {"pay", {nullptr, "paid", "paid", nullptr}},
        {"put", {nullptr, "put", "put", "putting"}},
        {"quit", {nullptr, "quit", "quit", "quitting"}},
        {"read", {nullptr, "read", "read", nullptr}},
        {"ride", {nullptr, "rode", "ridden", nullptr}},
        {"ring", {nullptr, "rang", "rung", nullptr}},
        {"rise", {nullptr, "rose", "risen", nullptr}},
        {"run", {nullptr, "ran", "run", "running"}},
        {"say", {nullptr, "said", "said", nullptr}},
        {"see", {nullptr, "saw", "seen", nullptr}},
        {"seek", {nullptr, "sought", "sought", nullptr}},
        {"sell", {nullptr, "sold", "sold", nullptr}},
        {"send", {nullptr, "sent", "sent", nullptr}},
        {"set", {nullptr, "set", "set", "setting"}},
        {"shake", {nullptr, "shook", "shaken", nullptr}},
        {"shed", {nullptr, "shed", "shed", "shedding"}},
        {"shine", {nullptr, "shone", "shone", nullptr}},
        {"shoot", {nullptr, "shot", "shot", nullptr}},
        {"show", {nullptr, "showed", "shown", nullptr}},
        {"shrink", {nullptr, "shrank", "shrunk", nullptr}},
        {"shut", {nullptr, "shut", "shut", "shutting"}},
        {"sing", {nullptr, "sang", "sung", nullptr}},
        {"sink", {nullptr, "sank", "sunk", nullptr}},
        {"sit", {nullptr, "sat", "sat", "sitting"}},
        {"slay", {nullptr, "slew", "slain", nullptr}},
        {"sleep", {nullptr, "slept", "slept", nullptr}},
        {"slide", {nullptr, "slid", "slid", nullptr}},
        {"sling", {nullptr, "slung", "slung", nullptr}},
        {"slit", {nullptr, "slit", "slit", "slitting"}},
        {"speak", {nullptr, "spoke", "spoken", nullptr}},
        {"speed", {nullptr, "sped", "sped", nullptr}},
        {"spend", {nullptr, "spent", "spent", nullptr}},
        {"spin", {nullptr, "spun", "spun", "spinning"}},
        {"spit", {nullptr, "spat", "spat", "spitting"}},
        {"split", {nullptr, "split", "split", "splitting"}},
        {"spread", {nullptr, "spread", "spread", nullptr}},
        {"spring", {nullptr, "sprang", "sprung", nullptr}},
        {"stand", {nullptr, "stood", "stood", nullptr}},
        {"steal", {nullptr, "stole", "stolen", nullptr}},
        {"stick", {nullptr, "stuck", "stuck", nullptr}},
        {"sting", {nullptr, "stung", "stung", nullptr}},
        {"stink", {nullptr, "stank", "stunk", nullptr}},
        {"strike", {nullptr, "struck", "struck", nullptr}},
        {"strive", {nullptr, "strove", "striven", nullptr}},
        {"swear", {nullptr, "swore", "sworn", nullptr}},
        {"sweep", {nullptr, "swept", "swept", nullptr}},
        {"swell", {nullptr, "swelled", "swollen", nullptr}},
        {"swim", {nullptr, "swam", "swum", "swimming"}},
        {"swing", {nullptr, "swung", "swung", nullptr}},
        {"take", {nullptr, "took", "taken", nullptr}},
        {"teach", {nullptr, "taught", "taught", nullptr}},
        {"tear", {nullptr, "tore", "torn", nullptr}},
        {"tell", {nullptr, "told", "told", nullptr}},
        {"think", {nullptr, "thought", "thought", nullptr}},
        {"throw", {nullptr, "threw", "thrown", nullptr}},
        {"thrust", {nullptr, "thrust", "thrust", nullptr}},
        {"tread", {nullptr, "trod", "trodden", nullptr}},
        {"understand", {nullptr, "understood", "understood", nullptr}},
        {"wake", {nullptr, "woke", "woken", nullptr}},
        {"wear", {nullptr, "wore", "worn", nullptr}},
        {"weave", {nullptr, "wove", "woven", nullptr}},
        {"weep", {nullptr, "wept", "wept", nullptr}},
        {"win", {nullptr, "won", "won", "winning"}},
        {"wind", {nullptr, "wound", "wound", nullptr}},
        {"withdraw", {nullptr, "withdrew", "withdrawn", nullptr}},
        {"wring", {nullptr, "wrung", "wrung", nullptr}},
        {"write", {nullptr, "wrote", "written", nullptr}},
    };
    return table;
}

// Polysyllabic verbs with final stress that double their last consonant.
constexpr std::array<std::string_view, 20> kDoublingStems{
    "admit", "commit", "compel", "control", "deter", "equip", "expel", "incur", "occur", "omit",
    "patrol", "permit", "prefer", "propel", "rebel", "recur", "refer", "regret", "submit", "transfer"};
// clang-format on

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

std::size_t vowel_groups(std::string_view w) {
    std::size_t groups = 0;
    bool in_group = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        // 'y' after a consonant acts as a vowel ("fry"), after a vowel it does not ("play").
        const bool v = is_vowel(w[i]) || (w[i] == 'y' && i > 0 && !is_vowel(w[i - 1]));
        if (v && !in_group) ++groups;
        in_group = v;
    }
    return groups;
}

/// Consonant-vowel-consonant ending on a stressed final syllable.
bool doubles_final(std::string_view w) {
    if (std::find(kDoublingStems.begin(), kDoublingStems.end(), w) != kDoublingStems.end()) return true;
    if (w.size() < 3) return false;
    const char c3 = w[w.size() - 1], c2 = w[w.size() - 2], c1 = w[w.size() - 3];
    if (is_vowel(c3) || c3 == 'w' || c3 == 'x' || c3 == 'y') return false;
    if (!is_vowel(c2) || is_vowel(c1)) return false;
    // "qu" behaves as a consonant cluster: quit -> quitting.
    return vowel_groups(w) == 1 || (w.size() >= 4 && w.substr(w.size() - 4, 2) == "qu" && vowel_groups(w) == 2);
}

bool consonant_y(std::string_view w) { return w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]); }

std::string third_singular(const std::string& w) {
    if (consonant_y(w)) return w.substr(0, w.size() - 1) + "ies";
    if (w.ends_with("s") || w.ends_with("x") || w.ends_with("z") || w.ends_with("ch") || w.ends_with("sh") ||
        w.ends_with("o"))
        return w + "es";
    return w + "s";
}

std::string past(const std::string& w) {
    if (w.ends_with("e")) return w + "d";
    if (consonant_y(w)) return w.substr(0, w.size() - 1) + "ied";
    if (doubles_final(w)) return w + w.back() + "ed";
    if (w.ends_with("c")) return w + "ked";
    return w + "ed";
}

std::string gerund(const std::string& w) {
    if (w.ends_with("ie")) return w.substr(0, w.size() - 2) + "ying";
    if (w.ends_with("e") && !w.ends_with("ee") && !w.ends_with("ye") && !w.ends_with("oe") && w.size() > 2)
        return w.substr(0, w.size() - 1) + "ing";
    if (doubles_final(w)) return w + w.back() + "ing";
    if (w.ends_with("c")) return w + "king";
    return w + "ing";
}

}  // namespace

std::string inflect(std::string_view lemma, Morph morph) {
    const std::string w = detail::lowercase(lemma);
    if (morph == Morph::base || w.empty()) return w;
    const auto& lexicon = irregular_lexicon();
    const auto it = lexicon.find(w);
    if (it != lexicon.end()) {
        const Irregular& irr = it->second;
        switch (morph) {
            case Morph::third_singular:
                if (irr.third) return irr.third;
                break;
            case Morph::past: return irr.past;
            case Morph::past_participle: return irr.participle;
            case Morph::gerund:
                if (irr.gerund) return irr.gerund;
                break;
            case Morph::base: break;
        }
    }
    switch (morph) {
        case Morph::third_singular: return third_singular(w);
        case Morph::past:
        case Morph::past_participle: return past(w);
        case Morph::gerund: return gerund(w);
        case Morph::base: break;
    }
    return w;
}

std::string match_case(std::string_view word, std::string_view model) {
    std::string out(word);
    if (model.empty() || out.empty()) return out;
    const auto upper = [](unsigned char c) { return std::isupper(c) != 0; };
    const bool all_caps = model.size() > 1 && std::all_of(model.begin(), model.end(), [&](char c) {
                              return !std::isalpha(static_cast<unsigned char>(c)) || upper(c);
                          });
    if (all_caps) {
        for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } else if (upper(model.front())) {
        out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
    }
    return out;
}

}  // namespace cmgen
