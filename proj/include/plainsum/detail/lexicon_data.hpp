// Generated by tools/gen_lexicon.py from data/. Do not edit by hand.
#pragma once

#include <array>
#include <string_view>
#include <utility>

namespace plainsum::detail {

inline constexpr std::array<std::string_view, 127> kStopwords = {
    "i",
    "me",
    "my",
    "myself",
    "we",
    "our",
    "ours",
    "ourselves",
    "you",
    "your",
    "yours",
    "yourself",
    "yourselves",
    "he",
    "him",
    "his",
    "himself",
    "she",
    "her",
    "hers",
    "herself",
    "it",
    "its",
    "itself",
    "they",
    "them",
    "their",
    "theirs",
    "themselves",
    "what",
    "which",
    "who",
    "whom",
    "this",
    "that",
    "these",
    "those",
    "am",
    "is",
    "are",
    "was",
    "were",
    "be",
    "been",
    "being",
    "have",
    "has",
    "had",
    "having",
    "do",
    "does",
    "did",
    "doing",
    "a",
    "an",
    "the",
    "and",
    "but",
    "if",
    "or",
    "because",
    "as",
    "until",
    "while",
    "of",
    "at",
    "by",
    "for",
    "with",
    "about",
    "against",
    "between",
    "into",
    "through",
    "during",
    "before",
    "after",
    "above",
    "below",
    "to",
    "from",
    "up",
    "down",
    "in",
    "out",
    "on",
    "off",
    "over",
    "under",
    "again",
    "further",
    "then",
    "once",
    "here",
    "there",
    "when",
    "where",
    "why",
    "how",
    "all",
    "any",
    "both",
    "each",
    "few",
    "more",
    "most",
    "other",
    "some",
    "such",
    "no",
    "nor",
    "not",
    "only",
    "own",
    "same",
    "so",
    "than",
    "too",
    "very",
    "s",
    "t",
    "can",
    "will",
    "just",
    "don",
    "should",
    "now",
};

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 273>
    kLemmaExceptions = {{
        {"am", "be"},
        {"is", "be"},
        {"are", "be"},
        {"was", "be"},
        {"were", "be"},
        {"been", "be"},
        {"being", "be"},
        {"has", "have"},
        {"had", "have"},
        {"having", "have"},
        {"does", "do"},
        {"did", "do"},
        {"done", "do"},
        {"doing", "do"},
        {"goes", "go"},
        {"went", "go"},
        {"gone", "go"},
        {"made", "make"},
        {"gave", "give"},
        {"given", "give"},
        {"took", "take"},
        {"taken", "take"},
        {"sent", "send"},
        {"paid", "pay"},
        {"said", "say"},
        {"got", "get"},
        {"gotten", "get"},
        {"came", "come"},
        {"knew", "know"},
        {"known", "know"},
        {"found", "find"},
        {"held", "hold"},
        {"kept", "keep"},
        {"left", "leave"},
        {"told", "tell"},
        {"thought", "think"},
        {"brought", "bring"},
        {"bought", "buy"},
        {"sold", "sell"},
        {"chose", "choose"},
        {"chosen", "choose"},
        {"wrote", "write"},
        {"written", "write"},
        {"writing", "write"},
        {"shown", "show"},
        {"saw", "see"},
        {"seen", "see"},
        {"began", "begin"},
        {"begun", "begin"},
        {"ran", "run"},
        {"spent", "spend"},
        {"built", "build"},
        {"lost", "lose"},
        {"meant", "mean"},
        {"met", "meet"},
        {"became", "become"},
        {"drove", "drive"},
        {"driven", "drive"},
        {"ate", "eat"},
        {"eaten", "eat"},
        {"fell", "fall"},
        {"fallen", "fall"},
        {"forgot", "forget"},
        {"forgotten", "forget"},
        {"forgave", "forgive"},
        {"forgiven", "forgive"},
        {"froze", "freeze"},
        {"frozen", "freeze"},
        {"grew", "grow"},
        {"grown", "grow"},
        {"hid", "hide"},
        {"hidden", "hide"},
        {"rode", "ride"},
        {"ridden", "ride"},
        {"rose", "rise"},
        {"risen", "rise"},
        {"arose", "arise"},
        {"arisen", "arise"},
        {"shook", "shake"},
        {"shaken", "shake"},
        {"spoke", "speak"},
        {"spoken", "speak"},
        {"stole", "steal"},
        {"stolen", "steal"},
        {"struck", "strike"},
        {"swore", "swear"},
        {"sworn", "swear"},
        {"threw", "throw"},
        {"thrown", "throw"},
        {"woke", "wake"},
        {"woken", "wake"},
        {"wore", "wear"},
        {"worn", "wear"},
        {"withdrew", "withdraw"},
        {"withdrawn", "withdraw"},
        {"undertook", "undertake"},
        {"undertaken", "undertake"},
        {"overtook", "overtake"},
        {"mistook", "mistake"},
        {"mistaken", "mistake"},
        {"sought", "seek"},
        {"taught", "teach"},
        {"caught", "catch"},
        {"fought", "fight"},
        {"felt", "feel"},
        {"dealt", "deal"},
        {"lent", "lend"},
        {"bent", "bend"},
        {"slept", "sleep"},
        {"led", "lead"},
        {"fed", "feed"},
        {"fled", "flee"},
        {"understood", "understand"},
        {"stood", "stand"},
        {"withheld", "withhold"},
        {"upheld", "uphold"},
        {"forbade", "forbid"},
        {"forbidden", "forbid"},
        {"bound", "bind"},
        {"won", "win"},
        {"sat", "sit"},
        {"shot", "shoot"},
        {"hung", "hang"},
        {"hanged", "hang"},
        {"hanging", "hang"},
        {"laid", "lay"},
        {"lain", "lie"},
        {"dying", "die"},
        {"lying", "lie"},
        {"tying", "tie"},
        {"children", "child"},
        {"men", "man"},
        {"women", "woman"},
        {"feet", "foot"},
        {"teeth", "tooth"},
        {"geese", "goose"},
        {"mice", "mouse"},
        {"criteria", "criterion"},
        {"phenomena", "phenomenon"},
        {"analyses", "analysis"},
        {"indices", "index"},
        {"appendices", "appendix"},
        {"matrices", "matrix"},
        {"lives", "life"},
        {"wives", "wife"},
        {"knives", "knife"},
        {"leaves", "leaf"},
        {"halves", "half"},
        {"shelves", "shelf"},
        {"wolves", "wolf"},
        {"thieves", "thief"},
        {"cookies", "cookie"},
        {"movies", "movie"},
        {"zombies", "zombie"},
        {"calories", "calorie"},
        {"rookies", "rookie"},
        {"selfies", "selfie"},
        {"freebies", "freebie"},
        {"viruses", "virus"},
        {"bonuses", "bonus"},
        {"statuses", "status"},
        {"campuses", "campus"},
        {"buses", "bus"},
        {"ads", "ad"},
        {"caches", "cache"},
        {"cached", "cache"},
        {"caching", "cache"},
        {"headaches", "headache"},
        {"news", "news"},
        {"series", "series"},
        {"species", "species"},
        {"always", "always"},
        {"perhaps", "perhaps"},
        {"whereas", "whereas"},
        {"sometimes", "sometimes"},
        {"towards", "towards"},
        {"besides", "besides"},
        {"afterwards", "afterwards"},
        {"nevertheless", "nevertheless"},
        {"alias", "alias"},
        {"aliases", "alias"},
        {"bias", "bias"},
        {"biased", "bias"},
        {"canvas", "canvas"},
        {"atlas", "atlas"},
        {"focus", "focus"},
        {"focused", "focus"},
        {"focusing", "focus"},
        {"focuses", "focus"},
        {"lens", "lens"},
        {"during", "during"},
        {"thing", "thing"},
        {"nothing", "nothing"},
        {"something", "something"},
        {"anything", "anything"},
        {"everything", "everything"},
        {"morning", "morning"},
        {"evening", "evening"},
        {"ceiling", "ceiling"},
        {"sibling", "sibling"},
        {"wedding", "wedding"},
        {"pudding", "pudding"},
        {"awning", "awning"},
        {"hundred", "hundred"},
        {"sacred", "sacred"},
        {"naked", "naked"},
        {"wicked", "wicked"},
        {"kindred", "kindred"},
        {"beloved", "beloved"},
        {"proceed", "proceed"},
        {"proceeded", "proceed"},
        {"exceed", "exceed"},
        {"exceeded", "exceed"},
        {"succeed", "succeed"},
        {"succeeded", "succeed"},
        {"indeed", "indeed"},
        {"freed", "free"},
        {"added", "add"},
        {"adding", "add"},
        {"created", "create"},
        {"creating", "create"},
        {"recreated", "recreate"},
        {"guided", "guide"},
        {"guiding", "guide"},
        {"persuaded", "persuade"},
        {"persuading", "persuade"},
        {"stored", "store"},
        {"storing", "store"},
        {"ignored", "ignore"},
        {"ignoring", "ignore"},
        {"explored", "explore"},
        {"exploring", "explore"},
        {"restored", "restore"},
        {"restoring", "restore"},
        {"scored", "score"},
        {"scoring", "score"},
        {"typed", "type"},
        {"typing", "type"},
        {"scoped", "scope"},
        {"hoped", "hope"},
        {"hoping", "hope"},
        {"coped", "cope"},
        {"invited", "invite"},
        {"inviting", "invite"},
        {"cited", "cite"},
        {"citing", "cite"},
        {"excited", "excite"},
        {"united", "unite"},
        {"recited", "recite"},
        {"incited", "incite"},
        {"ignited", "ignite"},
        {"expedited", "expedite"},
        {"phoned", "phone"},
        {"cloned", "clone"},
        {"cloning", "clone"},
        {"postponed", "postpone"},
        {"postponing", "postpone"},
        {"zoned", "zone"},
        {"synced", "sync"},
        {"syncing", "sync"},
        {"erred", "err"},
        {"egged", "egg"},
        {"broke", "break"},
        {"broken", "break"},
        {"drew", "draw"},
        {"drawn", "draw"},
        {"flew", "fly"},
        {"flown", "fly"},
        {"sang", "sing"},
        {"sung", "sing"},
        {"dug", "dig"},
        {"stuck", "stick"},
        {"swung", "swing"},
    }};

}  // namespace plainsum::detail
