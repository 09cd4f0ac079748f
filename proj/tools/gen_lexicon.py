#!/usr/bin/env python3
"""Regenerate include/plainsum/detail/lexicon_data.hpp from the data/ word lists."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
data = root / "data"


def entries(name):
    for line in (data / name).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


stop = list(entries("stopwords.txt"))
lemmas = [line.split("\t") for line in entries("lemma_exceptions.txt")]

out = [
    "// Generated by tools/gen_lexicon.py from data/. Do not edit by hand.",
    "#pragma once",
    "",
    "#include <array>",
    "#include <string_view>",
    "#include <utility>",
    "",
    "namespace plainsum::detail {",
    "",
    f"inline constexpr std::array<std::string_view, {len(stop)}> kStopwords = {{",
]
out += [f'    "{w}",' for w in stop]
out += [
    "};",
    "",
    f"inline constexpr std::array<std::pair<std::string_view, std::string_view>, {len(lemmas)}>",
    "    kLemmaExceptions = {{",
]
out += [f'        {{"{f}", "{l}"}},' for f, l in lemmas]
out += ["    }};", "", "}  // namespace plainsum::detail", ""]
(root / "include/plainsum/detail/lexicon_data.hpp").write_text("\n".join(out), encoding="utf-8")
