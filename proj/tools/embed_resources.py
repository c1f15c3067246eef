#!/usr/bin/env python3
"""Regenerate include/uiprune/resources/*.hpp from the files in data/.

Run from the repository root after editing any of the shipped tables.
"""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FILES = {
    "stopwords.txt": "stopwords",
    "contractions.csv": "contractions",
    "lemmas.csv": "lemmas",
    "lexicon.csv": "lexicon",
    "informative_seed.csv": "informative_seed",
    "table2_rows.csv": "table2_rows",
}


def main():
    out_dir = ROOT / "include" / "uiprune" / "resources"
    out_dir.mkdir(parents=True, exist_ok=True)
    for fname, ident in FILES.items():
        text = (ROOT / "data" / fname).read_text(encoding="utf-8")
        if ")res\"" in text:
            raise SystemExit(f"{fname}: contains the raw string delimiter")
        body = (
            "// Generated by tools/embed_resources.py from data/" + fname + ". Do not edit.\n"
            "#pragma once\n\n"
            "#include <string_view>\n\n"
            "namespace uiprune::resources {\n\n"
            f"inline constexpr std::string_view {ident} = R\"res({text})res\";\n\n"
            "}  // namespace uiprune::resources\n"
        )
        (out_dir / (ident + ".hpp")).write_text(body, encoding="utf-8")
        print("wrote", out_dir / (ident + ".hpp"))


if __name__ == "__main__":
    main()
