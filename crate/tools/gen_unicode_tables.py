#!/usr/bin/env python3
"""Regenerates the bundled Unicode tables and derived data files.

Requires `unicodedata2==14.0.0` so that the output is pinned to Unicode 14.0.0
regardless of the interpreter's own `unicodedata` version.

    python3 tools/gen_unicode_tables.py
"""
import os
import unicodedata2 as ucd

assert ucd.unidata_version == "14.0.0", ucd.unidata_version

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
CORE = os.path.join(ROOT, "crates", "core")

ARABIC_RANGES = [
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
]
PRESENTATION_RANGES = [(0xFB50, 0xFDFF), (0xFE70, 0xFEFF)]


def codepoints(ranges):
    for lo, hi in ranges:
        for cp in range(lo, hi + 1):
            if ucd.name(chr(cp), None) is not None:
                yield cp


def hexs(seq):
    return " ".join("%04X" % c for c in seq)


def write_tables():
    canonical = []
    ccc = []
    compat = []
    for cp in codepoints(ARABIC_RANGES):
        ch = chr(cp)
        decomp = ucd.decomposition(ch)
        if ucd.combining(ch):
            ccc.append((cp, ucd.combining(ch)))
        if not decomp:
            continue
        if decomp.startswith("<"):
            parts = [int(p, 16) for p in decomp.split()[1:]]
            compat.append((cp, parts))
        else:
            parts = [int(p, 16) for p in decomp.split()]
            assert len(parts) == 2, (hex(cp), parts)
            # Every canonical pair in these blocks is a primary composite.
            assert ucd.normalize("NFC", "".join(map(chr, parts))) == ch
            canonical.append((cp, parts[0], parts[1]))

    out = []
    out.append("// @generated by tools/gen_unicode_tables.py from the Unicode Character")
    out.append("// Database, version %s. Do not edit by hand." % ucd.unidata_version)
    out.append("")
    out.append('pub const UNICODE_VERSION: &str = "%s";' % ucd.unidata_version)
    out.append("")
    out.append("/// `(composite, base, mark)`, sorted by composite.")
    out.append("pub static CANONICAL_PAIRS: &[(u32, u32, u32)] = &[")
    for cp, a, b in canonical:
        out.append("    (0x%04X, 0x%04X, 0x%04X)," % (cp, a, b))
    out.append("];")
    out.append("")
    out.append("/// Non-zero canonical combining classes, sorted by code point.")
    out.append("pub static COMBINING_CLASSES: &[(u32, u8)] = &[")
    for cp, c in ccc:
        out.append("    (0x%04X, %d)," % (cp, c))
    out.append("];")
    out.append("")
    out.append("/// Single-level compatibility mappings (tag dropped), sorted by code point.")
    out.append("pub static COMPAT_MAPPINGS: &[(u32, &[u32])] = &[")
    for cp, parts in compat:
        out.append("    (0x%04X, &[%s])," % (cp, ", ".join("0x%04X" % p for p in parts)))
    out.append("];")
    out.append("")
    with open(os.path.join(CORE, "src", "unicode_data", "tables.rs"), "w") as f:
        f.write("\n".join(out))


def write_visual_common():
    lines = [
        "# Language-independent visual normalization rules.",
        "# Shared by every grammar; language files may not redefine this layer.",
        "#",
        "# waw followed by damma or small damma renders as u.",
        "visual_common\tposition_independent\t0648 064F\t06C7",
        "visual_common\tposition_independent\t0648 0619\t06C7",
        "#",
        "# Presentation forms (FB50-FDFF, FE70-FEFF) folded to their NFKC form.",
        "# @generated by tools/gen_unicode_tables.py, Unicode %s." % ucd.unidata_version,
    ]
    waw_tail = []
    for cp in codepoints(PRESENTATION_RANGES):
        ch = chr(cp)
        folded = ucd.normalize("NFKC", ch)
        if folded == ch:
            continue
        out = [ord(c) for c in folded]
        lines.append("visual_common\tposition_independent\t%04X\t%s" % (cp, hexs(out)))
        if out[-1] == 0x0648:
            waw_tail.append((cp, out))
    if waw_tail:
        lines.append("#")
        lines.append("# Presentation forms ending in waw, followed by damma or small damma.")
        for cp, out in waw_tail:
            for mark in (0x064F, 0x0619):
                lines.append(
                    "visual_common\tposition_independent\t%04X %04X\t%s"
                    % (cp, mark, hexs(out[:-1] + [0x06C7]))
                )
    with open(os.path.join(CORE, "data", "grammars", "visual_common.rules"), "w") as f:
        f.write("\n".join(lines) + "\n")


def write_oracle_ucd():
    """Arabic-block subset of UnicodeData.txt, in the original field layout."""
    rows = []
    for cp in codepoints(ARABIC_RANGES):
        ch = chr(cp)
        decimal = ucd.decimal(ch, None)
        digit = ucd.digit(ch, None)
        numeric = ucd.numeric(ch, None)
        fields = [
            "%04X" % cp,
            ucd.name(ch),
            ucd.category(ch),
            str(ucd.combining(ch)),
            ucd.bidirectional(ch),
            ucd.decomposition(ch),
            "" if decimal is None else str(decimal),
            "" if digit is None else str(digit),
            "" if numeric is None else ("%g" % numeric),
            "Y" if ucd.mirrored(ch) else "N",
            "",
            "",
            "",
            "",
            "",
        ]
        rows.append(";".join(fields))
    with open(os.path.join(CORE, "tests", "data", "UnicodeData-arabic.txt"), "w") as f:
        f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    write_tables()
    write_visual_common()
    write_oracle_ucd()
