#!/usr/bin/env python3
"""Writes corpus_1000.txt and corpus_1000.expected.json.

The expected counts come from a separate tokenizer (str.split plus Unicode
category stripping), not from loanlex.
"""
import json
import random
import sys
import unicodedata
from pathlib import Path

CANDIDATES = [
    "راكونتير", "اومليت", "بورجوازي", "كافي", "بيرو",
    "كاراج", "تيليفيزيون", "كاميون", "بيس",
]
VARIANTS = {
    "أومليت": "اومليت",   # alef with hamza, matches under alef unification
    "كـافي": "كافي",      # tatweel, matches under tatweel stripping
}
FILLER = [
    "واحد", "ديال", "بزاف", "كنبغي", "هاد", "فين", "شنو", "مزيان", "دابا",
    "غادي", "الدار", "الخدمة", "صاحبي", "في", "من", "على", "مشا", "جا",
    "2024", "ok", "ماشي", "بلا", "حتى", "عندي", "الكافي", "كافيه",
]
PUNCT = ["،", "؟", ".", "!", "\"", "(", ")", "…", ":"]


def make_lines(rng):
    lines = []
    for i in range(1000):
        if i in (137, 612):
            lines.append(b"\xd9\x83\xff\xfe \xd8\xa7 broken\n")
            continue
        n = rng.randint(5, 25)
        words = []
        for _ in range(n):
            r = rng.random()
            if r < 0.05:
                w = rng.choice(CANDIDATES)
            elif r < 0.06:
                w = rng.choice(list(VARIANTS))
            else:
                w = rng.choice(FILLER)
            if rng.random() < 0.1:
                w = rng.choice(PUNCT) + w
            if rng.random() < 0.15:
                w = w + rng.choice(PUNCT)
            words.append(w)
        sep = " " if i == 500 else " "
        text = sep.join(words)
        if rng.random() < 0.05:
            text = "  " + text + "\t"
        end = "\r\n" if i == 42 else "\n"
        lines.append((text + end).encode("utf-8"))
    return lines


def strip_token(tok):
    def drop(ch):
        return unicodedata.category(ch)[0] in "PS"
    start, end = 0, len(tok)
    while start < end and drop(tok[start]):
        start += 1
    while end > start and drop(tok[end - 1]):
        end -= 1
    return tok[start:end]


def normalize_all(tok):
    tok = tok.replace("ـ", "")
    for ch in "آأإ":
        tok = tok.replace(ch, "ا")
    return tok.replace("ى", "ي")


def recount(raw_lines):
    counts = {"none": {}, "all": {}}
    total = skipped = 0
    for raw in raw_lines:
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            skipped += 1
            continue
        for piece in line.split():
            tok = strip_token(piece)
            if not tok:
                continue
            total += 1
            for mode, norm in (("none", tok), ("all", normalize_all(tok))):
                if norm in CANDIDATES:
                    counts[mode][norm] = counts[mode].get(norm, 0) + 1
    return {
        "lines": len(raw_lines),
        "skipped_lines": skipped,
        "total_tokens": total,
        "counts": {m: dict(sorted(c.items())) for m, c in counts.items()},
    }


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    lines = make_lines(random.Random(20240501))
    (out_dir / "corpus_1000.txt").write_bytes(b"".join(lines))
    expected = recount(lines)
    (out_dir / "corpus_1000.expected.json").write_text(
        json.dumps(expected, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")


if __name__ == "__main__":
    main()
