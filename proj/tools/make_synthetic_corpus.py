#!/usr/bin/env python3
# Copyright 2026 The Opinion Miner Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes a small synthetic camera-review corpus with hand-built parses.

Every sentence comes from a template whose dependency tree and gold labels
are fixed, so the output is a valid gold-labelled CoNLL-U corpus. Opinion
slots mix lexicon words with adjectives the lexicon does not list, which
the engine can only reach through the propagation rules.
"""

import argparse
import json
import random

HEADER = """# Copyright 2026 The Opinion Miner Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# Generated by tools/make_synthetic_corpus.py; do not edit by hand.
"""

FEATURES = ["battery", "zoom", "lens", "screen", "sensor", "flash", "grip",
            "menu", "viewfinder", "shutter", "autofocus", "charger",
            "display", "body", "video", "picture", "button", "strap"]
POSITIVE = ["good", "great", "excellent", "sharp", "fast", "bright", "nice",
            "solid", "reliable", "compact", "clear", "superb"]
NEGATIVE = ["bad", "poor", "slow", "blurry", "noisy", "flimsy", "weak",
            "terrible", "dull", "awkward", "grainy", "clunky"]
# Not in the shipped lexicon; reachable only through rules.
UNLISTED = ["snappy", "chunky", "glossy", "zippy", "grippy", "roomy",
            "boxy", "tinny", "springy", "plasticky"]
AMPLIFIERS = ["very", "really", "extremely", "quite", "too"]
VERBS_POS = ["love", "enjoy", "recommend"]
VERBS_NEG = ["hate"]

UPOS = {"NN": "NOUN", "NNS": "NOUN", "JJ": "ADJ", "RB": "ADV", "DT": "DET",
        "PRP": "PRON", "CC": "CCONJ", ".": "PUNCT", "VBZ": "VERB",
        "VBP": "VERB"}


def t(form, pos, head, rel, gold="N"):
    return (form, pos, head, rel, gold)


def template(rng, kind):
    """Returns (rows, polarity) for one sentence."""
    feat = rng.choice(FEATURES)
    pos = rng.random() < 0.6
    adj = rng.choice(POSITIVE if pos else NEGATIVE)
    pol = 1 if pos else -1
    if kind == 0:  # The F is A .
        return [t("The", "DT", 2, "det"), t(feat, "NN", 4, "nsubj", "F"),
                t("is", "VBZ", 4, "cop"), t(adj, "JJ", 0, "root", "O"),
                t(".", ".", 4, "punct")], pol
    if kind == 1:  # The F is very A .
        return [t("The", "DT", 2, "det"), t(feat, "NN", 5, "nsubj", "F"),
                t("is", "VBZ", 5, "cop"),
                t(rng.choice(AMPLIFIERS), "RB", 5, "advmod", "DO"),
                t(adj, "JJ", 0, "root", "O"), t(".", ".", 5, "punct")], pol
    if kind == 2:  # I V the F .
        verb = rng.choice(VERBS_POS if pos else VERBS_NEG)
        return [t("I", "PRP", 2, "nsubj"), t(verb, "VBP", 0, "root", "O"),
                t("the", "DT", 4, "det"), t(feat, "NN", 2, "dobj", "F"),
                t(".", ".", 2, "punct")], pol
    if kind == 3:  # It has a U F .  (unlisted adjective reached from F)
        verb = rng.choice(VERBS_POS if pos else VERBS_NEG)
        other = rng.choice(UNLISTED)
        return [t("I", "PRP", 2, "nsubj"), t(verb, "VBP", 0, "root", "O"),
                t("the", "DT", 5, "det"), t(other, "JJ", 5, "amod", "O"),
                t(feat, "NN", 2, "dobj", "F"), t(".", ".", 2, "punct")], pol
    if kind == 4:  # The F1 and F2 are A .
        feat2 = rng.choice([f for f in FEATURES if f != feat])
        return [t("The", "DT", 2, "det"), t(feat, "NN", 6, "nsubj", "F"),
                t("and", "CC", 2, "cc"), t(feat2, "NN", 2, "conj", "F"),
                t("are", "VBP", 6, "cop"), t(adj, "JJ", 0, "root", "O"),
                t(".", ".", 6, "punct")], pol
    if kind == 5:  # The F is A and U .  (unlisted adjective via conj)
        other = rng.choice(UNLISTED)
        return [t("The", "DT", 2, "det"), t(feat, "NN", 4, "nsubj", "F"),
                t("is", "VBZ", 4, "cop"), t(adj, "JJ", 0, "root", "O"),
                t("and", "CC", 4, "cc"), t(other, "JJ", 4, "conj", "O"),
                t(".", ".", 4, "punct")], pol
    # The F is n't A .
    return [t("The", "DT", 2, "det"), t(feat, "NN", 5, "nsubj", "F"),
            t("is", "VBZ", 5, "cop"), t("n't", "RB", 5, "neg", "DO"),
            t(adj, "JJ", 0, "root", "O"), t(".", ".", 5, "punct")], -pol


def conllu_sentence(sid, rows):
    lines = [f"# sent_id = {sid}",
             "# text = " + " ".join(r[0] for r in rows)]
    for i, (form, pos, head, rel, gold) in enumerate(rows, 1):
        up = UPOS.get(pos, "X")
        lines.append("\t".join([str(i), form, form.lower(), up, pos, "_",
                                str(head), rel, "_", f"Gold={gold}"]))
    return "\n".join(lines) + "\n\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reviews", type=int, default=50)
    ap.add_argument("--seed", type=int, default=13)
    ap.add_argument("--conllu", required=True)
    ap.add_argument("--meta", required=True)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    products = ["canon-sx280", "canon-a2400", "canon-sx510"]
    body = [HEADER]
    meta = []
    for r in range(args.reviews):
        rid = f"syn-{r + 1:03d}"
        body.append(f"# review_id = {rid}\n")
        score = 0
        for s in range(rng.randint(3, 5)):
            rows, pol = template(rng, rng.randrange(7))
            score += pol
            body.append(conllu_sentence(f"{rid}-s{s + 1}", rows))
        stars = 5 if score >= 2 else 4 if score == 1 else 3 if score == 0 \
            else 2 if score == -1 else 1
        month = r // 3
        date = f"{2013 + month // 12}-{month % 12 + 1:02d}-{rng.randint(1, 28):02d}"
        meta.append({"review_id": rid, "product_id": products[r % 3],
                     "stars": stars, "date": date,
                     "holder": f"synthetic-{r + 1:03d}",
                     "price": [179.0, 99.0, 249.0][r % 3]})
    with open(args.conllu, "w", encoding="utf-8") as f:
        f.write("".join(body))
    with open(args.meta, "w", encoding="utf-8") as f:
        f.write(HEADER)
        for m in meta:
            f.write(json.dumps(m) + "\n")


if __name__ == "__main__":
    main()
