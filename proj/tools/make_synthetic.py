#!/usr/bin/env python3
"""Generate the synthetic IRU corpus in data/synthetic/.

Each exchange introduces fresh atoms, so an IRU can only be derived from the
antecedent it was built against. Attitude IRUs answer the other speaker's
immediately preceding turn; non-attitude IRUs restate the speaker's own turn,
or one two turns back.
"""

import argparse
import json
import random
from pathlib import Path

# (repetition, paraphrase, inference) and (high, mid, low, unknown) per row.
TARGETS = {
    "attitude": ((54, 15, 24), (24, 28, 15, 26)),
    "non-attitude": ((6, 43, 32), (3, 22, 32, 24)),
}
RELATIONS = ("repetition", "paraphrase", "inference")
TONES = ("high", "mid", "low", "unknown")
PER_DIALOGUE = 6


def content(rel, n):
    """Antecedent lf, IRU lf and axioms for one exchange."""
    x = f"x{n}"
    if rel == "repetition":
        lf = f"(holds{n} {x})"
        return lf, lf, []
    if rel == "paraphrase":
        axioms = [
            {"antecedent": f"(closed{n} {x})", "excludes": f"(open{n} {x})"},
            {"antecedent": f"(not (open{n} {x}))", "excludes": f"(not (closed{n} {x}))"},
        ]
        return f"(not (open{n} {x}))", f"(closed{n} {x})", axioms
    return f"(and (p{n} {x}) (q{n} {x}))", f"(p{n} {x})", []


def plan(rng):
    items = []
    for row, (rels, tones) in TARGETS.items():
        rel_list = [r for r, k in zip(RELATIONS, rels) for _ in range(k)]
        tone_list = [t for t, k in zip(TONES, tones) for _ in range(k)]
        rng.shuffle(tone_list)
        items += [(row, r, t) for r, t in zip(rel_list, tone_list)]
    rng.shuffle(items)
    return items


def build(items):
    dialogues = []
    n = 0
    for d in range(0, len(items), PER_DIALOGUE):
        utts, axioms = [], []

        def say(spk, lf, **kw):
            u = {"index": len(utts) + 1, "speaker": spk,
                 "addressee": "B" if spk == "A" else "A",
                 "text": f"synthetic turn {len(utts) + 1}", "speech_act": "assert", "lf": lf}
            u.update(kw)
            utts.append(u)

        for row, rel, tone in items[d:d + PER_DIALOGUE]:
            n += 1
            ante, iru, ax = content(rel, n)
            axioms += ax
            kw = {} if tone == "unknown" else {"boundary_tone": tone}
            if row == "attitude":
                say("A", ante)
                say("B", iru, **kw)
            elif n % 2:
                say("A", ante)
                say("A", iru, **kw)
            else:
                say("A", ante)
                say("B", f"(aside{n} y{n})")
                say("A", iru, **kw)
        dialogues.append({
            "dialogue_id": f"synthetic-{len(dialogues) + 1:03d}",
            "participants": ["A", "B"],
            "source": "synthetic; generated by tools/make_synthetic.py",
            "axioms": axioms,
            "utterances": utts,
        })
    return dialogues


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "synthetic"))
    ap.add_argument("--seed", type=int, default=1993)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for old in out.glob("*.json"):
        old.unlink()
    for d in build(plan(random.Random(args.seed))):
        (out / f"{d['dialogue_id']}.json").write_text(json.dumps(d, indent=2) + "\n")


if __name__ == "__main__":
    main()
