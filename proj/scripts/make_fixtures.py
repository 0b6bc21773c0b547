#!/usr/bin/env python3
"""Regenerates the fixtures under data/fixtures/.

The token space is a 64-entry vocabulary over four topic clusters with
8-dimensional embeddings (cluster direction plus seeded noise) and a small
sentiment-style charge table. The chunk store holds 64 short texts, half of
them in the wave/dynamics cluster the demo anchors on.

The committed files are canonical; rerun this only to rebuild them.
"""

import json
import random
import os

SEED = 20240517
DIM = 8

CLUSTERS = {
    "wave": ([1.0, 0.2, 0.0, 0.0, 0.1, 0.0, 0.0, 0.0],
             ["wave", "packet", "phase", "amplitude", "field", "charge", "state",
              "gauge", "energy", "momentum", "grid", "spectrum", "operator",
              "potential", "soliton", "drift"]),
    "finance": ([0.0, 0.0, 1.0, 0.3, 0.0, 0.1, 0.0, 0.0],
                ["bank", "loan", "credit", "market", "price", "trade", "bond",
                 "asset", "yield", "account", "fund", "rate"]),
    "nature": ([0.0, 0.1, 0.0, 0.0, 1.0, 0.4, 0.0, 0.0],
               ["river", "shore", "water", "stream", "delta", "flood", "tide",
                "valley", "stone", "forest", "marsh", "spring"]),
    "emotion": ([0.0, 0.0, 0.0, 0.2, 0.0, 0.0, 1.0, 0.3],
                ["happy", "sad", "calm", "angry", "joyful", "grim", "bright",
                 "dark", "warm", "cold"]),
}

FUNCTION_WORDS = ["the", "a", "of", "and", "in", "on", "by", "to",
                  "with", "near", "under", "over", "from", "into"]

CHARGES = {"happy": 1.0, "joyful": 1.0, "bright": 0.8, "warm": 0.5, "calm": 0.3,
           "sad": -1.0, "grim": -0.8, "dark": -0.8, "cold": -0.5, "angry": -1.0}

CHUNK_TOPICS = ["wave"] * 32 + ["finance"] * 16 + ["nature"] * 16


def noisy(direction, rng, sigma=0.15):
    return [round(d + rng.gauss(0.0, sigma), 6) for d in direction]


def main():
    rng = random.Random(SEED)
    here = os.path.dirname(os.path.abspath(__file__))
    out_dir = os.path.join(here, "..", "data", "fixtures")
    os.makedirs(out_dir, exist_ok=True)

    tokens = []
    topic_words = {}
    for name, (direction, words) in CLUSTERS.items():
        topic_words[name] = words
        for w in words:
            tokens.append({"text": w,
                           "embedding": noisy(direction, rng),
                           "charge": CHARGES.get(w, 0.0)})
    mixed = [0.3] * DIM
    for w in FUNCTION_WORDS:
        tokens.append({"text": w, "embedding": noisy(mixed, rng, 0.05), "charge": 0.0})

    assert len(tokens) == 64, len(tokens)
    space = {"dim": DIM, "tokens": tokens}
    with open(os.path.join(out_dir, "token_space_64.json"), "w") as f:
        json.dump(space, f, indent=1)
        f.write("\n")

    lines = []
    for i, topic in enumerate(CHUNK_TOPICS):
        words = topic_words[topic]
        n_words = rng.randint(4, 7)
        text_words = [rng.choice(words) for _ in range(n_words)]
        if rng.random() < 0.6:
            text_words.insert(rng.randrange(len(text_words)), rng.choice(FUNCTION_WORDS))
        lines.append(json.dumps({"id": "c%02d" % i, "text": " ".join(text_words)}))
    with open(os.path.join(out_dir, "chunks_64.jsonl"), "w") as f:
        f.write("\n".join(lines) + "\n")

    print("wrote", out_dir)


if __name__ == "__main__":
    main()
