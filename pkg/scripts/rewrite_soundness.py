"""Apply random rewrite moves to random cacti and count any that break the rules.

A move is a violation if the result leaves the cactus class, changes n or
the pendant count, or fails to strictly improve the target index.
"""

import argparse
import random
import sys
import time
from collections import Counter

from zagreb_cacti.graph_core import is_cactus, pendant_count
from zagreb_cacti.indices import index_value
from zagreb_cacti.rewrite import RewriteCheckError, SearchConfig, apply_move, find_moves, random_cactus


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--moves", type=int, default=10_000)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = random.Random(args.seed)
    configs = [SearchConfig(o, i, c) for o in ("minimize", "maximize")
               for i, c in (("pi1", 1), ("pi1", 2), ("pi2", 1))]
    used, bad = Counter(), []
    start = time.perf_counter()
    while sum(used.values()) < args.moves:
        g = random_cactus(rng.randint(3, args.n_max), rng, tree=rng.random() < 0.25)
        cfg = rng.choice(configs)
        moves = find_moves(g, cfg)
        if not moves:
            continue
        m = rng.choice(moves)
        used[m.lemma_id.value] += 1
        try:
            h = apply_move(g, m)
        except RewriteCheckError as exc:
            bad.append(str(exc))
            continue
        ok = (is_cactus(h.graph) and h.n == g.n and pendant_count(h.graph) == pendant_count(g.graph)
              and index_value(g, cfg.index, cfg.c).compare(index_value(h, cfg.index, cfg.c)) == -cfg.sign)
        if not ok:
            bad.append(f"{m.lemma_id.value} on {m.source}")

    print(f"{sum(used.values())} moves in {time.perf_counter() - start:.1f}s, {len(bad)} violations")
    for lemma, count in sorted(used.items()):
        print(f"  {lemma:9s} {count}")
    for line in bad[:20]:
        print("  violation:", line)
    return 0 if not bad else 1


if __name__ == "__main__":
    sys.exit(main())
