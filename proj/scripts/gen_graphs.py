#!/usr/bin/env python3
"""Writes the bundled resolution graphs under data/graphs.

The graphs are written down from the blow-up sequences, not computed by the
library. See data/graphs/README.md for the derivations.
"""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "graphs"


def curve(i, self_int, f_mult):
    return {"id": i, "self_int": self_int, "f_mult": f_mult}


def x2_yn(n):
    k = n // 2
    if n % 2 == 0:
        curves = [curve(i, -1 if i == k else -2, 2 * i) for i in range(1, k + 1)]
        edges = [[i, i + 1] for i in range(1, k)]
        ends = [{"curve": k, "mult": "1"}, {"curve": k, "mult": "1"}]
    else:
        curves = [curve(i, -3 if i == k else -2, 2 * i) for i in range(1, k + 1)]
        curves.append(curve(k + 1, -2, 2 * k + 1))
        curves.append(curve(k + 2, -1, 4 * k + 2))
        edges = [[i, i + 1] for i in range(1, k)] + [[k, k + 2], [k + 1, k + 2]]
        ends = [{"curve": k + 2, "mult": "1"}]
    return {"curves": curves, "edges": edges, "ends": ends}


def dump(g):
    lines = ["{"]
    keys = list(g)
    for i, key in enumerate(keys):
        items = ",\n".join("    " + json.dumps(x) for x in g[key])
        tail = "," if i + 1 < len(keys) else ""
        lines.append(f'  "{key}": [\n{items}\n  ]{tail}' if items else f'  "{key}": []{tail}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    graphs = {
        "node": x2_yn(2),
        "cusp": x2_yn(3),
        "tacnode": x2_yn(4),
    }
    for n in range(3, 13):
        graphs[f"x2_yn_{n}"] = x2_yn(n)
    for name, g in graphs.items():
        (OUT / f"{name}.json").write_text(dump(g))


if __name__ == "__main__":
    main()
