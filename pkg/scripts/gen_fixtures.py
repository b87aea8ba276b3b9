#!/usr/bin/env python3
"""Regenerate the stored H^3(G, mu_|G|) representatives for the test battery.

Writes src/crossbraid/data/h3_reps.json.  Deterministic end to end, so the
output is stable across runs; differences mean the engine changed.
"""

import json
import pathlib
import sys

SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from crossbraid.cohomology import cohomology_group, mu_module  # noqa: E402
from crossbraid.groups import builtin_group  # noqa: E402
from crossbraid.serialize import H3_BATTERY, cochain_to_json  # noqa: E402


def main() -> None:
    doc = {}
    for name in H3_BATTERY:
        G = builtin_group(name)
        H = cohomology_group(G, 3, mu_module(G.order))
        doc[name] = {
            "modulus": G.order,
            "invariant_factors": list(H.invariant_factors),
            "class_count": H.order,
            "representatives": [cochain_to_json(rep) for rep in H.representatives],
        }
        print(f"{name}: factors={H.invariant_factors} classes={H.order}")
    out = SRC / "crossbraid" / "data" / "h3_reps.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
