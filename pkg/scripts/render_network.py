#!/usr/bin/env python3
"""Estimate the holder's decision network for a state and dump it as DOT.

Pipe through Graphviz to get a picture of the eleven players with the
(s, tau, p, r) vector on every edge:

    python3 scripts/render_network.py --state data/midfield_state.json | dot -Tpng -o net.png
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from playnet import default_suite, estimate_network
from playnet.dotexport import export_network_dot
from playnet.state import load_match_state


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--state", default="data/midfield_state.json")
    parser.add_argument("--out", help="write DOT here instead of stdout")
    args = parser.parse_args()

    network = estimate_network(load_match_state(args.state), default_suite())
    text = export_network_dot(network)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
