"""Write the Fock-space crystal up to size n as DOT and JSON files."""

import argparse
from pathlib import Path

from hecke_bn.fock import NodeOrder, crystal_graph, graph_json_dumps


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--e", type=int, default=2)
    ap.add_argument("--u", default="-1,0", help="comma-separated charge, e.g. -1,0")
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--order", choices=[o.value for o in NodeOrder], default="flotw")
    ap.add_argument("--out", default="crystal", help="output path stem")
    args = ap.parse_args()

    u = tuple(int(x) for x in args.u.split(","))
    g = crystal_graph(args.n, u, args.e, NodeOrder(args.order))
    stem = Path(args.out)
    stem.parent.mkdir(parents=True, exist_ok=True)
    stem.with_suffix(".dot").write_text(g.to_dot())
    stem.with_suffix(".json").write_text(graph_json_dumps(g) + "\n")
    sizes = ", ".join(f"{k}:{len(lv)}" for k, lv in enumerate(g.levels))
    print(f"{len(g.vertices)} vertices ({sizes}), {len(g.edges)} edges -> {stem}.dot, {stem}.json")


if __name__ == "__main__":
    main()
