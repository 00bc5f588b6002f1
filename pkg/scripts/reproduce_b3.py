"""Recompute the a-invariants for B_3 and read the canonical basic sets off the bundled matrix."""

import argparse

from hecke_bn.afunction import WeightParams, a_value
from hecke_bn.decomposition import extract_basic_set, load_matrix, load_b3_matrix, verify_delta, verify_delta_a


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--matrix", help="decomposition matrix JSON (default: bundled B_3 data)")
    ap.add_argument("--b", type=int, nargs="+", default=[0, 4])
    args = ap.parse_args()

    D = load_matrix(args.matrix) if args.matrix else load_b3_matrix()
    print(f"(Delta) holds: {bool(verify_delta(D))}\n")
    tables = {b: {lam: a_value(lam, WeightParams(1, b)) for lam in D.rows} for b in args.b}
    width = max(len(str(lam)) for lam in D.rows)
    print(f"{'':<{width}}  " + "  ".join(f"b={b:<3}" for b in args.b))
    for lam in D.rows:
        print(f"{str(lam):<{width}}  " + "  ".join(f"{tables[b][lam]:<5}" for b in args.b))

    for b in args.b:
        B, beta = extract_basic_set(D, tables[b])
        ok = verify_delta_a(D, tables[b], B, beta)
        print(f"\nb={b}: (Delta_a) {'OK' if ok else 'FAILED'}")
        for mu in D.cols:
            print(f"  {mu} -> {beta[mu]}")


if __name__ == "__main__":
    main()
