"""Survey case resolution and basic-set sizes over a parameter grid.

Prints one row per (n, l, a, b) and a summary; exits non-zero if any basic
set has the wrong size.
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from hecke_bn.basic_sets import SpecializationParams, basic_set, resolve_case


@dataclass
class SurveyConfig:
    n_max: int = 6
    orders: list = field(default_factory=lambda: [2, 3, 4, 6])
    a_values: list = field(default_factory=lambda: [1, 2, 3])
    b_max: int = 7
    char_p: int = 0


def survey(cfg: SurveyConfig):
    for n in range(1, cfg.n_max + 1):
        for l in cfg.orders:
            for a in cfg.a_values:
                for b in range(cfg.b_max + 1):
                    row = dict(n=n, l=l, a=a, b=b, case="", e="", s="", lam="", B="", beta="", note="")
                    try:
                        c = resolve_case(SpecializationParams.of(n, a, b, l, cfg.char_p))
                        res = basic_set(c)
                    except ValueError as exc:
                        row["note"] = str(exc)
                        yield row
                        continue
                    row.update(
                        case=c.case.value,
                        e=c.e,
                        s="" if c.s is None else c.s,
                        lam=len(res.lambda_set),
                        B=len(res.basic_set),
                        beta=res.beta_status.value,
                    )
                    yield row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--b-max", type=int, default=7)
    ap.add_argument("--char", type=int, default=0)
    ap.add_argument("--csv", help="write rows to this file instead of stdout")
    args = ap.parse_args()
    cfg = SurveyConfig(n_max=args.n_max, b_max=args.b_max, char_p=args.char)

    rows = list(survey(cfg))
    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    writer = csv.DictWriter(out, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        out.close()

    sized = [r for r in rows if r["lam"] != ""]
    bad = [r for r in sized if r["lam"] != r["B"]]
    by_case = {k: sum(r["case"] == k for r in sized) for k in "ABC"}
    print(f"# {len(sized)} resolved ({by_case}), {len(rows) - len(sized)} refused, {len(bad)} size mismatches",
          file=sys.stderr)
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
