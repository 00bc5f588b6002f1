import itertools

import pytest

from hecke_bn.partitions import Multipartition, parse_multipartition


def bp(text):
    """Shorthand: bp("21|") is the bipartition (2,1|∅); single digits are parts."""
    if "," not in text:
        text = "|".join(",".join(comp) for comp in text.split("|"))
    return parse_multipartition(text)


def brute_partitions(n):
    # independent of the library: collapse all compositions of n
    out = set()
    for cuts in itertools.product((0, 1), repeat=max(n - 1, 0)):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        if n:
            parts.append(cur)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


def brute_multipartition_count(n, r):
    if r == 1:
        return len(brute_partitions(n))
    return sum(len(brute_partitions(k)) * brute_multipartition_count(n - k, r - 1) for k in range(n + 1))


@pytest.fixture
def b3_labels():
    return [bp(x) for x in ["3|", "21|", "111|", "2|1", "11|1", "1|2", "|3", "1|11", "|21", "|111"]]
