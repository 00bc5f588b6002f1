"""Crystal combinatorics of level-r Fock spaces.

Nodes are ``(row, col, comp)`` triples, all 1-based. Two orders on nodes are
supported: ``FLOTW`` compares ``col - row + u[comp]`` and breaks ties by
component (larger component is higher), ``ARIKI`` puts larger components
higher and, inside a component, larger rows higher.

Good nodes come from the usual signature rule: list the addable (A) and
removable (R) i-nodes from highest to lowest, cancel adjacent ``RA`` pairs
until the word reads ``A..AR..R``; the highest surviving R is the good
removable node and the lowest surviving A is the good addable node.
"""

from __future__ import annotations

import enum
import json
from collections import namedtuple
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .partitions import Multipartition, empty_multipartition, enumerate_multipartitions, multipartition_key


class NodeOrder(enum.Enum):
    FLOTW = "flotw"
    ARIKI = "ariki"


Node = namedtuple("Node", ["row", "col", "comp"])


def _charge(u: Sequence[int]) -> tuple[int, ...]:
    u = tuple(int(x) for x in u)
    if not u:
        raise ValueError("charge vector must have at least one entry")
    return u


def _check_comp(gamma: Node, u: Sequence[int]) -> None:
    if not 1 <= gamma[2] <= len(u):
        raise ValueError(f"component {gamma[2]} out of range 1..{len(u)}")


def residue(gamma: Sequence[int], u: Sequence[int], e: int) -> int:
    row, col, comp = gamma
    _check_comp(gamma, u)
    return (col - row + u[comp - 1]) % e


def node_key(gamma: Sequence[int], u: Sequence[int], order: NodeOrder) -> tuple[int, int]:
    """Sort key under which higher nodes come first."""
    row, col, comp = gamma
    if order is NodeOrder.FLOTW:
        return (col - row + u[comp - 1], -comp)
    return (-comp, -row)


def node_above(g1: Sequence[int], g2: Sequence[int], u: Sequence[int], order: NodeOrder) -> bool:
    """Whether ``g1`` is above ``g2``."""
    _check_comp(g1, u)
    _check_comp(g2, u)
    return node_key(g1, u, order) < node_key(g2, u, order)


def addable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for c, p in enumerate(lam, start=1):
        for i in range(1, len(p) + 2):
            if i == 1 or p.part(i - 1) > p.part(i):
                out.append(Node(i, p.part(i) + 1, c))
    return out


def removable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for c, p in enumerate(lam, start=1):
        for i in range(1, len(p) + 1):
            if p.part(i) > p.part(i + 1):
                out.append(Node(i, p.part(i), c))
    return out


def add_node(lam: Multipartition, gamma: Node) -> Multipartition:
    comps = [list(p) for p in lam]
    row, col, c = gamma
    part = comps[c - 1]
    if row == len(part) + 1:
        part.append(0)
    part[row - 1] += 1
    if part[row - 1] != col:
        raise ValueError(f"{gamma} is not addable to {lam}")
    return Multipartition(comps)


def remove_node(lam: Multipartition, gamma: Node) -> Multipartition:
    comps = [list(p) for p in lam]
    row, col, c = gamma
    if comps[c - 1][row - 1] != col:
        raise ValueError(f"{gamma} is not removable from {lam}")
    comps[c - 1][row - 1] -= 1
    return Multipartition(comps)


def i_signature(lam: Multipartition, i: int, u: Sequence[int], e: int, order: NodeOrder) -> list[tuple[str, Node]]:
    """Addable/removable i-nodes of ``lam``, highest first, tagged ``'A'``/``'R'``."""
    u = tuple(u)
    letters = [("A", g) for g in addable_nodes(lam) if residue(g, u, e) == i]
    letters += [("R", g) for g in removable_nodes(lam) if residue(g, u, e) == i]
    letters.sort(key=lambda t: node_key(t[1], u, order))
    keys = [node_key(g, u, order) for _, g in letters]
    if len(set(keys)) != len(keys):
        raise AssertionError(f"node order is not total on the {i}-nodes of {lam} for u={u}")
    return letters


def _reduced_signature(letters) -> tuple[list[Node], list[Node]]:
    unmatched_a, stack = [], []
    for kind, g in letters:
        if kind == "R":
            stack.append(g)
        elif stack:
            stack.pop()
        else:
            unmatched_a.append(g)
    return unmatched_a, stack


def good_node(lam, i: int, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW) -> Optional[Node]:
    """The good removable i-node of ``lam``, or ``None``."""
    lam = Multipartition(lam)
    _, normal = _reduced_signature(i_signature(lam, i, u, e, order))
    return normal[0] if normal else None


def good_addable_node(lam, i: int, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW) -> Optional[Node]:
    lam = Multipartition(lam)
    conormal, _ = _reduced_signature(i_signature(lam, i, u, e, order))
    return conormal[-1] if conormal else None


def normal_nodes(lam, i: int, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW) -> list[Node]:
    lam = Multipartition(lam)
    return _reduced_signature(i_signature(lam, i, u, e, order))[1]


@lru_cache(maxsize=None)
def _in_uglov(lam: Multipartition, u: tuple[int, ...], e: int, order: NodeOrder) -> bool:
    if lam.size == 0:
        return True
    for i in range(e):
        g = good_node(lam, i, u, e, order)
        if g is not None and _in_uglov(remove_node(lam, g), u, e, order):
            return True
    return False


def _check_level(lam: Multipartition, u: tuple[int, ...]) -> None:
    if lam.level != len(u):
        raise ValueError(f"level {lam.level} does not match charge length {len(u)}")


def in_uglov(lam, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW) -> bool:
    """Membership in the set of Uglov multipartitions (Kleshchev ones for ``ARIKI``)."""
    lam, u = Multipartition(lam), _charge(u)
    _check_level(lam, u)
    return _in_uglov(lam, u, e, order)


def uglov_set(n: int, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW) -> frozenset[Multipartition]:
    u = _charge(u)
    return frozenset(lam for lam in enumerate_multipartitions(n, len(u)) if _in_uglov(lam, u, e, order))


def kleshchev_set(n: int, r: int, e: int, u: Sequence[int]) -> frozenset[Multipartition]:
    u = _charge(u)
    if len(u) != r:
        raise ValueError(f"charge {u} does not have {r} entries")
    return uglov_set(n, u, e, NodeOrder.ARIKI)


def flotw_test(lam, u: Sequence[int], e: int) -> bool:
    """Non-recursive FLOTW characterization, for ``0 <= u_1 <= ... <= u_r <= e-1``.

    Shape condition: ``lam[j]_i >= lam[j+1]_{i + u[j+1] - u[j]}`` for
    consecutive components and ``lam[r]_i >= lam[1]_{i + e + u[1] - u[r]}``
    for the wrap-around, i.e. earlier components dominate later ones. Residue
    condition: for each row length ``k``, the residues at the right ends of the
    rows of length ``k`` miss at least one value mod ``e``.

    This orientation is the one compatible with the node order in which a
    larger component wins ties; with the components the other way round the
    test already fails at ``n = 1``, ``u = (0, 0)``.
    """
    lam, u = Multipartition(lam), _charge(u)
    _check_level(lam, u)
    r = len(u)
    if not (0 <= u[0] and all(u[j] <= u[j + 1] for j in range(r - 1)) and u[-1] <= e - 1):
        raise ValueError(f"charge {u} must satisfy 0 <= u_1 <= ... <= u_r <= e-1 = {e - 1}")
    n = lam.size
    for i in range(1, n + 1):
        for j in range(r - 1):
            if lam[j].part(i) < lam[j + 1].part(i + u[j + 1] - u[j]):
                return False
        if lam[r - 1].part(i) < lam[0].part(i + e + u[0] - u[r - 1]):
            return False
    ends: dict[int, set[int]] = {}
    for c, p in enumerate(lam, start=1):
        for row, length in enumerate(p, start=1):
            ends.setdefault(length, set()).add(residue((row, length, c), u, e))
    return all(len(res) < e for res in ends.values())


def flotw_set(n: int, u: Sequence[int], e: int) -> frozenset[Multipartition]:
    u = _charge(u)
    return frozenset(lam for lam in enumerate_multipartitions(n, len(u)) if flotw_test(lam, u, e))


# --- crystal graph -----------------------------------------------------------

class CrystalGraph:
    """Vertices up to a given size and their residue-labelled edges.

    Built independently of :func:`uglov_set`, by repeatedly adding good
    addable nodes starting from the empty multipartition.
    """

    def __init__(self, n_max: int, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        self.u, self.e, self.order, self.n_max = _charge(u), e, order, n_max
        root = empty_multipartition(len(self.u))
        self.levels: list[list[Multipartition]] = [[root]]
        self.edges: list[tuple[Multipartition, Multipartition, int]] = []
        for _ in range(n_max):
            nxt = set()
            for lam in self.levels[-1]:
                for i in range(e):
                    g = good_addable_node(lam, i, self.u, e, order)
                    if g is not None:
                        mu = add_node(lam, g)
                        nxt.add(mu)
                        self.edges.append((lam, mu, i))
            self.levels.append(_canonical(nxt))
        pos = {v: k for k, v in enumerate(self.vertices)}
        self.edges.sort(key=lambda t: (pos[t[0]], pos[t[1]], t[2]))

    @property
    def vertices(self) -> list[Multipartition]:
        return [v for level in self.levels for v in level]

    def in_edges(self, mu: Multipartition) -> list[tuple[Multipartition, int]]:
        return [(lam, i) for lam, m, i in self.edges if m == mu]

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "u": list(self.u),
            "order": self.order.value,
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [{"from": a.to_json(), "to": b.to_json(), "residue": i} for a, b, i in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, b, i in self.edges:
            lines.append(f'  "{a}" -> "{b}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = []
        for n, level in enumerate(self.levels):
            lines.append(f"n={n}: " + " ".join(map(str, level)))
        for a, b, i in self.edges:
            lines.append(f"{a} -{i}-> {b}")
        return "\n".join(lines) + "\n"


def _canonical(lams: Iterable[Multipartition]) -> list[Multipartition]:
    return sorted(lams, key=multipartition_key, reverse=True)


def crystal_graph(n_max: int, u: Sequence[int], e: int, order: NodeOrder = NodeOrder.FLOTW) -> CrystalGraph:
    return CrystalGraph(n_max, u, e, order)


def graph_json_dumps(graph: CrystalGraph) -> str:
    return json.dumps(graph.to_json(), indent=2)
