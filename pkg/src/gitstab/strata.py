"""Canonical forms of supports and the degeneration graph of closed-orbit families."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .arrangement import face_points
from .core import Monomial, Weight, mu_monomial, permute_support, stabilizer_lattice
from .luna import ClosedOrbit, Degenerates, context_for_support, limit_support, luna_classify, sublevel_families

Canon = tuple[Monomial, ...]
LABEL_SEP = "="


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


@dataclass(frozen=True)
class CanonicalFamily:
    support: Canon  # sorted ascending, lexicographically least over all relabelings
    witnesses: tuple[tuple[int, ...], ...]  # permutations p with permute_support(original, p) == support
    label: str | None = None


def label_index(named: Mapping[str, Iterable[Monomial]]) -> dict[Canon, str]:
    """Canonical form -> name; names sharing a canonical form are joined."""
    out: dict[Canon, list[str]] = {}
    for name, s in named.items():
        out.setdefault(canonicalize(s).support, []).append(name)
    return {c: LABEL_SEP.join(v) for c, v in out.items()}


def canonicalize(support: Iterable[Monomial], label: str | None = None) -> CanonicalFamily:
    s = frozenset(support)
    if not s:
        raise ValueError("empty support")
    n = len(next(iter(s)))
    best: Canon | None = None
    wit: list[tuple[int, ...]] = []
    for p in _perms(n):
        t = tuple(sorted(permute_support(s, p)))
        if best is None or t < best:
            best, wit = t, [p]
        elif t == best:
            wit.append(p)
    return CanonicalFamily(best, tuple(wit), label)


@dataclass(frozen=True)
class StratEdge:
    source: Canon
    target: Canon
    witness: Weight
    family: frozenset  # sub-family of the source (in its canonical coordinates) degenerating along witness


@dataclass
class StratGraph:
    nodes: dict[Canon, CanonicalFamily] = field(default_factory=dict)
    edges: list[StratEdge] = field(default_factory=list)
    closed: set[Canon] = field(default_factory=set)
    unstable_leaves: dict[Canon, int] = field(default_factory=dict)  # node -> count of unstable sub-families seen

    def name(self, c: Canon) -> str:
        node = self.nodes[c]
        if node.label:
            return node.label
        return f"N{sorted(self.nodes).index(c)}"

    def successors(self, c: Canon) -> list[Canon]:
        return sorted({e.target for e in self.edges if e.source == c})

    @property
    def mixed(self) -> set[Canon]:
        return {c for c in self.closed if self.successors(c)}

    def sinks(self) -> list[Canon]:
        return sorted(c for c in self.nodes if not self.successors(c))

    def is_acyclic(self) -> bool:
        indeg = {c: 0 for c in self.nodes}
        pairs = {(e.source, e.target) for e in self.edges}
        for _, t in pairs:
            indeg[t] += 1
        queue = deque(c for c, d in indeg.items() if d == 0)
        seen = 0
        while queue:
            c = queue.popleft()
            seen += 1
            for s, t in pairs:
                if s == c:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        queue.append(t)
        return seen == len(self.nodes)

    def reaches(self, a: Canon, b: Canon) -> bool:
        stack, seen = [a], {a}
        while stack:
            c = stack.pop()
            if c == b:
                return True
            for t in self.successors(c):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return False

    def edge_pairs(self) -> list[tuple[str, str]]:
        return sorted({(self.name(e.source), self.name(e.target)) for e in self.edges})

    def aliases(self, c: Canon) -> list[str]:
        """All catalog names of a node; distinct names may denote one family up to relabeling."""
        return self.name(c).split(LABEL_SEP)

    def labelled_pairs(self) -> set[tuple[str, str]]:
        return {(a, b) for e in self.edges for a in self.aliases(e.source) for b in self.aliases(e.target)}

    def find(self, label: str) -> Canon | None:
        for c in self.nodes:
            if label in self.aliases(c):
                return c
        return None

    def to_json(self) -> dict:
        order = sorted(self.nodes)
        return {
            "nodes": [
                {
                    "name": self.name(c),
                    "label": self.nodes[c].label,
                    "support": [list(m) for m in c],
                    "stabilizer_rank": len(stabilizer_lattice(c)),
                    "closed": c in self.closed,
                    "mixed": c in self.mixed,
                }
                for c in order
            ],
            "edges": [
                {
                    "source": self.name(e.source),
                    "target": self.name(e.target),
                    "witness": list(e.witness),
                    "family": [list(m) for m in sorted(e.family, reverse=True)],
                }
                for e in self.edges
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph strata {", "  rankdir=TB;"]
        for c in sorted(self.nodes):
            shape = "doublecircle" if c in self.closed and not self.successors(c) else "ellipse"
            style = ', style="dashed"' if c in self.mixed else ""
            lines.append(f'  "{self.name(c)}" [shape={shape}{style}];')
        for s, t in self.edge_pairs():
            lines.append(f'  "{s}" -> "{t}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def is_polystable(canon: Canon) -> bool:
    """The support spans a closed orbit: no destabilizer inside its own fixed subspace."""
    return isinstance(luna_classify(canon, context_for_support(canon)), ClosedOrbit)


def degenerations(node: Canon, closed_only: bool = False) -> dict[Canon, StratEdge]:
    """Closed-orbit limits reachable from sub-families of the node's fixed subspace.

    Every face of the weight arrangement yields the family M_{<=0}(w) and its
    limit M_{=0}(w). A limit that spans a closed orbit is the unique closed orbit
    in the closure of the family's generic orbit, so it becomes an edge target.
    """
    ctx = context_for_support(node)
    uni = sorted(ctx.invariant_universe, reverse=True)
    found: dict[Canon, StratEdge] = {}
    for w in face_points(uni, ctx.cone):
        fam = frozenset(m for m in uni if mu_monomial(m, w) <= 0)
        lim = frozenset(m for m in fam if mu_monomial(m, w) == 0)
        if not lim or lim == fam:
            continue
        target = canonicalize(lim).support
        if target in found or (closed_only and not is_polystable(target)):
            continue
        if not isinstance(luna_classify(fam, ctx), Degenerates):
            continue
        found[target] = StratEdge(node, target, w, fam)
    return found


def build_stratification(seeds: Sequence[CanonicalFamily], labels: Mapping[Canon, str] | None = None) -> StratGraph:
    """Breadth-first closure of the seeds under certified degeneration.

    Node supports are analysed in canonical coordinates. The maximal non-stable
    sub-families of each node are classified as well; any that turn out unstable
    are counted as leaves and kept out of the graph.
    """
    labels = dict(labels or {})
    g = StratGraph()
    queue: deque[Canon] = deque()

    def add(c: Canon) -> None:
        if c not in g.nodes:
            g.nodes[c] = CanonicalFamily(c, (), labels.get(c))
            queue.append(c)

    for s in seeds:
        add(s.support)
        if s.label and not g.nodes[s.support].label:
            g.nodes[s.support] = CanonicalFamily(s.support, s.witnesses, s.label)
    while queue:
        node = queue.popleft()
        ctx = context_for_support(node)
        if is_polystable(node):
            g.closed.add(node)
        semi, _ = sublevel_families(ctx, certify=False)
        for fam in semi:
            if not isinstance(luna_classify(fam.support, ctx), Degenerates):
                g.unstable_leaves[node] = g.unstable_leaves.get(node, 0) + 1
        found = degenerations(node)
        for t in sorted(found):
            add(t)
            g.edges.append(found[t])
    g.edges.sort(key=lambda e: (e.source, e.target))
    return g


def replay_edges(g: StratGraph) -> list[tuple[str, str, bool]]:
    """Recompute every edge target from its sub-family and witness."""
    out = []
    for e in g.edges:
        try:
            ok = canonicalize(limit_support(e.family, e.witness)).support == e.target
            ok = ok and e.family <= context_for_support(e.source).invariant_universe
        except ValueError:
            ok = False
        out.append((g.name(e.source), g.name(e.target), ok))
    return out


def dumps(g: StratGraph) -> str:
    return json.dumps(g.to_json(), sort_keys=True)
