"""Comparing shifts up to flow moves through computable invariants.

The workhorse is the envelope skeleton of the syntactic semigroup: it is
unchanged by symbol expansion and by conjugacy-style recodings, so a
skeleton mismatch certifies that two shifts are not flow equivalent,
while a match only means the invariant cannot separate them.  For bracket
shifts of graphs satisfying the degree hypothesis the comparison is
complete and reduces to multigraph isomorphism.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .errors import InputError
from .karoubi import (
    FiniteCategory,
    categories_isomorphic,
    hom_size_matrix,
    karoubi_envelope,
    skeleton,
    DEFAULT_SEARCH_BUDGET,
)
from .semigroups import (
    green_j,
    idempotents,
    is_aperiodic,
    syntactic_semigroup,
)
from .shift import (
    Alphabet,
    DyckGraph,
    Presentation,
    higher_block,
    is_full_shift,
    is_irreducible,
    symbol_expansion,
)


@dataclass(frozen=True)
class InvariantReport:
    """Summary invariants of one presentation, in fixed rendering order."""

    order: int
    idempotents: int
    aperiodic: bool
    j_classes: int
    regular_j_classes: int
    skeleton_objects: int
    skeleton_hom_matrix: list[list[int]]
    irreducible: bool

    def render(self) -> str:
        def fmt(value) -> str:
            if isinstance(value, bool):
                return "true" if value else "false"
            if isinstance(value, list):
                return json.dumps(value, separators=(",", ":"))
            return str(value)

        keys = (
            "order",
            "idempotents",
            "aperiodic",
            "j_classes",
            "regular_j_classes",
            "skeleton_objects",
            "skeleton_hom_matrix",
            "irreducible",
        )
        return "\n".join(f"{k}: {fmt(getattr(self, k))}" for k in keys) + "\n"


def _skeleton_of(presentation: Presentation) -> FiniteCategory:
    semigroup, _ = syntactic_semigroup(presentation)
    return skeleton(karoubi_envelope(semigroup))


def invariant_report(presentation: Presentation) -> InvariantReport:
    semigroup, _ = syntactic_semigroup(presentation)
    envelope_skeleton = skeleton(karoubi_envelope(semigroup))
    green = green_j(semigroup)
    return InvariantReport(
        order=semigroup.size,
        idempotents=len(idempotents(semigroup)),
        aperiodic=is_aperiodic(semigroup),
        j_classes=len(green.classes),
        regular_j_classes=sum(green.regular),
        skeleton_objects=len(envelope_skeleton.objects),
        skeleton_hom_matrix=hom_size_matrix(envelope_skeleton),
        irreducible=is_irreducible(presentation),
    )


class Verdict(Enum):
    NOT_FLOW_EQUIVALENT = "NOT_FLOW_EQUIVALENT"
    NOT_DISTINGUISHED = "NOT_DISTINGUISHED"
    FLOW_EQUIVALENT = "FLOW_EQUIVALENT"
    INAPPLICABLE = "INAPPLICABLE"


@dataclass(frozen=True)
class FlowVerdict:
    kind: Verdict
    note: str

    @property
    def token(self) -> str:
        return self.kind.value


def _fingerprint(cat: FiniteCategory) -> str:
    matrix = json.dumps(hom_size_matrix(cat), separators=(",", ":"))
    return f"{len(cat.objects)} objects, hom sizes {matrix}"


def flow_compare(
    left: Presentation,
    right: Presentation,
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> FlowVerdict:
    """One-sided comparison: a skeleton mismatch refutes flow equivalence.

    The positive direction is out of reach for plain presentations, so the
    best possible affirmative answer is NOT_DISTINGUISHED.
    """
    sk_left = _skeleton_of(left)
    sk_right = _skeleton_of(right)
    if categories_isomorphic(sk_left, sk_right, budget=budget):
        return FlowVerdict(
            Verdict.NOT_DISTINGUISHED,
            "envelope skeletons are isomorphic; the invariant cannot separate",
        )
    return FlowVerdict(
        Verdict.NOT_FLOW_EQUIVALENT,
        f"envelope skeletons differ: {_fingerprint(sk_left)} vs {_fingerprint(sk_right)}",
    )


@dataclass(frozen=True)
class SymbolExpand:
    symbol: str


@dataclass(frozen=True)
class HigherBlock:
    order: int


Move = Union[SymbolExpand, HigherBlock]


def apply_move(presentation: Presentation, move: Move) -> Presentation:
    if isinstance(move, SymbolExpand):
        return symbol_expansion(presentation, move.symbol)
    if isinstance(move, HigherBlock):
        return higher_block(presentation, move.order)
    raise TypeError(f"unknown move {move!r}")


def expansion_invariance_check(
    presentation: Presentation,
    moves: Iterable[Move],
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> bool:
    """Apply ``moves`` in order and test envelope-skeleton isomorphism.

    True is the expected outcome for any sequence of flow moves; False
    would exhibit a defect in the invariant chain.
    """
    recoded = presentation
    for move in moves:
        recoded = apply_move(recoded, move)
    return categories_isomorphic(
        _skeleton_of(presentation), _skeleton_of(recoded), budget=budget
    )


def _degree_hypothesis(graph: DyckGraph) -> bool:
    outs = {v: 0 for v in graph.vertices}
    ins = {v: 0 for v in graph.vertices}
    for _, u, w in graph.edges:
        outs[u] += 1
        ins[w] += 1
    return all(outs[v] != 1 and ins[v] >= 1 for v in graph.vertices)


def _edge_count_matrix(graph: DyckGraph) -> dict[tuple[str, str], int]:
    counts: dict[tuple[str, str], int] = {}
    for _, u, w in graph.edges:
        counts[(u, w)] = counts.get((u, w), 0) + 1
    return counts


def _multigraph_isomorphic(g: DyckGraph, h: DyckGraph) -> bool:
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    mg, mh = _edge_count_matrix(g), _edge_count_matrix(h)

    def signature(graph: DyckGraph, counts, v) -> tuple:
        outs = sorted(c for (u, _), c in counts.items() if u == v)
        ins = sorted(c for (_, w), c in counts.items() if w == v)
        return (counts.get((v, v), 0), outs, ins)

    sig_g = {v: signature(g, mg, v) for v in g.vertices}
    sig_h = {v: signature(h, mh, v) for v in h.vertices}
    if sorted(map(str, sig_g.values())) != sorted(map(str, sig_h.values())):
        return False

    gs = list(g.vertices)
    mapping: dict[str, str] = {}
    taken: set[str] = set()

    def place(k: int) -> bool:
        if k == len(gs):
            return True
        v = gs[k]
        for w in h.vertices:
            if w in taken or sig_g[v] != sig_h[w]:
                continue
            if any(
                mg.get((v, v2), 0) != mh.get((w, w2), 0)
                or mg.get((v2, v), 0) != mh.get((w2, w), 0)
                for v2, w2 in mapping.items()
            ):
                continue
            if mg.get((v, v), 0) != mh.get((w, w), 0):
                continue
            mapping[v] = w
            taken.add(w)
            if place(k + 1):
                return True
            del mapping[v]
            taken.discard(w)
        return False

    return place(0)


def markov_dyck_flow_compare(g: DyckGraph, h: DyckGraph) -> FlowVerdict:
    """Complete comparison of bracket shifts under the degree hypothesis.

    Requires every vertex of both graphs to have out-degree different
    from one and in-degree at least one; otherwise the verdict is
    INAPPLICABLE.  Within the hypothesis, flow equivalence holds exactly
    when the underlying multigraphs are isomorphic.
    """
    if not _degree_hypothesis(g) or not _degree_hypothesis(h):
        return FlowVerdict(
            Verdict.INAPPLICABLE,
            "degree hypothesis fails: need out-degree != 1 and in-degree >= 1",
        )
    if _multigraph_isomorphic(g, h):
        return FlowVerdict(Verdict.FLOW_EQUIVALENT, "underlying multigraphs are isomorphic")
    return FlowVerdict(Verdict.NOT_FLOW_EQUIVALENT, "underlying multigraphs differ")


def random_presentation(
    seed: int,
    n_vertices: int,
    alphabet: Alphabet,
    density: float,
) -> Presentation:
    """Deterministic random essential presentation.

    A Hamiltonian cycle with random labels guarantees strong connectivity;
    every other (source, label, target) triple is then added with
    probability ``density``.  Equal arguments give equal output.
    """
    if n_vertices < 1:
        raise InputError("need at least one vertex")
    if not 0.0 <= density <= 1.0:
        raise InputError("density must be within [0, 1]")
    rng = random.Random(seed)
    symbols = list(alphabet)
    vertices = tuple(str(i) for i in range(n_vertices))
    edges: list[tuple[str, str, str]] = []
    present: set[tuple[str, str, str]] = set()
    for i in range(n_vertices):
        edge = (vertices[i], rng.choice(symbols), vertices[(i + 1) % n_vertices])
        if edge not in present:
            present.add(edge)
            edges.append(edge)
    for u in vertices:
        for w in vertices:
            for a in symbols:
                if rng.random() < density and (u, a, w) not in present:
                    present.add((u, a, w))
                    edges.append((u, a, w))
    return Presentation(alphabet, vertices, tuple(edges))


def random_proper_presentations(
    count: int,
    alphabet: Alphabet,
    *,
    density: float = 0.3,
    start_seed: int = 0,
) -> list[tuple[int, Presentation]]:
    """First ``count`` random presentations of proper shifts, with their seeds.

    Seeds run upward from ``start_seed`` and the vertex count cycles through
    2, 3, 4.  A candidate is kept only when every alphabet letter labels some
    edge and the presented shift is not the full shift.  Both exclusions
    matter: an unused letter acts as a spurious zero in the syntactic
    semigroup, and the full shift's trivial semigroup has no zero at all, so
    in either case the envelope skeleton is not preserved by recodings that
    change which situation holds.
    """
    if count < 0:
        raise InputError("count must be nonnegative")
    letters = set(alphabet.symbols)
    picked: list[tuple[int, Presentation]] = []
    seed = start_seed
    while len(picked) < count:
        p = random_presentation(seed, 2 + seed % 3, alphabet, density)
        if {e[1] for e in p.edges} == letters and not is_full_shift(p):
            picked.append((seed, p))
        seed += 1
    return picked
