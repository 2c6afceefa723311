"""Good-pair decision for semicomplete compositions.

A strong semicomplete composition has a good pair at r exactly when the
subgraph induced by r and its neighbourhood does, so the decision reduces to
the closed-neighbourhood restriction.  The reduction is constructive both
ways: `lift_good_pair` grows a pair of the restriction into one of the full
graph, `shrink_good_pair` prunes a pair of the full graph down to the
restriction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import (
    BlobVertex,
    CompositionSpec,
    is_semicomplete,
    materialize,
)
from .construct import construct_good_pair
from .digraph import (
    Branching,
    DiGraph,
    GoodPair,
    induced_subgraph,
    is_strong,
    verify_good_pair,
)
from .oracle import DEFAULT_VERTEX_CAP, Decision, decide_good_pair_exact


@dataclass(frozen=True)
class NeighborhoodRestriction:
    """The subgraph induced by a root and all its in-/out-neighbours.

    ``kept`` lists the original ids of the restriction's vertices in
    ascending order (position = new id); ``removed`` holds the original ids
    of the vertices non-adjacent to the root.
    """

    restricted: DiGraph
    kept: tuple[int, ...]
    removed: frozenset[int]
    root_in_restricted: int


def closed_neighborhood_restriction(q: DiGraph, r: int) -> NeighborhoodRestriction:
    """Restrict ``q`` to the root plus everything adjacent to it."""
    q.check_vertex(r, "root")
    keep = {r}
    keep.update(q.out_adj[r])
    keep.update(q.in_adj[r])
    kept = tuple(sorted(keep))
    removed = frozenset(range(q.vertex_count)) - keep
    return NeighborhoodRestriction(
        restricted=induced_subgraph(q, kept),
        kept=kept,
        removed=removed,
        root_in_restricted=kept.index(r),
    )


def _relabel_pair(gp: GoodPair, mapping: dict[int, int]) -> GoodPair:
    def relabel(b: Branching) -> Branching:
        return Branching(
            mapping[b.root], b.kind, ((mapping[u], mapping[v]) for u, v in b.arcs)
        )

    return GoodPair(
        mapping[gp.root], relabel(gp.out_branching), relabel(gp.in_branching)
    )


def lift_good_pair(
    q: DiGraph, nr: NeighborhoodRestriction, restricted_pair: GoodPair
) -> GoodPair:
    """Extend a good pair of the restriction to one of the full digraph.

    Every removed vertex u is hung off the existing trees with one arc in
    each direction: an arc x -> u into the out-branching and an arc u -> y
    into the in-branching.  The preferred x is a vertex whose arc enters the
    root in the restricted in-branching, and the preferred y one the root
    feeds in the restricted out-branching; when the preferred vertex lacks
    the needed arc, the smallest kept vertex that has it is used instead.
    Heads of added out-arcs and tails of added in-arcs are removed vertices,
    so the result stays arc-disjoint by construction.
    """
    rep = verify_good_pair(nr.restricted, restricted_pair)
    if not rep.ok:
        raise ValueError(f"restricted pair does not verify: {rep.first_problem}")
    to_original = dict(enumerate(nr.kept))
    pair = _relabel_pair(restricted_pair, to_original)
    r = pair.root
    root_feeders = sorted(u for u, v in pair.in_branching.arcs if v == r)
    root_fed = sorted(v for u, v in pair.out_branching.arcs if u == r)
    others = [v for v in nr.kept if v != r]
    out_arcs = set(pair.out_branching.arcs)
    in_arcs = set(pair.in_branching.arcs)
    for u in sorted(nr.removed):
        x = _first_with_arc(q, root_feeders, others, tail=None, head=u)
        if x is None:
            raise ValueError(
                f"no kept vertex has an arc to removed vertex {u}; "
                "is the host digraph strong?"
            )
        y = _first_with_arc(q, root_fed, others, tail=u, head=None)
        if y is None:
            raise ValueError(
                f"removed vertex {u} has no arc back to a kept vertex; "
                "is the host digraph strong?"
            )
        out_arcs.add((x, u))
        in_arcs.add((u, y))
    return GoodPair(r, Branching(r, "out", out_arcs), Branching(r, "in", in_arcs))


def _first_with_arc(
    q: DiGraph,
    preferred: list[int],
    fallback: list[int],
    tail: int | None,
    head: int | None,
) -> int | None:
    """First vertex v (preferred first, then fallback) with the arc v->head
    or tail->v present in q."""
    for pool in (preferred, fallback):
        for v in pool:
            if head is not None and q.has_arc(v, head):
                return v
            if tail is not None and q.has_arc(tail, v):
                return v
    return None


@dataclass(frozen=True)
class ShrinkResult:
    """Either the shrunken pair (in restricted ids) or the vertex it got
    stuck on; ``fallback_rewires`` counts how often the immediate
    predecessor lacked its arc to the root and an earlier one was used."""

    pair: GoodPair | None
    stuck_vertex: int | None = None
    message: str | None = None
    fallback_rewires: int = 0

    @property
    def ok(self) -> bool:
        return self.pair is not None


def shrink_good_pair(
    q: DiGraph, nr: NeighborhoodRestriction, gp: GoodPair
) -> ShrinkResult:
    """Prune a good pair of ``q`` down to the closed-neighbourhood restriction.

    Both trees are processed in toward-root pointer form.  Repeatedly take a
    maximal tree path and its deepest removed vertex w: if w is the path's
    leaf it is simply dropped, otherwise the vertex just below w is rewired
    to point directly at the root, which needs the corresponding arc of q;
    when that arc is missing the nearest vertex below w that does have one
    is rewired instead.  If no vertex below w qualifies the procedure stops
    and reports w.  All arcs ever added are incident to the root, so
    disjointness of the two trees survives.
    """
    rep = verify_good_pair(q, gp)
    if not rep.ok:
        raise ValueError(f"input pair does not verify: {rep.first_problem}")
    r = gp.root
    if r in nr.removed:
        raise ValueError("root cannot be a removed vertex")

    in_pointers = {u: v for u, v in gp.in_branching.arcs}
    pruned_in, stuck, fb_in = _prune_toward_root(
        in_pointers, r, nr.removed, lambda v: q.has_arc(v, r)
    )
    if pruned_in is None:
        return ShrinkResult(
            None,
            stuck_vertex=stuck,
            message=f"in-branching: no vertex below {stuck} has an arc to "
            f"the root",
            fallback_rewires=fb_in,
        )
    out_pointers = {v: u for u, v in gp.out_branching.arcs}
    pruned_out, stuck, fb_out = _prune_toward_root(
        out_pointers, r, nr.removed, lambda v: q.has_arc(r, v)
    )
    if pruned_out is None:
        return ShrinkResult(
            None,
            stuck_vertex=stuck,
            message=f"out-branching: no vertex below {stuck} has an arc "
            f"from the root",
            fallback_rewires=fb_in + fb_out,
        )
    to_restricted = {v: i for i, v in enumerate(nr.kept)}
    root = to_restricted[r]
    out_b = Branching(
        root,
        "out",
        ((to_restricted[p], to_restricted[v]) for v, p in pruned_out.items()),
    )
    in_b = Branching(
        root,
        "in",
        ((to_restricted[v], to_restricted[p]) for v, p in pruned_in.items()),
    )
    pair = GoodPair(root, out_b, in_b)
    final = verify_good_pair(nr.restricted, pair)
    if not final.ok:
        return ShrinkResult(
            None,
            message=f"shrunken pair failed verification: {final.first_problem}",
            fallback_rewires=fb_in + fb_out,
        )
    return ShrinkResult(pair, fallback_rewires=fb_in + fb_out)


def _prune_toward_root(
    pointers: dict[int, int],
    root: int,
    removed: frozenset[int],
    can_rewire_to_root,
) -> tuple[dict[int, int] | None, int | None, int]:
    """Eliminate removed vertices from a toward-root pointer tree.

    ``pointers`` maps every non-root vertex to its next vertex toward the
    root.  Returns (pruned map, stuck vertex, fallback count); the map is
    None when some removed vertex cannot be eliminated.
    """
    pointers = dict(pointers)
    alive_removed = set(removed) & set(pointers)
    fallbacks = 0
    while alive_removed:
        children: dict[int, list[int]] = {}
        for v, p in pointers.items():
            children.setdefault(p, []).append(v)
        leaves = sorted(v for v in pointers if v not in children)
        target_path: list[int] | None = None
        for leaf in leaves:
            path = [leaf]
            v = leaf
            while v != root:
                v = pointers[v]
                path.append(v)
            if any(v in alive_removed for v in path):
                target_path = path
                break
        if target_path is None:  # unreachable: alive removed vertices lie on
            break  # some leaf path by construction
        w_idx = next(i for i, v in enumerate(target_path) if v in alive_removed)
        w = target_path[w_idx]
        if w_idx == 0:
            del pointers[w]
            alive_removed.discard(w)
            continue
        # Rewire the vertex nearest below w that has an arc to/from the root.
        for v in target_path[w_idx - 1 :: -1]:
            if can_rewire_to_root(v):
                if v != target_path[w_idx - 1]:
                    fallbacks += 1
                pointers[v] = root
                break
        else:
            return None, w, fallbacks
    return pointers, None, fallbacks


def decide_semicomplete(
    spec: CompositionSpec,
    root: BlobVertex,
    kernel_cap: int = DEFAULT_VERTEX_CAP,
) -> Decision:
    """Decide the good pair at ``root`` for a strong semicomplete composition.

    Fast path: when every blob has at least two vertices the constructor
    answers directly.  Otherwise the question is settled on the restriction
    to the root's closed neighbourhood with the exact kernel and, on
    success, lifted back.  Restrictions larger than ``kernel_cap`` come
    back undecided instead of risking an exponential blow-up.
    """
    if spec.blob_count < 2:
        raise ValueError("composition-level decision requires at least 2 blobs")
    if not is_semicomplete(spec.outer):
        raise ValueError("outer digraph is not semicomplete")
    if not is_strong(spec.outer):
        # With t >= 2 the composition is strong exactly when the outer is.
        raise ValueError("composition is not strong")
    spec.check_blob_vertex(root)
    if all(h.vertex_count >= 2 for h in spec.blobs):
        return Decision("found", pair=construct_good_pair(spec, root))
    q = materialize(spec)
    r = spec.global_id(root)
    nr = closed_neighborhood_restriction(q, r)
    if nr.restricted.vertex_count > kernel_cap:
        return Decision(
            "undecided",
            reason=f"restriction has {nr.restricted.vertex_count} vertices, "
            f"over the kernel cap of {kernel_cap}",
        )
    inner = decide_good_pair_exact(
        nr.restricted, nr.root_in_restricted, vertex_cap=kernel_cap
    )
    if inner.status == "undecided":
        return inner
    if inner.absent:
        return Decision("absent")
    assert inner.pair is not None
    return Decision("found", pair=lift_good_pair(q, nr, inner.pair))
