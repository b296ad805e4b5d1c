"""Signature-rule crystal operators on dominant weights and on partitions.

Scanning the rows of a dominant weight from top to bottom, a row where a
box of residue alpha can be added contributes '+', a row where one can be
removed contributes '-'. Deleting adjacent (-,+) pairs among the survivors
until every '+' precedes every '-' gives the reduced signature; the raising
operator acts at the leftmost surviving '-', the lowering operator at the
rightmost surviving '+'.

The partition model runs the same reduce-and-select engine on the signature
built from the diagram's own addable and removable boxes; this matches the
weight scan for any embedding of the partition with enough rows, except that
the last weight row is always removable while a diagram has no box there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .weights import (
    add_box,
    addable_boxes,
    addable_rows,
    format_int_tuple,
    normalize_partition,
    partitions_up_to,
    remove_box,
    removable_boxes,
    removable_rows,
    require_dominant,
    require_prime,
    shift_row,
)

PLUS = "+"
MINUS = "-"

WEIGHT_MODEL = "weight"
PARTITION_MODEL = "partition"


# ---------------------------------------------------------------------------
# signatures

def alpha_signature(lam, alpha: int, p: int) -> list[tuple[int, str]]:
    """Raw signature of a dominant weight: (row, sign) pairs with rows
    strictly increasing. Row i gives '+' when it is addable with
    lam_i + 1 - i congruent to alpha mod p, and '-' when it is removable
    with lam_i - i congruent to alpha (the content of the removed box)."""
    require_prime(p)
    lam = require_dominant(lam)
    plus = addable_rows(lam)
    minus = removable_rows(lam)
    sig = []
    for i in range(1, len(lam) + 1):
        if i in plus and (lam[i - 1] + 1 - i - alpha) % p == 0:
            sig.append((i, PLUS))
        if i in minus and (lam[i - 1] - i - alpha) % p == 0:
            sig.append((i, MINUS))
    return sig


def partition_signature(lam, alpha: int, p: int) -> list[tuple[int, str]]:
    """Raw signature of a partition, read off its addable and removable
    boxes of residue alpha, top row first."""
    lam = normalize_partition(lam)
    entries = [(row, PLUS) for row, _ in addable_boxes(lam, alpha, p)]
    entries += [(row, MINUS) for row, _ in removable_boxes(lam, alpha, p)]
    entries.sort()
    return entries


def reduce_signature(sig) -> list[tuple[int, str]]:
    """Cancel adjacent (-,+) pairs among survivors until all '+' precede all
    '-'. One left-to-right pass: a '+' cancels the most recent pending '-',
    which is the adjacent survivor. The result does not depend on the
    cancellation order (asserted by a randomized test, not assumed)."""
    plus_rows: list[int] = []
    minus_rows: list[int] = []
    for row, sign in sig:
        if sign == MINUS:
            minus_rows.append(row)
        elif minus_rows:
            minus_rows.pop()
        else:
            plus_rows.append(row)
    return [(r, PLUS) for r in plus_rows] + [(r, MINUS) for r in minus_rows]


def _rightmost_plus(sig):
    rows = [r for r, s in sig if s == PLUS]
    return rows[-1] if rows else None


def _leftmost_minus(sig):
    rows = [r for r, s in sig if s == MINUS]
    return rows[0] if rows else None


# ---------------------------------------------------------------------------
# crystal operators

def crystal_f(lam, alpha: int, p: int):
    """Add a box in the row of the rightmost '+' of the reduced signature;
    None when there is no '+'."""
    row = _rightmost_plus(reduce_signature(alpha_signature(lam, alpha, p)))
    return None if row is None else shift_row(tuple(lam), row, +1)


def crystal_e(lam, alpha: int, p: int):
    """Remove a box in the row of the leftmost '-'; None when there is none."""
    row = _leftmost_minus(reduce_signature(alpha_signature(lam, alpha, p)))
    return None if row is None else shift_row(tuple(lam), row, -1)


def partition_crystal_f(lam, alpha: int, p: int):
    lam = normalize_partition(lam)
    row = _rightmost_plus(reduce_signature(partition_signature(lam, alpha, p)))
    if row is None:
        return None
    cur = lam[row - 1] if row <= len(lam) else 0
    return add_box(lam, (row, cur + 1))


def partition_crystal_e(lam, alpha: int, p: int):
    lam = normalize_partition(lam)
    row = _leftmost_minus(reduce_signature(partition_signature(lam, alpha, p)))
    if row is None:
        return None
    return remove_box(lam, (row, lam[row - 1]))


def string_lengths(lam, alpha: int, p: int) -> tuple[int, int]:
    """(epsilon, phi): how many times e resp. f can be applied before
    reaching None, read off as the '-' and '+' counts of the reduced
    signature."""
    sig = reduce_signature(alpha_signature(lam, alpha, p))
    eps = sum(1 for _, s in sig if s == MINUS)
    return eps, len(sig) - eps


def partition_string_lengths(lam, alpha: int, p: int) -> tuple[int, int]:
    sig = reduce_signature(partition_signature(lam, alpha, p))
    eps = sum(1 for _, s in sig if s == MINUS)
    return eps, len(sig) - eps


# ---------------------------------------------------------------------------
# graphs

@dataclass
class CrystalGraph:
    """Vertices with the directed lowering edges (source, alpha, target),
    where target is the f image of source at residue alpha."""
    model: str
    p: int
    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)


def _model_ops(model):
    if model == WEIGHT_MODEL:
        return crystal_f, crystal_e, require_dominant
    if model == PARTITION_MODEL:
        return partition_crystal_f, partition_crystal_e, normalize_partition
    raise InputError(f"unknown model {model!r}")


def crystal_graph(seeds, p: int, max_steps: int, model: str = WEIGHT_MODEL,
                  alphas=None, max_size: int | None = None) -> CrystalGraph:
    """Breadth-first closure of the seeds under all raising and lowering
    operators, up to max_steps applications; max_size optionally caps the
    entry sum of partition vertices."""
    require_prime(p)
    f, e, norm = _model_ops(model)
    if alphas is None:
        alphas = range(p)
    frontier = {norm(s) for s in seeds}
    vertices = set(frontier)
    edges = set()
    for _ in range(max_steps):
        nxt = set()
        for v in frontier:
            for a in alphas:
                w = f(v, a, p)
                if w is not None and (max_size is None or sum(w) <= max_size):
                    edges.add((v, a, w))
                    if w not in vertices:
                        nxt.add(w)
                u = e(v, a, p)
                if u is not None and (max_size is None or sum(u) <= max_size):
                    edges.add((u, a, v))
                    if u not in vertices:
                        nxt.add(u)
        vertices |= nxt
        frontier = nxt
        if not frontier:
            break
    return CrystalGraph(model, p, vertices, edges)


def singular_vertices(g: CrystalGraph) -> set:
    """Vertices annihilated by the raising operator at every residue."""
    _, e, _ = _model_ops(g.model)
    return {v for v in g.vertices if all(e(v, a, g.p) is None for a in range(g.p))}


def empty_component_classification(p: int, max_size: int):
    """BFS component of the empty diagram in the partition crystal versus the
    gap condition lam_i - lam_{i+1} < p (including the last part against 0).

    Returns (computed, predicted, equal)."""
    require_prime(p)
    g = crystal_graph([()], p, max_steps=max_size + 1, model=PARTITION_MODEL,
                      max_size=max_size)
    computed = set(g.vertices)
    predicted = {lam for lam in partitions_up_to(max_size)
                 if _small_gaps(lam, p)}
    return computed, predicted, computed == predicted


def _small_gaps(lam, p) -> bool:
    return all(lam[i] - (lam[i + 1] if i + 1 < len(lam) else 0) < p
               for i in range(len(lam)))


def branching(lam, p: int) -> list[tuple[int, tuple[int, ...]]]:
    """For a partition in the component of the empty diagram, the residues
    whose raising operator is nonzero together with the raised partitions.
    These label the socle pieces of restricting the corresponding symmetric
    group irreducible one step down."""
    require_prime(p)
    lam = normalize_partition(lam)
    if not _small_gaps(lam, p):
        raise InputError(
            f"partition {lam} has a gap >= {p}, outside the component of the empty diagram")
    out = []
    for a in range(p):
        mu = partition_crystal_e(lam, a, p)
        if mu is not None:
            out.append((a, mu))
    return out


# ---------------------------------------------------------------------------
# exports

_DOT_COLORS = ("red", "blue", "forestgreen", "darkorange",
               "purple", "saddlebrown", "deeppink", "teal")


def graph_to_dot(g: CrystalGraph) -> str:
    """DOT text with vertices sorted for stable diffs and edges colored by
    residue class."""
    lines = ["digraph crystal {"]
    for v in sorted(g.vertices):
        lines.append(f'  "{format_int_tuple(v)}";')
    for s, a, t in sorted(g.edges):
        color = _DOT_COLORS[a % len(_DOT_COLORS)]
        lines.append(f'  "{format_int_tuple(s)}" -> "{format_int_tuple(t)}"'
                     f' [label="{a}", color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json_obj(g: CrystalGraph) -> dict:
    return {
        "model": g.model,
        "p": g.p,
        "vertices": [list(v) for v in sorted(g.vertices)],
        "edges": [{"source": list(s), "alpha": a, "target": list(t)}
                  for s, a, t in sorted(g.edges)],
    }
