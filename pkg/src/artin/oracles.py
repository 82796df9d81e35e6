"""Independent brute-force and numeric oracles.

These deliberately avoid the fast paths in the rest of the package: the
chordality and pattern oracles enumerate vertex subsets directly, the Smith
form works on the raw relation matrix, and the sphericity oracle is the
numeric positive-definiteness test for the cosine form.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, permutations

from artin.errors import MalformedInput, TooLarge
from artin.graph import LabeledGraph
from artin.words import GeneratorWord

PD_TOLERANCE = 1e-9
MAX_COSINE_LABEL = 1000
DEFAULT_MAX_BRUTE = 8


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntegerMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise MalformedInput("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise MalformedInput("ragged integer matrix")
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class SmithForm:
    divisors: tuple[int, ...]
    free_rank: int

    @property
    def rank(self) -> int:
        return len(self.divisors)


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Elementary divisors ``d1 | d2 | ...`` and the free rank of the cokernel
    ``Z^ncols / rowspace``. Exact integer arithmetic."""
    a = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    divisors = []
    t = 0
    while t < min(nr, nc):
        piv = min(
            ((abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]),
            default=None,
        )
        if piv is None:
            break
        _, i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        p = a[t][t]
        clean = True
        for i in range(t + 1, nr):
            q = a[i][t] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            clean = clean and a[i][t] == 0
        for j in range(t + 1, nc):
            q = a[t][j] // p
            if q:
                for row in a:
                    row[j] -= q * row[t]
            clean = clean and a[t][j] == 0
        if not clean:
            continue
        bad = next(
            (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None
        )
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        divisors.append(abs(p))
        t += 1
    return SmithForm(tuple(divisors), nc - len(divisors))


def cosine_matrix(g: LabeledGraph) -> list[list[float]]:
    n = len(g)
    vs = g.vertices
    out = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = g.label(vs[i], vs[j])
            if m is None:
                out[i][j] = -1.0
            elif m > MAX_COSINE_LABEL:
                raise TooLarge(f"label {m} exceeds the cosine oracle cap {MAX_COSINE_LABEL}")
            else:
                out[i][j] = -math.cos(math.pi / m)
    return out


def leading_minors(a: list[list[float]]) -> list[float]:
    """Leading principal minors, via elimination without pivoting; stops at
    the first minor that is not positive."""
    a = [row[:] for row in a]
    n = len(a)
    minors = []
    det = 1.0
    for k in range(n):
        p = a[k][k]
        det *= p
        minors.append(det)
        if det <= PD_TOLERANCE:
            break
        for i in range(k + 1, n):
            f = a[i][k] / p
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return minors


def cosine_matrix_pd(g: LabeledGraph) -> bool:
    """True iff the Coxeter cosine form is positive definite, i.e. the
    Coxeter group is finite. All leading minors must exceed 1e-9."""
    minors = leading_minors(cosine_matrix(g))
    return len(minors) == len(g) and all(d > PD_TOLERANCE for d in minors)


def _guard(g: LabeledGraph, max_vertices: int) -> None:
    if len(g) > max_vertices:
        raise TooLarge(f"brute-force oracle limited to {max_vertices} vertices, got {len(g)}")


def brute_chordal(g: LabeledGraph, max_vertices: int = DEFAULT_MAX_BRUTE) -> bool:
    """No vertex subset of size >= 4 induces a cycle."""
    _guard(g, max_vertices)
    vs = g.vertices
    for k in range(4, len(vs) + 1):
        for sub in combinations(vs, k):
            if _induces_cycle(g, sub):
                return False
    return True


def _induces_cycle(g: LabeledGraph, sub) -> bool:
    s = set(sub)
    nb = {v: [u for u in s if g.adjacent(u, v)] for v in sub}
    if any(len(x) != 2 for x in nb.values()):
        return False
    # 2-regular: a single cycle iff connected
    seen, stack = {sub[0]}, [sub[0]]
    while stack:
        for u in nb[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(sub)


def brute_pattern(g: LabeledGraph, max_vertices: int = DEFAULT_MAX_BRUTE) -> list[tuple[str, str, str, str]]:
    """All Figure-1 patterns ``(a, b, v, w)`` by testing every ordered 4-subset
    against the definition; normalised to a < b and v < w."""
    _guard(g, max_vertices)
    idx = g.index
    found = set()
    for sub in combinations(g.vertices, 4):
        for a, b, v, w in permutations(sub):
            if (
                g.label(v, a) == 2
                and g.label(a, w) == 2
                and g.label(w, b) == 2
                and g.label(b, v) == 2
                and (g.label(v, w) or 0) > 2
                and not g.adjacent(a, b)
            ):
                a_, b_ = sorted((a, b), key=idx)
                v_, w_ = sorted((v, w), key=idx)
                found.add((a_, b_, v_, w_))
    return sorted(found, key=lambda t: tuple(idx(x) for x in t))


def brute_clique_condition(g: LabeledGraph, max_vertices: int = DEFAULT_MAX_BRUTE) -> bool:
    """Every complete 3- or 4-vertex subset has at most one label other than 2."""
    _guard(g, max_vertices)
    for k in (3, 4):
        for sub in combinations(g.vertices, k):
            labels = [g.label(u, v) for u, v in combinations(sub, 2)]
            if None not in labels and sum(m != 2 for m in labels) > 1:
                return False
    return True


def brute_coherent(g: LabeledGraph, max_vertices: int = DEFAULT_MAX_BRUTE) -> bool:
    return (
        brute_chordal(g, max_vertices)
        and brute_clique_condition(g, max_vertices)
        and not brute_pattern(g, max_vertices)
    )


# -- bounded rewriting in a dihedral Artin group -------------------------------


@dataclass(frozen=True)
class RewriteResult:
    status: str  # "Equal" or "Unknown"
    states: int
    budget_exceeded: bool = False

    @property
    def equal(self) -> bool:
        return self.status == "Equal"


def _cyclic_reduce(w: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    i, j = 0, len(out)
    while j - i >= 2 and out[i] == -out[j - 1]:
        i += 1
        j -= 1
    return tuple(out[i:j])


def _canonical_rotation(w: tuple[int, ...]) -> tuple[int, ...]:
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def _relator_moves(k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    x, y = 1, 2
    rel = (x, y) * k + tuple(-t for t in reversed((y, x) * k))
    inv = tuple(-t for t in reversed(rel))
    moves = set()
    n = len(rel)
    for r in (rel, inv):
        for i in range(n):
            rot = r[i:] + r[:i]
            # rot = u v = 1, so u may be replaced by v^-1; keep length non-increasing
            for s in range((n + 1) // 2, n + 1):
                u, v = rot[:s], rot[s:]
                moves.add((u, tuple(-t for t in reversed(v))))
    return sorted(moves, key=lambda m: (len(m[1]) - len(m[0]), m))


def bounded_rewrite_equal(
    label2k: int,
    w1: GeneratorWord,
    w2: GeneratorWord,
    depth: int = 10**5,
) -> RewriteResult:
    """Semi-decide ``w1 = w2`` in the dihedral Artin group ``<a, w | (aw)^k = (wa)^k>``.

    Breadth-first search over cyclic words of ``w1 w2^-1`` using free
    reduction and substitutions from the defining relation, never growing
    the word. ``depth`` caps the number of visited states. Returns Equal on
    reaching the empty word, otherwise Unknown; inequality is never claimed.
    """
    if label2k < 2 or label2k % 2:
        raise MalformedInput(f"label must be even and >= 2, got {label2k}")
    letters = sorted(w1.support() | w2.support())
    if len(letters) > 2:
        raise MalformedInput(f"words must use at most two letters, got {letters}")
    code = {x: i + 1 for i, x in enumerate(letters)}
    word = tuple(code[x] * e for x, e in (w1 * w2.inverse()).letters())
    start = _canonical_rotation(_cyclic_reduce(word))
    if not start:
        return RewriteResult("Equal", 1)
    moves = _relator_moves(label2k // 2)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        n = len(cur)
        for i in range(n):
            rot = cur[i:] + cur[:i]
            for u, rep in moves:
                if len(u) > n or rot[: len(u)] != u:
                    continue
                nxt = _canonical_rotation(_cyclic_reduce(rep + rot[len(u):]))
                if not nxt:
                    return RewriteResult("Equal", len(seen))
                if nxt not in seen:
                    if len(seen) >= depth:
                        return RewriteResult("Unknown", len(seen), budget_exceeded=True)
                    seen.add(nxt)
                    queue.append(nxt)
    return RewriteResult("Unknown", len(seen))
