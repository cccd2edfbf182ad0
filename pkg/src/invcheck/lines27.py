"""The 27 lines on the cubic surface S ⊂ P⁵.

S is cut out by g1+g2+g3 = 0, g4+g5+g6 = 0 and g1³+g2³+g3³ = g4³+g5³+g6³.
Lines are stored as 2×6 row-reduced bases over Q(ω).  A generator M acts
on a line by substituting g_i ↦ M(g_i) in its equations, which is how the
transformation tables in the reference are read.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactnum import CycloNum, omega
from .identities import GMAP_TABLES

Vec = tuple[CycloNum, ...]

_W = omega()
_ZERO = CycloNum(0, 3)
_ONE = CycloNum(1, 3)


def _c(x) -> CycloNum:
    return x if isinstance(x, CycloNum) and x.n == 3 else CycloNum(x, 3)


# ---------------------------------------------------------------------------
# linear algebra over Q(ω)


def rref(rows: Iterable[Sequence]) -> tuple[list[list[CycloNum]], list[int]]:
    m = [[_c(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[CycloNum]]:
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def normalize_point(v: Sequence) -> Vec:
    """Scale so the first nonzero coordinate is 1."""
    lead = next(x for x in v if x)
    inv = _c(lead).inverse()
    return tuple(_c(x) * inv for x in v)


def proportional(u: Sequence, v: Sequence) -> bool:
    return normalize_point(u) == normalize_point(v)


# ---------------------------------------------------------------------------
# the lines


def _g(i: int, coeff=1) -> list:
    row = [0] * 6
    row[i - 1] = coeff
    return row


def _plus(*idx: int) -> list:
    row = [0] * 6
    for i in idx:
        row[i - 1] = 1
    return row


_PERMS = {1: (4, 5, 6), 2: (4, 6, 5), 3: (5, 4, 6), 4: (5, 6, 4), 5: (6, 4, 5), 6: (6, 5, 4)}


def line_equations() -> dict[str, list[list]]:
    """The four linear equations of each of the 27 lines, keyed by label."""
    eqs: dict[str, list[list]] = {}
    n = 1
    for a in (1, 2, 3):
        rest_a = [i for i in (1, 2, 3) if i != a]
        for b in (4, 5, 6):
            rest_b = [i for i in (4, 5, 6) if i != b]
            eqs[f"l{n}"] = [_g(a), _plus(*rest_a), _g(b), _plus(*rest_b)]
            n += 1
    for j in range(3):
        wj = _W**j
        for k, perm in _PERMS.items():
            rows = []
            for i, target in zip((1, 2, 3), perm):
                row = [_ZERO] * 6
                row[i - 1] = _ONE
                row[target - 1] = -wj
                rows.append(row)
            rows.append(_plus(1, 2, 3))
            eqs[f"l{j},{k}"] = rows
    return eqs


LABELS: tuple[str, ...] = tuple(line_equations())
REAL_LABELS = LABELS[:15]


@dataclass(frozen=True)
class LineRep:
    label: str
    basis: tuple[Vec, Vec]

    def contains(self, p: Sequence) -> bool:
        return rank([*self.basis, p]) == 2


def _canonical(basis_rows) -> tuple[Vec, Vec]:
    red, _ = rref(basis_rows)
    if len(red) != 2:
        raise ValueError(f"expected a line, got rank {len(red)}")
    return tuple(tuple(r) for r in red)  # type: ignore[return-value]


def surface_equations(p: Sequence) -> tuple:
    g = [_c(x) for x in p]
    return (
        g[0] + g[1] + g[2],
        g[3] + g[4] + g[5],
        g[0] ** 3 + g[1] ** 3 + g[2] ** 3 - g[3] ** 3 - g[4] ** 3 - g[5] ** 3,
    )


def on_surface(p: Sequence) -> bool:
    return not any(surface_equations(p))


def _line_on_surface(basis) -> bool:
    # a binary cubic vanishing at four distinct ratios is zero
    u, v = basis
    for s, t in ((1, 0), (0, 1), (1, 1), (1, -1)):
        if not on_surface([s * a + t * b for a, b in zip(u, v)]):
            return False
    return True


class LineConstructionError(ValueError):
    pass


@lru_cache(maxsize=None)
def build_lines() -> tuple[LineRep, ...]:
    out = []
    for label, eqs in line_equations().items():
        ns = nullspace(eqs, 6)
        if len(ns) != 2:
            raise LineConstructionError(f"{label}: solution space has dimension {len(ns)}")
        basis = _canonical(ns)
        if not _line_on_surface(basis):
            raise LineConstructionError(f"{label} does not lie on S")
        out.append(LineRep(label, basis))
    return tuple(out)


@lru_cache(maxsize=None)
def _by_basis() -> dict:
    return {ln.basis: ln.label for ln in build_lines()}


def line(label: str) -> LineRep:
    return build_lines()[LABELS.index(label)]


def identify(basis_rows) -> str:
    key = _canonical(basis_rows)
    try:
        return _by_basis()[key]
    except KeyError:
        raise LookupError("basis does not match any of the 27 lines") from None


def meet(a: LineRep | str, b: LineRep | str) -> Vec | None:
    """Common point (normalized) of two distinct lines, or None if skew."""
    a = line(a) if isinstance(a, str) else a
    b = line(b) if isinstance(b, str) else b
    if a.basis == b.basis:
        raise ValueError("meet of a line with itself")
    # columns a1, a2, -b1, -b2; a kernel vector gives the common point
    cols = [a.basis[0], a.basis[1], [-x for x in b.basis[0]], [-x for x in b.basis[1]]]
    rows = [[cols[j][i] for j in range(4)] for i in range(6)]
    ker = nullspace(rows, 4)
    if not ker:
        return None
    s1, s2 = ker[0][0], ker[0][1]
    return normalize_point([s1 * x + s2 * y for x, y in zip(*a.basis)])


@lru_cache(maxsize=None)
def incidence_graph() -> dict[str, frozenset[str]]:
    adj: dict[str, set[str]] = {lab: set() for lab in LABELS}
    for x, y in itertools.combinations(LABELS, 2):
        if meet(x, y) is not None:
            adj[x].add(y)
            adj[y].add(x)
    return {k: frozenset(v) for k, v in adj.items()}


def edge_count() -> int:
    return sum(len(v) for v in incidence_graph().values()) // 2


def meets(x: str, y: str) -> bool:
    return y in incidence_graph()[x]


# ---------------------------------------------------------------------------
# double sixes and Schläfli labels


def _skew_sixes() -> list[tuple[str, ...]]:
    adj = incidence_graph()
    out = []

    def grow(chosen: list[str], start: int):
        if len(chosen) == 6:
            out.append(tuple(chosen))
            return
        for i in range(start, len(LABELS)):
            c = LABELS[i]
            if all(c not in adj[x] for x in chosen):
                grow(chosen + [c], i + 1)

    grow([], 0)
    return out


def _partner(six: Sequence[str]) -> tuple[str, ...] | None:
    adj = incidence_graph()
    partner = []
    for i, a in enumerate(six):
        others = [x for j, x in enumerate(six) if j != i]
        cands = [
            m for m in LABELS if m not in six and m not in adj[a] and all(m in adj[o] for o in others)
        ]
        if len(cands) != 1:
            return None
        partner.append(cands[0])
    return tuple(partner)


@dataclass(frozen=True)
class DoubleSix:
    a: tuple[str, ...]
    b: tuple[str, ...]

    def key(self) -> frozenset:
        return frozenset({frozenset(zip(self.a, self.b)), frozenset(zip(self.b, self.a))})

    def is_valid(self) -> bool:
        for i, j in itertools.product(range(6), repeat=2):
            if i != j:
                if meets(self.a[i], self.a[j]) or meets(self.b[i], self.b[j]):
                    return False
                if not meets(self.a[i], self.b[j]):
                    return False
            elif meets(self.a[i], self.b[i]):
                return False
        return True


@lru_cache(maxsize=None)
def enumerate_double_sixes() -> tuple[DoubleSix, ...]:
    seen, out = set(), []
    for six in _skew_sixes():
        b = _partner(six)
        if b is None:
            continue
        ds = DoubleSix(six, b)
        if ds.key() not in seen:
            seen.add(ds.key())
            out.append(ds)
    return tuple(out)


# the double six fixed in the reference: rows (a_i), (b_i)
N_REFERENCE = DoubleSix(
    ("l1,1", "l2,2", "l2,3", "l1,4", "l1,5", "l2,6"),
    ("l2,1", "l1,2", "l1,3", "l2,4", "l2,5", "l1,6"),
)

SCHLAFLI_REFERENCE = {
    "c12": "l1", "c13": "l9", "c14": "l0,5", "c15": "l0,4", "c16": "l5",
    "c23": "l0,6", "c24": "l6", "c25": "l8", "c26": "l0,3",
    "c34": "l2", "c35": "l4", "c36": "l0,2",
    "c45": "l0,1", "c46": "l7", "c56": "l3",
}  # fmt: skip


def c_symbol(i: int, j: int) -> str:
    i, j = sorted((i, j))
    return f"c{i}{j}"


@lru_cache(maxsize=None)
def schlafli_labeling(ds: DoubleSix = N_REFERENCE) -> dict[str, str]:
    """c_ij as the unique line meeting a_i, b_j, a_j, b_i."""
    adj = incidence_graph()
    used = set(ds.a) | set(ds.b)
    out = {}
    for i, j in itertools.combinations(range(6), 2):
        need = (ds.a[i], ds.b[j], ds.a[j], ds.b[i])
        cands = [m for m in LABELS if m not in used and all(m in adj[x] for x in need)]
        if len(cands) != 1:
            raise ValueError(f"c{i + 1}{j + 1}: {len(cands)} candidates")
        out[c_symbol(i + 1, j + 1)] = cands[0]
    return out


def symbol_map(ds: DoubleSix = N_REFERENCE) -> dict[str, str]:
    """Schläfli symbol (a1.., b1.., c12..) → line label."""
    out = {f"a{i + 1}": x for i, x in enumerate(ds.a)}
    out.update({f"b{i + 1}": x for i, x in enumerate(ds.b)})
    out.update(schlafli_labeling(ds))
    return out


def resolve_symbol(sym: str, table: dict[str, str]) -> str:
    if sym.startswith("c"):
        return table[c_symbol(int(sym[1]), int(sym[2]))]
    return table[sym]


# ---------------------------------------------------------------------------
# induced permutations

Perm = tuple[int, ...]


def _act_on_equations(gen: str, eqs: Sequence[Sequence]) -> list[list[CycloNum]]:
    table = GMAP_TABLES[gen]
    out = []
    for row in eqs:
        new = [_ZERO] * 6
        for i, c in enumerate(row):
            if c:
                sign, j = table[i]
                new[j - 1] = new[j - 1] + _c(c) * sign
        out.append(new)
    return out


def _perm_from_map(images: dict[str, str]) -> Perm:
    return tuple(LABELS.index(images[lab]) for lab in LABELS)


@lru_cache(maxsize=None)
def induced_permutation(word: str) -> Perm:
    """Line permutation of a word in A, B, C, E; "EC" means E applied after C."""
    images = {}
    for lab, eqs in line_equations().items():
        cur = [[_c(x) for x in r] for r in eqs]
        for gen in reversed(word):
            cur = _act_on_equations(gen, cur)
        ns = nullspace(cur, 6)
        if len(ns) != 2:
            raise LookupError(f"{word}({lab}) is not a line")
        images[lab] = identify(ns)
    return _perm_from_map(images)


@lru_cache(maxsize=None)
def conjugation_permutation() -> Perm:
    images = {}
    for ln in build_lines():
        images[ln.label] = identify([[x.conjugate() for x in r] for r in ln.basis])
    return _perm_from_map(images)


def compose(p: Perm, q: Perm) -> Perm:
    """p∘q: apply q first."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_label_map(p: Perm) -> dict[str, str]:
    return {LABELS[i]: LABELS[p[i]] for i in range(len(p))}


def cycles(p: Perm) -> list[tuple[str, ...]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(LABELS[j])
            j = p[j]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> list[int]:
    return sorted((len(c) for c in cycles(p)), reverse=True)


def perm_sign(p: Perm) -> int:
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def fixed_points(p: Perm) -> list[str]:
    return [LABELS[i] for i in range(len(p)) if p[i] == i]


def is_automorphism(p: Perm) -> bool:
    adj = incidence_graph()
    for x in LABELS:
        px = LABELS[p[LABELS.index(x)]]
        if {LABELS[p[LABELS.index(y)]] for y in adj[x]} != set(adj[px]):
            return False
    return True


def generated_perm_group(perms: Iterable[Perm]) -> int:
    gens = list(perms)
    ident = tuple(range(len(LABELS)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def lattice_determinant(p: Perm) -> Fraction:
    """det of p on the span of the line classes.

    The intersection matrix G (−1 on the diagonal, 1 for meeting lines) has
    rank 7; p commutes with G and so acts on its column space.  The canonical
    class is fixed, so this is also the determinant on its 6-dimensional
    orthogonal complement.
    """
    n = len(LABELS)
    adj = incidence_graph()
    G = [[Fraction(-1) if i == j else Fraction(int(LABELS[j] in adj[LABELS[i]])) for j in range(n)] for i in range(n)]
    cols = [[G[i][j] for i in range(n)] for j in range(n)]
    basis_idx: list[int] = []
    for j in range(n):
        if _rank_q([cols[k] for k in basis_idx + [j]]) > len(basis_idx):
            basis_idx.append(j)
    B = [cols[k] for k in basis_idx]
    M = [_solve_q(B, cols[p[k]]) for k in basis_idx]
    return _det_q([list(r) for r in zip(*M)])


def _rank_q(vectors) -> int:
    m = [list(v) for v in vectors]
    r = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def _solve_q(basis, target) -> list[Fraction]:
    """Coordinates of target in the span of basis vectors (exact)."""
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(len(target))]
    r, piv_cols = 0, []
    for col in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(row[k] for row in rows[r:]):
        raise ValueError("target not in span")
    coords = [Fraction(0)] * k
    for row, c in zip(rows, piv_cols):
        coords[c] = row[k]
    return coords


def _det_q(m) -> Fraction:
    m = [list(r) for r in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


# ---------------------------------------------------------------------------
# automorphism group of the incidence graph


def _adj_matrix() -> list[list[bool]]:
    adj = incidence_graph()
    return [[LABELS[j] in adj[LABELS[i]] for j in range(27)] for i in range(27)]


def _extend(adj, fixed: dict[int, int]) -> dict[int, int] | None:
    """Complete a partial vertex map to an automorphism, or None.

    Each unmapped vertex keeps a cell of admissible images (same adjacency to
    everything mapped so far); the smallest cell is branched on first.
    """
    n = len(adj)
    if len(fixed) == n:
        return dict(fixed)
    used = set(fixed.values())
    best, best_cands = None, None
    for u in range(n):
        if u in fixed:
            continue
        cands = [x for x in range(n) if x not in used and all(adj[u][p] == adj[x][q] for p, q in fixed.items())]
        if not cands:
            return None
        if best_cands is None or len(cands) < len(best_cands):
            best, best_cands = u, cands
            if len(cands) == 1:
                break
    for x in best_cands:
        fixed[best] = x
        res = _extend(adj, fixed)
        del fixed[best]
        if res is not None:
            return res
    return None


def aut_order(return_details: bool = False):
    """|Aut| of the incidence graph via a stabilizer chain.

    Along a base b1, b2, … the orbit of b_k under the pointwise stabilizer of
    b1..b_{k−1} is found by testing each candidate image with ``_extend``; the
    order is the product of orbit lengths.
    """
    adj = _adj_matrix()
    n = len(adj)
    prefix: dict[int, int] = {}
    orbits = []
    for b in range(n):
        orbit = []
        for w in range(n):
            if w in prefix.values():
                continue
            trial = dict(prefix)
            trial[b] = w
            if _extend(adj, trial) is not None:
                orbit.append(w)
        orbits.append(len(orbit))
        prefix[b] = b
        if _extend(adj, dict(prefix)) is not None and _only_identity(adj, prefix):
            break
    order = 1
    for o in orbits:
        order *= o
    if return_details:
        return order, orbits
    return order


def _only_identity(adj, prefix: dict[int, int]) -> bool:
    """True once the pointwise stabilizer of ``prefix`` is trivial."""
    n = len(adj)
    for u in range(n):
        if u in prefix:
            continue
        for w in range(n):
            if w == u or w in prefix.values():
                continue
            trial = dict(prefix)
            trial[u] = w
            if _extend(adj, trial) is not None:
                return False
    return True


def vertex_orbit_count() -> int:
    """Orbits of the full automorphism group on the 27 lines."""
    adj = _adj_matrix()
    left, count = set(range(27)), 0
    while left:
        v = min(left)
        left -= {w for w in left if _extend(adj, {v: w}) is not None}
        count += 1
    return count


# ---------------------------------------------------------------------------
# tables from the reference, checked entry by entry

# generator → {line: image}; l_{j,k} rows use j-dependent targets
_TABLE_STEINER = {
    "E": [1, 4, 7, 3, 6, 9, 2, 5, 8],
    "A": [7, 8, 9, 1, 2, 3, 4, 5, 6],
    "B": [1, 3, 2, 7, 9, 8, 4, 6, 5],
    "C": [2, 3, 1, 5, 6, 4, 8, 9, 7],
}
# (j-multiplier, k-image) for l_{j,k}
_TABLE_JK = {
    "E": [(2, 2), (2, 1), (2, 5), (2, 3), (2, 6), (2, 4)],
    "A": [(1, 4), (1, 6), (1, 2), (1, 5), (1, 1), (1, 3)],
    "B": [(1, 1), (1, 2), (1, 6), (1, 5), (1, 4), (1, 3)],
    "C": [(1, 4), (1, 3), (1, 6), (1, 5), (1, 1), (1, 2)],
}


def reference_line_table(gen: str) -> dict[str, str]:
    out = {f"l{i}": f"l{t}" for i, t in enumerate(_TABLE_STEINER[gen], start=1)}
    for j in range(3):
        for k, (mult, t) in enumerate(_TABLE_JK[gen], start=1):
            out[f"l{j},{k}"] = f"l{(mult * j) % 3},{t}"
    return out


# Schläfli-symbol actions on the double six, one row per symbol
_SYMBOL_TABLE = {
    "E": "a2 a1 a5 a3 a6 a4 b2 b1 b5 b3 b6 b4 "
    "c12 c25 c23 c26 c24 c15 c13 c16 c14 c35 c56 c45 c36 c34 c46",
    "A": "a4 a6 a2 a5 a1 a3 b4 b6 b2 b5 b1 b3 "
    "c46 c24 c45 c14 c34 c26 c56 c16 c36 c25 c12 c23 c15 c35 c13",
    "B": "a1 a2 a6 a5 a4 a3 b1 b2 b6 b5 b4 b3 "
    "c12 c16 c15 c14 c13 c26 c25 c24 c23 c56 c46 c36 c45 c35 c34",
    "C": "a4 a3 a6 a5 a1 a2 b4 b3 b6 b5 b1 b2 "
    "c34 c46 c45 c14 c24 c36 c35 c13 c23 c56 c16 c26 c15 c25 c12",
}
_SYMBOL_ORDER = (
    [f"a{i}" for i in range(1, 7)]
    + [f"b{i}" for i in range(1, 7)]
    + ["c12", "c13", "c14", "c15", "c16", "c23", "c24", "c25", "c26", "c34", "c35", "c36", "c45", "c46", "c56"]
)

# double-six images: name → (source array, {generator: image array})
_N12 = ("a1 b1 c23 c24 c25 c26", "a2 b2 c13 c14 c15 c16")
_N123 = ("a1 a2 a3 c56 c46 c45", "c23 c13 c12 b4 b5 b6")
_N = ("a1 a2 a3 a4 a5 a6", "b1 b2 b3 b4 b5 b6")
DOUBLE_SIX_IMAGES = {
    "N": (_N, {
        "E": ("a2 a1 a5 a3 a6 a4", "b2 b1 b5 b3 b6 b4"),
        "A": ("a4 a6 a2 a5 a1 a3", "b4 b6 b2 b5 b1 b3"),
        "B": ("a1 a2 a6 a5 a4 a3", "b1 b2 b6 b5 b4 b3"),
        "C": ("a4 a3 a6 a5 a1 a2", "b4 b3 b6 b5 b1 b2"),
        "conj": ("b1 b2 b3 b4 b5 b6", "a1 a2 a3 a4 a5 a6"),
    }),
    "N12": (_N12, {
        "E": ("a2 b2 c15 c13 c16 c14", "a1 b1 c25 c23 c26 c24"),
        "A": ("a4 b4 c26 c56 c16 c36", "a6 b6 c24 c54 c14 c34"),
        "B": ("a1 b1 c26 c25 c24 c23", "a2 b2 c16 c15 c14 c13"),
        "C": ("a4 b4 c36 c35 c31 c32", "a3 b3 c46 c45 c41 c42"),
        "conj": ("b1 a1 c23 c24 c25 c26", "b2 a2 c13 c14 c15 c16"),
    }),
    "N123": (_N123, {
        "E": ("a2 a1 a5 c46 c34 c36", "c15 c25 c12 b3 b6 b4"),
        "A": ("a4 a6 a2 c13 c35 c15", "c26 c24 c46 b5 b1 b3"),
        "B": ("a1 a2 a6 c34 c35 c45", "c26 c16 c12 b5 b4 b3"),
        "C": ("a4 a3 a6 c12 c25 c15", "c36 c46 c34 b5 b1 b2"),
        "conj": ("b1 b2 b3 c56 c46 c45", "c23 c13 c12 a4 a5 a6"),
    }),
}  # fmt: skip

# intersection points: (line, line) → point; "w" = ω, "wb" = ω̄
_PT = {"w": _W, "wb": _W * _W, "-w": -_W, "-2w": -2 * _W}
INTERSECTION_TABLE = {
    ("l1,1", "l1,2"): "-2w w w -2 1 1",
    ("l1,1", "l1,3"): "w w -2w 1 1 -2",
    ("l1,1", "l1,4"): None,
    ("l1,1", "l1,5"): None,
    ("l1,1", "l1,6"): "w -2w w 1 -2 1",
    ("l1,2", "l1,3"): None,
    ("l1,2", "l1,4"): "w -2w w 1 1 -2",
    ("l1,2", "l1,5"): "w w -2w 1 -2 1",
    ("l1,2", "l1,6"): None,
    ("l1,3", "l1,4"): "-2w w w 1 -2 1",
    ("l1,3", "l1,5"): "w -2w w -2 1 1",
    ("l1,3", "l1,6"): None,
    ("l1,4", "l1,5"): None,
    ("l1,4", "l1,6"): "w w -2w -2 1 1",
    ("l1,5", "l1,6"): "-2w w w 1 1 -2",
    ("l1,1", "l2,1"): None,
    ("l1,1", "l2,2"): None,
    ("l1,1", "l2,3"): None,
    ("l1,1", "l2,4"): "1 wb w wb w 1",
    ("l1,1", "l2,5"): "wb 1 w w wb 1",
    ("l1,1", "l2,6"): None,
    ("l1,2", "l2,1"): None,
    ("l1,2", "l2,2"): None,
    ("l1,2", "l2,3"): "1 w wb wb w 1",
    ("l1,2", "l2,4"): None,
    ("l1,2", "l2,5"): None,
    ("l1,2", "l2,6"): "wb w 1 w wb 1",
    ("l1,3", "l2,1"): None,
    ("l1,3", "l2,2"): "1 wb w w wb 1",
    ("l1,3", "l2,3"): None,
    ("l1,3", "l2,4"): None,
    ("l1,3", "l2,5"): None,
    ("l1,3", "l2,6"): "wb 1 w wb w 1",
    ("l1,4", "l2,1"): "1 w wb w wb 1",
    ("l1,4", "l2,2"): None,
    ("l1,4", "l2,3"): None,
    ("l1,4", "l2,4"): None,
    ("l1,4", "l2,5"): "wb w 1 wb w 1",
    ("l1,4", "l2,6"): None,
    ("l1,5", "l2,1"): "w 1 wb wb w 1",
    ("l1,5", "l2,2"): None,
    ("l1,5", "l2,3"): None,
    ("l1,5", "l2,4"): "w wb 1 w wb 1",
    ("l1,5", "l2,5"): None,
    ("l1,5", "l2,6"): None,
    ("l1,6", "l2,1"): None,
    ("l1,6", "l2,2"): "w wb 1 wb w 1",
    ("l1,6", "l2,3"): "w 1 wb w wb 1",
    ("l1,6", "l2,4"): None,
    ("l1,6", "l2,5"): None,
    ("l1,6", "l2,6"): None,
    ("l1", "l1,1"): "0 -w w 0 -1 1",
    ("l1", "l1,2"): "0 w -w 0 -1 1",
}


def _parse_point(text: str) -> Vec:
    return tuple(_PT[t] if t in _PT else _c(int(t)) for t in text.split())


def _conj_label(lab: str) -> str:
    if lab.startswith("l1,"):
        return "l2," + lab[3:]
    if lab.startswith("l2,"):
        return "l1," + lab[3:]
    return lab


def check_intersection_table() -> list[dict]:
    """Compare every listed intersection, plus its conjugate entry where one is stated."""
    rows = []
    for (x, y), text in INTERSECTION_TABLE.items():
        expected = None if text is None else _parse_point(text)
        pairs = [((x, y), expected)]
        if x.startswith("l1,") and y.startswith("l1,") or x == "l1":
            conj = None if expected is None else tuple(v.conjugate() for v in expected)
            pairs.append(((_conj_label(x), _conj_label(y)), conj))
        for (p, q), exp in pairs:
            got = meet(p, q)
            ok = (got is None and exp is None) or (
                got is not None and exp is not None and proportional(got, exp)
            )
            rows.append({"lines": [p, q], "ok": ok, "computed": _fmt_point(got)})
    return rows


def _fmt_point(p) -> str | None:
    return None if p is None else "(" + ", ".join(str(x) for x in p) + ")"


def check_line_tables() -> dict[str, list[str]]:
    """Mismatches between computed and tabulated line images, per generator."""
    out = {}
    for gen in "EABC":
        got = perm_label_map(induced_permutation(gen))
        ref = reference_line_table(gen)
        out[gen] = [f"{k}: table {ref[k]}, computed {got[k]}" for k in LABELS if got[k] != ref[k]]
    return out


def check_symbol_tables() -> dict[str, list[str]]:
    table = symbol_map()
    out = {}
    for gen, row in _SYMBOL_TABLE.items():
        got = perm_label_map(induced_permutation(gen))
        bad = []
        for sym, img in zip(_SYMBOL_ORDER, row.split()):
            if got[resolve_symbol(sym, table)] != resolve_symbol(img, table):
                bad.append(f"{gen}({sym}) = {img}")
        out[gen] = bad
    return out


def check_double_six_images() -> dict[str, list[str]]:
    table = symbol_map()
    perms = {g: perm_label_map(induced_permutation(g)) for g in "EABC"}
    perms["conj"] = perm_label_map(conjugation_permutation())
    out = {}
    for name, ((top, bottom), images) in DOUBLE_SIX_IMAGES.items():
        src = top.split() + bottom.split()
        for gen, (itop, ibot) in images.items():
            dst = itop.split() + ibot.split()
            bad = [
                f"{s} -> {d}"
                for s, d in zip(src, dst)
                if perms[gen][resolve_symbol(s, table)] != resolve_symbol(d, table)
            ]
            out[f"{gen}({name})"] = bad
    return out


def report() -> dict:
    lines = build_lines()
    adj = incidence_graph()
    ds = enumerate_double_sixes()
    perms = {g: induced_permutation(g) for g in "EABC"}
    conj = conjugation_permutation()
    sch = schlafli_labeling()
    order, orbits = aut_order(return_details=True)
    inter = check_intersection_table()
    return {
        "lines": [{"label": ln.label, "basis": [[str(x) for x in r] for r in ln.basis]} for ln in lines],
        "incidences": sorted([x, y] for x in LABELS for y in adj[x] if LABELS.index(x) < LABELS.index(y)),
        "edge_count": edge_count(),
        "double_sixes": [{"a": list(d.a), "b": list(d.b)} for d in ds],
        "double_six_count": len(ds),
        "schlafli": sch,
        "schlafli_matches_reference": sch == SCHLAFLI_REFERENCE,
        "generators": {
            g: {
                "cycles": [list(c) for c in cycles(p)],
                "automorphism": is_automorphism(p),
                "lattice_det": str(lattice_determinant(p)),
            }
            for g, p in perms.items()
        },
        "group_order": generated_perm_group(perms.values()),
        "group_order_with_conj": generated_perm_group([*perms.values(), conj]),
        "conjugation": {
            "cycle_type": cycle_type(conj),
            "fixed": fixed_points(conj),
            "perm_sign": perm_sign(conj),
            "lattice_det": str(lattice_determinant(conj)),
        },
        "aut_order": order,
        "aut_orbit_lengths": orbits,
        "table_diffs": {
            "lines": check_line_tables(),
            "symbols": check_symbol_tables(),
            "double_six_images": check_double_six_images(),
            "intersections_failed": [r["lines"] for r in inter if not r["ok"]],
        },
    }
