"""Root systems, Weyl groups, longest elements and the group datum G(Phi).

Simple reflections are integer matrices in the simple-root basis, built from
exact root coordinates.  When the longest element is not -1 the diagram
automorphism -w0 is adjoined, giving G(Phi) = W(Phi) x <u>.  Table rows for
the final lazy-cohomology and Brauer-group displays are computed outright
when the group fits the budget, and quoted from the printed tables
(flagged "literature") otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, E8Refused, ParseError
from .forms import Representation
from .groups import DEFAULT_CAP, CentralInvolution, FiniteGroup, close_generators
from .sharp import ALG_CLOSED, FieldDescriptor
from .supergroup import bm_supergroup, build_supergroup, lazy_cohomology

WEYL_GROUP_BUDGET = 300  # largest |G(Phi)| computed by default; B4 = 384 is opt-in


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        ok = (
            (fam == "A" and n >= 1)
            or (fam == "B" and n >= 2)
            or (fam == "D" and n >= 4)
            or (fam == "E" and n in (6, 7, 8))
            or (fam == "F" and n == 4)
            or (fam == "G" and n == 2)
        )
        if not ok:
            raise ParseError(f"invalid root system type {fam}{n}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, s: str) -> "RootSystemType":
        s = s.strip().upper()
        if len(s) < 2 or s[0] not in "ABDEFG":
            raise ParseError(f"cannot parse root system type {s!r}")
        try:
            return cls(s[0], int(s[1:]))
        except ValueError as exc:
            raise ParseError(f"cannot parse root system type {s!r}") from exc


def simple_roots(t: RootSystemType) -> list[list[Fraction]]:
    """Bourbaki coordinates of the simple roots in an ambient space."""
    n = t.rank
    F = Fraction

    def e(i: int, dim: int) -> list[Fraction]:
        v = [F(0)] * dim
        v[i] = F(1)
        return v

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    if t.family == "A":
        dim = n + 1
        return [sub(e(i, dim), e(i + 1, dim)) for i in range(n)]
    if t.family == "B":
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [e(n - 1, n)]
    if t.family == "D":
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [add(e(n - 2, n), e(n - 1, n))]
    if t.family == "G":
        return [sub(e(0, 3), e(1, 3)), [F(-2), F(1), F(1)]]
    if t.family == "F":
        return [
            sub(e(1, 4), e(2, 4)),
            sub(e(2, 4), e(3, 4)),
            e(3, 4),
            [F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2)],
        ]
    # E6, E7, E8 share the E8 coordinates; alpha_i = e_{i-1} - e_{i-2} for i >= 3
    dim = 8
    alpha1 = [F(1, 2), *([F(-1, 2)] * 6), F(1, 2)]
    alpha2 = add(e(0, dim), e(1, dim))
    rest = [sub(e(i - 2, dim), e(i - 3, dim)) for i in range(3, 9)]
    roots = [alpha1, alpha2] + rest
    return roots[:n]


def _dot(a, b) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def reflection_matrices(t: RootSystemType) -> list[list[list[int]]]:
    """Simple reflections in the simple-root basis (integer Cartan entries)."""
    roots = simple_roots(t)
    n = t.rank
    mats = []
    for i in range(n):
        m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        for j in range(n):
            cij = 2 * _dot(roots[i], roots[j]) / _dot(roots[i], roots[i])
            if cij.denominator != 1:
                raise ParseError("non-integral Cartan entry")
            m[i][j] -= int(cij)
        mats.append(m)
    return mats


def classical_order(t: RootSystemType) -> int:
    import math

    n = t.rank
    if t.family == "A":
        return math.factorial(n + 1)
    if t.family == "B":
        return 2**n * math.factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if t.family == "G":
        return 12
    if t.family == "F":
        return 1152
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


def w0_acts_as_minus_one(t: RootSystemType) -> bool:
    fam, n = t.family, t.rank
    if fam == "A":
        return n == 1
    if fam == "D":
        return n % 2 == 0
    if fam == "E":
        return n in (7, 8)
    return True  # B_n, F4, G2


@dataclass(eq=False)
class WeylGroupData:
    type: RootSystemType
    group: FiniteGroup
    simple_reflections: tuple[int, ...]
    w0: int
    coxeter_number: int
    w0_is_minus_one: bool


def _is_negative_matrix(mat) -> bool:
    return all(x <= 0 for row in mat for x in row)


def _is_minus_identity(mat) -> bool:
    n = len(mat)
    return all(mat[i][j] == (-1 if i == j else 0) for i in range(n) for j in range(n))


def build_weyl(t: RootSystemType, cap: int = DEFAULT_CAP, allow_e7: bool = False) -> WeylGroupData:
    """Closure of the simple reflections; w0 is the unique element sending
    every simple root to a negative root."""
    if t.family == "E" and t.rank == 8:
        raise E8Refused("W(E8) has ~7e8 elements and is refused at any budget")
    if t.family == "E" and t.rank == 7 and not allow_e7:
        raise CapExceeded("W(E7) has 2903040 elements; pass allow_e7 and a matching cap")
    if classical_order(t) > cap:
        raise CapExceeded(f"|W({t.name})| = {classical_order(t)} exceeds cap {cap}")
    mats = reflection_matrices(t)
    g = close_generators(mats, cap=cap)
    if g.order != classical_order(t):
        raise ParseError(f"closure of {t.name} has wrong order {g.order}")
    w0s = [i for i in range(g.order) if _is_negative_matrix(g.element_data[i])]
    if len(w0s) != 1:
        raise ParseError("longest element is not unique")
    w0 = w0s[0]
    cox = g.identity
    for s in g.gens:
        cox = int(g.mul[cox, s])
    h = g.element_order(cox)
    minus = _is_minus_identity(g.element_data[w0])
    if minus != w0_acts_as_minus_one(t):
        raise ParseError("w0 = -1 disagrees with the classical list")
    return WeylGroupData(
        type=t,
        group=g,
        simple_reflections=tuple(g.gens),
        w0=w0,
        coxeter_number=h,
        w0_is_minus_one=minus,
    )


@dataclass(eq=False)
class GroupDatum:
    """(G(Phi), u, standard reflection representation) with rho(u) = -1."""

    type: RootSystemType
    weyl: WeylGroupData
    group: FiniteGroup
    inv: CentralInvolution
    rep: Representation
    extended: bool  # True when G = W x <theta w0>


_DATUM_CACHE: dict[tuple[str, int], "GroupDatum"] = {}


def group_datum(t: RootSystemType, cap: int = DEFAULT_CAP, allow_e7: bool = False) -> GroupDatum:
    key = (t.name, cap)
    if key in _DATUM_CACHE:
        return _DATUM_CACHE[key]
    datum = _group_datum_impl(t, cap, allow_e7)
    _DATUM_CACHE[key] = datum
    return datum


def _group_datum_impl(t: RootSystemType, cap: int, allow_e7: bool) -> GroupDatum:
    wd = build_weyl(t, cap=cap, allow_e7=allow_e7)
    n = t.rank
    if wd.w0_is_minus_one:
        g = wd.group
        u = wd.w0
        extended = False
    else:
        w0mat = wd.group.element_data[wd.w0]
        theta = [[-x for x in row] for row in w0mat]
        mats = reflection_matrices(t) + [theta]
        g = close_generators(mats, cap=cap)
        if g.order != 2 * wd.group.order:
            raise ParseError("extended group G(Phi) has wrong order")
        minus = [i for i in range(g.order) if _is_minus_identity(g.element_data[i])]
        if len(minus) != 1:
            raise ParseError("extended group does not contain -1 uniquely")
        u = minus[0]
        extended = True
    inv = CentralInvolution(g, u)
    gen_mats = [
        tuple(tuple(Fraction(x) for x in row) for row in g.element_data[s]) for s in g.gens
    ]
    rep = Representation(group=g, dim=n, gen_matrices=gen_mats)
    if not rep.is_faithful():
        raise ParseError("standard representation is not faithful")
    return GroupDatum(type=t, weyl=wd, group=g, inv=inv, rep=rep, extended=extended)


# ---------------------------------------------------------------------------
# the printed tables (used verbatim for rows beyond the computation budget)


def literature_schur_multiplier(t: RootSystemType) -> tuple[int, ...]:
    fam, n = t.family, t.rank
    if fam == "A":
        return () if n <= 2 else (2,)
    if fam == "B":
        return (2,) if n == 2 else ((2, 2) if n == 3 else (2, 2, 2))
    if fam == "D":
        return (2, 2, 2) if n == 4 else (2, 2)
    if fam == "E":
        return (2,)
    if fam == "F":
        return (2, 2)
    return (2,)  # G2


def literature_h2l(t: RootSystemType) -> tuple[int, ...]:
    """Finite part of the printed lazy-cohomology table (always x C)."""
    fam, n = t.family, t.rank
    if fam == "A":
        return () if n <= 2 else (2,)
    if fam == "G":
        return ()
    if fam == "B":
        if n in (2, 3):
            return (2,)
        return (2, 2, 2) if n % 2 == 0 else (2, 2)
    if fam == "D":
        return (2, 2, 2) if n == 4 else (2, 2)
    if fam == "E":
        return (2,)
    return (2, 2)  # F4


def literature_bm(t: RootSystemType) -> tuple[int, ...]:
    """Finite part of the printed Brauer-group table (always x C)."""
    fam, n = t.family, t.rank
    if fam == "A":
        return (2,) if n <= 2 else (2, 2)
    if fam == "G":
        return (2, 2)
    if fam == "B":
        if n == 2:
            return (2,)
        if n == 3:
            return (2, 2, 2)
        return (2, 2, 2) if n % 2 == 0 else (2, 2, 2, 2)
    if fam == "D":
        if n == 4:
            return (2, 2, 2)
        return (2, 2) if n % 2 == 0 else (2, 2, 2)
    if fam == "E":
        return (2,) if n == 8 else (2, 2)
    return (2, 2)  # F4


@dataclass
class TableRow:
    type_name: str
    mode: str  # "computed" or "literature"
    h2l_invariants: tuple[int, ...]
    h2l_linear_dim: int
    bm_invariants: tuple[int, ...]
    bm_linear_dim: int

    def as_dict(self) -> dict:
        return {
            "type": self.type_name,
            "mode": self.mode,
            "H2L": {"invariants": list(self.h2l_invariants), "linear_dim": self.h2l_linear_dim},
            "BM": {"invariants": list(self.bm_invariants), "linear_dim": self.bm_linear_dim},
        }

    def pretty(self) -> str:
        def fmt(inv, d):
            fin = " x ".join(f"Z{x}" for x in inv) if inv else "1"
            return fin + (f" x C^{d}" if d else "")

        flag = "" if self.mode == "computed" else "  [literature]"
        return (
            f"{self.type_name:>4}  H2_L = {fmt(self.h2l_invariants, self.h2l_linear_dim):<22} "
            f"BM = {fmt(self.bm_invariants, self.bm_linear_dim):<26}{flag}"
        )


def datum_size(t: RootSystemType) -> int:
    return classical_order(t) * (1 if w0_acts_as_minus_one(t) else 2)


def table_row(
    t: RootSystemType,
    field: FieldDescriptor = ALG_CLOSED,
    group_budget: int = WEYL_GROUP_BUDGET,
    cap: int = DEFAULT_CAP,
) -> TableRow:
    """One row of the two final tables; computed when |G(Phi)| fits the budget."""
    if field.kind != "closed":
        raise ParseError("the table rows are stated over the closed descriptor")
    if datum_size(t) > group_budget or (t.family == "E" and t.rank == 8):
        return TableRow(
            type_name=t.name,
            mode="literature",
            h2l_invariants=literature_h2l(t),
            h2l_linear_dim=1,
            bm_invariants=literature_bm(t),
            bm_linear_dim=1,
        )
    datum = group_datum(t, cap=cap)
    alg = build_supergroup(datum.group, datum.inv, datum.rep)
    lc = lazy_cohomology(alg)
    bm = bm_supergroup(datum.group, datum.inv, datum.rep, field)
    return TableRow(
        type_name=t.name,
        mode="computed",
        h2l_invariants=lc.invariants,
        h2l_linear_dim=lc.linear_dim,
        bm_invariants=bm.invariants,
        bm_linear_dim=bm.linear_dim,
    )


# A4 (order 240) also computes within the default budget but takes minutes;
# request it explicitly when wanted.
DEFAULT_TABLE_TYPES = ["A1", "A2", "A3", "B2", "B3", "D4", "G2", "B4", "D5", "F4", "E6", "E7", "E8"]
