"""Symbolic bracket monomials evaluated as honest covariants.

A bracket monomial is a product of bracket powers (u v)^e and linear
powers u_x^w over symbol letters, each letter tagged with a form degree.
Evaluation expands the product over the letter variables (u1, u2), with

    (u v) = u1*v2 - u2*v1          u_x = u1*x1 + u2*x2

and then substitutes, for each letter u of degree d, the monomial
u1^(d-i) u2^i by f_i(u) / C(d, i), where f_i(u) is the i-th coefficient of
the form assigned to u.  Dividing by the binomial is the unique
normalization under which

    (a b)^k a_x^(m-k) b_x^(n-k)  evaluates to  transvectant(F, G, k)

for forms F, G of degrees m, n assigned to a, b; that correspondence is
kept as a standing cross-module oracle in the test suite.

Bracket monomials can be parsed from a compact text grammar, e.g.

    (a b)^4 (b c)^4 (c d)^4 (d a)^4 ; deg=8

where letters are identifiers (two per bracket, whitespace- or
comma-separated), "u_x^w" factors carry the x powers, and the optional
"deg=" clause tags every letter with one degree.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import alt_sign, binom_ext
from .forms import BinaryForm


@dataclass
class BracketMonomial:
    """Letters in a fixed order, bracket exponents on ordered pairs, x powers.

    Edge keys are normalized so the first letter precedes the second in the
    letter order; a reversed input pair (v u)^e contributes the sign (-1)^e.
    Homogeneity is enforced: for each letter, incident bracket exponents
    plus its x power must equal its degree tag.
    """

    letters: tuple[str, ...]
    degrees: dict[str, int]
    edges: dict[tuple[str, str], int] = field(default_factory=dict)
    x_powers: dict[str, int] = field(default_factory=dict)
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        self.letters = tuple(self.letters)
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letters")
        pos = {u: t for t, u in enumerate(self.letters)}
        for u in self.degrees:
            if u not in pos:
                raise ValueError(f"degree tag for unknown letter {u!r}")
        norm: dict[tuple[str, str], int] = {}
        coeff = Fraction(self.coeff)
        for (u, v), e in self.edges.items():
            if u not in pos or v not in pos or u == v:
                raise ValueError(f"bad bracket pair ({u!r}, {v!r})")
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bracket exponent must be an int >= 0, got {e!r}")
            if e == 0:
                continue
            if pos[u] > pos[v]:
                u, v = v, u
                coeff *= alt_sign(e)
            norm[(u, v)] = norm.get((u, v), 0) + e
        self.edges = norm
        self.coeff = coeff
        xp = {}
        for u, w in self.x_powers.items():
            if u not in pos:
                raise ValueError(f"x power on unknown letter {u!r}")
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"x exponent must be an int >= 0, got {w!r}")
            if w:
                xp[u] = w
        self.x_powers = xp
        for u in self.letters:
            if self.valence(u) != self.degrees.get(u):
                raise ValueError(
                    f"letter {u!r}: bracket exponents plus x power "
                    f"{self.valence(u)} != degree {self.degrees.get(u)}"
                )

    def valence(self, u: str) -> int:
        v = self.x_powers.get(u, 0)
        for (a, b), e in self.edges.items():
            if u == a or u == b:
                v += e
        return v

    @property
    def order(self) -> int:
        return sum(self.x_powers.values())


def umbral_eval(mono: BracketMonomial, assignment: dict[str, BinaryForm]) -> BinaryForm:
    """Expand the monomial over the symbol variables and substitute forms.

    assignment maps every letter to a BinaryForm whose degree matches the
    letter's tag; coefficients may be numeric or symbolic.  The result is a
    form of order sum of the x powers (order 0 for invariants).
    """
    for u in mono.letters:
        if u not in assignment:
            raise ValueError(f"no form assigned to letter {u!r}")
        if assignment[u].degree != mono.degrees[u]:
            raise ValueError(
                f"letter {u!r} tagged degree {mono.degrees[u]}, "
                f"assigned form of degree {assignment[u].degree}"
            )
    order = mono.order
    out = [0] * (order + 1)
    edge_factors = sorted(mono.edges.items())
    x_factors = sorted(mono.x_powers.items())
    ranges = [range(e + 1) for _, e in edge_factors] + [range(w + 1) for _, w in x_factors]
    for choice in itertools.product(*ranges):
        weight = 1
        low = dict.fromkeys(mono.letters, 0)  # accumulated exponent of u2
        x2 = 0
        pos = 0
        for (u, v), e in edge_factors:
            l = choice[pos]
            pos += 1
            # (u1 v2 - u2 v1)^e: term C(e,l) (u1 v2)^(e-l) (-u2 v1)^l
            weight *= alt_sign(l) * binom_ext(e, l)
            low[u] += l
            low[v] += e - l
        for u, w in x_factors:
            l = choice[pos]
            pos += 1
            # (u1 x1 + u2 x2)^w: term C(w,l) u1^(w-l) u2^l x1^(w-l) x2^l
            weight *= binom_ext(w, l)
            low[u] += l
            x2 += l
        term = mono.coeff * weight
        for u in mono.letters:
            i = low[u]
            d = mono.degrees[u]
            fi = assignment[u].coeffs[i]
            if not fi:
                term = 0
                break
            term = term * fi * Fraction(1, binom_ext(d, i))
        if term:
            out[x2] = out[x2] + term
    return BinaryForm(out)


def cyclic_bracket(k: int, p: int) -> BracketMonomial:
    """The cycle of p letters of degree 2k, consecutive pairs bracketed to
    the k-th power (for p = 2 the two parallel brackets merge into one edge
    of exponent 2k).  Evaluating it with every letter assigned the same
    form reproduces the trace invariant of that form."""
    if k < 2 or k % 2:
        raise ValueError("k must be an even integer >= 2")
    if p < 2:
        raise ValueError("cycle length must be >= 2")
    letters = tuple(f"a{t + 1}" for t in range(p))
    edges: dict[tuple[str, str], int] = {}
    for t in range(p):
        pair = (letters[t], letters[(t + 1) % p])
        edges[pair] = edges.get(pair, 0) + k
    return BracketMonomial(
        letters=letters,
        degrees={u: 2 * k for u in letters},
        edges=edges,
        x_powers={},
    )


_BRACKET_RE = re.compile(
    r"\(\s*([A-Za-z_]\w*)\s*[,\s]\s*([A-Za-z_]\w*)\s*\)\s*(?:\^\s*(\d+))?"
)
_XPOW_RE = re.compile(r"([A-Za-z_]\w*)_x\s*(?:\^\s*(\d+))?")
_DEG_RE = re.compile(r";\s*deg\s*=\s*(\d+)\s*$")


def parse_bracket(text: str, default_degree: int | None = None) -> BracketMonomial:
    """Parse the compact grammar described in the module docstring.

    The trailing "; deg=N" clause tags all letters with degree N; without
    it, default_degree must be supplied.
    """
    work = text.strip()
    degree = default_degree
    m = _DEG_RE.search(work)
    if m:
        degree = int(m.group(1))
        work = work[: m.start()].strip()
    if degree is None:
        raise ValueError("no degree: add '; deg=N' or pass default_degree")
    letters: list[str] = []
    edges: dict[tuple[str, str], int] = {}  # raw orientation; the monomial normalizes
    x_powers: dict[str, int] = {}

    def note(u: str):
        if u not in letters:
            letters.append(u)

    pos = 0
    while pos < len(work):
        if work[pos].isspace():
            pos += 1
            continue
        m = _BRACKET_RE.match(work, pos)
        if m:
            u, v, e = m.group(1), m.group(2), int(m.group(3) or 1)
            note(u)
            note(v)
            edges[(u, v)] = edges.get((u, v), 0) + e
            pos = m.end()
            continue
        m = _XPOW_RE.match(work, pos)
        if m:
            u, w = m.group(1), int(m.group(2) or 1)
            note(u)
            x_powers[u] = x_powers.get(u, 0) + w
            pos = m.end()
            continue
        raise ValueError(f"cannot parse bracket expression at: {work[pos:pos + 20]!r}")
    return BracketMonomial(
        letters=tuple(letters),
        degrees={u: degree for u in letters},
        edges=edges,
        x_powers=x_powers,
    )


# -- the degree-3 covariant families of the octavic ------------------------

def octavic_a_bracket(lam: tuple[int, int, int]) -> BracketMonomial:
    """Degree-3, order-4 covariant of the octavic indexed by a partition of 4:

        A_lam = (a b)^(l3+2) (a c)^(l2+2) (b c)^(l1+2) a_x^l1 b_x^l2 c_x^l3
    """
    l1, l2, l3 = lam
    if sorted(lam, reverse=True) != list(lam) or sum(lam) != 4 or min(lam) < 0:
        raise ValueError(f"{lam} is not a partition of 4")
    return BracketMonomial(
        letters=("a", "b", "c"),
        degrees={"a": 8, "b": 8, "c": 8},
        edges={("a", "b"): l3 + 2, ("a", "c"): l2 + 2, ("b", "c"): l1 + 2},
        x_powers={"a": l1, "b": l2, "c": l3},
    )


def octavic_b_bracket(lam: tuple[int, int, int]) -> BracketMonomial:
    """Degree-3, order-8 covariant of the octavic indexed by a partition of 8:

        B_lam = (a b)^l3 (a c)^l2 (b c)^l1 a_x^l1 b_x^l2 c_x^l3
    """
    l1, l2, l3 = lam
    if sorted(lam, reverse=True) != list(lam) or sum(lam) != 8 or min(lam) < 0:
        raise ValueError(f"{lam} is not a partition of 8")
    return BracketMonomial(
        letters=("a", "b", "c"),
        degrees={"a": 8, "b": 8, "c": 8},
        edges={("a", "b"): l3, ("a", "c"): l2, ("b", "c"): l1},
        x_powers={"a": l1, "b": l2, "c": l3},
    )
