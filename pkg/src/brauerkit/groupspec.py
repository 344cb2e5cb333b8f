"""Textual group specifications.

Grammar (tokens separated by whitespace)::

    spec    := factor ("x" factor)*
    factor  := "C" n | "D" m | "S" n | "A" n | "Q" "8" | "V" "4"
             | "perm" degree ":" cycles ("," cycles)*

``D m`` is the dihedral group of order ``m``.  Fixed realisations:

* ``C n``: the n-cycle ``(0 1 ... n-1)``.
* ``D 2n``, n >= 3: rotation ``(0 1 ... n-1)`` and reflection ``i -> -i mod n``;
  ``D 2`` is ``C 2`` and ``D 4`` is ``V 4``.
* ``S n``: ``(0 1 ... n-1)`` and ``(0 1)``; ``A n``: 3-cycles ``(0 1 k)``.
* ``Q 8``: left regular representation on ``1, i, j, k, -1, -i, -j, -k``.
* ``V 4``: ``(0 1)(2 3)`` and ``(0 2)(1 3)``.
* ``X x Y``: disjoint union of the point sets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .perm_core import DEFAULT_ORDER_CAP, FiniteGroup, Permutation, generate_group

MAX_SYMMETRIC = 6


class ParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedSize(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    family: str  # C, D, S, A, Q, V or perm
    n: int
    cycles: tuple[str, ...] = ()

    def render(self) -> str:
        if self.family == "perm":
            return f"perm {self.n} : " + ", ".join(self.cycles)
        return f"{self.family} {self.n}"


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[Factor, ...]

    def render(self) -> str:
        return " x ".join(f.render() for f in self.factors)

    def __str__(self) -> str:
        return self.render()

    def generators(self) -> tuple[int, list[Permutation]]:
        realised = [_realise(f) for f in self.factors]
        degree = sum(d for d, _ in realised)
        gens, offset = [], 0
        for d, factor_gens in realised:
            for g in factor_gens:
                images = list(range(degree))
                for i, j in enumerate(g.images):
                    images[offset + i] = offset + j
                gens.append(Permutation(tuple(images)))
            offset += d
        return degree, gens

    def build(self, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
        degree, gens = self.generators()
        return generate_group(degree, gens, cap)


_TOKEN = re.compile(r"\s*(\(|\)|,|:|[A-Za-z]+|\d+)")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def parse_group_spec(text: str) -> GroupSpec:
    tokens = _tokenize(text)
    factors = []
    i = 0

    def expect_int(i: int) -> int:
        if i >= len(tokens):
            raise ParseError("expected a number", len(text))
        tok, pos = tokens[i]
        if not tok.isdigit():
            raise ParseError(f"expected a number, got {tok!r}", pos)
        return int(tok)

    while True:
        if i >= len(tokens):
            raise ParseError("expected a group", len(text))
        tok, pos = tokens[i]
        if tok == "perm":
            degree = expect_int(i + 1)
            if i + 2 >= len(tokens) or tokens[i + 2][0] != ":":
                raise ParseError("expected ':' after perm degree", tokens[i + 1][1])
            i += 3
            cycles = []
            while True:
                start = i
                while i < len(tokens) and tokens[i][0] not in (",", "x"):
                    i += 1
                if start == i:
                    raise ParseError("expected cycle notation", tokens[start][1] if start < len(tokens) else len(text))
                body = "".join(
                    t if t in "()" else (" " + t + " ") for t, _ in tokens[start:i]
                )
                chunk = re.sub(r"\s+", " ", body).replace("( ", "(").replace(" )", ")").strip()
                try:
                    Permutation.parse(degree, chunk)
                except ValueError as e:
                    raise ParseError(str(e), tokens[start][1]) from None
                cycles.append(chunk)
                if i < len(tokens) and tokens[i][0] == ",":
                    i += 1
                    continue
                break
            factors.append(Factor("perm", degree, tuple(cycles)))
        elif tok in ("C", "D", "S", "A", "Q", "V"):
            n = expect_int(i + 1)
            factors.append(_check_size(Factor(tok, n), pos))
            i += 2
        else:
            raise ParseError(f"unknown group family {tok!r}", pos)
        if i == len(tokens):
            break
        tok, pos = tokens[i]
        if tok != "x":
            raise ParseError(f"expected 'x' or end of input, got {tok!r}", pos)
        i += 1
    return GroupSpec(tuple(factors))


def _check_size(f: Factor, pos: int) -> Factor:
    if f.n < 1:
        raise UnsupportedSize(f"{f.render()}: size must be positive")
    if f.family == "D" and f.n % 2:
        raise UnsupportedSize(f"{f.render()}: dihedral order must be even")
    if f.family in ("S", "A") and f.n > MAX_SYMMETRIC:
        raise UnsupportedSize(f"{f.render()}: at most {MAX_SYMMETRIC} points")
    if f.family == "Q" and f.n != 8:
        raise UnsupportedSize("only Q 8 is supported")
    if f.family == "V" and f.n != 4:
        raise UnsupportedSize("only V 4 is supported")
    return f


def _cycle(*pts: int) -> list[tuple[int, ...]]:
    return [tuple(pts)]


def _quaternion_generators() -> list[Permutation]:
    # (sign, unit) with units 1, i, j, k as 0..3; index = unit + 4 * (sign < 0)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def left(unit: int) -> Permutation:
        images = []
        for idx in range(8):
            sign, u = (1 if idx < 4 else -1), idx % 4
            s, v = table[(unit, u)]
            s *= sign
            images.append(v + (0 if s > 0 else 4))
        return Permutation(tuple(images))

    return [left(1), left(2)]


def _realise(f: Factor) -> tuple[int, list[Permutation]]:
    P = Permutation.from_cycles
    n = f.n
    if f.family == "C":
        return n, ([P(n, _cycle(*range(n)))] if n > 1 else [])
    if f.family == "D":
        k = n // 2
        if k == 1:
            return 2, [P(2, [(0, 1)])]
        if k == 2:
            return _realise(Factor("V", 4))
        refl = Permutation(tuple((-i) % k for i in range(k)))
        return k, [P(k, _cycle(*range(k))), refl]
    if f.family == "S":
        gens = []
        if n > 1:
            gens.append(P(n, _cycle(*range(n))))
        if n > 2:
            gens.append(P(n, [(0, 1)]))
        return n, gens
    if f.family == "A":
        return n, [P(n, [(0, 1, k)]) for k in range(2, n)]
    if f.family == "Q":
        return 8, _quaternion_generators()
    if f.family == "V":
        return 4, [P(4, [(0, 1), (2, 3)]), P(4, [(0, 2), (1, 3)])]
    if f.family == "perm":
        return n, [Permutation.parse(n, c) for c in f.cycles]
    raise ValueError(f"unknown family {f.family}")
