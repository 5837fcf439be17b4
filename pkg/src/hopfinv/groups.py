"""Small finite groups by multiplication table (cyclic, dihedral, symmetric, permutation-generated)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

MAX_ORDER = 64


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[i][j] = index of names[i] * names[j]
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return next(j for j in range(self.order) if self.table[i][j] == self.identity)

    def validate(self) -> None:
        n = self.order
        if n == 0 or n > MAX_ORDER:
            raise GroupError(f"group order must be between 1 and {MAX_ORDER}, got {n}")
        if len(set(self.names)) != n:
            raise GroupError("duplicate element names")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise GroupError("multiplication table has the wrong shape")
        e = self.identity
        for i in range(n):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise GroupError(f"element {e} is not a two-sided identity")
            if sorted(self.table[i]) != list(range(n)):
                raise GroupError(f"row {i} of the table is not a permutation")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise GroupError(f"table is not associative at ({i}, {j}, {k})")

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.order) for j in range(self.order))


def _power_name(gen: str, k: int) -> str:
    if k == 0:
        return "1"
    return gen if k == 1 else f"{gen}^{k}"


def cyclic(n: int, gen: str = "g") -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    names = tuple(_power_name(gen, k) for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    G = FiniteGroup(names, table)
    G.validate()
    return G


def from_permutations(gens: Sequence[Sequence[int]], gen_names: Sequence[str] | None = None) -> FiniteGroup:
    """Closure of permutation generators; elements are named by shortest words (BFS order).

    Products act right-to-left like functions: (p*q)(i) = p(q(i)).
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise GroupError("at least one generator required")
    deg = len(gens[0])
    for g in gens:
        if len(g) != deg or sorted(g) != list(range(deg)):
            raise GroupError(f"{g} is not a permutation of 0..{deg - 1}")
    gen_names = list(gen_names or "abcdefghijklmnopqrstuvw"[: len(gens)])
    ident = tuple(range(deg))
    elems = [ident]
    names = ["1"]
    words: dict[tuple, list[str]] = {ident: []}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for gname, g in zip(gen_names, gens):
                q = tuple(p[g[i]] for i in range(deg))
                if q not in words:
                    words[q] = words[p] + [gname]
                    elems.append(q)
                    names.append(_word_name(words[q]))
                    nxt.append(q)
                    if len(elems) > MAX_ORDER:
                        raise GroupError(f"generated group exceeds order {MAX_ORDER}")
        frontier = nxt
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(index[tuple(p[q[i]] for i in range(deg))] for q in elems) for p in elems)
    G = FiniteGroup(tuple(names), table)
    G.validate()
    return G


def _word_name(word: list[str]) -> str:
    parts = []
    for w in word:
        if parts and parts[-1][0] == w:
            parts[-1][1] += 1
        else:
            parts.append([w, 1])
    return "*".join(w if k == 1 else f"{w}^{k}" for w, k in parts)


def symmetric(n: int) -> FiniteGroup:
    """S_n generated by a transposition a = (0 1) and an n-cycle b."""
    if n < 1:
        raise GroupError("symmetric group degree must be positive")
    if n == 1:
        return cyclic(1)
    a = list(range(n))
    a[0], a[1] = 1, 0
    b = [(i + 1) % n for i in range(n)]
    if n == 2:
        return from_permutations([a], ["a"])
    return from_permutations([a, b], ["a", "b"])


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon: rotation r and reflection s (order 2n)."""
    if n < 3:
        raise GroupError("dihedral group needs n >= 3")
    r = [(i + 1) % n for i in range(n)]
    s = [(-i) % n for i in range(n)]
    return from_permutations([r, s], ["r", "s"])


def from_table(names: Sequence[str], table: Sequence[Sequence[int]]) -> FiniteGroup:
    G = FiniteGroup(tuple(names), tuple(tuple(r) for r in table))
    G.validate()
    return G


def all_permutations(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(n)))
