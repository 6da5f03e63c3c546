"""Exhaustive Cayley-ball enumeration and growth-rate estimates.

Breadth-first closure under right multiplication by S (inverses adjoined by
default), deduplicated by the canonical normal-form key, so all counts are
exact.  Expansion is level-synchronous; optional worker threads split each
level into chunks whose results are merged in a fixed order, so counts and
element ordering are identical for any worker count.
"""
from __future__ import annotations

import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .amalgam import AmalgamSpec, NormalForm, identity_nf, invert, is_identity, multiply

DEFAULT_BUDGET = 10_000_000


class GenSetError(ValueError):
    pass


@dataclass(frozen=True)
class GenSet:
    names: tuple[str, ...]
    elements: tuple[NormalForm, ...]

    def alphabet(self) -> dict[str, NormalForm]:
        return dict(zip(self.names, self.elements))


def make_genset(spec: AmalgamSpec, named: list[tuple[str, NormalForm]]) -> GenSet:
    names = [n for n, _ in named]
    elements = [g for _, g in named]
    if len(set(names)) != len(names):
        raise GenSetError("duplicate generator names")
    if len(set(g.key() for g in elements)) != len(elements):
        raise GenSetError("duplicate generators")
    for n, g in named:
        if is_identity(spec, g):
            raise GenSetError(f"generator {n} is the identity")
    return GenSet(tuple(names), tuple(elements))


@dataclass(frozen=True)
class GrowthTable:
    nmax: int
    sphere: tuple[int, ...]
    ball: tuple[int, ...]
    truncated: bool
    timings: tuple[float, ...]
    spec_hash: str
    generators: tuple[str, ...]


def _letters(spec: AmalgamSpec, gens: GenSet, include_inverses: bool) -> list[NormalForm]:
    letters: list[NormalForm] = []
    seen = set()
    for g in gens.elements:
        if g.key() not in seen:
            seen.add(g.key())
            letters.append(g)
    if include_inverses:
        for g in gens.elements:
            gi = invert(spec, g)
            if gi.key() not in seen:
                seen.add(gi.key())
                letters.append(gi)
    return letters


def _expand_chunk(spec: AmalgamSpec, chunk: list[NormalForm],
                  letters: list[NormalForm]) -> list[NormalForm]:
    out = []
    mul = multiply
    for x in chunk:
        for l in letters:
            out.append(mul(spec, x, l))
    return out


def sphere_stream(spec: AmalgamSpec, gens: GenSet, *,
                  include_inverses: bool = True,
                  budget: int = DEFAULT_BUDGET):
    """Yield successive sphere counts (starting with 1 for radius 0),
    stopping silently at the element budget or when a sphere is empty."""
    letters = _letters(spec, gens, include_inverses)
    ident = identity_nf(spec)
    seen = {ident.key()}
    frontier = [ident]
    yield 1
    while frontier:
        if len(seen) + len(frontier) * len(letters) > budget:
            return
        nxt = []
        for x in frontier:
            for l in letters:
                y = multiply(spec, x, l)
                k = y.key()
                if k not in seen:
                    seen.add(k)
                    nxt.append(y)
        if not nxt:
            return
        yield len(nxt)
        frontier = nxt


def enumerate_balls(spec: AmalgamSpec, gens: GenSet, nmax: int, *,
                    include_inverses: bool = True,
                    budget: int = DEFAULT_BUDGET,
                    workers: int = 1) -> GrowthTable:
    """Exact sphere and ball counts up to radius nmax.

    If the element budget would be exceeded the table is truncated at the last
    complete level and flagged; truncation is never silent.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    letters = _letters(spec, gens, include_inverses)
    ident = identity_nf(spec)
    seen = {ident.key()}
    frontier = [ident]
    sphere = [1]
    timings = [0.0]
    truncated = False
    for _ in range(nmax):
        t0 = time.perf_counter()
        if len(seen) + len(frontier) * len(letters) > budget:
            truncated = True
            break
        if workers > 1 and len(frontier) > 4 * workers:
            size = (len(frontier) + workers - 1) // workers
            chunks = [frontier[i:i + size] for i in range(0, len(frontier), size)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                produced = list(pool.map(
                    lambda ch: _expand_chunk(spec, ch, letters), chunks))
            candidates = [x for part in produced for x in part]
        else:
            candidates = _expand_chunk(spec, frontier, letters)
        nxt = []
        for x in candidates:
            k = x.key()
            if k not in seen:
                seen.add(k)
                nxt.append(x)
        if not nxt:
            sphere.append(0)
            timings.append(time.perf_counter() - t0)
            break
        sphere.append(len(nxt))
        timings.append(time.perf_counter() - t0)
        frontier = nxt
    ball = []
    acc = 0
    for s in sphere:
        acc += s
        ball.append(acc)
    return GrowthTable(
        nmax=len(sphere) - 1,
        sphere=tuple(sphere),
        ball=tuple(ball),
        truncated=truncated,
        timings=tuple(timings),
        spec_hash=spec.spec_hash(),
        generators=gens.names,
    )


@dataclass(frozen=True)
class RateEstimates:
    """Ball-based estimates of the exponential growth rate.

    root estimates ball[n]^(1/n) are upper bounds on the true rate (the
    growth function is submultiplicative); ratio estimates are heuristic.
    """
    root_sequence: tuple[float, ...]
    ratio_sequence: tuple[float, ...]
    root_estimate: float
    ratio_estimate: float
    reliable: bool


def rate_estimates(table: GrowthTable) -> RateEstimates:
    if table.nmax < 2:
        raise ValueError("need nmax >= 2 for rate estimates")
    roots = tuple(table.ball[n] ** (1.0 / n) for n in range(1, table.nmax + 1))
    ratios = tuple(table.ball[n] / table.ball[n - 1] for n in range(1, table.nmax + 1))
    return RateEstimates(
        root_sequence=roots,
        ratio_sequence=ratios,
        root_estimate=roots[-1],
        ratio_estimate=ratios[-1],
        reliable=not table.truncated,
    )


def word_length(spec: AmalgamSpec, gens: GenSet, g: NormalForm, nmax: int, *,
                include_inverses: bool = True) -> int | None:
    """Exact word length of g, or None if g is outside the nmax-ball."""
    res = shortest_word(spec, gens, g, nmax, include_inverses=include_inverses)
    return None if res is None else res[0]


def shortest_word(spec: AmalgamSpec, gens: GenSet, g: NormalForm, nmax: int, *,
                  include_inverses: bool = True) -> tuple[int, list[str]] | None:
    """(length, letter names) of one geodesic word for g, or None.

    Letter names carry a ^-1 suffix for inverse letters.
    """
    named: list[tuple[str, NormalForm]] = list(zip(gens.names, gens.elements))
    if include_inverses:
        have = {x.key() for _, x in named}
        for name, x in zip(gens.names, gens.elements):
            xi = invert(spec, x)
            if xi.key() not in have:
                have.add(xi.key())
                named.append((name + "^-1", xi))
    ident = identity_nf(spec)
    target = g.key()
    if target == ident.key():
        return (0, [])
    parent: dict[tuple, tuple[tuple, str]] = {ident.key(): None}
    frontier = [ident]
    for _ in range(nmax):
        nxt = []
        for x in frontier:
            for name, l in named:
                y = multiply(spec, x, l)
                k = y.key()
                if k not in parent:
                    parent[k] = (x.key(), name)
                    if k == target:
                        word = []
                        while parent[k] is not None:
                            k, nm = parent[k]
                            word.append(nm)
                        word.reverse()
                        return (len(word), word)
                    nxt.append(y)
        if not nxt:
            return None
        frontier = nxt
    return None


def growth_table_csv(table: GrowthTable) -> str:
    """CSV with columns n, sphere, ball, root_estimate, ratio_estimate."""
    buf = io.StringIO()
    buf.write("n,sphere,ball,root_estimate,ratio_estimate\n")
    for n in range(table.nmax + 1):
        root = "" if n == 0 else repr(table.ball[n] ** (1.0 / n))
        ratio = "" if n == 0 else repr(table.ball[n] / table.ball[n - 1])
        buf.write(f"{n},{table.sphere[n]},{table.ball[n]},{root},{ratio}\n")
    return buf.getvalue()
