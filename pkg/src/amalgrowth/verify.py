"""The artifact's acceptance suite: ten numbered checks combining exact
enumeration, independent oracles, and root enclosures.

Every check returns a CriterionResult with the measured values in `details`,
so a failure is always accompanied by the numbers that produced it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .amalgam import NormalForm, identity_nf, invert, is_identity, multiply
from .catalog import CatalogEntry, catalog_load, catalog_names, plastic_enumerate
from .growth import (
    GenSet,
    GenSetError,
    enumerate_balls,
    make_genset,
    sphere_stream,
)
from .spectral import (
    Recurrence,
    RootEnclosure,
    WeightedAlphabet,
    count_avoiding,
    dominant_root,
    fit_recurrence,
    lpv_bound,
    poly_eval,
    poly_trim,
    positive_root_from_lengths,
)
from .tree import act, classify, elliptic_product_check, tree_distance

GOLDEN = 1.6180339887498949
GOLDEN_POLY = (-1, -1, 1)
PLASTIC_POLY = (-1, -1, 0, 1)
TOL = 1e-9


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    details: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.details}"


def _strip_zero_roots(poly) -> tuple[Fraction, ...]:
    """Drop factors of z (low-order zero coefficients)."""
    p = [Fraction(c) for c in poly]
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return tuple(p[i:])


def _sign_change_contains(poly, enc: RootEnclosure) -> bool:
    """Exact witness that the enclosure brackets a root of poly."""
    p = [Fraction(c) for c in poly]
    lo, hi = poly_eval(p, enc.lo), poly_eval(p, enc.hi)
    return lo == 0 or hi == 0 or (lo < 0) != (hi < 0)


def criterion_1(nmax: int = 25) -> CriterionResult:
    entry = catalog_load("c2*c3")
    table = enumerate_balls(entry.spec, entry.default_genset, nmax)
    rec = fit_recurrence(list(table.sphere), guard=4)
    if rec is None:
        return CriterionResult("criterion-1", False, "no recurrence fit")
    poly = _strip_zero_roots(rec.char_poly())
    enc = dominant_root(rec)
    root_ok = enc is not None and abs(enc.mid - GOLDEN) <= TOL
    poly_ok = poly == tuple(Fraction(c) for c in GOLDEN_POLY)
    return CriterionResult(
        "criterion-1", poly_ok and root_ok,
        f"c2*c3 char poly {tuple(map(str, poly))} "
        f"(want (-1, -1, 1)), root {enc.mid if enc else None}")


def criterion_2(nmax: int = 20) -> CriterionResult:
    entry = catalog_load("pgl2z")
    table = enumerate_balls(entry.spec, entry.default_genset, nmax)
    counts = plastic_enumerate(nmax)
    bfs_ok = table.sphere == counts.w
    w, c = counts.w, counts.c
    c_rec_ok = all(c[n] == c[n - 2] + c[n - 3] for n in range(4, nmax + 1))
    # checked exactly as documented; the enumerated counts instead satisfy
    # w[n] = c[n] + 2 c[n-1] + c[n-2]
    stated_w_ok = all(w[n] == c[n] + c[n - 1] + c[n - 2]
                      for n in range(2, nmax + 1))
    rec = fit_recurrence(list(table.sphere), guard=4)
    enc = dominant_root(rec) if rec else None
    root_ok = (enc is not None and enc.width <= Fraction(1, 10 ** 9)
               and _sign_change_contains(PLASTIC_POLY, enc))
    passed = bfs_ok and c_rec_ok and stated_w_ok and root_ok
    return CriterionResult(
        "criterion-2", passed,
        f"pgl2z BFS==forms {bfs_ok}; C(n)=C(n-2)+C(n-3) {c_rec_ok}; "
        f"W(n)=C(n)+C(n-1)+C(n-2) {stated_w_ok}; "
        f"root enclosure ok {root_ok} (mid {enc.mid if enc else None})")


def criterion_3() -> CriterionResult:
    cases = [
        ((1, 2), GOLDEN_POLY),
        ((2, 3), PLASTIC_POLY),
        ((1, 3, 3), (-2, 0, -1, 1)),    # z^3 - z^2 - 2
    ]
    parts = []
    ok = True
    for lengths, target in cases:
        enc = positive_root_from_lengths(lengths)
        good = (enc.width <= Fraction(1, 10 ** 12)
                and _sign_change_contains(target, enc))
        ok = ok and good
        parts.append(f"{lengths}->{enc.mid:.12f} ok={good}")
    return CriterionResult("criterion-3", ok, "; ".join(parts))


def criterion_4(nmax: int = 31) -> CriterionResult:
    alpha = WeightedAlphabet((("x", 1), ("y", 1), ("t", 1)), (("x", "y"),))
    w = count_avoiding(alpha, nmax)
    rec_ok = all(w[n + 1] == 3 * w[n] - w[n - 1] for n in range(2, 31))
    rec = fit_recurrence(w[1:], guard=4)
    enc = dominant_root(rec) if rec else None
    # (3+sqrt(5))/2 is the larger root of z^2-3z+1
    root_ok = enc is not None and _sign_change_contains((1, -3, 1), enc)
    larger_ok = enc is not None and enc.lo > 1
    return CriterionResult(
        "criterion-4", rec_ok and root_ok and larger_ok,
        f"W(n+1)=3W(n)-W(n-1) {rec_ok}; rate enclosure mid "
        f"{enc.mid if enc else None} brackets (3+sqrt5)/2 {root_ok}")


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return out


def criterion_5(nmax: int = 30) -> CriterionResult:
    quad = WeightedAlphabet((("p", 2), ("q", 2), ("r", 3), ("s", 3)))
    w4 = count_avoiding(quad, nmax)
    rec4_ok = all(w4[n] == 2 * w4[n - 2] + 2 * w4[n - 3]
                  for n in range(3, nmax + 1))
    tri = WeightedAlphabet((("p", 2), ("q", 2), ("r", 3)))
    w3 = count_avoiding(tri, nmax)
    rec3_ok = all(w3[n] == 2 * w3[n - 2] + w3[n - 3]
                  for n in range(3, nmax + 1))
    # z^3 - 2z - 1 = (z + 1)(z^2 - z - 1), exactly
    factored = _poly_mul((1, 1), GOLDEN_POLY)
    factor_ok = poly_trim(factored) == [Fraction(v) for v in (-1, -2, 0, 1)]
    rec = fit_recurrence(w3[2:], guard=4)
    enc = dominant_root(rec) if rec else None
    root_ok = enc is not None and abs(enc.mid - GOLDEN) <= TOL
    return CriterionResult(
        "criterion-5", rec4_ok and rec3_ok and factor_ok and root_ok,
        f"{{2,2,3,3}} recurrence {rec4_ok}; {{2,2,3}} recurrence {rec3_ok}; "
        f"factorization {factor_ok}; root {enc.mid if enc else None}")


def _random_element(entry: CatalogEntry, rng: random.Random,
                    max_syllables: int) -> NormalForm:
    letters = list(entry.alphabet.values())
    letters += [invert(entry.spec, g) for g in letters]
    while True:
        acc = identity_nf(entry.spec)
        for _ in range(rng.randint(1, 2 * max_syllables)):
            acc = multiply(entry.spec, acc, rng.choice(letters))
        if not is_identity(entry.spec, acc) and len(acc.syllables) <= max_syllables:
            return acc


def criterion_6(seed: int = 0, samples: int = 200,
                pairs: int = 200) -> CriterionResult:
    names = ("c2*c3", "c2*c4", "pgl2z")
    rng = random.Random(seed)
    agree = collinear = even = 0
    hyperbolic_seen = 0
    elliptics: dict[str, list[NormalForm]] = {n: [] for n in names}
    for i in range(samples):
        entry = catalog_load(names[i % len(names)])
        g = _random_element(entry, rng, 6)
        radius = max(2, 2 * len(g.syllables))
        try:
            cls = classify(entry.spec, g, radius=radius)
        except AssertionError:
            continue
        agree += 1
        if cls.tau % 2 == 0:
            even += 1
        if cls.hyperbolic:
            hyperbolic_seen += 1
            v0 = cls.witness
            v1 = act(entry.spec, g, v0)
            v2 = act(entry.spec, g, v1)
            if (tree_distance(v0, v1) == cls.tau
                    and tree_distance(v1, v2) == cls.tau
                    and tree_distance(v0, v2) == 2 * cls.tau):
                collinear += 1
        else:
            elliptics[entry.name].append(g)
    pair_pass = pair_seen = 0
    attempts = 0
    while pair_seen < pairs and attempts < 40 * pairs:
        attempts += 1
        name = names[attempts % len(names)]
        pool = elliptics[name]
        if len(pool) < 2:
            entry = catalog_load(name)
            g = _random_element(entry, rng, 4)
            if classify(entry.spec, g).elliptic:
                pool.append(g)
            continue
        entry = catalog_load(name)
        x, y = rng.choice(pool), rng.choice(pool)
        report = elliptic_product_check(entry.spec, x, y, radius=8)
        if not report.applicable:
            continue
        pair_seen += 1
        if report.passed:
            pair_pass += 1
    passed = (agree == samples and collinear == hyperbolic_seen
              and even == samples and pair_seen == pairs
              and pair_pass == pairs)
    return CriterionResult(
        "criterion-6", passed,
        f"cross-path {agree}/{samples}; collinear "
        f"{collinear}/{hyperbolic_seen}; even tau {even}/{samples}; "
        f"disjoint-fix pairs {pair_pass}/{pair_seen}")


def _random_genset(entry: CatalogEntry, rng: random.Random) -> GenSet | None:
    spec = entry.spec
    letters = list(entry.alphabet.values())
    letters += [invert(spec, g) for g in letters]
    elems = []
    for _ in range(rng.choice((2, 2, 3))):
        acc = identity_nf(spec)
        for _ in range(rng.randint(1, 3)):
            acc = multiply(spec, acc, rng.choice(letters))
        elems.append(acc)
    try:
        gens = make_genset(spec, [(f"g{i + 1}", x) for i, x in enumerate(elems)])
    except GenSetError:
        return None
    # must generate: a small ball over the set has to reach every letter
    seen = {identity_nf(spec).key()}
    frontier = [identity_nf(spec)]
    step = list(gens.elements) + [invert(spec, g) for g in gens.elements]
    targets = {g.key() for g in entry.alphabet.values()}
    for _ in range(6):
        nxt = []
        for x in frontier:
            for l in step:
                y = multiply(spec, x, l)
                if y.key() not in seen:
                    seen.add(y.key())
                    nxt.append(y)
        frontier = nxt
        if targets <= seen:
            return gens
    return gens if targets <= seen else None


def _fit_sphere_tail(seq: list[int],
                     final: bool) -> tuple[Recurrence, int] | None:
    """Fit a recurrence to the sequence, allowing a short transient prefix;
    looser guards are only tried once the sequence is complete."""
    schedules = [(4, 5), (3, 6)] if not final else [(4, 6), (3, 7), (2, 8), (1, 8)]
    for guard, max_skip in schedules:
        for skip in range(min(max_skip, max(0, len(seq) - 2 * guard)) + 1):
            rec = fit_recurrence(seq[skip:], guard=guard)
            if rec is not None:
                return rec, skip
    return None


def criterion_7(seed: int = 7, gensets: int = 10, nmax: int = 30,
                budget: int = 800_000) -> CriterionResult:
    names = ("c2*c4", "c2*c5", "c2*c2xc2")
    failures = []
    total = 0
    for name in names:
        entry = catalog_load(name)
        rng = random.Random(seed)
        made = 0
        while made < gensets:
            gens = _random_genset(entry, rng)
            if gens is None:
                continue
            made += 1
            total += 1
            seq: list[int] = []
            fit = None
            stream = sphere_stream(entry.spec, gens, budget=budget)
            for s in stream:
                seq.append(s)
                if len(seq) > nmax + 1:
                    break
                if len(seq) >= 10:
                    fit = _fit_sphere_tail(seq, final=False)
                    if fit:
                        break
            if fit is None:
                fit = _fit_sphere_tail(seq, final=True)
            if fit is None:
                failures.append(f"{name}#{made}: no fit on {len(seq)} terms")
                continue
            rec, _ = fit
            enc = dominant_root(rec)
            if enc is None or enc.mid < GOLDEN - TOL:
                failures.append(
                    f"{name}#{made}: root {enc.mid if enc else None}")
    return CriterionResult(
        "criterion-7", not failures,
        f"{total - len(failures)}/{total} seeded generating sets fitted "
        f"with dominant root >= golden" + ("" if not failures else
                                           "; " + "; ".join(failures)))


def criterion_8(tmpdir: str | None = None) -> CriterionResult:
    import json
    import os
    import tempfile

    from . import cli
    from .pingpong import PingPongCertificate, replay

    workdir = tmpdir or tempfile.mkdtemp(prefix="certify-")
    out = os.path.join(workdir, "certificate.json")
    code = cli.main(["certify", "pgl2z", "--mode", "monoid",
                     "--elements", "b c", "a b c", "--out", out])
    if code != 0:
        return CriterionResult("criterion-8", False,
                               f"certify exited with {code}")
    with open(out) as fh:
        payload = json.load(fh)
    cert = PingPongCertificate.from_json(payload["certificate"])
    entry = catalog_load("pgl2z")
    lengths = tuple(payload["report"]["lengths"])
    bound = payload["report"]["bound"]
    replay_ok = replay(entry.spec, cert)
    enc = positive_root_from_lengths((2, 3))
    ok = (cert.kind == "free-monoid" and sorted(lengths) == [2, 3]
          and abs(bound - enc.mid) <= 1e-9 and replay_ok)
    return CriterionResult(
        "criterion-8", ok,
        f"lengths {lengths}, bound {bound:.10f}, replay {replay_ok}")


def criterion_9() -> CriterionResult:
    base = lpv_bound(2, 7, 0, 0)
    base_ok = base == Fraction(12, 7) and base > Fraction(5, 3)
    entries_ok = True
    parts = [f"lpv(2,7)={base}"]
    for name in catalog_names():
        entry = catalog_load(name)
        if entry.spec.C.order != 1:
            continue        # bound applies to free products
        table = enumerate_balls(entry.spec, entry.default_genset, 18)
        rec = fit_recurrence(list(table.sphere), guard=4)
        enc = dominant_root(rec) if rec else None
        bound = lpv_bound(entry.spec.A.order, entry.spec.B.order)
        good = enc is not None and enc.hi >= bound - Fraction(1, 10 ** 9)
        entries_ok = entries_ok and good
        parts.append(f"{name}: rate {enc.mid if enc else None} >= {bound} "
                     f"{good}")
    return CriterionResult("criterion-9", base_ok and entries_ok,
                           "; ".join(parts))


def criterion_10(tmpdir: str | None = None) -> CriterionResult:
    import os
    import tempfile

    from . import cli

    workdir = tmpdir or tempfile.mkdtemp(prefix="growth-")
    outs = []
    for i, workers in enumerate((1, 4)):
        out = os.path.join(workdir, f"growth{i}.csv")
        code = cli.main(["growth", "pgl2z", "--nmax", "14",
                         "--workers", str(workers), "--out", out])
        if code != 0:
            return CriterionResult("criterion-10", False,
                                   f"growth exited with {code}")
        with open(out, "rb") as fh:
            outs.append(fh.read())
    same = outs[0] == outs[1]
    return CriterionResult(
        "criterion-10", same,
        f"CSV outputs byte-identical across 1 and 4 workers: {same}")


ALL_CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
)


def run_all(seed: int = 0) -> list[CriterionResult]:
    results = []
    for fn in ALL_CRITERIA:
        if fn is criterion_6:
            results.append(fn(seed=seed))
        elif fn is criterion_7:
            results.append(fn(seed=seed + 7))
        else:
            results.append(fn())
    return results
