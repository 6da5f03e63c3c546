"""Exact recurrence and root machinery.

All sequence and polynomial arithmetic is done over integers / rationals;
floating point appears only in reported midpoints of root enclosures.
Positive roots are isolated by Descartes' rule when it applies, by a Sturm
chain otherwise, and refined by sign-preserving bisection with exact
endpoint evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_WIDTH = Fraction(1, 10**12)


# ---------------------------------------------------------------------------
# polynomial helpers (coefficients ascending, exact rationals)

def poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    if not poly_trim(den):
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    rem = num[:]
    dlead = den[-1]
    ddeg = len(den) - 1
    while len(poly_trim(rem)) - 1 >= ddeg and poly_trim(rem):
        shift = len(rem) - len(den)
        coef = rem[-1] / dlead
        quot[shift] = coef
        for i, c in enumerate(den):
            rem[shift + i] -= coef * c
        rem.pop()
    return poly_trim(quot), poly_trim(rem)


def poly_gcd(a, b):
    a = poly_trim([Fraction(c) for c in a])
    b = poly_trim([Fraction(c) for c in b])
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(p):
    g = poly_gcd(p, poly_derivative(p))
    if len(g) <= 1:
        return poly_trim([Fraction(c) for c in p])
    q, r = poly_divmod(p, g)
    assert not r
    return q


def descartes_sign_changes(p) -> int:
    signs = [c > 0 for c in p if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p):
    chain = [poly_trim([Fraction(c) for c in p])]
    d = poly_trim(poly_derivative(chain[0]))
    if d:
        chain.append(d)
        while True:
            _, r = poly_divmod(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-c for c in r])
    return chain


def _sturm_variations(chain, x: Fraction) -> int:
    signs = []
    for q in chain:
        v = poly_eval(q, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi] for a squarefree chain."""
    return _sturm_variations(chain, lo) - _sturm_variations(chain, hi)


def root_upper_bound(p) -> Fraction:
    """Cauchy bound: all real roots lie in [-B, B]."""
    p = poly_trim([Fraction(c) for c in p])
    lead = abs(p[-1])
    return 1 + max((abs(c) for c in p[:-1]), default=Fraction(0)) / lead


@dataclass(frozen=True)
class RootEnclosure:
    lo: Fraction
    hi: Fraction
    degenerate: bool = False
    unique_positive: bool = True

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi


class RootIsolationError(ValueError):
    pass


def _bisect(p, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    flo = poly_eval(p, lo)
    fhi = poly_eval(p, hi)
    if flo == 0:
        return lo, lo
    if fhi == 0:
        return hi, hi
    if (flo > 0) == (fhi > 0):
        raise RootIsolationError("bracket endpoints have equal signs")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = poly_eval(p, mid)
        if fm == 0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def unique_positive_root(p, *, bracket=None,
                         width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Enclosure of the unique positive real root of p.

    Uniqueness is certified by a single Descartes sign change; a caller who
    knows a bracketing interval may supply one instead (used for polynomials
    with several sign changes, e.g. picking out the larger root).
    """
    p = poly_trim([Fraction(c) for c in p])
    if not p or len(p) == 1:
        raise RootIsolationError("constant polynomial has no positive root")
    if bracket is not None:
        lo, hi = Fraction(bracket[0]), Fraction(bracket[1])
        lo2, hi2 = _bisect(p, lo, hi, width)
        return RootEnclosure(lo2, hi2, unique_positive=False)
    changes = descartes_sign_changes(p)
    if changes != 1:
        raise RootIsolationError(
            f"need exactly one coefficient sign change (got {changes}); "
            "supply a bracket")
    while p[0] == 0:
        p = p[1:]  # roots at 0 are not positive
    lo = Fraction(0)
    flo = poly_eval(p, lo)
    hi = max(Fraction(1), root_upper_bound(p))
    while (poly_eval(p, hi) > 0) == (flo > 0):
        hi *= 2
    lo2, hi2 = _bisect(p, lo, hi, width)
    return RootEnclosure(lo2, hi2)


def positive_root_from_lengths(lengths, *, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Enclosure of the unique positive root of z^m - sum_i z^(m - l_i) for
    positive integer lengths l_i (m = max).

    This is the growth exponent of the free monoid on generators of the given
    lengths.  A single length is degenerate: the root is exactly 1.
    """
    lengths = list(lengths)
    if not lengths or any(l < 1 or l != int(l) for l in lengths):
        raise ValueError("lengths must be positive integers")
    m = max(lengths)
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[m] = Fraction(1)
    for l in lengths:
        coeffs[m - l] -= 1
    if len(lengths) == 1:
        return RootEnclosure(Fraction(1), Fraction(1), degenerate=True)
    assert descartes_sign_changes(coeffs) == 1
    return unique_positive_root(coeffs, width=width)


def largest_positive_root(p, *, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure | None:
    """Enclosure of the largest positive real root of p, or None.

    Falls back to Sturm-chain isolation when Descartes does not certify
    uniqueness; reports via unique_positive whether the positive root is the
    only one.
    """
    p = poly_trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return None
    changes = descartes_sign_changes(p)
    if changes == 1:
        return unique_positive_root(p, width=width)
    sf = squarefree_part(p)
    chain = sturm_chain(sf)
    lo = Fraction(0)
    hi = root_upper_bound(sf)
    total = count_roots_in(chain, lo, hi)
    if total == 0:
        return None
    # keep the rightmost root, then shrink to an isolating, sign-changing
    # interval around it
    while count_roots_in(chain, lo, hi) > 1 or hi - lo > width:
        mid = (lo + hi) / 2
        if poly_eval(sf, mid) == 0 and count_roots_in(chain, mid, hi) == 0:
            return RootEnclosure(mid, mid, unique_positive=(total == 1))
        if count_roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return RootEnclosure(lo, hi, unique_positive=(total == 1))


# ---------------------------------------------------------------------------
# recurrence fitting

@dataclass(frozen=True)
class Recurrence:
    """W(n) = c1 W(n-1) + ... + cd W(n-d), with exact coefficients."""
    order: int
    coefficients: tuple[Fraction, ...]
    initial: tuple[int, ...]
    guard: int

    def char_poly(self) -> list[Fraction]:
        """x^d - c1 x^(d-1) - ... - cd, ascending coefficients."""
        d = self.order
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[d] = Fraction(1)
        for i, c in enumerate(self.coefficients, start=1):
            coeffs[d - i] = -c
        return coeffs

    def extend(self, n: int) -> list[Fraction]:
        seq = [Fraction(v) for v in self.initial]
        while len(seq) < n:
            seq.append(sum(c * seq[-i] for i, c in enumerate(self.coefficients, 1)))
        return seq[:n]


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Any exact solution of rows*x = rhs, or None if inconsistent."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for row, c in zip(m, pivots):
        x[c] = row[-1]
    return x


def fit_recurrence(seq, *, guard: int = 5, max_order: int | None = None) -> Recurrence | None:
    """Minimal-order exact linear recurrence reproducing all of seq.

    The last `guard` terms are held out of the fit and used for verification;
    returns None if no order <= (len(seq) - guard) // 2 fits.
    """
    seq = [int(v) for v in seq]
    n = len(seq)
    limit = (n - guard) // 2
    if max_order is not None:
        limit = min(limit, max_order)
    for d in range(1, limit + 1):
        train_end = n - guard
        rows = [[Fraction(seq[k - i]) for i in range(1, d + 1)]
                for k in range(d, train_end)]
        rhs = [Fraction(seq[k]) for k in range(d, train_end)]
        if len(rows) < d:
            break
        sol = _solve_exact(rows, rhs)
        if sol is None:
            continue
        ok = all(
            sum(sol[i - 1] * seq[k - i] for i in range(1, d + 1)) == seq[k]
            for k in range(d, n))
        if ok:
            return Recurrence(order=d, coefficients=tuple(sol),
                              initial=tuple(seq[:d]), guard=guard)
    return None


def dominant_root(rec: Recurrence, *, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure | None:
    """Largest positive real root of the characteristic polynomial."""
    if rec.order < 1:
        raise ValueError("trivial recurrence")
    return largest_positive_root(rec.char_poly(), width=width)


# ---------------------------------------------------------------------------
# counting words avoiding forbidden factors (weighted symbols)

@dataclass(frozen=True)
class WeightedAlphabet:
    """Symbols with positive integer lengths and a list of forbidden factors
    (tuples of symbol names)."""
    symbols: tuple[tuple[str, int], ...]
    forbidden: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        names = [s for s, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names")
        if any(l < 1 for _, l in self.symbols):
            raise ValueError("symbol lengths must be positive")
        for f in self.forbidden:
            if not f:
                raise ValueError("forbidden factors must be nonempty")
            if any(s not in names for s in f):
                raise ValueError(f"forbidden factor uses unknown symbol: {f}")


def _avoidance_automaton(alpha: WeightedAlphabet):
    """Aho-Corasick style automaton over the forbidden-factor prefixes.

    States are proper prefixes of forbidden factors; a transition that would
    complete a forbidden factor is a dead transition (None).  State count is
    bounded by the total forbidden length + 1.
    """
    prefixes = {()}
    for f in alpha.forbidden:
        for i in range(len(f)):
            prefixes.add(f[:i])
    states = sorted(prefixes, key=lambda p: (len(p), p))
    index = {p: i for i, p in enumerate(states)}
    forbidden = set(alpha.forbidden)

    def has_forbidden_suffix(word):
        return any(word[len(word) - len(f):] == f for f in forbidden
                   if len(f) <= len(word))

    def longest_state_suffix(word):
        for i in range(len(word)):
            if word[i:] in index:
                return word[i:]
        return ()

    trans = []
    for p in states:
        row = {}
        for name, _ in alpha.symbols:
            w = p + (name,)
            if has_forbidden_suffix(w):
                row[name] = None
            else:
                row[name] = index[longest_state_suffix(w)]
        trans.append(row)
    return trans


def count_avoiding(alpha: WeightedAlphabet, nmax: int) -> list[int]:
    """Exact counts, by total weighted length 0..nmax, of words over the
    alphabet containing no forbidden factor."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    trans = _avoidance_automaton(alpha)
    nstates = len(trans)
    lengths = dict(alpha.symbols)
    # ways[n][state]: words of weighted length n ending in automaton state
    ways = [[0] * nstates for _ in range(nmax + 1)]
    ways[0][0] = 1
    for n in range(nmax + 1):
        row = ways[n]
        for st in range(nstates):
            w = row[st]
            if not w:
                continue
            for name, l in alpha.symbols:
                if n + l > nmax:
                    continue
                nxt = trans[st][name]
                if nxt is not None:
                    ways[n + l][nxt] += w
        # totals are accumulated after the row is final
    return [sum(ways[n]) for n in range(nmax + 1)]


# ---------------------------------------------------------------------------
# free-product lower bound from first L2-Betti numbers

def lpv_bound(order_a, order_b, beta1_a=0, beta1_b=0) -> Fraction:
    """Lower bound 3 + 2*beta1(A) + 2*beta1(B) - 2/|A| - 2/|B| for the
    minimal growth rate of A*B; pass None (or math.inf) for infinite order."""
    def term(order):
        if order is None or order == math.inf:
            return Fraction(0)
        order = int(order)
        if order < 2:
            raise ValueError("factor orders must be >= 2 (nontrivial factors)")
        return Fraction(2, order)
    return (Fraction(3) + 2 * Fraction(beta1_a) + 2 * Fraction(beta1_b)
            - term(order_a) - term(order_b))
