"""Built-in named amalgam specifications with documented expected quantities,
plus the letter-minimal normal-form enumerator for the pgl2z entry.

The pgl2z enumerator generates all words of the shape

    U c M1 c M2 c ... c M_{j-1} c V

with U, V in {empty, a, b, ab} and every middle block in {b, ab}; these words
are letter-minimal and pairwise distinct, so their per-length counts are an
oracle for Cayley-sphere sizes that is independent of ball enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .amalgam import (
    SIDE_A,
    SIDE_B,
    AmalgamSpec,
    NormalForm,
    Word,
    factor_nf,
    identity_nf,
    make_amalgam,
    multiply,
    reduce_word,
)
from .groups import cyclic, dihedral, direct_product, verify_embedding
from .growth import GenSet, make_genset, shortest_word


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: AmalgamSpec
    # canonical letters for parsing words on the command line; may contain
    # aliases (distinct names for one element), unlike the generating set
    alphabet: dict[str, NormalForm]
    default_genset: GenSet
    description: str
    # documented quantities: each has a "quantity", a value or polynomial
    # (ascending coefficients), and the basis on which it is recorded
    expected: tuple[dict, ...]


class UnknownEntryError(KeyError):
    pass


GOLDEN_POLY = (-1, -1, 1)          # z^2 - z - 1
PLASTIC_POLY = (-1, -1, 0, 1)      # z^3 - z - 1


def _free_product(n: int) -> AmalgamSpec:
    A, B, C = cyclic(2), cyclic(n), cyclic(1)
    return make_amalgam(A, B, C, verify_embedding(C, A, [0]),
                        verify_embedding(C, B, [0]), name=f"c2*c{n}")


def _entry_c2_c2() -> CatalogEntry:
    spec = _free_product(2)
    a = factor_nf(spec, SIDE_A, 1)
    b = factor_nf(spec, SIDE_B, 1)
    return CatalogEntry(
        name="c2*c2",
        spec=spec,
        alphabet={"a": a, "b": b},
        default_genset=make_genset(spec, [("a", a), ("b", b)]),
        description="infinite dihedral group C2*C2; the excluded linear case "
                    "with ([A:C]-1)([B:C]-1) = 1",
        expected=(
            {"quantity": "growth_rate", "value": 1,
             "basis": "sphere sizes are eventually constant"},
            {"quantity": "sphere_char_poly", "polynomial": (-1, 1),
             "basis": "independent enumeration"},
        ),
    )


def _entry_c2_c3() -> CatalogEntry:
    spec = _free_product(3)
    a = factor_nf(spec, SIDE_A, 1)
    b = factor_nf(spec, SIDE_B, 1)
    t = multiply(spec, b, a)
    # the default generating set {a, ba} attains the group's minimal rate;
    # the factor generators {a, b} only give sqrt(2)
    return CatalogEntry(
        name="c2*c3",
        spec=spec,
        alphabet={"a": a, "b": b},
        default_genset=make_genset(spec, [("a", a), ("b", t)]),
        description="C2*C3 with the rate-minimizing generating set {a, ba}",
        expected=(
            {"quantity": "sphere_char_poly", "polynomial": GOLDEN_POLY,
             "basis": "independent enumeration"},
            {"quantity": "growth_rate", "value": (1 + 5 ** 0.5) / 2,
             "basis": "positive root of z^2-z-1"},
            {"quantity": "factor_generator_rate", "value": 2 ** 0.5,
             "basis": "independent enumeration with {a, b}: z^2-2"},
        ),
    )


def _entry_c2_c4() -> CatalogEntry:
    spec = _free_product(4)
    a = factor_nf(spec, SIDE_A, 1)
    b = factor_nf(spec, SIDE_B, 1)
    return CatalogEntry(
        name="c2*c4",
        spec=spec,
        alphabet={"a": a, "b": b},
        default_genset=make_genset(spec, [("a", a), ("b", b)]),
        description="C2*C4 with factor generators",
        expected=(
            {"quantity": "sphere_char_poly", "polynomial": GOLDEN_POLY,
             "basis": "independent enumeration"},
            {"quantity": "growth_rate", "value": (1 + 5 ** 0.5) / 2,
             "basis": "positive root of z^2-z-1"},
        ),
    )


def _entry_c2_c5() -> CatalogEntry:
    spec = _free_product(5)
    a = factor_nf(spec, SIDE_A, 1)
    b = factor_nf(spec, SIDE_B, 1)
    return CatalogEntry(
        name="c2*c5",
        spec=spec,
        alphabet={"a": a, "b": b},
        default_genset=make_genset(spec, [("a", a), ("b", b)]),
        description="C2*C5 with factor generators",
        expected=(
            {"quantity": "sphere_char_poly", "polynomial": (-2, -2, 0, 1),
             "basis": "independent enumeration"},
            {"quantity": "growth_rate", "value": 1.7692923542386314,
             "basis": "positive root of z^3-2z-2"},
        ),
    )


def _entry_c2_c2xc2() -> CatalogEntry:
    A = cyclic(2)
    B = direct_product(cyclic(2), cyclic(2))
    C = cyclic(1)
    spec = make_amalgam(A, B, C, verify_embedding(C, A, [0]),
                        verify_embedding(C, B, [0]), name="c2*c2xc2")
    a = factor_nf(spec, SIDE_A, 1)
    b = factor_nf(spec, SIDE_B, 2)
    c = factor_nf(spec, SIDE_B, 1)
    return CatalogEntry(
        name="c2*c2xc2",
        spec=spec,
        alphabet={"a": a, "b": b, "c": c},
        default_genset=make_genset(spec, [("a", a), ("b", b), ("c", c)]),
        description="C2*(C2xC2), generated entirely by involutions",
        expected=(
            {"quantity": "sphere_char_poly", "polynomial": GOLDEN_POLY,
             "basis": "independent enumeration"},
            {"quantity": "growth_rate", "value": (1 + 5 ** 0.5) / 2,
             "basis": "positive root of z^2-z-1"},
        ),
    )


def _entry_pgl2z() -> CatalogEntry:
    # (C2 x C2) amalgamated with D6 over C2, identifying a with the
    # reflection d; generators a, b (Klein factor) and c (reflection of D6)
    # satisfy a^2 = b^2 = c^2 = (ab)^2 = (ac)^3 = 1
    A = direct_product(cyclic(2), cyclic(2))
    B = dihedral(6)
    C = cyclic(2)
    spec = make_amalgam(A, B, C, verify_embedding(C, A, [0, 2]),
                        verify_embedding(C, B, [0, 4]), name="pgl2z")
    a = factor_nf(spec, SIDE_A, 2)
    b = factor_nf(spec, SIDE_A, 1)
    c = factor_nf(spec, SIDE_B, 3)
    return CatalogEntry(
        name="pgl2z",
        spec=spec,
        alphabet={"a": a, "b": b, "c": c},
        default_genset=make_genset(spec, [("a", a), ("b", b), ("c", c)]),
        description="(C2xC2) amalgamated with D6 over C2; indices [A:C]=2, "
                    "[B:C]=3",
        expected=(
            {"quantity": "sphere_char_poly", "polynomial": PLASTIC_POLY,
             "basis": "independent enumeration and the letter-minimal "
                      "form oracle"},
            {"quantity": "growth_rate", "value": 1.3247179572447460,
             "basis": "positive root of z^3-z-1"},
        ),
    )


def _entry_gl2z() -> CatalogEntry:
    # D8 amalgamated with D12 over C2 x C2: the rotation square (ab)^2 of D8
    # is identified with the rotation cube (cd)^3 of D12, and the reflection
    # b with the reflection d (so b and d name the same element)
    A = dihedral(8)
    B = dihedral(12)
    C = direct_product(cyclic(2), cyclic(2))
    spec = make_amalgam(A, B, C, verify_embedding(C, A, [0, 5, 2, 7]),
                        verify_embedding(C, B, [0, 7, 3, 10]), name="gl2z")
    a = factor_nf(spec, SIDE_A, 4)
    b = factor_nf(spec, SIDE_A, 5)
    c = factor_nf(spec, SIDE_B, 6)
    d = factor_nf(spec, SIDE_B, 7)
    assert b.key() == d.key()
    return CatalogEntry(
        name="gl2z",
        spec=spec,
        alphabet={"a": a, "b": b, "c": c, "d": d},
        default_genset=make_genset(spec, [("a", a), ("b", b), ("c", c)]),
        description="D8 amalgamated with D12 over C2xC2; the alphabet name d "
                    "is an alias for b",
        expected=(
            {"quantity": "minimal_growth_rate", "value": 1.3247179572447460,
             "basis": "documented transfer from the pgl2z entry; not an "
                      "enumeration target"},
        ),
    )


_BUILDERS = {
    "c2*c2": _entry_c2_c2,
    "c2*c3": _entry_c2_c3,
    "c2*c4": _entry_c2_c4,
    "c2*c5": _entry_c2_c5,
    "c2*c2xc2": _entry_c2_c2xc2,
    "pgl2z": _entry_pgl2z,
    "gl2z": _entry_gl2z,
}


def catalog_names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def catalog_load(name: str) -> CatalogEntry:
    if name not in _BUILDERS:
        raise UnknownEntryError(
            f"unknown catalog entry {name!r}; available: "
            + ", ".join(catalog_names()))
    return _BUILDERS[name]()


PLASTIC_EDGE = ("", "a", "b", "ab")
PLASTIC_MIDDLE = ("b", "ab")


@dataclass(frozen=True)
class PlasticForm:
    """Letter-minimal positive word for the pgl2z entry, stored as the
    maximal c-free segments; k segments carry k-1 interleaved c letters."""
    segments: tuple[str, ...]

    def letters(self) -> str:
        return "c".join(self.segments)

    def length(self) -> int:
        return sum(len(s) for s in self.segments) + len(self.segments) - 1

    @property
    def ends_in_c(self) -> bool:
        return len(self.segments) > 1 and self.segments[-1] == ""


class PlasticFormError(ValueError):
    pass


def make_plastic(segments: tuple[str, ...]) -> PlasticForm:
    if not segments:
        raise PlasticFormError("at least one segment required")
    if segments[0] not in PLASTIC_EDGE or segments[-1] not in PLASTIC_EDGE:
        raise PlasticFormError(f"edge segment outside {PLASTIC_EDGE}")
    for s in segments[1:-1]:
        if s not in PLASTIC_MIDDLE:
            raise PlasticFormError(f"middle segment {s!r} outside "
                                   f"{PLASTIC_MIDDLE}")
    return PlasticForm(segments)


def plastic_forms(nmax: int) -> list[PlasticForm]:
    """All valid forms of letter length <= nmax, shortest first."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    out = [PlasticForm((u,)) for u in PLASTIC_EDGE if len(u) <= nmax]
    # bodies are open forms U c M1 c ... Mk still awaiting "c V"
    partial = [((u,), len(u)) for u in PLASTIC_EDGE]
    while partial:
        nxt = []
        for segs, n in partial:
            for v in PLASTIC_EDGE:
                if n + 1 + len(v) <= nmax:
                    out.append(PlasticForm(segs + (v,)))
            for m in PLASTIC_MIDDLE:
                n2 = n + 1 + len(m)
                if n2 + 1 <= nmax:
                    nxt.append((segs + (m,), n2))
        partial = nxt
    out.sort(key=lambda f: (f.length(), f.segments))
    return out


@dataclass(frozen=True)
class PlasticCounts:
    nmax: int
    w: tuple[int, ...]       # all forms of each letter length
    c: tuple[int, ...]       # forms ending in c


def plastic_enumerate(nmax: int) -> PlasticCounts:
    """Exact per-length counts by direct generation.

    Asserts the holding recurrences C(n) = C(n-2) + C(n-3) for n >= 4 and
    W(n) = W(n-2) + W(n-3) for n >= 5, and that distinct forms evaluate to
    distinct group elements (uniqueness is checked, not assumed).
    """
    forms = plastic_forms(nmax)
    w = [0] * (nmax + 1)
    c = [0] * (nmax + 1)
    for f in forms:
        w[f.length()] += 1
        if f.ends_in_c:
            c[f.length()] += 1
    for n in range(4, nmax + 1):
        assert c[n] == c[n - 2] + c[n - 3], f"C-recurrence fails at {n}"
    for n in range(5, nmax + 1):
        assert w[n] == w[n - 2] + w[n - 3], f"W-recurrence fails at {n}"
    entry = catalog_load("pgl2z")
    seen: dict[tuple, str] = {}
    for f in forms:
        key = plastic_eval(entry, f).key()
        assert key not in seen, (
            f"forms {seen[key]!r} and {f.letters()!r} collide")
        seen[key] = f.letters()
    return PlasticCounts(nmax, tuple(w), tuple(c))


def plastic_eval(entry: CatalogEntry, form: PlasticForm) -> NormalForm:
    acc = identity_nf(entry.spec)
    for ch in form.letters():
        acc = multiply(entry.spec, acc, entry.alphabet[ch])
    return acc


def _rewrite_letters(s: str) -> str:
    """Confluent passes to the letter-minimal shape: cancel doubled letters,
    order the commuting pair as ab, and flatten c-a-c sandwiches to a-c-a.
    Terminates because (#c, length, #ba-inversions) drops lexicographically.
    """
    changed = True
    while changed:
        changed = False
        for pat, rep in (("aa", ""), ("bb", ""), ("cc", ""),
                         ("cac", "aca"), ("ba", "ab")):
            i = s.find(pat)
            if i >= 0:
                s = s[:i] + rep + s[i + len(pat):]
                changed = True
                break
    return s


def plastic_normal_form(entry: CatalogEntry, g: NormalForm) -> PlasticForm:
    """The letter-minimal form of g; evaluating it reproduces g and its
    length is the word length over {a, b, c}."""
    gens = make_genset(entry.spec,
                       [(n, entry.alphabet[n]) for n in ("a", "b", "c")])
    bound = 3 * len(g.syllables) + 4
    res = shortest_word(entry.spec, gens, g, bound)
    if res is None:  # pragma: no cover - bound is ample
        raise PlasticFormError("element outside the search ball")
    _, word = res
    letters = _rewrite_letters("".join(word))
    form = make_plastic(tuple(letters.split("c")))
    if plastic_eval(entry, form).key() != g.key():
        raise PlasticFormError("rewriting changed the element")  # pragma: no cover
    if form.length() != res[0]:
        raise PlasticFormError("rewriting changed the length")  # pragma: no cover
    return form


def parse_word(entry: CatalogEntry, text: str) -> NormalForm:
    """Reduce a whitespace-separated word over the entry's alphabet."""
    return reduce_word(entry.spec, Word.parse(text), entry.alphabet)
