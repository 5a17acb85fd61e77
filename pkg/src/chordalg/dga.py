"""The Chekanov-Eliashberg DGA over Z/2.

The differential is stored on generators only and extended by the Leibniz
rule on demand (over Z/2 there are no signs).  A DGA is *valid* when every
generator image is homogeneous of degree one less and the differential
squares to zero; `check` reports violations instead of raising so that
partial fixtures can be inspected.

Text format (one directive per line, `#` comments):

    modulus <2*rho>
    gen <name> <grading> [action]
    d <name> = <poly>
    rel <poly>

`rel` lines carry bare relations for partial fixtures whose differentials
are not fully known; a file with `rel` lines (or with generators lacking a
`d` line) loads as partial and only exposes its relation ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .charalg import Ideal
from .freealg import Algebra, AlgebraError, Poly, deglex_key
from .gf2 import Echelon


class DGA:
    def __init__(self, algebra: Algebra, differential: Mapping[str, Poly]):
        self.algebra = algebra
        diff: Dict[str, Poly] = {}
        for name in algebra.names:
            img = differential.get(name)
            if img is None:
                img = algebra.zero()
            if img.algebra != algebra:
                raise AlgebraError(f"differential of {name} over a different algebra")
            diff[name] = img
        extra = set(differential) - set(algebra.names)
        if extra:
            raise AlgebraError(f"differential on undeclared generators: {sorted(extra)}")
        self.differential = diff

    def __repr__(self):
        return f"DGA({len(self.algebra.names)} generators, modulus={self.algebra.modulus})"

    def apply(self, p: Poly) -> Poly:
        """Leibniz extension: d(w) = sum over letters of w with d hitting one letter."""
        if p.algebra != self.algebra:
            raise AlgebraError("polynomial over a different algebra")
        acc = self.algebra.zero()
        for word in p.terms:
            for i, letter in enumerate(word):
                left = Poly(self.algebra, frozenset({word[:i]}))
                right = Poly(self.algebra, frozenset({word[i + 1 :]}))
                acc = acc + left * self.differential[self.algebra.names[letter]] * right
        return acc

    def relations(self) -> List[Poly]:
        return [img for img in self.differential.values() if not img.is_zero()]

    def ideal(self) -> Ideal:
        return Ideal(self.algebra, self.relations())

    def check(self) -> List[str]:
        """Violations of |d c| = |c| - 1 and d(d c) = 0; empty means valid."""
        out = []
        alg = self.algebra
        for name in alg.names:
            img = self.differential[name]
            if not img.is_zero():
                deg = img.homogeneous_degree()
                want = alg.reduce_grading(alg.gradings[alg.index(name)] - 1)
                if deg is None:
                    out.append(f"d {name} is not homogeneous")
                elif deg != want:
                    out.append(f"d {name} has degree {deg}, expected {want}")
            dd = self.apply(img)
            if not dd.is_zero():
                out.append(f"d(d {name}) = {dd} != 0")
        return out

    def is_valid(self) -> bool:
        return not self.check()

    # -- constructions --------------------------------------------------------

    def stabilize(self, grading: int, names: Optional[Tuple[str, str]] = None) -> "DGA":
        """Free product with a trivial two-generator complex d e = f."""
        if names is None:
            base = "e"
            k = 0
            taken = set(self.algebra.names)
            while f"{base}{k}" in taken or f"f{k}" in taken:
                k += 1
            names = (f"e{k}", f"f{k}")
        e, f = names
        gens = [
            (n, g, a)
            for n, g, a in zip(
                self.algebra.names, self.algebra.gradings, self.algebra.actions
            )
        ]
        gens.append((e, grading, None))
        gens.append((f, grading - 1, None))
        alg2 = Algebra(gens, modulus=self.algebra.modulus)
        diff2 = {
            n: _transport(img, alg2) for n, img in self.differential.items()
        }
        diff2[e] = alg2.gen(f)
        diff2[f] = alg2.zero()
        return DGA(alg2, diff2)


def _transport(p: Poly, target: Algebra) -> Poly:
    """Reinterpret p in a target algebra sharing the source's generator names."""
    src = p.algebra
    return Poly(
        target,
        frozenset(tuple(target.index(src.names[i]) for i in w) for w in p.terms),
    )


# -- linearization -------------------------------------------------------------


@dataclass
class LinearComplex:
    """Z/2 chain complex spanned by generators, graded by the algebra modulus."""

    names: Tuple[str, ...]
    gradings: Tuple[int, ...]
    modulus: int
    boundary: Dict[str, frozenset]  # name -> set of names (length-1 image)

    def grading_classes(self) -> Dict[int, List[int]]:
        classes: Dict[int, List[int]] = {}
        for i, g in enumerate(self.gradings):
            classes.setdefault(g, []).append(i)
        return classes

    def boundary_squares_to_zero(self) -> bool:
        for name in self.names:
            acc: set = set()
            for mid in self.boundary[name]:
                acc ^= set(self.boundary[mid])
            if acc:
                return False
        return True

    def homology(self) -> Dict[int, int]:
        """dim ker - dim im per grading, by GF(2) elimination."""
        index = {n: i for i, n in enumerate(self.names)}
        classes = self.grading_classes()
        # rank of the boundary restricted to each source grading
        rank_from: Dict[int, int] = {}
        for g, idxs in classes.items():
            ech = Echelon()
            for i in idxs:
                vec = 0
                for tgt in self.boundary[self.names[i]]:
                    vec |= 1 << index[tgt]
                ech.add(vec)
            rank_from[g] = ech.rank
        dims = {}
        for g, idxs in classes.items():
            ker = len(idxs) - rank_from.get(g, 0)
            g_above = g + 1 if self.modulus == 0 else (g + 1) % self.modulus
            im = rank_from.get(g_above, 0)
            dims[g] = ker - im
        return dims

    def euler_characteristic(self) -> int:
        if self.modulus != 0:
            raise ValueError("Euler characteristic needs a Z-grading")
        return sum((-1) ** g for g in self.gradings)

    def homology_euler_characteristic(self) -> int:
        if self.modulus != 0:
            raise ValueError("Euler characteristic needs a Z-grading")
        return sum((-1) ** g * dim for g, dim in self.homology().items())

    def total_dimension(self) -> int:
        return len(self.names)


def linearize(d: DGA, epsilon) -> LinearComplex:
    """Length-1 part of the differential conjugated by sigma_eps(c) = c + eps(c).

    ``epsilon`` is an augmentation: a mapping name -> 0/1 (or an object with a
    ``values`` mapping) satisfying eps(d c) = 0 for every generator.
    """
    if isinstance(epsilon, Mapping):
        values = dict(epsilon)
    else:
        values = dict(epsilon.values)
    alg = d.algebra
    missing = set(alg.names) - set(values)
    if missing:
        raise AlgebraError(f"augmentation misses generators: {sorted(missing)}")
    sigma = {
        n: (alg.gen(n) + alg.one() if values[n] else alg.gen(n)) for n in alg.names
    }
    for name in alg.names:
        img = d.differential[name].substitute(sigma)
        if img.length_part(0):
            raise AlgebraError(f"not an augmentation: eps(d {name}) = 1")
    boundary = {}
    for name in alg.names:
        conj = d.differential[name].substitute(sigma)
        boundary[name] = frozenset(
            alg.names[w[0]] for w in conj.length_part(1).terms
        )
    gradings = tuple(alg.reduce_grading(g) for g in alg.gradings)
    return LinearComplex(alg.names, gradings, alg.modulus, boundary)


# -- morphisms ------------------------------------------------------------------


@dataclass
class DGAMorphism:
    """Unital algebra map determined by generator images; checked, not trusted."""

    source: DGA
    target: DGA
    images: Dict[str, Poly]

    def image_of(self, p: Poly) -> Poly:
        table = dict(self.images)
        out = p.substitute(table)
        return out

    def verify(self) -> List[str]:
        out = []
        src, tgt = self.source.algebra, self.target.algebra
        missing = set(src.names) - set(self.images)
        if missing:
            return [f"no image for generators {sorted(missing)}"]
        if tgt.modulus != 0 and (
            src.modulus == 0 or src.modulus % tgt.modulus != 0
        ):
            out.append(
                f"target modulus {tgt.modulus} does not divide source modulus "
                f"{src.modulus}"
            )
        for name in src.names:
            img = self.images[name]
            if img.algebra != tgt:
                return [f"image of {name} lives in the wrong algebra"]
            if not img.is_zero():
                deg = img.homogeneous_degree()
                want = tgt.reduce_grading(src.gradings[src.index(name)])
                if deg is None or deg != want:
                    out.append(f"image of {name} is not homogeneous of degree {want}")
        for name in src.names:
            lhs = self.image_of(self.source.differential[name])
            rhs = self.target.apply(self.images[name])
            if lhs != rhs:
                out.append(f"chain-map identity fails on {name}")
        return out

    def is_valid(self) -> bool:
        return not self.verify()


def identity_morphism(d: DGA) -> DGAMorphism:
    return DGAMorphism(d, d, {n: d.algebra.gen(n) for n in d.algebra.names})


def compose(f: DGAMorphism, g: DGAMorphism) -> DGAMorphism:
    """g after f (f: A -> B, g: B -> C)."""
    images = {n: g.image_of(img) for n, img in f.images.items()}
    return DGAMorphism(f.source, g.target, images)


# -- text format -----------------------------------------------------------------


@dataclass
class DGAFile:
    """A parsed .dga file: full DGAs expose a DGA, partial files only an ideal."""

    algebra: Algebra
    differential: Dict[str, Poly]
    bare_relations: List[Poly]
    partial: bool

    @property
    def dga(self) -> DGA:
        if self.partial:
            raise AlgebraError("partial fixture has no complete differential")
        return DGA(self.algebra, self.differential)

    def ideal(self) -> Ideal:
        rels = [p for p in self.differential.values() if not p.is_zero()]
        rels.extend(self.bare_relations)
        return Ideal(self.algebra, rels)


def loads_dga(text: str) -> DGAFile:
    modulus = 0
    gens: List[Tuple[str, int, Optional[Fraction]]] = []
    d_lines: List[Tuple[str, str]] = []
    rel_lines: List[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "modulus":
            modulus = int(rest)
        elif head == "gen":
            parts = rest.split()
            if len(parts) == 2:
                gens.append((parts[0], int(parts[1]), None))
            elif len(parts) == 3:
                gens.append((parts[0], int(parts[1]), Fraction(parts[2])))
            else:
                raise AlgebraError(f"bad gen line: {raw!r}")
        elif head == "d":
            name, eq, poly = rest.partition("=")
            if not eq:
                raise AlgebraError(f"bad d line: {raw!r}")
            d_lines.append((name.strip(), poly.strip()))
        elif head == "rel":
            rel_lines.append(rest)
        else:
            raise AlgebraError(f"unknown directive {head!r}")
    alg = Algebra(gens, modulus=modulus)
    differential = {name: alg.parse(poly) for name, poly in d_lines}
    bare = [alg.parse(s) for s in rel_lines]
    partial = bool(bare) or set(differential) != set(alg.names)
    return DGAFile(alg, differential, bare, partial)


def load_dga(path) -> DGAFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_dga(fh.read())


def dumps_dga(d: DGA) -> str:
    alg = d.algebra
    lines = [f"modulus {alg.modulus}"]
    for name, grading, action in zip(alg.names, alg.gradings, alg.actions):
        if action is not None:
            lines.append(f"gen {name} {grading} {action}")
        else:
            lines.append(f"gen {name} {grading}")
    for name in alg.names:
        lines.append(f"d {name} = {d.differential[name]}")
    return "\n".join(lines) + "\n"


def save_dga(d: DGA, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_dga(d))
