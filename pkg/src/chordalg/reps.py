"""Augmentations and finite-dimensional matrix representations over Z/2.

Searches are exhaustive backtracking with constraint propagation: relations
are evaluated the moment their support is fully assigned and nonzero values
prune the branch.  Results returned by a search never reuse the search's
evaluation path; callers re-verify through `verify_rep` / `is_augmentation`,
which evaluate from scratch.

A search that runs out of node budget returns what it found flagged as
truncated; nonexistence is only meaningful on untruncated runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import gf2
from .charalg import Ideal
from .dga import DGA
from .freealg import Algebra, AlgebraError, Poly

DEFAULT_NODE_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Augmentation:
    """Unital map to Z/2 killing the differential; graded ones kill nonzero degrees."""

    values: Mapping[str, int]
    graded: bool = False

    def __post_init__(self):
        object.__setattr__(
            self, "values", {k: int(v) & 1 for k, v in dict(self.values).items()}
        )

    def __call__(self, name: str) -> int:
        return self.values[name]

    def evaluate(self, p: Poly) -> int:
        total = 0
        names = p.algebra.names
        for word in p.terms:
            prod = 1
            for i in word:
                prod &= self.values[names[i]]
                if not prod:
                    break
            total ^= prod
        return total

    def as_rep(self) -> "MatrixRep":
        return MatrixRep(
            1, {n: ((v & 1,)) for n, v in self.values.items()}, self.graded
        )


@dataclass(frozen=True)
class MatrixRep:
    """Generator -> k x k matrix over Z/2 (rows as bitmasks); rho(1) = I implied."""

    k: int
    values: Mapping[str, gf2.BitMatrix]
    graded: bool = False

    def __post_init__(self):
        vals = {}
        for name, m in dict(self.values).items():
            m = tuple(int(r) for r in m)
            if len(m) != self.k:
                raise ValueError(f"matrix for {name} is not {self.k}x{self.k}")
            vals[name] = m
        object.__setattr__(self, "values", vals)

    def matrix(self, name: str) -> gf2.BitMatrix:
        return self.values[name]

    def evaluate(self, p: Poly) -> gf2.BitMatrix:
        acc = gf2.zero(self.k)
        names = p.algebra.names
        for word in p.terms:
            m = gf2.eye(self.k)
            for i in word:
                m = gf2.mat_mul(m, self.values[names[i]])
            acc = gf2.mat_add(acc, m)
        return acc


def is_augmentation(d: DGA, aug: Augmentation) -> bool:
    alg = d.algebra
    if set(aug.values) != set(alg.names):
        return False
    if aug.graded:
        for name in alg.names:
            if alg.grading_of(name) != 0 and aug.values[name]:
                return False
    return all(aug.evaluate(img) == 0 for img in d.differential.values())


def verify_rep(relations: Ideal, rep: MatrixRep) -> bool:
    """True iff every relation evaluates to the zero matrix."""
    needed = {relations.algebra.names[i] for r in relations.relations for i in r.support()}
    missing = needed - set(rep.values)
    if missing:
        raise AlgebraError(f"representation misses generators {sorted(missing)}")
    return all(
        gf2.mat_is_zero(rep.evaluate(rel)) for rel in relations.relations
    )


# -- searches -------------------------------------------------------------------


@dataclass
class SearchResult:
    found: list
    truncated: bool

    def __iter__(self):
        return iter(self.found)

    def __len__(self):
        return len(self.found)


def _search_order(names: Sequence[str], relations: Sequence[Poly], alg: Algebra):
    """Most-constrained first: sort by occurrence count in relations, descending."""
    counts = {n: 0 for n in names}
    for rel in relations:
        for i in rel.support():
            counts[alg.names[i]] += 1
    return sorted(names, key=lambda n: (-counts[n], alg.index(n)))


def find_augmentations(
    d: DGA, graded: bool = False, budget: int = DEFAULT_NODE_BUDGET
) -> SearchResult:
    """All assignments with eps(d c) = 0, by backtracking over Z/2 values."""
    alg = d.algebra
    relations = d.relations()
    fixed = {}
    free = []
    for name in alg.names:
        if graded and alg.grading_of(name) != 0:
            fixed[name] = 0
        else:
            free.append(name)
    order = _search_order(free, relations, alg)
    rel_support = [
        (rel, frozenset(alg.names[i] for i in rel.support())) for rel in relations
    ]
    found: List[Augmentation] = []
    truncated = False
    nodes = 0
    assignment = dict(fixed)

    def ready_relations(pos):
        assigned = set(order[:pos]) | set(fixed)
        return [rel for rel, sup in rel_support if sup <= assigned]

    ready_at = [ready_relations(pos) for pos in range(len(order) + 1)]
    newly_ready = [
        [r for r in ready_at[pos] if r not in ready_at[pos - 1]] if pos else ready_at[0]
        for pos in range(len(order) + 1)
    ]

    def evaluate(rel) -> int:
        total = 0
        for word in rel.terms:
            prod = 1
            for i in word:
                prod &= assignment[alg.names[i]]
                if not prod:
                    break
            total ^= prod
        return total

    def walk(pos: int):
        nonlocal nodes, truncated
        nodes += 1
        if nodes > budget:
            truncated = True
            return
        for rel in newly_ready[pos]:
            if evaluate(rel):
                return
        if pos == len(order):
            found.append(Augmentation(dict(assignment), graded))
            return
        for value in (0, 1):
            assignment[order[pos]] = value
            walk(pos + 1)
            if truncated:
                return
        del assignment[order[pos]]

    walk(0)
    return SearchResult(found, truncated)


def find_matrix_reps(
    relations: Ideal,
    k: int,
    budget: int = DEFAULT_NODE_BUDGET,
    graded_zero: Optional[Iterable[str]] = None,
) -> SearchResult:
    """All k-dimensional representations killing the relations (budget permitting).

    ``graded_zero`` lists generators forced to the zero matrix (the graded
    condition for nonzero-degree generators).
    """
    alg = relations.algebra
    names = list(alg.names)
    fixed: Dict[str, gf2.BitMatrix] = {}
    if graded_zero:
        for n in graded_zero:
            fixed[alg.names[alg.index(n)]] = gf2.zero(k)
    free = [n for n in names if n not in fixed]
    order = _search_order(free, relations.relations, alg)
    rel_support = [
        (rel, frozenset(alg.names[i] for i in rel.support()))
        for rel in relations.relations
    ]
    ready_at = []
    for pos in range(len(order) + 1):
        assigned = set(order[:pos]) | set(fixed)
        ready_at.append([rel for rel, sup in rel_support if sup <= assigned])
    newly_ready = [
        [r for r in ready_at[pos] if r not in ready_at[pos - 1]] if pos else ready_at[0]
        for pos in range(len(order) + 1)
    ]

    all_matrices = [tuple(rows) for rows in _all_bit_matrices(k)]
    assignment: Dict[str, gf2.BitMatrix] = dict(fixed)
    found: List[MatrixRep] = []
    truncated = False
    nodes = 0

    def evaluate(rel) -> bool:
        acc = gf2.zero(k)
        for word in rel.terms:
            m = gf2.eye(k)
            for i in word:
                m = gf2.mat_mul(m, assignment[alg.names[i]])
            acc = gf2.mat_add(acc, m)
        return gf2.mat_is_zero(acc)

    def walk(pos: int):
        nonlocal nodes, truncated
        nodes += 1
        if nodes > budget:
            truncated = True
            return
        for rel in newly_ready[pos]:
            if not evaluate(rel):
                return
        if pos == len(order):
            graded = bool(graded_zero)
            found.append(MatrixRep(k, dict(assignment), graded))
            return
        for m in all_matrices:
            assignment[order[pos]] = m
            walk(pos + 1)
            if truncated:
                return
        del assignment[order[pos]]

    walk(0)
    return SearchResult(found, truncated)


def _all_bit_matrices(k: int):
    total = 1 << (k * k)
    mask = (1 << k) - 1
    for code in range(total):
        yield tuple((code >> (i * k)) & mask for i in range(k))


# -- constructions ----------------------------------------------------------------


def tensor_rep(
    rep1: MatrixRep,
    rep2: MatrixRep,
    glue: Mapping[str, Tuple[str, Optional[str]]],
) -> MatrixRep:
    """Kronecker-product representation of dimension k1*k2.

    ``glue`` sends each generator name of the combined algebra to one of
    ('left', name), ('right', name) or ('unit', None).
    """
    k1, k2 = rep1.k, rep2.k
    values = {}
    for name, (side, ref) in glue.items():
        if side == "left":
            values[name] = gf2.kron(rep1.matrix(ref), gf2.eye(k2))
        elif side == "right":
            values[name] = gf2.kron(gf2.eye(k1), rep2.matrix(ref))
        elif side == "unit":
            values[name] = gf2.eye(k1 * k2)
        else:
            raise ValueError(f"bad glue entry for {name}: {side!r}")
    return MatrixRep(k1 * k2, values, rep1.graded and rep2.graded)


def pullback_rep(
    images: Mapping[str, Poly], rep: MatrixRep, source_ideal: Optional[Ideal] = None
) -> MatrixRep:
    """Pull a representation back along a unital algebra morphism.

    ``images`` maps each source generator to its image polynomial in the
    representation's algebra.  When ``source_ideal`` is given, the pullback is
    verified to kill it; failure raises.
    """
    values = {name: rep.evaluate(img) for name, img in images.items()}
    out = MatrixRep(rep.k, values, rep.graded)
    if source_ideal is not None and not verify_rep(source_ideal, out):
        raise AlgebraError("pullback does not kill the source ideal")
    return out


def companion_rep(p: Poly) -> MatrixRep:
    """Representation of <gens>/<p(a)> from an irreducible factor's companion matrix.

    ``p`` must be a univariate polynomial in a single generator; the chosen
    factor has degree d and the generator maps to its d x d companion matrix,
    every other generator to the zero matrix.  ``p = 1`` has no representation
    (the quotient is zero) and raises.
    """
    alg = p.algebra
    if p.is_zero():
        raise AlgebraError("companion_rep needs a nonzero polynomial")
    letters = p.support()
    if len(letters) > 1:
        raise AlgebraError("companion_rep needs a univariate polynomial")
    if not letters:
        # constant 1: unit relation, quotient collapses
        raise AlgebraError("p = 1 is a unit: no representation exists")
    (letter,) = letters
    bits = 0
    for word in p.terms:
        if any(i != letter for i in word):
            raise AlgebraError("companion_rep needs a univariate polynomial")
        bits ^= 1 << len(word)
    if bits == 1:
        raise AlgebraError("p = 1 is a unit: no representation exists")
    factor = gf2.polx_irreducible_factor(bits)
    comp = gf2.companion(factor)
    k = len(comp)
    values = {name: gf2.zero(k) for name in alg.names}
    values[alg.names[letter]] = comp
    return MatrixRep(k, values, False)


def commutator_obstruction(relations: Ideal) -> bool:
    """Detect a relation of the shape 1 + ab + ba for generators a != b.

    Over characteristic-zero fields such a relation forces tr(I) = 0, so no
    finite-dimensional representation exists there; this is a syntactic
    detector only, no characteristic-zero arithmetic is performed.
    """
    for rel in relations.relations:
        words = sorted(rel.terms, key=len)
        if len(words) != 3:
            continue
        if words[0] != ():
            continue
        w1, w2 = words[1], words[2]
        if len(w1) == 2 and len(w2) == 2 and w1 == (w2[1], w2[0]) and w1[0] != w1[1]:
            return True
    return False
