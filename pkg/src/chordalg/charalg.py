"""Characteristic algebras as degree-bounded noncommutative rewriting systems.

The quotient by the two-sided ideal generated by the differentials is
realized by an oriented rule set completed a la Knuth-Bendix/Buchberger up to
a word-degree bound.  Because full noncommutative ideal membership is
undecidable, completion is truncated: overlaps whose ambiguity word exceeds
the bound are skipped and recorded, and unit containment is reported as a
tri-state answer.

Rule orientation uses the deglex order of freealg (declaration-order
precedence); ties among applicable rules go to the lowest rule index, so
normal forms are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .freealg import Algebra, AlgebraError, Poly, Word, deglex_key
from .gf2 import Echelon

UNIT_YES = "yes"
UNIT_NO_UP_TO_BOUND = "no-up-to-bound"
UNIT_UNKNOWN = "unknown"

DEFAULT_BOUND = 8

_COMPLETION_STEP_CAP = 20000


@dataclass
class Ideal:
    """Two-sided ideal given by generating relations (zero relations dropped)."""

    algebra: Algebra
    relations: List[Poly] = field(default_factory=list)

    def __post_init__(self):
        kept = []
        for rel in self.relations:
            if rel.algebra != self.algebra:
                raise AlgebraError("relation over a different algebra")
            if not rel.is_zero():
                kept.append(rel)
        self.relations = kept

    def max_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)


@dataclass(frozen=True)
class Rule:
    lead: Word
    rest: frozenset  # words; every word deglex-smaller than lead

    def poly(self, algebra: Algebra) -> Poly:
        return Poly(algebra, self.rest | {self.lead})


class RewriteSystem:
    def __init__(
        self,
        algebra: Algebra,
        rules: Sequence[Rule],
        degree_bound: int,
        complete_up_to_bound: bool,
    ):
        self.algebra = algebra
        self.rules = list(rules)
        self.degree_bound = degree_bound
        self.complete_up_to_bound = complete_up_to_bound
        self._has_unit_rule = any(len(r.lead) == 0 for r in self.rules)

    def __repr__(self):
        status = "complete" if self.complete_up_to_bound else "truncated"
        return (
            f"RewriteSystem({len(self.rules)} rules, bound={self.degree_bound}, "
            f"{status})"
        )

    def rule_strings(self) -> List[str]:
        alg = self.algebra
        return [
            f"{alg.word_str(r.lead)} -> {Poly(alg, r.rest)}" for r in self.rules
        ]

    # -- rewriting -----------------------------------------------------------

    def normal_form(self, p: Poly) -> Poly:
        if p.algebra != self.algebra:
            raise AlgebraError("polynomial over a different algebra")
        if self._has_unit_rule:
            return self.algebra.zero()
        terms = set(p.terms)
        while True:
            hit = _find_reduction(self.rules, terms)
            if hit is None:
                return Poly(self.algebra, frozenset(terms))
            word, rule, pos = hit
            u, v = word[:pos], word[pos + len(rule.lead):]
            terms ^= {word}
            for w in rule.rest:
                terms ^= {u + w + v}

    def contains_unit(self) -> str:
        if self.normal_form(self.algebra.one()).is_zero():
            return UNIT_YES
        if self.complete_up_to_bound:
            return UNIT_NO_UP_TO_BOUND
        return UNIT_UNKNOWN


def _find_occurrence(word: Word, lead: Word) -> Optional[int]:
    n, m = len(word), len(lead)
    for pos in range(n - m + 1):
        if word[pos : pos + m] == lead:
            return pos
    return None


def _find_reduction(rules, terms):
    """Deglex-largest reducible word, lowest rule index, leftmost occurrence."""
    for word in sorted(terms, key=deglex_key, reverse=True):
        for rule in rules:
            if len(rule.lead) == 0:
                return word, rule, 0
            pos = _find_occurrence(word, rule.lead)
            if pos is not None:
                return word, rule, pos
    return None


def _orient(p: Poly) -> Rule:
    lead = p.lead()
    return Rule(lead, p.terms - {lead})


def complete(ideal: Ideal, degree_bound: int = DEFAULT_BOUND) -> RewriteSystem:
    """Inter-reduced rule set with all ambiguities of degree <= bound resolved.

    ``complete_up_to_bound`` is False when some overlap word exceeded the
    bound (so the answer is only valid up to that degree).
    """
    if degree_bound < ideal.max_degree():
        raise ValueError(
            f"degree bound {degree_bound} below max relation degree "
            f"{ideal.max_degree()}"
        )
    alg = ideal.algebra
    rules: List[Rule] = []
    pending = deque(ideal.relations)
    skipped_overlap = False
    steps = 0

    def nf(p: Poly) -> Poly:
        return RewriteSystem(alg, rules, degree_bound, False).normal_form(p)

    while pending:
        steps += 1
        if steps > _COMPLETION_STEP_CAP:
            raise RuntimeError("completion did not stabilize within step cap")
        p = nf(pending.popleft())
        if p.is_zero():
            continue
        new_rule = _orient(p)
        # Unit in the ideal: the quotient collapses; nothing else matters.
        if len(new_rule.lead) == 0:
            return RewriteSystem(alg, [Rule((), frozenset())], degree_bound, True)
        # Inter-reduction: any existing rule whose lead contains the new lead
        # is withdrawn and requeued as a whole polynomial.
        survivors = []
        for r in rules:
            if _find_occurrence(r.lead, new_rule.lead) is not None:
                pending.append(r.poly(alg))
            else:
                survivors.append(r)
        rules = survivors
        rules.append(new_rule)
        # Re-normalize remainders against the updated system (leads are
        # untouched, so orientation stays valid).
        rules = [
            Rule(r.lead, nf(Poly(alg, r.rest)).terms) for r in rules
        ]
        # Queue S-polynomials of every overlap ambiguity involving the new rule.
        for other in list(rules):
            for first, second in ((rules[-1], other), (other, rules[-1])):
                for spoly, wlen in _overlap_spolys(alg, first, second):
                    if wlen > degree_bound:
                        skipped_overlap = True
                    else:
                        pending.append(spoly)

    return RewriteSystem(alg, rules, degree_bound, not skipped_overlap)


def _overlap_spolys(alg: Algebra, r1: Rule, r2: Rule):
    """S-polynomials for proper overlaps: a suffix of lead1 equals a prefix of lead2."""
    l1, l2 = r1.lead, r2.lead
    same = r1 == r2
    out = []
    max_t = min(len(l1), len(l2))
    for t in range(1, max_t + 1):
        if same and t == len(l1):
            continue
        if l1[len(l1) - t :] != l2[:t]:
            continue
        if t == len(l1) or t == len(l2):
            # full inclusion of one lead in the other; inter-reduction handles it
            continue
        u = l1[: len(l1) - t]
        v = l2[t:]
        spoly = Poly(alg, frozenset(w + v for w in r1.rest)) + Poly(
            alg, frozenset(u + w for w in r2.rest)
        )
        out.append((spoly, len(l1) + len(v)))
    return out


# -- independent membership oracle --------------------------------------------


def brute_member(ideal: Ideal, p: Poly, max_len: int) -> bool:
    """Is p in the GF(2) span of { u * rel * v : |u| + deg(rel) + |v| <= max_len }?

    A lower approximation of ideal membership used as an independent oracle
    against the rewriting route; decided by linear algebra on the word basis.
    """
    if p.algebra != ideal.algebra:
        raise AlgebraError("polynomial over a different algebra")
    alg = ideal.algebra
    n = len(alg.names)
    word_bit = {}

    def bits(words) -> int:
        acc = 0
        for w in words:
            if w not in word_bit:
                word_bit[w] = len(word_bit)
            acc ^= 1 << word_bit[w]
        return acc

    target = bits(p.terms)
    if target == 0:
        return True
    basis = Echelon()

    def words_of_len(k):
        if k == 0:
            yield ()
            return
        stack = [()]
        for _ in range(k):
            stack = [w + (i,) for w in stack for i in range(n)]
        yield from stack

    # Insert products in increasing total length so members exit early.
    for total in range(max_len + 1):
        for rel in ideal.relations:
            d = len(rel.lead())
            if d > total:
                continue
            room = total - d
            for ulen in range(room + 1):
                vlen = room - ulen
                for u in words_of_len(ulen):
                    for v in words_of_len(vlen):
                        row = bits(u + w + v for w in rel.terms)
                        if basis.add(row):
                            target = basis.reduce(target)
                            if target == 0:
                                return True
    return basis.contains(target)


# -- rank-property witnesses ---------------------------------------------------


@dataclass
class RankWitness:
    """Matrices A (m x n) and B (n x m) of polynomials with AB = I_m intended, m > n."""

    a: Tuple[Tuple[Poly, ...], ...]
    b: Tuple[Tuple[Poly, ...], ...]

    def __post_init__(self):
        self.a = tuple(tuple(row) for row in self.a)
        self.b = tuple(tuple(row) for row in self.b)
        m = len(self.a)
        if m == 0 or len(self.b) == 0:
            raise ValueError("witness matrices must be nonempty")
        n = len(self.a[0])
        if any(len(row) != n for row in self.a):
            raise ValueError("ragged matrix A")
        if len(self.b) != n or any(len(row) != m for row in self.b):
            raise ValueError(
                f"shape mismatch: A is {m}x{n}, B must be {n}x{m}"
            )
        if not m > n:
            raise ValueError("rank-property failure needs m > n")
        self.m = m
        self.n = n


def verify_rank_witness(rs: RewriteSystem, witness: RankWitness) -> bool:
    """True iff every entry of A*B - I_m rewrites to zero."""
    alg = rs.algebra
    one = alg.one()
    for i in range(witness.m):
        for j in range(witness.m):
            entry = alg.zero()
            for k in range(witness.n):
                entry = entry + witness.a[i][k] * witness.b[k][j]
            if i == j:
                entry = entry + one
            if not rs.normal_form(entry).is_zero():
                return False
    return True


def fact51_witness(x: Poly, y: Poly, p: Poly, q: Poly) -> RankWitness:
    """The 2x1 / 1x2 witness (x, p(1+yx))^T, (y, (1+yx)q) over Z/2."""
    alg = x.algebra
    one = alg.one()
    col = ((x,), (p * (one + y * x),))
    row = ((y, (one + y * x) * q),)
    return RankWitness(col, row)
