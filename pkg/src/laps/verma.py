"""Highest weight modules over the matrix realizations and the simplicity
criterion for their induced characters.

The module M(lam) is spanned by ordered monomials in the negative root
vectors applied to a highest weight vector. Generators act by commuting
through the monomial with structure constants read off the matrices, so
the singular-vector search is an independent check on the criterion.

Criterion variants: "delta-only" tests witnesses over the simple roots
only, "all-positive" over every positive root. The two genuinely differ
(sl3 at pairings (-1/2, -1/2) is the documented disagreement point).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from . import linalg
from .errors import ResourceLimitError
from .lie import MatrixLieAlgebra, bracket, is_zero_matrix, mat_scale, realize
from .roots import (Coords, Entry, Generic, Root, RootSystem, Weight,
                    build_root_system, half_sum_positive_roots, pair_with_coroot,
                    weight_of_root)

DELTA_ONLY = "delta-only"
ALL_POSITIVE = "all-positive"
VARIANTS = (DELTA_ONLY, ALL_POSITIVE)

ORACLE_CAP = 12
_ORACLE_DEFAULT_SCAN = 6


def _entry(x) -> Entry:
    return x if isinstance(x, Generic) else Fraction(x)


def _is_positive_integer(x) -> bool:
    return isinstance(x, Fraction) and x.denominator == 1 and x > 0


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of one criterion run: witnesses (beta, n) with n a positive
    integer pairing of lam + delta against the coroot of beta."""

    variant: str
    witnesses: Tuple[Tuple[Root, int], ...]

    @property
    def simple(self) -> bool:
        return not self.witnesses

    @property
    def verdict(self) -> str:
        return "simple" if self.simple else "not simple"


def bgg_criterion(rs: RootSystem, lam: Weight, variant: str = ALL_POSITIVE) -> CriterionReport:
    """Simplicity test for the highest weight module at lam.

    A witness is a candidate root beta with (lam + delta)(H_beta) a strictly
    positive integer; the module is simple exactly when the all-positive
    variant finds none.
    """
    if variant not in VARIANTS:
        raise ValueError("unknown criterion variant %r" % (variant,))
    if len(lam.pairings) != rs.rank:
        raise ValueError("weight arity %d does not match rank %d"
                         % (len(lam.pairings), rs.rank))
    delta = half_sum_positive_roots(rs)
    shifted = lam + delta
    candidates = rs.simple_roots if variant == DELTA_ONLY else rs.positive_roots
    witnesses = []
    for beta in candidates:
        value = pair_with_coroot(rs, shifted, beta)
        if _is_positive_integer(value):
            witnesses.append((beta, int(value)))
    return CriterionReport(variant, tuple(witnesses))


def character_weight(rs: RootSystem, exponents) -> Weight:
    """Highest weight attached to torus exponents (c_1, ..., c_{rank+1}).

    Type A diagonal-torus convention with the duality sign included:
    lam(H_{alpha_i}) = -(c_i - c_{i+1}). Other types have no exponent
    convention here and are rejected.
    """
    if rs.type_label != "A":
        raise ValueError("character exponents are defined for type A only")
    exps = tuple(_entry(x) for x in exponents)
    if len(exps) != rs.rank + 1:
        raise ValueError("expected %d exponents for A%d, got %d"
                         % (rs.rank + 1, rs.rank, len(exps)))
    return Weight(tuple(-(exps[i] - exps[i + 1]) for i in range(rs.rank)))


_GL2 = build_root_system("A", 1)


def gl2_character_criterion(c1, c2, variant: str = ALL_POSITIVE) -> CriterionReport:
    """Criterion for a GL2 character with exponents (c1, c2).

    Routed through the root-system criterion at lam(H) = -(c1 - c2); the
    module is simple exactly when -(c1 - c2) is not a nonnegative integer.
    """
    lam = character_weight(_GL2, (c1, c2))
    return bgg_criterion(_GL2, lam, variant)


@dataclass(frozen=True)
class CharacterSpec:
    """A character of the restricted-scalars torus: one exponent tuple per
    embedding label."""

    embeddings: Tuple[str, ...]
    exponents: Tuple[Tuple[Entry, ...], ...]

    def __post_init__(self):
        if not self.embeddings:
            raise ValueError("need at least one embedding")
        if len(set(self.embeddings)) != len(self.embeddings):
            raise ValueError("embedding labels must be distinct")
        if len(self.exponents) != len(self.embeddings):
            raise ValueError("one exponent tuple per embedding required")
        arities = {len(t) for t in self.exponents}
        if len(arities) > 1:
            raise ValueError("exponent tuples have mixed arities %s" % sorted(arities))


def character_spec(labels, exponents) -> CharacterSpec:
    """Validated CharacterSpec with entries normalized to Fractions or tags."""
    return CharacterSpec(tuple(labels),
                         tuple(tuple(_entry(x) for x in t) for t in exponents))


@dataclass(frozen=True)
class RestrictionReport:
    """Per-embedding criterion outcomes and the combined verdict."""

    per_embedding: Tuple[Tuple[str, CriterionReport], ...]
    irreducible: bool


def restriction_of_scalars_check(rs: RootSystem, spec: CharacterSpec,
                                 variant: str = ALL_POSITIVE) -> RestrictionReport:
    """Run the criterion for every embedding; irreducible iff all are simple."""
    per = []
    for label, exps in zip(spec.embeddings, spec.exponents):
        lam = character_weight(rs, exps)
        per.append((label, bgg_criterion(rs, lam, variant)))
    return RestrictionReport(tuple(per), all(rep.simple for _, rep in per))


class PBWVector:
    """Sparse vector in the monomial basis: exponent tuple -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Coords, Fraction]):
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        return isinstance(other, PBWVector) and self.terms == other.terms

    def __repr__(self):
        return "PBWVector(%r)" % (self.terms,)

    def scaled(self, c) -> "PBWVector":
        c = Fraction(c)
        return PBWVector({m: c * v for m, v in self.terms.items()})

    def __add__(self, other: "PBWVector") -> "PBWVector":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return PBWVector(out)


class VermaModule:
    """M(lam) over the realized algebra, with the fixed monomial order.

    lam must be purely rational; generic tags belong to the criterion layer.
    """

    def __init__(self, algebra: MatrixLieAlgebra, lam: Weight):
        rs = algebra.root_system
        if len(lam.pairings) != rs.rank:
            raise ValueError("weight arity %d does not match rank %d"
                             % (len(lam.pairings), rs.rank))
        if not lam.is_rational():
            raise ValueError("module weights must be rational; "
                             "generic tags are criterion-only")
        self.algebra = algebra
        self.lam = lam
        self.pbw_order: Tuple[Root, ...] = rs.positive_roots
        self._rs = rs
        self._index = {beta: k for k, beta in enumerate(self.pbw_order)}
        self._root_pairings = [weight_of_root(rs, beta).pairings
                               for beta in self.pbw_order]
        self._build_tables()
        self._memo: Dict[tuple, Dict[Coords, Fraction]] = {}

    def highest_weight_vector(self) -> PBWVector:
        return PBWVector({(0,) * len(self.pbw_order): Fraction(1)})

    def _build_tables(self):
        rs, alg = self._rs, self.algebra
        y = [alg.root_vectors[-beta] for beta in self.pbw_order]
        n = len(y)
        self._ff: Dict[Tuple[int, int], Tuple[int, Fraction]] = {}
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                total = Root(tuple(x + z for x, z in zip(self.pbw_order[a].coords,
                                                         self.pbw_order[b].coords)))
                br = bracket(y[a], y[b])
                if rs.is_root(total):
                    c = _proportion(br, y[self._index[total]])
                    self._ff[(a, b)] = (self._index[total], c)
                elif not is_zero_matrix(br):
                    raise ValueError("inconsistent structure constants at %s, %s"
                                     % (self.pbw_order[a], self.pbw_order[b]))
        self._ef: Dict[Tuple[int, int], tuple] = {}
        for i in range(rs.rank):
            alpha = rs.simple_root(i + 1)
            for b in range(n):
                br = bracket(alg.e[i], y[b])
                beta = self.pbw_order[b]
                if beta == alpha:
                    if br != alg.h[i]:
                        raise ValueError("generator pair (e%d, f%d) is not a triple"
                                         % (i + 1, i + 1))
                    self._ef[(i, b)] = ("h", i)
                    continue
                lower = Root(tuple(x - z for x, z in zip(beta.coords, alpha.coords)))
                if lower.sign > 0 and rs.is_root(lower):
                    c = _proportion(br, y[self._index[lower]])
                    self._ef[(i, b)] = ("f", self._index[lower], c)
                elif not is_zero_matrix(br):
                    raise ValueError("inconsistent structure constants at e%d, %s"
                                     % (i + 1, beta))

    def monomial_weight(self, mono: Coords) -> Weight:
        acc = list(self.lam.pairings)
        for k, mult in enumerate(mono):
            if mult:
                for i, p in enumerate(self._root_pairings[k]):
                    acc[i] -= mult * p
        return Weight(tuple(acc))

    def _h_scalar(self, i: int, mono: Coords) -> Fraction:
        value = self.lam.pairings[i]
        for k, mult in enumerate(mono):
            if mult:
                value -= mult * self._root_pairings[k][i]
        return value

    def _act_key(self, key: tuple, mono: Coords) -> Dict[Coords, Fraction]:
        cached = self._memo.get((key, mono))
        if cached is not None:
            return cached
        kind = key[0]
        if kind == "h":
            out = {mono: self._h_scalar(key[1], mono)}
            self._memo[(key, mono)] = out
            return out
        j0 = next((k for k, mult in enumerate(mono) if mult), None)
        if kind == "f":
            k = key[1]
            if j0 is None or k <= j0:
                out = {mono[:k] + (mono[k] + 1,) + mono[k + 1:]: Fraction(1)}
                self._memo[(key, mono)] = out
                return out
            rest = mono[:j0] + (mono[j0] - 1,) + mono[j0 + 1:]
            out = self._mul_key(("f", j0), self._act_key(key, rest))
            hit = self._ff.get((k, j0))
            if hit is not None:
                idx, c = hit
                _merge(out, self._act_key(("f", idx), rest), c)
        elif kind == "e":
            if j0 is None:
                out = {}
            else:
                rest = mono[:j0] + (mono[j0] - 1,) + mono[j0 + 1:]
                out = self._mul_key(("f", j0), self._act_key(key, rest))
                hit = self._ef.get((key[1], j0))
                if hit is not None:
                    if hit[0] == "h":
                        _merge(out, self._act_key(("h", hit[1]), rest), Fraction(1))
                    else:
                        _merge(out, self._act_key(("f", hit[1]), rest), hit[2])
        else:
            raise ValueError("unknown action key %r" % (key,))
        out = {m: c for m, c in out.items() if c != 0}
        self._memo[(key, mono)] = out
        return out

    def _mul_key(self, key: tuple, vec: Dict[Coords, Fraction]) -> Dict[Coords, Fraction]:
        out: Dict[Coords, Fraction] = {}
        for mono, c in vec.items():
            _merge(out, self._act_key(key, mono), c)
        return {m: v for m, v in out.items() if v != 0}


def _merge(acc: Dict[Coords, Fraction], inc: Dict[Coords, Fraction], scale: Fraction):
    for m, c in inc.items():
        acc[m] = acc.get(m, Fraction(0)) + scale * c


def _proportion(m, base) -> Fraction:
    for r, row in enumerate(base):
        for c, x in enumerate(row):
            if x != 0:
                ratio = m[r][c] / x
                if m != mat_scale(ratio, base):
                    raise ValueError("matrices are not proportional")
                return ratio
    raise ValueError("zero base matrix")


_GEN_RE = re.compile(r"([efh])([1-9]\d*)")


def act_generator(module: VermaModule, gen: str, vec: PBWVector) -> PBWVector:
    """Apply a Chevalley generator ("e1", "f2", "h1", ...) to a homogeneous vector."""
    m = _GEN_RE.fullmatch(gen)
    if m is None:
        raise ValueError("generator must look like e1/f2/h3, got %r" % (gen,))
    kind, i = m.group(1), int(m.group(2))
    rank = module._rs.rank
    if i > rank:
        raise ValueError("generator index %d out of range 1..%d" % (i, rank))
    weights = {module.monomial_weight(mono).pairings for mono in vec.terms}
    if len(weights) > 1:
        raise ValueError("vector is not weight homogeneous")
    if kind == "f":
        key = ("f", module._index[module._rs.simple_root(i)])
    else:
        key = (kind, i - 1)
    return PBWVector(module._mul_key(key, vec.terms))


def weight_space_basis(module: VermaModule, mu: Weight) -> Tuple[Coords, ...]:
    """All monomial exponents of weight mu, in ascending lexicographic order."""
    if not mu.is_rational():
        raise ValueError("weight space lookup needs a rational weight")
    diff = module.lam - mu
    cartan = [[Fraction(x) for x in row] for row in module._rs.cartan_matrix]
    try:
        coords = linalg.solve_unique(cartan, list(diff.pairings))
    except ValueError:
        return ()
    if any(x.denominator != 1 or x < 0 for x in coords):
        return ()
    target = [int(x) for x in coords]

    order = module.pbw_order
    found = []

    def descend(k, remaining, prefix):
        if k == len(order):
            if all(x == 0 for x in remaining):
                found.append(tuple(prefix))
            return
        beta = order[k].coords
        cap = min((rem // c for rem, c in zip(remaining, beta) if c > 0),
                  default=0)
        for mult in range(cap + 1):
            descend(k + 1,
                    [rem - mult * c for rem, c in zip(remaining, beta)],
                    prefix + [mult])

    descend(0, target, [])
    return tuple(sorted(found))


def singular_vectors(module: VermaModule, mu: Weight) -> Tuple[PBWVector, ...]:
    """Basis of the space of vectors of weight mu killed by every e_i."""
    basis = weight_space_basis(module, mu)
    if not basis:
        return ()
    rank = module._rs.rank
    rows = []
    for i in range(rank):
        alpha_wt = weight_of_root(module._rs, module._rs.simple_root(i + 1))
        target = weight_space_basis(module, mu + alpha_wt)
        images = [module._act_key(("e", i), mono) for mono in basis]
        for mono in target:
            rows.append([img.get(mono, Fraction(0)) for img in images])
    kernel = linalg.kernel_basis(rows, len(basis))
    out = []
    for vec in kernel:
        out.append(PBWVector({mono: c for mono, c in zip(basis, vec)}))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class OracleReport:
    """Outcome of the singular-vector scan up to the degree bound."""

    bound: int
    witnesses: Tuple[Tuple[Coords, Tuple[PBWVector, ...]], ...]

    @property
    def reducible(self) -> bool:
        return bool(self.witnesses)


def simplicity_oracle(module: VermaModule, degree_bound: int = None,
                      cap: int = ORACLE_CAP) -> OracleReport:
    """Scan the weights lam - sum n_beta beta with sum n_beta <= bound for
    singular vectors.

    Without an explicit bound, the criterion's witnesses fix it as
    max n * height(beta) (enough to reach every predicted singular weight);
    a weight the criterion calls simple gets a small confirmation scan.
    """
    if degree_bound is None:
        crit = bgg_criterion(module._rs, module.lam, ALL_POSITIVE)
        if crit.witnesses:
            degree_bound = max(n * beta.height for beta, n in crit.witnesses)
        else:
            degree_bound = _ORACLE_DEFAULT_SCAN
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    if degree_bound > cap:
        raise ResourceLimitError("oracle bound %d exceeds the safety cap %d"
                                 % (degree_bound, cap))

    rank = module._rs.rank
    order = module.pbw_order
    seen = set()

    def collect(k, budget, acc):
        if k == len(order):
            if any(acc):
                seen.add(tuple(acc))
            return
        beta = order[k].coords
        for mult in range(budget + 1):
            collect(k + 1, budget - mult,
                    [a + mult * c for a, c in zip(acc, beta)])

    collect(0, degree_bound, [0] * rank)

    witnesses = []
    for nu in sorted(seen, key=lambda c: (sum(c), c)):
        nu_wt = Weight(tuple(Fraction(sum(module._rs.cartan_matrix[i][j] * nu[j]
                                          for j in range(rank)))
                             for i in range(rank)))
        vecs = singular_vectors(module, module.lam - nu_wt)
        if vecs:
            witnesses.append((nu, vecs))
    return OracleReport(degree_bound, tuple(witnesses))


def verma_module(type_label: str, rank: int, lam_values) -> VermaModule:
    """Convenience constructor: realize the type and induce from the weight."""
    rs = build_root_system(type_label, rank)
    lam = Weight(tuple(_entry(x) for x in lam_values))
    return VermaModule(realize(rs), lam)
