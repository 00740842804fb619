"""The W-class Kronecker states: one-step recurrence for the unnormalized
coefficients, the normalization eta, maximal-mixedness verification, and the
JSON table format behind the published coefficient tables.

Coefficients live on tuples of path sequences (one per party); a key that is
absent means exact zero.  The recurrence assigns nonzero formal values to
sectors outside the W-class admissible set, whose physical amplitude is zero;
those are zeroed at every recursion depth before propagating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import RadicalSum, SqrtRational
from .partitions import PartitionTuple, TwoRowPartition, dim_irrep, w_admissible
from .schur import standard_paths

QTuple = tuple[tuple[int, ...], ...]


@dataclass
class KroneckerVector:
    lams: PartitionTuple
    coeffs: dict[QTuple, SqrtRational]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def norm_sq(self) -> Fraction:
        return sum((v.square() for v in self.coeffs.values()), Fraction(0))

    def squared_magnitudes(self) -> list[Fraction]:
        """Multiset (sorted list) of squared coefficient values."""
        return sorted(v.square() for v in self.coeffs.values())

    def float_dict(self) -> dict[QTuple, float]:
        return {k: float(v) for k, v in self.coeffs.items()}


def f_coeff(lams: PartitionTuple, qn: tuple[int, ...], n: int) -> SqrtRational:
    """One-step recurrence factor for extending every party's path by qn.

    lams is the partition tuple at level n (after adding the boxes); the
    factor vanishes whenever the denominator does.
    """
    if lams.n != n:
        raise ValueError(f"{lams} is not a tuple of partitions of {n}")
    if len(qn) != lams.num_parties:
        raise ValueError("one bit per party required")
    num = n
    den_rad = Fraction(1)
    for lam, q in zip(lams, qn):
        if q:
            if lam.lambda2 < 1:
                raise ValueError(f"cannot remove a second-row box from {lam}")
            num -= lam.lambda1 + 1
        else:
            if lam.lambda1 - 1 < lam.lambda2:
                raise ValueError(f"cannot remove a first-row box from {lam}")
            num -= lam.lambda2
        den_rad *= lam.nu + 2 * q
    if den_rad == 0 or num == 0:
        return SqrtRational.zero()
    return SqrtRational(1 if num > 0 else -1, Fraction(num * num) / den_rad)


def _grow(lam: TwoRowPartition, q: int) -> TwoRowPartition | None:
    if q == 0:
        return TwoRowPartition(lam.lambda1 + 1, lam.lambda2)
    if lam.lambda2 + 1 <= lam.lambda1:
        return TwoRowPartition(lam.lambda1, lam.lambda2 + 1)
    return None


@lru_cache(maxsize=None)
def khat_all(num_parties: int, n: int) -> dict[PartitionTuple, "KroneckerVector"]:
    """Unnormalized Kronecker coefficients for every admissible sector,
    built by the recurrence from the single-copy base value 1.

    The returned dict and its vectors are cached; treat them as read-only.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    base_lams = PartitionTuple((TwoRowPartition(1, 0),) * num_parties)
    level: dict[QTuple, SqrtRational] = {((0,),) * num_parties: SqrtRational.one()}
    terminals: dict[QTuple, PartitionTuple] = {((0,),) * num_parties: base_lams}
    for k in range(2, n + 1):
        nxt: dict[QTuple, SqrtRational] = {}
        nxt_term: dict[QTuple, PartitionTuple] = {}
        grown_cache: dict[tuple[PartitionTuple, tuple[int, ...]], PartitionTuple | None] = {}
        f_cache: dict[tuple[PartitionTuple, tuple[int, ...]], SqrtRational] = {}
        for qt, val in level.items():
            lams_p = terminals[qt]
            for bits in range(2**num_parties):
                qn = tuple((bits >> i) & 1 for i in range(num_parties))
                key = (lams_p, qn)
                if key not in grown_cache:
                    parts = []
                    for lam, q in zip(lams_p, qn):
                        g = _grow(lam, q)
                        if g is None:
                            parts = None
                            break
                        parts.append(g)
                    if parts is None:
                        grown_cache[key] = None
                    else:
                        lams = PartitionTuple(tuple(parts))
                        # inadmissible intermediate sectors are zeroed here
                        grown_cache[key] = lams if w_admissible(lams) else None
                        if grown_cache[key] is not None:
                            f_cache[key] = f_coeff(lams, qn, k)
                lams = grown_cache[key]
                if lams is None:
                    continue
                f = f_cache[key]
                if f.is_zero:
                    continue
                new_qt = tuple(qp + (b,) for qp, b in zip(qt, qn))
                nxt[new_qt] = val * f
                nxt_term[new_qt] = lams
        level, terminals = nxt, nxt_term
    out: dict[PartitionTuple, KroneckerVector] = {}
    for qt, val in level.items():
        lams = terminals[qt]
        out.setdefault(lams, KroneckerVector(lams, {})).coeffs[qt] = val
    return out


def khat(num_parties: int, n: int, lams: PartitionTuple) -> KroneckerVector:
    """Unnormalized Kronecker vector for one sector; empty when the sector is
    inadmissible or its support vanishes.

    Cost grows with the total coefficient count over all admissible sectors
    (bounded by the products of sector dimensions), so this is a desk-scale
    routine: n around 12 is the practical ceiling.
    """
    if lams.num_parties != num_parties or lams.n != n:
        raise ValueError("partition tuple inconsistent with (N, n)")
    got = khat_all(num_parties, n).get(lams)
    if got is None:
        return KroneckerVector(lams, {})
    return KroneckerVector(lams, dict(got.coeffs))


def eta(k: KroneckerVector) -> SqrtRational:
    """Norm of the unnormalized vector; the radicand is exact."""
    return SqrtRational.sqrt(k.norm_sq())


def normalized(k: KroneckerVector) -> KroneckerVector:
    e = eta(k)
    if e.is_zero:
        raise ValueError("cannot normalize the zero vector")
    return KroneckerVector(k.lams, {qt: v / e for qt, v in k.coeffs.items()})


def reduced_density(k: KroneckerVector, party: int) -> list[list[Fraction]]:
    """Exact single-party reduced density matrix over the party's paths.

    Entries are sums of coefficient products; within a sector all products
    share one radical class, so the result is rational.
    """
    paths = standard_paths(k.lams[party])
    index = {q: i for i, q in enumerate(paths)}
    d = len(paths)
    acc = [[RadicalSum.zero() for _ in range(d)] for _ in range(d)]
    by_rest: dict[tuple, list[tuple[int, SqrtRational]]] = {}
    for qt, v in k.coeffs.items():
        rest = qt[:party] + qt[party + 1:]
        by_rest.setdefault(rest, []).append((index[qt[party]], v))
    for entries in by_rest.values():
        for i, vi in entries:
            for j, vj in entries:
                acc[i][j] = acc[i][j] + RadicalSum.from_sqrt(vi * vj)
    out = []
    for row in acc:
        vals = [x.as_rational() for x in row]
        if any(v is None for v in vals):
            raise ValueError("reduced density entry is not rational")
        out.append(vals)
    return out


def verify_lemma1(k: KroneckerVector, party: int) -> float:
    """Max deviation of the party's reduced density matrix from I/dim.

    Exact (rational) evaluation; 0.0 means exact maximal mixedness.
    """
    rho = reduced_density(k, party)
    d = len(rho)
    dev = Fraction(0)
    for i in range(d):
        for j in range(d):
            target = Fraction(1, d) if i == j else Fraction(0)
            dev = max(dev, abs(rho[i][j] - target))
    return float(dev)


def verify_lemma1_float(k: KroneckerVector, party: int) -> float:
    """Float-path variant of verify_lemma1 for sectors too large to keep exact."""
    paths = standard_paths(k.lams[party])
    index = {q: i for i, q in enumerate(paths)}
    d = len(paths)
    rho = np.zeros((d, d))
    by_rest: dict[tuple, list[tuple[int, float]]] = {}
    for qt, v in k.coeffs.items():
        rest = qt[:party] + qt[party + 1:]
        by_rest.setdefault(rest, []).append((index[qt[party]], float(v)))
    for entries in by_rest.values():
        for i, vi in entries:
            for j, vj in entries:
                rho[i, j] += vi * vj
    return float(np.abs(rho - np.eye(d) / d).max())


# -- JSON table format --------------------------------------------------------
#
# {"N":..., "n":..., "lambdas":[[l1,l2],...],
#  "labels": {"1": ["0...", ...], ...},      path strings, lexicographic order
#  "entries":[{"q":[i1,...,iN], "sign":+-1, "num":..., "den":...}, ...]}
# where i_k is the 1-based ordinal of the path in the party's label list and
# the value is sign*sqrt(num/den).


def to_table_json(k: KroneckerVector) -> dict:
    lams = k.lams
    labels = {}
    ordinals = []
    for i, lam in enumerate(lams):
        paths = standard_paths(lam)
        labels[str(i + 1)] = ["".join(map(str, q)) for q in paths]
        ordinals.append({q: j + 1 for j, q in enumerate(paths)})
    entries = []
    for qt in sorted(k.coeffs, key=lambda t: tuple(ordinals[i][q] for i, q in enumerate(t))):
        v = k.coeffs[qt]
        entries.append(
            {
                "q": [ordinals[i][q] for i, q in enumerate(qt)],
                "sign": v.sign,
                "num": v.radicand.numerator,
                "den": v.radicand.denominator,
            }
        )
    return {
        "N": lams.num_parties,
        "n": lams.n,
        "lambdas": [[lam.lambda1, lam.lambda2] for lam in lams],
        "labels": labels,
        "entries": entries,
    }


def from_table_json(d: dict) -> KroneckerVector:
    from .partitions import ptuple

    lams = ptuple(*[tuple(x) for x in d["lambdas"]])
    paths = []
    for i in range(lams.num_parties):
        paths.append([tuple(int(b) for b in s) for s in d["labels"][str(i + 1)]])
    coeffs = {}
    for e in d["entries"]:
        qt = tuple(paths[i][ordinal - 1] for i, ordinal in enumerate(e["q"]))
        coeffs[qt] = SqrtRational(int(e["sign"]), Fraction(int(e["num"]), int(e["den"])))
    return KroneckerVector(lams, coeffs)


def sector_dims(lams: PartitionTuple) -> list[int]:
    return [dim_irrep(lam) for lam in lams]
