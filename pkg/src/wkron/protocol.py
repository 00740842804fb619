"""Dense brute-force oracle and protocol simulator.

Builds the n-fold tensor power of a state explicitly, applies the multilocal
Schur transform party by party, projects sectors, extracts the residual
Schmidt structure, and samples measurement outcomes.  In exact mode every
amplitude is a SqrtRational and sector entries are accumulated in the internal
radical-sum ring, so the recurrence can be checked against the oracle with
zero tolerance.

Bit layout (part of the contract): amplitude index is an (N*n)-bit integer,
party-major, with party i's copy-k qubit at bit position i*n + k counted from
the most significant bit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import ghz as ghzmod
from . import probw
from .exact import RadicalSum, SqrtRational
from .kronstate import KroneckerVector, khat, normalized
from .partitions import PartitionTuple, list_partitions, w_admissible
from .schur import SchurBlock, _b_table
from .wstates import WClassState, phi_hat, w_normal_form

EXACT_CAP = 18
FLOAT_CAP = 24

WeightTuple = tuple[int, ...]
QTuple = tuple[tuple[int, ...], ...]


class SizeCapError(ValueError):
    """Requested dense computation exceeds the documented size caps."""


class InconsistencyError(RuntimeError):
    """The dense oracle contradicts a structural claim (e.g. sector rank 1)."""


@dataclass(frozen=True)
class GHZState:
    """sqrt(1-alpha)|0..0> + sqrt(alpha)|1..1> on num_parties qubits."""

    alpha: Fraction
    num_parties: int = 3

    def __post_init__(self):
        a = Fraction(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not (0 < a < 1):
            raise ValueError("alpha must lie strictly between 0 and 1")


def _single_copy_amplitudes(state) -> dict[tuple[int, ...], SqrtRational]:
    """Exact amplitudes of one copy, keyed by the N-bit pattern tuple."""
    if isinstance(state, (list, tuple)):
        dim = len(state)
        N = dim.bit_length() - 1
        if 2**N != dim:
            raise ValueError("raw amplitude list length must be a power of two")
        out = {}
        for idx, a in enumerate(state):
            a = a if isinstance(a, SqrtRational) else SqrtRational.from_rational(a)
            if not a.is_zero:
                out[tuple((idx >> (N - 1 - j)) & 1 for j in range(N))] = a
        return out
    if isinstance(state, WClassState):
        N = state.num_parties
        out = {}
        if state.c[0]:
            out[(0,) * N] = SqrtRational.sqrt(state.c[0])
        for i in range(1, N + 1):
            if state.c[i]:
                bits = tuple(1 if j == i - 1 else 0 for j in range(N))
                out[bits] = SqrtRational.sqrt(state.c[i])
        return out
    if isinstance(state, GHZState):
        N = state.num_parties
        return {
            (0,) * N: SqrtRational.sqrt(1 - state.alpha),
            (1,) * N: SqrtRational.sqrt(state.alpha),
        }
    raise TypeError(f"unsupported state spec {state!r}")


def _num_parties(state) -> int:
    if isinstance(state, (WClassState, GHZState)):
        return state.num_parties
    if isinstance(state, (list, tuple)):
        return len(state).bit_length() - 1
    raise TypeError(f"unsupported state spec {state!r}")


@dataclass
class DenseState:
    """Explicit amplitudes of psi^(x)n over {0,1}^(N*n).

    Exact mode stores a sparse dict {index: SqrtRational}; float mode a dense
    numpy vector of length 2^(N*n).
    """

    num_parties: int
    copies: int
    mode: str
    amplitudes: dict[int, SqrtRational] | np.ndarray

    @property
    def num_qubits(self) -> int:
        return self.num_parties * self.copies

    def index_of(self, stuple: tuple[tuple[int, ...], ...]) -> int:
        idx = 0
        for s in stuple:
            for b in s:
                idx = (idx << 1) | b
        return idx

    def stuple_of(self, idx: int) -> tuple[tuple[int, ...], ...]:
        n, N = self.copies, self.num_parties
        bits = [(idx >> (N * n - 1 - p)) & 1 for p in range(N * n)]
        return tuple(tuple(bits[i * n : (i + 1) * n]) for i in range(N))

    def norm_sq(self):
        if self.mode == "exact":
            return sum((v.square() for v in self.amplitudes.values()), Fraction(0))
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def to_float_vector(self) -> np.ndarray:
        if self.mode == "float":
            return self.amplitudes
        v = np.zeros(2**self.num_qubits)
        for idx, a in self.amplitudes.items():
            v[idx] = float(a)
        return v


def tensor_power(state, n: int, mode: str | None = None) -> DenseState:
    """Explicit amplitudes of state^(x)n; raw amplitude lists are accepted in
    place of a state object (length 2^N, exact scalars or floats)."""
    if isinstance(state, (list, tuple, np.ndarray)):
        return _tensor_power_raw(state, n, mode)
    N = _num_parties(state)
    nq = N * n
    if mode is None:
        mode = "exact" if nq <= EXACT_CAP else "float"
    if nq > (EXACT_CAP if mode == "exact" else FLOAT_CAP):
        raise SizeCapError(f"{nq} qubits exceeds the {mode}-mode cap")
    single = _single_copy_amplitudes(state)
    amps = _tensor_exact(single, N, n)
    out = DenseState(N, n, mode, {})
    if mode == "exact":
        out.amplitudes = {out.index_of(k): v for k, v in amps.items()}
    else:
        v = np.zeros(2**nq)
        for k, a in amps.items():
            v[out.index_of(k)] = float(a)
        out.amplitudes = v
    return out


def _tensor_exact(single, num_parties: int, n: int):
    """n-fold product of the single-copy amplitudes, keyed by per-party bit
    tuples with copies appended left to right."""
    amps: dict[tuple[tuple[int, ...], ...], SqrtRational] = {
        ((),) * num_parties: SqrtRational.one()
    }
    for _ in range(n):
        nxt = {}
        for key, val in amps.items():
            for pattern, a in single.items():
                nxt[tuple(key[i] + (pattern[i],) for i in range(num_parties))] = val * a
        amps = nxt
    return amps


def _tensor_power_raw(amp_list, n: int, mode: str | None) -> DenseState:
    dim = len(amp_list)
    N = dim.bit_length() - 1
    if 2**N != dim:
        raise ValueError("raw amplitude list length must be a power of two")
    nq = N * n
    exact = all(isinstance(a, (SqrtRational, Fraction, int)) for a in amp_list)
    if mode is None:
        mode = "exact" if exact and nq <= EXACT_CAP else "float"
    if nq > (EXACT_CAP if mode == "exact" else FLOAT_CAP):
        raise SizeCapError(f"{nq} qubits exceeds the {mode}-mode cap")
    if mode == "exact":
        if not exact:
            raise ValueError("exact mode requires exact amplitudes")
        state = DenseState(N, n, "exact", {})
        amps = _tensor_exact(_single_copy_amplitudes(tuple(amp_list)), N, n)
        state.amplitudes = {state.index_of(k): v for k, v in amps.items()}
        return state
    vec = np.array([float(a) for a in amp_list])
    out = vec
    for _ in range(n - 1):
        out = np.kron(out, vec)
    # kron over copies is copy-major; reorder to the party-major contract
    t = out.reshape((2,) * (N * n))
    perm = [k * N + i for i in range(N) for k in range(n)]
    t = np.transpose(t, perm)
    return DenseState(N, n, "float", t.reshape(-1))


@dataclass
class SectorBlock:
    """Sector content as a matrix over (weight-tuple rows) x (q-tuple columns)."""

    lams: PartitionTuple
    weights: list[WeightTuple]
    qlabels: list[QTuple]
    entries: list[list[RadicalSum]] | np.ndarray
    mode: str

    def norm_sq(self):
        if self.mode == "exact":
            total = RadicalSum.zero()
            for row in self.entries:
                for x in row:
                    total = total + x * x
            q = total.as_rational()
            if q is None:
                raise InconsistencyError("sector norm is not rational")
            return q
        return float(np.sum(self.entries**2))

    def float_matrix(self) -> np.ndarray:
        if self.mode == "float":
            return self.entries
        return np.array([[float(x) for x in row] for row in self.entries])


@lru_cache(maxsize=None)
def _party_columns(n: int):
    """Per computational string s: list of ((lam, omega, q), coeff) rows."""
    cols: dict[tuple[int, ...], list] = {}
    for (lam, om, q), col in _b_table(n).items():
        for s, v in col.items():
            cols.setdefault(s, []).append(((lam, om, q), v))
    return cols


def multilocal_schur(state: DenseState) -> dict[PartitionTuple, SectorBlock]:
    if state.mode == "float":
        return _multilocal_schur_float(state)
    n, N = state.copies, state.num_parties
    cols = _party_columns(n)
    # keys: per-party entries are raw bit tuples, replaced party by party with labels
    current: dict[tuple, RadicalSum] = {
        state.stuple_of(idx): RadicalSum.from_sqrt(a)
        for idx, a in state.amplitudes.items()
    }
    for i in range(N):
        nxt: dict[tuple, RadicalSum] = {}
        for key, val in current.items():
            for label, coeff in cols.get(key[i], ()):
                nk = key[:i] + (label,) + key[i + 1 :]
                acc = nxt.get(nk)
                term = val * RadicalSum.from_sqrt(coeff)
                nxt[nk] = term if acc is None else acc + term
        current = {k: v for k, v in nxt.items() if not v.is_zero}
    sectors: dict[PartitionTuple, dict[tuple[WeightTuple, QTuple], RadicalSum]] = {}
    for key, val in current.items():
        lams = PartitionTuple(tuple(lbl[0] for lbl in key))
        om = tuple(lbl[1] for lbl in key)
        qt = tuple(lbl[2] for lbl in key)
        sectors.setdefault(lams, {})[(om, qt)] = val
    out = {}
    for lams, data in sectors.items():
        weights, qlabels = sector_grid(lams)
        entries = [
            [data.get((om, qt), RadicalSum.zero()) for qt in qlabels]
            for om in weights
        ]
        out[lams] = SectorBlock(lams, weights, qlabels, entries, "exact")
    return out


def sector_grid(lams: PartitionTuple) -> tuple[list[WeightTuple], list[QTuple]]:
    """Canonical row/column enumeration of a sector block: the full weight box
    and the full product of lexicographic path lists, both row-major."""
    from itertools import product

    from .schur import standard_paths

    weights = [
        tuple(om)
        for om in product(*(range(lam.lambda2, lam.lambda1 + 1) for lam in lams))
    ]
    qlabels = [tuple(qs) for qs in product(*(standard_paths(lam) for lam in lams))]
    return weights, qlabels


def _multilocal_schur_float(state: DenseState) -> dict[PartitionTuple, SectorBlock]:
    n, N = state.copies, state.num_parties
    lams_list = list_partitions(n)
    blocks = [SchurBlock(lam, n) for lam in lams_list]
    u = np.vstack([b.float_matrix() for b in blocks])
    starts = np.cumsum([0] + [len(b.rows) for b in blocks])
    t = state.to_float_vector().reshape((2**n,) * N)
    for i in range(N):
        t = np.tensordot(u, t, axes=([1], [i]))
        t = np.moveaxis(t, 0, i)
    out = {}
    for combo in np.ndindex(*([len(lams_list)] * N)):
        lams = PartitionTuple(tuple(lams_list[c] for c in combo))
        sub = t
        for i, c in enumerate(combo):
            sl = [slice(None)] * N
            sl[i] = slice(starts[c], starts[c + 1])
            sub = sub[tuple(sl)]
        if float(np.abs(sub).max(initial=0.0)) < 1e-14:
            continue
        dims_v = [lams_list[c].nu + 1 for c in combo]
        dims_s = [len(blocks[c].paths) for c in combo]
        sub = sub.reshape([d for c in combo for d in (lams_list[c].nu + 1, len(blocks[c].paths))])
        order = list(range(0, 2 * N, 2)) + list(range(1, 2 * N, 2))
        m = np.transpose(sub, order).reshape(int(np.prod(dims_v)), int(np.prod(dims_s)))
        weights = [
            tuple(lams[i].lambda2 + w for i, w in enumerate(combo_w))
            for combo_w in np.ndindex(*dims_v)
        ]
        qlabels = [
            tuple(blocks[combo[i]].paths[j] for i, j in enumerate(combo_q))
            for combo_q in np.ndindex(*dims_s)
        ]
        out[lams] = SectorBlock(lams, weights, qlabels, m, "float")
    return out


def residual_schmidt(block: SectorBlock) -> list[float]:
    """Singular values of the sector matrix, normalized to unit square sum."""
    m = block.float_matrix()
    sv = np.linalg.svd(m, compute_uv=False)
    total = float(np.sum(sv**2))
    if total <= 0:
        raise ValueError("zero sector block")
    return [float(s) / math.sqrt(total) for s in sv]


@lru_cache(maxsize=None)
def _w_sectors(num_parties: int, n: int):
    return multilocal_schur(tensor_power(w_normal_form(num_parties), n, mode="exact"))


def oracle_khat(lams: PartitionTuple, n: int) -> KroneckerVector:
    """Exact q-side factor of the rank-1 sector of W^(x)n, scaled so the
    weight-side factor equals phi_hat(W).  Raises InconsistencyError when the
    sector fails to factorize (which would falsify the rank-1 claim)."""
    if lams.n != n:
        raise ValueError("partition tuple size mismatch")
    sector = _w_sectors(lams.num_parties, n).get(lams)
    phi = phi_hat(w_normal_form(lams.num_parties), lams)
    if sector is None:
        if phi.coeffs and w_admissible(lams):
            raise InconsistencyError(f"sector {lams} missing but fiducial support nonempty")
        return KroneckerVector(lams, {})
    if not phi.coeffs:
        raise InconsistencyError(f"sector {lams} present but fiducial support empty")
    ref = max(phi.coeffs, key=lambda om: abs(phi.coeffs[om].signed_square()))
    ref_idx = sector.weights.index(ref)
    inv = SqrtRational.one() / phi.coeffs[ref]
    kvals = {}
    for j, qt in enumerate(sector.qlabels):
        v = (sector.entries[ref_idx][j] * RadicalSum.from_sqrt(inv)).collapse()
        if not v.is_zero:
            kvals[qt] = v
    # rank-1 check: every row must be phi_omega * khat exactly
    for i, om in enumerate(sector.weights):
        pv = phi.coeffs.get(om)
        if pv is None:
            if any(not x.is_zero for x in sector.entries[i]):
                raise InconsistencyError(f"sector {lams}: weight {om} outside fiducial support")
            continue
        for j, qt in enumerate(sector.qlabels):
            expect = (
                RadicalSum.from_sqrt(pv * kvals[qt]) if qt in kvals else RadicalSum.zero()
            )
            if sector.entries[i][j] != expect:
                raise InconsistencyError(
                    f"sector {lams} does not factorize at weight {om}, q {qt}"
                )
    return KroneckerVector(lams, kvals)


def all_partition_tuples(num_parties: int, n: int):
    from itertools import product

    for combo in product(list_partitions(n), repeat=num_parties):
        yield PartitionTuple(tuple(combo))


def sector_distribution(state, n: int) -> list[tuple[PartitionTuple, Fraction]]:
    """Exact outcome distribution over partition tuples, nonzero entries only.

    W-class and GHZ states use closed forms (no size cap); raw amplitude
    lists fall back to the exact dense oracle within its cap.
    """
    if isinstance(state, WClassState):
        out = [
            (lams, probw.p_psi(state, lams))
            for lams in all_partition_tuples(state.num_parties, n)
        ]
    elif isinstance(state, GHZState):
        out = [
            (lams, ghzmod.sector_probability(lams, state.alpha))
            for lams in all_partition_tuples(state.num_parties, n)
        ]
    elif isinstance(state, (list, tuple)):
        sectors = multilocal_schur(tensor_power(state, n, mode="exact"))
        out = [(lams, Fraction(b.norm_sq())) for lams, b in sectors.items()]
    else:
        raise TypeError("sector_distribution needs a WClassState, GHZState or amplitude list")
    out = [(lams, p) for lams, p in out if p > 0]
    total = sum(p for _, p in out)
    if total != 1:
        raise InconsistencyError(f"sector probabilities sum to {total}, not 1")
    return out


KRON_SUPPORT_CAP = 200_000


def sample_outcomes(state, n: int, seed: int, count: int) -> list[PartitionTuple]:
    """Deterministic batch sampling by inverse CDF over exact probabilities.

    The pseudorandom stream is Python's Mersenne Twister seeded with `seed`;
    each draw consumes 64 bits, u = getrandbits(64)/2^64, platform independent.
    """
    dist = sector_distribution(state, n)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        u = Fraction(rng.getrandbits(64), 2**64)
        acc = Fraction(0)
        pick = dist[-1][0]
        for lams, p in dist:
            acc += p
            if u < acc:
                pick = lams
                break
        out.append(pick)
    return out


def sample_run(state, n: int, seed: int) -> dict:
    """One protocol run: measured sector plus the concentrated-state description."""
    lams = sample_outcomes(state, n, seed, 1)[0]
    desc: dict = {"outcome": lams}
    if isinstance(state, WClassState):
        from .kronstate import sector_dims

        desc["kind"] = "w-kronecker"
        dims = sector_dims(lams)
        desc["dims"] = dims
        if math.prod(dims) <= KRON_SUPPORT_CAP:
            desc["kron"] = normalized(khat(state.num_parties, n, lams))
        else:
            desc["kron"] = None
    elif isinstance(state, GHZState):
        desc["kind"] = "ghz-residual"
        g = ghzmod.gram(lams, state.alpha, n)
        desc["gram_spectrum"] = ghzmod.schmidt_spectrum(g) if g.weights else []
    else:
        desc["kind"] = "residual-ensemble"
        block = multilocal_schur(tensor_power(state, n, mode="exact"))[lams]
        desc["schmidt"] = residual_schmidt(block)
    return desc


def marginal_entropy(state, party: int) -> float:
    """Von Neumann entropy (bits) of one party's single-copy reduced state."""
    single = _single_copy_amplitudes(state)
    N = _num_parties(state)
    if not (0 <= party < N):
        raise ValueError("party index out of range")
    rho = np.zeros((2, 2))
    items = list(single.items())
    for p1, a1 in items:
        for p2, a2 in items:
            if p1[:party] + p1[party + 1 :] == p2[:party] + p2[party + 1 :]:
                rho[p1[party], p2[party]] += float(a1 * a2)
    vals = np.linalg.eigvalsh(rho)
    return float(-sum(v * math.log2(v) for v in vals if v > 1e-15))


def verify_case(num_parties: int, n: int) -> dict:
    """Exact oracle-vs-recurrence comparison of every sector at one (N, n)."""
    from .kronstate import khat_all

    rec = khat_all(num_parties, n)
    entry = {
        "N": num_parties,
        "n": n,
        "sectors": 0,
        "mismatches": [],
        "empty_checked": 0,
    }
    for lams in all_partition_tuples(num_parties, n):
        kv = rec.get(lams)
        ov = oracle_khat(lams, n)
        if kv is None:
            entry["empty_checked"] += 1
            if ov.coeffs:
                entry["mismatches"].append(
                    {"lams": str(lams), "why": "recurrence empty, oracle nonzero"}
                )
            continue
        entry["sectors"] += 1
        if kv.coeffs != ov.coeffs:
            bad = [
                str(qt)
                for qt in set(kv.coeffs) | set(ov.coeffs)
                if kv.coeffs.get(qt) != ov.coeffs.get(qt)
            ]
            entry["mismatches"].append({"lams": str(lams), "bad_keys": bad[:5]})
    return entry


def verify_report(cases=((3, 5), (4, 4)), pool_map=map) -> dict:
    """Oracle-vs-recurrence master suite: exact comparison of every sector.

    Returns {"ok": bool, "cases": [...]}; mismatches list offending sectors.
    `pool_map` may be a multiprocessing map for per-case parallelism.
    """
    jobs = [(N, n) for N, nmax in cases for n in range(1, nmax + 1)]
    entries = list(pool_map(_verify_case_star, jobs))
    ok = all(not e["mismatches"] for e in entries)
    return {"ok": ok, "cases": entries}


def _verify_case_star(job) -> dict:
    return verify_case(*job)
