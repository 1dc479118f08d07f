"""Finite-mode indefinite-metric Fock algebra.

Creation/annihilation pairs carry a mode index j (a momentum node) and a
Lorentz index mu; the elementary contraction is

    [a^mu(j), a^nu(l)^dagger] = -g^{mu nu} delta_{jl} c_j,

with metric g = diag(+1,-1,-1,-1), so the scalar (mu = 0) excitations have
negative norm.  The mode-measure factor c_j realizes two conventions:

    raw:        c_j = 1                  (exact symbolic checks)
    continuum:  c_j = w_j / (2 |k_j|)    (quadrature-converged smearing, the
                                          1/sqrt(2|k|) of the field expansion
                                          absorbed into the contraction)

Operators are kept in normal-ordered canonical form; vectors are finite maps
from sorted creator monomials to complex coefficients.  Coefficients below the
zero threshold (default 1e-14) are dropped, which is what makes identities
like [F0, B0] = 0 land on the exact zero operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .minkowski import METRIC

DEFAULT_ZERO_TOL = 1e-14


class DegreeOverflow(RuntimeError):
    """Operator word or vector exceeded the configured degree cap."""


@dataclass(frozen=True)
class ModeSet:
    """Momentum nodes with positive quadrature weights; no zero mode."""

    momenta: np.ndarray
    weights: np.ndarray
    measure: str = "continuum"

    def __post_init__(self):
        momenta = np.atleast_2d(np.asarray(self.momenta, dtype=float))
        weights = np.asarray(self.weights, dtype=float)
        if momenta.shape[1] != 3 or momenta.shape[0] != weights.shape[0]:
            raise ValueError("momenta must be (n, 3) with matching weights")
        if np.any(weights <= 0.0):
            raise ValueError("weights must be positive")
        mags = np.linalg.norm(momenta, axis=1)
        if np.any(mags <= 0.0):
            raise ValueError("modes must have nonzero momentum")
        if len({tuple(row) for row in momenta.round(14)}) != len(momenta):
            raise ValueError("mode nodes must be distinct")
        if self.measure not in ("raw", "continuum"):
            raise ValueError(f"unknown measure {self.measure!r}")
        object.__setattr__(self, "momenta", momenta)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_mags", mags)
        if self.measure == "raw":
            object.__setattr__(self, "_contraction", np.ones_like(weights))
        else:
            object.__setattr__(self, "_contraction", weights / (2.0 * mags))

    def __len__(self):
        return len(self.weights)

    @property
    def omegas(self) -> np.ndarray:
        return self._mags

    def contraction_weight(self, j: int) -> float:
        return float(self._contraction[j])

    def k_upper(self, j: int) -> np.ndarray:
        """On-shell four-momentum (|k|, k) with upper index."""
        return np.concatenate(([self._mags[j]], self.momenta[j]))

    def k_lower(self, j: int) -> np.ndarray:
        return METRIC @ self.k_upper(j)


Label = tuple[int, int]  # (mode index, Lorentz index)


def _contract(a: Label, b: Label, modes: ModeSet) -> float:
    """Elementary contraction of an annihilator label with a creator label."""
    if a[0] != b[0]:
        return 0.0
    return -METRIC[a[1], b[1]] * modes.contraction_weight(a[0])


class FockVector:
    """Finite map sorted-creator-monomial -> complex coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = dict(terms or {})

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls({(): 1.0 + 0.0j})

    def cleaned(self, zero_tol: float = DEFAULT_ZERO_TOL) -> "FockVector":
        return FockVector({m: c for m, c in self.terms.items() if abs(c) > zero_tol})

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def add_scaled(self, other: "FockVector", scale: complex) -> "FockVector":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0.0) + scale * c
        return FockVector(out)

    def coefficient_norm(self) -> float:
        """Euclidean magnitude of the coefficient list (not the indefinite norm)."""
        return float(np.sqrt(sum(abs(c) ** 2 for c in self.terms.values())))

    def __repr__(self):
        return f"FockVector({len(self.terms)} terms, degree {self.degree()})"


def _pairing(mon_a: tuple, mon_b: tuple, modes: ModeSet) -> complex:
    """Sum over perfect matchings of two creator monomials."""
    if len(mon_a) != len(mon_b):
        return 0.0
    if not mon_a:
        return 1.0
    # fast reject on mode content
    if sorted(l[0] for l in mon_a) != sorted(l[0] for l in mon_b):
        return 0.0
    first, rest = mon_a[0], mon_a[1:]
    total = 0.0
    for i, lb in enumerate(mon_b):
        c = _contract(first, lb, modes)
        if c != 0.0:
            total += c * _pairing(rest, mon_b[:i] + mon_b[i + 1:], modes)
    return total


def wick_inner_product(u: FockVector, v: FockVector, modes: ModeSet) -> complex:
    """Indefinite inner product <u, v>, antilinear in u; hermitian."""
    total = 0.0 + 0.0j
    monos_v = list(v.terms.items())
    for ma, ca in u.terms.items():
        for mb, cb in monos_v:
            p = _pairing(ma, mb, modes)
            if p != 0.0:
                total += np.conj(ca) * cb * p
    return complex(total)


class ModeOperator:
    """Normal-ordered finite sum of terms c * prod a^dagger prod a."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        # keys: (creators tuple sorted, annihilators tuple sorted)
        self.terms = dict(terms or {})

    @classmethod
    def zero(cls) -> "ModeOperator":
        return cls({})

    @classmethod
    def identity(cls) -> "ModeOperator":
        return cls({((), ()): 1.0 + 0.0j})

    def cleaned(self, zero_tol: float = DEFAULT_ZERO_TOL) -> "ModeOperator":
        return ModeOperator({k: c for k, c in self.terms.items() if abs(c) > zero_tol})

    def is_zero(self, zero_tol: float = DEFAULT_ZERO_TOL) -> bool:
        return not self.cleaned(zero_tol).terms

    def add_scaled(self, other: "ModeOperator", scale: complex) -> "ModeOperator":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0.0) + scale * c
        return ModeOperator(out)

    def adjoint(self) -> "ModeOperator":
        return ModeOperator({(ann, cre): np.conj(c) for (cre, ann), c in self.terms.items()})

    def degree(self) -> int:
        return max((max(len(c), len(a)) for c, a in self.terms), default=0)

    def apply(self, vec: FockVector, modes: ModeSet, degree_cap: int = 8,
              zero_tol: float = DEFAULT_ZERO_TOL) -> FockVector:
        """Apply to a vector; annihilators contract, creators append."""
        out: dict = {}
        for (cre, ann), c_op in self.terms.items():
            for mon, c_vec in vec.terms.items():
                for rest, factor in _annihilate(ann, mon, modes):
                    new_mon = tuple(sorted(rest + cre))
                    if len(new_mon) > degree_cap:
                        raise DegreeOverflow(f"vector degree {len(new_mon)} exceeds cap {degree_cap}")
                    out[new_mon] = out.get(new_mon, 0.0) + c_op * c_vec * factor
        return FockVector(out).cleaned(zero_tol)

    def __repr__(self):
        return f"ModeOperator({len(self.terms)} terms, degree {self.degree()})"


def _annihilate(ann: tuple, mon: tuple, modes: ModeSet):
    """All ways of contracting the annihilator labels into a creator monomial.

    Yields (surviving creator labels, contraction factor)."""
    if not ann:
        yield mon, 1.0
        return
    first, rest = ann[0], ann[1:]
    for i, lb in enumerate(mon):
        c = _contract(first, lb, modes)
        if c != 0.0:
            for surv, factor in _annihilate(rest, mon[:i] + mon[i + 1:], modes):
                yield surv, factor * c


def _cross_orderings(ann: tuple, cre: tuple, modes: ModeSet):
    """Normal ordering of a^{ann} a^dagger^{cre}: sum over contraction subsets.

    Yields (ann_rest, cre_rest, factor)."""
    if not ann or not cre:
        yield ann, cre, 1.0
        return
    first, rest = ann[0], ann[1:]
    # option: first stays an annihilator (moves through all creators)
    for ar, cr, f in _cross_orderings(rest, cre, modes):
        yield (first,) + ar, cr, f
    # option: first contracts against one creator
    for i, lb in enumerate(cre):
        c = _contract(first, lb, modes)
        if c != 0.0:
            for ar, cr, f in _cross_orderings(rest, cre[:i] + cre[i + 1:], modes):
                yield ar, cr, f * c


def multiply(p: ModeOperator, q: ModeOperator, modes: ModeSet, degree_cap: int = 8,
             zero_tol: float = DEFAULT_ZERO_TOL) -> ModeOperator:
    """Normal-ordered operator product p q."""
    out: dict = {}
    for (c1, a1), x1 in p.terms.items():
        for (c2, a2), x2 in q.terms.items():
            for ar, cr, f in _cross_orderings(a1, c2, modes):
                cre = tuple(sorted(c1 + cr))
                ann = tuple(sorted(ar + a2))
                if len(cre) > degree_cap or len(ann) > degree_cap:
                    raise DegreeOverflow(f"operator degree exceeds cap {degree_cap}")
                key = (cre, ann)
                out[key] = out.get(key, 0.0) + x1 * x2 * f
    return ModeOperator(out).cleaned(zero_tol)


def commutator(p: ModeOperator, q: ModeOperator, modes: ModeSet, degree_cap: int = 8,
               zero_tol: float = DEFAULT_ZERO_TOL) -> ModeOperator:
    """Normal-ordered [p, q]."""
    pq = multiply(p, q, modes, degree_cap, zero_tol=0.0)
    qp = multiply(q, p, modes, degree_cap, zero_tol=0.0)
    return pq.add_scaled(qp, -1.0).cleaned(zero_tol)


def _as_packet(packet, modes: ModeSet) -> np.ndarray:
    if isinstance(packet, dict):
        out = np.zeros(len(modes), dtype=complex)
        for j, amp in packet.items():
            out[j] = amp
        return out
    out = np.asarray(packet, dtype=complex)
    if out.shape != (len(modes),):
        raise ValueError(f"packet must have shape ({len(modes)},)")
    return out


def smear_free_field(kind: str, packet, modes: ModeSet, indices: tuple = ()) -> ModeOperator:
    """Smeared free-field operator in normal-ordered form.

    kind "A0" (one Lorentz index): f_j a^{mu dagger}(j) + conj(f_j) a^mu(j).
    kind "F0" (two indices): amplitudes carry i (k^mu e^nu - k^nu e^mu) with
    the on-shell k = (|k_j|, k_j).
    kind "B0": amplitudes carry the i k.e contraction (lower-index k).
    kind "B0_minus": annihilation part of B0 only.
    """
    f = _as_packet(packet, modes)
    terms: dict = {}

    def add(cre: tuple, ann: tuple, coef: complex):
        if abs(coef) == 0.0:
            return
        key = (cre, ann)
        terms[key] = terms.get(key, 0.0) + coef

    if kind == "A0":
        (mu,) = indices
        for j in range(len(modes)):
            add(((j, mu),), (), f[j])
            add((), ((j, mu),), np.conj(f[j]))
    elif kind == "F0":
        mu, nu = indices
        if mu == nu:
            return ModeOperator.zero()
        for j in range(len(modes)):
            k4 = modes.k_upper(j)
            add(((j, nu),), (), 1j * f[j] * k4[mu])
            add(((j, mu),), (), -1j * f[j] * k4[nu])
            add((), ((j, nu),), -1j * np.conj(f[j]) * k4[mu])
            add((), ((j, mu),), 1j * np.conj(f[j]) * k4[nu])
    elif kind in ("B0", "B0_minus"):
        for j in range(len(modes)):
            klow = modes.k_lower(j)
            for tau in range(4):
                if kind == "B0":
                    add(((j, tau),), (), 1j * f[j] * klow[tau])
                add((), ((j, tau),), -1j * np.conj(f[j]) * klow[tau])
    else:
        raise ValueError(f"unknown field kind {kind!r}")
    return ModeOperator(terms).cleaned()


def observable_gram(ops: list[ModeOperator], modes: ModeSet, degree_cap: int = 8):
    """Gram matrix G_il = <X_i Psi, X_l Psi> over the Fock vacuum and its
    minimum eigenvalue (+inf sentinel for an empty family)."""
    if not ops:
        return np.zeros((0, 0)), np.inf
    vacuum = FockVector.vacuum()
    vecs = [op.apply(vacuum, modes, degree_cap) for op in ops]
    n = len(vecs)
    gram = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for l in range(i, n):
            val = wick_inner_product(vecs[i], vecs[l], modes)
            gram[i, l] = val
            gram[l, i] = np.conj(val)
    herm_defect = float(np.max(np.abs(gram - gram.conj().T))) if n else 0.0
    if herm_defect > 1e-10 * max(1.0, float(np.max(np.abs(gram)))):
        raise RuntimeError(f"Gram matrix not hermitian, defect {herm_defect}")
    eigs = np.linalg.eigvalsh(0.5 * (gram + gram.conj().T))
    return gram, float(eigs.min())


def gauge_divergence_annihilator(modes: ModeSet, j: int, nu: int) -> ModeOperator:
    """Annihilation part of the divergence of the free field strength at one
    mode: sum_lambda (k_nu k_lambda - k^2 g_{nu lambda}) a^lambda(j).

    The k^2 term vanishes on shell, which is what makes the subsidiary
    condition hold on field-strength-generated vectors."""
    klow = modes.k_lower(j)
    k2 = float(np.dot(modes.k_upper(j), klow))
    terms = {}
    for lam in range(4):
        coef = klow[nu] * klow[lam] - k2 * METRIC[nu, lam]
        if coef != 0.0:
            terms[((), ((j, lam),))] = complex(coef)
    return ModeOperator(terms)


def gb_condition_check(vec: FockVector, modes: ModeSet, degree_cap: int = 8) -> float:
    """Residual of the subsidiary condition on a vector: the largest
    coefficient magnitude of (d^mu F0_{mu nu})^(-) applied to it, over all
    modes and nu.  Exactly zero (to rounding) on field-strength words."""
    worst = 0.0
    for j in range(len(modes)):
        for nu in range(4):
            op = gauge_divergence_annihilator(modes, j, nu)
            image = op.apply(vec, modes, degree_cap, zero_tol=0.0)
            worst = max(worst, image.coefficient_norm())
    return worst


def product_mode_set(radii, directions, radial_weights=None, direction_weights=None,
                     measure: str = "continuum") -> ModeSet:
    """Mode set on a radius x direction product grid with product weights.

    Direction weights default to the equal-weight rule 4 pi / n; pass explicit
    weights (summing to 4 pi) for Gauss rules on the sphere."""
    radii = np.asarray(radii, dtype=float)
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    directions = directions / np.linalg.norm(directions, axis=1, keepdims=True)
    if radial_weights is None:
        radial_weights = np.ones_like(radii)
    if direction_weights is None:
        direction_weights = np.full(len(directions), 4.0 * np.pi / len(directions))
    momenta = (radii[:, None, None] * directions[None, :, :]).reshape(-1, 3)
    weights = (np.asarray(radial_weights)[:, None] * radii[:, None] ** 2
               * np.asarray(direction_weights)[None, :]).ravel()
    return ModeSet(momenta, weights, measure=measure)
