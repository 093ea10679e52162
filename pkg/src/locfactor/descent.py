"""Descent factorization: recover base-ring factorizations from a
localization factorization oracle plus a prime-generated submonoid.

The decision procedure ``certify_prime`` implements the case split at the
heart of the construction: an irreducible element is either associate to a
submonoid generator (and prime for that reason), or it avoids the submonoid
entirely, stays irreducible in the localization, and pulls primality back
from there.  Every emitted factor carries a replayable
``PrimalityCertificate`` for whichever case applied.

``descend_factor`` then assembles full factorizations: strip generator
primes, hand the stripped residue to the oracle, normalize the returned
fraction numerators back into the base ring, certify each residual, and
reconcile the unit bookkeeping before emitting the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .basefactor import PrimeFactorization
from .errors import (
    DescentInconsistencyError,
    MathDomainError,
    OracleViolationError,
    PreconditionError,
)
from .localization import (
    Fraction,
    GeneratedSubmonoid,
    SMember,
    embed,
    find_associate_generator,
    frac_eq,
    frac_is_unit,
    frac_mul,
    witness_multiset,
    _require_irreducible,
    _require_single_generator,
)
from .rings import Element

RECONCILE_PEEL_CAP = 64


class LocalizationOracle:
    """Interface a localization factorization oracle must provide.

    ``factor_fraction`` returns (unit fraction, prime fractions); the product
    of all returned fractions must equal the input under cross-multiplication
    and every prime fraction's numerator must live in the base ring.
    ``divides`` answers embedded divisibility with an (s, c) witness such that
    s.value * target == subject * c, or None.  ``is_prime_embedded`` decides
    primality of an embedded base-ring element in the localization.
    """

    name = "localization oracle"

    def factor_fraction(self, x: Fraction) -> tuple[Fraction, tuple]:
        raise NotImplementedError

    def divides(self, x: Fraction, y: Fraction) -> Optional[tuple[SMember, Element]]:
        raise NotImplementedError

    def is_prime_embedded(self, r: Element) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class PrimalityCertificate:
    """Replayable evidence that ``subject`` is prime in the base ring.

    case "generator": subject == unit * generators[generator_index].
    case "localization": subject avoids the submonoid, its image is not a
    unit, and the oracle attests the image is prime.
    """

    subject: Element
    submonoid: GeneratedSubmonoid
    case: str
    generator_index: Optional[int] = None
    unit: Optional[Element] = None
    oracle: Optional[LocalizationOracle] = None
    chain: str = "prime-generated"

    def replay(self) -> bool:
        S = self.submonoid
        ring = S.ring
        if self.case == "generator":
            return ring.is_unit(self.unit) and ring.eq(
                self.subject, ring.mul(self.unit, S.generators[self.generator_index])
            )
        hit = find_associate_generator(S, self.subject)
        if hit is not None:
            return False
        if frac_is_unit(embed(self.subject, S)):
            return False
        return self.oracle.is_prime_embedded(self.subject)

    def detail(self) -> str:
        from . import expr

        S = self.submonoid
        if self.case == "generator":
            g = expr.render(S.ring, S.generators[self.generator_index])
            u = expr.render(S.ring, self.unit)
            return f"associate of generator {g} (unit {u})"
        return f"avoids {S.describe()}; prime in {self.oracle.name}"


def certify_prime(
    p: Element,
    S: GeneratedSubmonoid,
    oracle: LocalizationOracle,
    chain: str = "prime-generated",
) -> PrimalityCertificate:
    """Decide primality of an irreducible p by the generator/avoidance case split."""
    ring = S.ring
    if ring.is_zero(p) or ring.is_unit(p):
        raise PreconditionError("not irreducible")
    _require_irreducible(ring, p)
    if chain == "prime-or-unit":
        _require_single_generator(S)
    hit = find_associate_generator(S, p)
    if hit is not None:
        i, u = hit
        return PrimalityCertificate(p, S, "generator", generator_index=i, unit=u, chain=chain)
    if frac_is_unit(embed(p, S)):
        raise OracleViolationError("avoiding irreducible embedded to a unit")
    if not oracle.is_prime_embedded(p):
        raise OracleViolationError("localization not UFD on this input")
    return PrimalityCertificate(p, S, "localization", oracle=oracle, chain=chain)


def normalize_numerator(x: Fraction, S: GeneratedSubmonoid) -> tuple[Element, tuple]:
    """Strip generator primes out of a fraction's numerator.

    Returns the residual (divisible by no generator) and the stripped prime
    multiset; residual * prod(multiset) == x.num exactly.
    """
    if S.ring.is_zero(x.num):
        raise PreconditionError("zero numerator")
    exps, r = S.strip(x.num)
    return r, witness_multiset(S.member(exps))


@dataclass(frozen=True)
class DescentResult:
    """Factorization plus one certificate per factor (aligned by index)."""

    factorization: PrimeFactorization
    certificates: tuple


def _vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def descend_factor(
    a: Element,
    S: GeneratedSubmonoid,
    oracle: LocalizationOracle,
    chain: str = "prime-generated",
) -> DescentResult:
    """Factor a base-ring element from the localization oracle.

    Steps: strip generator primes; if the residue is a unit we are done;
    otherwise factor the embedded residue in the localization, normalize each
    prime fraction's numerator, certify every residual prime, reconcile the
    submonoid bookkeeping, and verify the reconstruction before returning.
    """
    ring = S.ring
    if ring.is_zero(a):
        raise MathDomainError("cannot factor zero")
    if chain == "prime-or-unit":
        _require_single_generator(S)
    exps, a0 = S.strip(a)
    pairs = []
    for g, e in zip(S.generators, exps):
        if e:
            cert = certify_prime(g, S, oracle, chain)
            pairs.extend([(g, cert)] * e)
    if ring.is_unit(a0):
        unit = a0
    else:
        unit_frac, prime_fracs = oracle.factor_fraction(embed(a0, S))
        check = unit_frac
        for f in prime_fracs:
            check = frac_mul(check, f)
        if not frac_eq(check, embed(a0, S)):
            raise OracleViolationError("oracle factorization does not multiply back")
        u_exps, u_res = S.strip(unit_frac.num)
        if not ring.is_unit(u_res):
            raise DescentInconsistencyError(
                "descent inconsistency: unit fraction does not strip to a unit"
            )
        lhs_exps = list(unit_frac.den.exponents)
        rhs_exps = list(u_exps)
        residuals = []
        for f in prime_fracs:
            if ring.is_zero(f.num):
                raise OracleViolationError("oracle returned a zero factor")
            f_exps, r = S.strip(f.num)
            lhs_exps = _vec_add(lhs_exps, f.den.exponents)
            rhs_exps = _vec_add(rhs_exps, f_exps)
            ur, rc = ring.canonical_associate(r)
            if ring.is_unit(rc):
                raise OracleViolationError("oracle returned a unit factor")
            u_res = ring.mul(u_res, ur)
            cert = certify_prime(rc, S, oracle, chain)
            residuals.append(rc)
            pairs.append((rc, cert))
        # the submonoid content on both sides of t*a0 == w * prod(residuals) * u
        # must cancel exactly; any leftover is peeled by exact division and, if
        # that fails, diagnosed as a broken oracle
        for i in range(len(lhs_exps)):
            m = min(lhs_exps[i], rhs_exps[i])
            lhs_exps[i] -= m
            rhs_exps[i] -= m
        leftover = sum(lhs_exps) + sum(rhs_exps)
        if leftover:
            if leftover > RECONCILE_PEEL_CAP:
                raise DescentInconsistencyError("descent inconsistency")
            prod_res = ring.prod(residuals)
            for i, g in enumerate(S.generators):
                for _ in range(lhs_exps[i]):
                    q = ring.exact_div(prod_res, g)
                    if q is None:
                        raise DescentInconsistencyError("descent inconsistency")
                    prod_res = q
                if rhs_exps[i]:
                    raise DescentInconsistencyError("descent inconsistency")
        w = ring.exact_div(a0, ring.prod(residuals))
        if w is None or not ring.is_unit(w):
            raise DescentInconsistencyError("descent inconsistency")
        unit = w
    pairs.sort(key=lambda fc: ring.sort_key(fc[0]))
    factorization = PrimeFactorization(unit, tuple(f for f, _ in pairs))
    if not ring.eq(factorization.value(ring), a):
        raise DescentInconsistencyError("descent inconsistency")
    return DescentResult(factorization, tuple(c for _, c in pairs))


def descend_factor_pou(
    a: Element, S: GeneratedSubmonoid, oracle: LocalizationOracle
) -> DescentResult:
    """Single-generator descent through the prime-or-unit chain."""
    _require_single_generator(S)
    return descend_factor(a, S, oracle, chain="prime-or-unit")


class BaseEngineOracle(LocalizationOracle):
    """Localization oracle backed by a base-ring factorization engine.

    Factors the numerator in the base ring and reinterprets generator
    associates as localization units.  Useful as the trivially-correct oracle
    for integer submonoids and in cross-checking tests.
    """

    def __init__(self, S: GeneratedSubmonoid, engine, name: str = None):
        self.S = S
        self.engine = engine
        self.name = name or f"{S.ring.name} localized at {S.describe()}"

    def factor_fraction(self, x: Fraction) -> tuple[Fraction, tuple]:
        S = self.S
        ring = S.ring
        pf = self.engine(x.num)
        exps = [0] * len(S.generators)
        unit_num = pf.unit
        primes = []
        for q in pf.factors:
            hit = find_associate_generator(S, q)
            if hit is not None:
                exps[hit[0]] += 1
                unit_num = ring.mul(unit_num, hit[1])
            else:
                primes.append(Fraction(q, S.one_member()))
        unit_frac = Fraction(ring.mul(unit_num, S.member(exps).value), x.den)
        return (unit_frac, tuple(primes))

    def divides(self, x: Fraction, y: Fraction) -> Optional[tuple[SMember, Element]]:
        S = self.S
        ring = S.ring
        if ring.is_zero(x.num):
            return None
        px, xr = S.strip(x.num)
        py, yr = S.strip(y.num)
        q = ring.exact_div(yr, xr)
        if q is None:
            return None
        s_exps = tuple(max(a - b, 0) for a, b in zip(px, py))
        extra = tuple(b + s - a for a, b, s in zip(px, py, s_exps))
        c = ring.mul(q, S.member(extra).value)
        return (S.member(s_exps), c)

    def is_prime_embedded(self, r: Element) -> bool:
        S = self.S
        if S.ring.is_zero(r):
            return False
        _, rr = S.strip(r)
        if S.ring.is_unit(rr):
            return False
        return len(self.engine(rr).factors) == 1
