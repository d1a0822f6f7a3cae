"""Places of Q, integer factorization, and Hilbert symbols.

Local symbols are multiplicative (+1/-1): +1 at a place v means the form
X1^2 - a*X2^2 - b*X3^2 is isotropic over the completion at v, i.e. the
quaternion algebra (a,b) splits locally.  The global symbol is the finite set
of places where the local symbol is -1 (the ramification set); the algebra
splits globally iff that set is empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import List, Optional, Tuple, Union

from .errors import FactorizationLimitError
from .rationals import Rat, rat

_TRIAL_LIMIT = 10**6
_RHO_BUDGET = 2_000_000


# -- places ---------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: a finite prime, or the real place.

    Ordering: finite primes ascending, then the real place last (the sort key
    of the real place is +infinity in spirit; implemented as prime=0 with an
    explicit flag that sorts after all primes).
    """

    sort_key: Tuple[int, int] = field(repr=False)
    prime: Optional[int] = None  # None for the real place

    @staticmethod
    def finite(p: int) -> "Place":
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not a prime")
        return Place(sort_key=(0, p), prime=p)

    @staticmethod
    def real() -> "Place":
        return Place(sort_key=(1, 0), prime=None)

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "infinity" if self.is_real else str(self.prime)


@dataclass(frozen=True)
class RamificationSet:
    """Sorted even-sized set of places where a quaternion algebra ramifies."""

    places: Tuple[Place, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.places)))
        object.__setattr__(self, "places", ordered)
        if len(ordered) % 2 != 0:
            raise ValueError("ramification set must have even cardinality")

    @property
    def is_empty(self) -> bool:
        return not self.places

    def __contains__(self, v: Place) -> bool:
        return v in self.places

    def __iter__(self):
        return iter(self.places)

    def __len__(self):
        return len(self.places)

    def to_json(self) -> List[str]:
        return [str(v) for v in self.places]


# -- primality and factorization --------------------------------------------------


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all 64-bit-scale inputs)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> Optional[int]:
    """Deterministic Brent-cycle rho with a fixed parameter schedule."""
    if n % 2 == 0:
        return 2
    for c in range(1, 40):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        steps = 0
        while g == 1 and steps < _RHO_BUDGET:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = gcd(q, n)
                steps += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


@dataclass(frozen=True)
class Factorization:
    """sign * prod(p^e) with primes strictly increasing."""

    sign: int
    factors: Tuple[Tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def odd_part_exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def factor(n: int) -> Factorization:
    """Exact factorization of a nonzero integer.

    Trial division to 10^6, then deterministic Brent rho with a hard budget;
    raises FactorizationLimitError instead of looping on hostile inputs.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    sign = 1 if n > 0 else -1
    n = abs(n)
    found: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            found[d] = found.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m <= _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
            if is_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
        g = _pollard_brent(m)
        if g is None:
            raise FactorizationLimitError(f"factorization budget exceeded for {m}")
        stack.append(g)
        stack.append(m // g)
    return Factorization(sign=sign, factors=tuple(sorted(found.items())))


# -- residue symbols ---------------------------------------------------------------


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Full Kronecker symbol (a|n), extending Jacobi/Legendre to all n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5) and twos % 2 == 1:
            sign = -sign
    return sign * jacobi(a, n)


# -- local and global Hilbert symbols ------------------------------------------------


def _split_prime(n: int, p: int) -> Tuple[int, int]:
    """n = p^e * u with p not dividing u; returns (e, u)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def local_hilbert(a: Rat, b: Rat, v: Place) -> int:
    """Local Hilbert symbol (+1 split / -1 ramified) at a place of Q."""
    a = rat(a)
    b = rat(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    # Reduce to integers in the same square classes.
    ai = a.numerator * a.denominator
    bi = b.numerator * b.denominator
    if v.is_real:
        return -1 if (ai < 0 and bi < 0) else 1
    p = v.prime
    assert p is not None
    if p == 2:
        alpha, u = _split_prime(ai, 2)
        beta, w = _split_prime(bi, 2)
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_w = ((w * w - 1) // 8) % 2
        exponent = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if exponent % 2 else 1
    alpha, u = _split_prime(ai, p)
    beta, w = _split_prime(bi, p)
    eps_p = ((p - 1) // 2) % 2
    value = 1
    if (alpha * beta * eps_p) % 2:
        value = -value
    if beta % 2:
        value *= jacobi(u % p, p)
    if alpha % 2:
        value *= jacobi(w % p, p)
    return value


def candidate_places(a: Rat, b: Rat) -> List[Place]:
    """Real place, 2, and odd primes dividing numerator or denominator of a, b.

    The symbol is unramified at every other place, so this list is exhaustive
    for ramification.
    """
    a = rat(a)
    b = rat(b)
    primes = {2}
    for value in (a.numerator, a.denominator, b.numerator, b.denominator):
        for p, _ in factor(value).factors:
            primes.add(p)
    return [Place.finite(p) for p in sorted(primes)] + [Place.real()]


def global_hilbert(a: Rat, b: Rat) -> RamificationSet:
    """Ramification set of the quaternion algebra (a, b) over Q.

    Empty set == symbol is trivial == a*x^2 + b*y^2 = 1 solvable over Q.
    """
    a = rat(a)
    b = rat(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    ramified = tuple(
        v for v in candidate_places(a, b) if local_hilbert(a, b, v) == -1
    )
    return RamificationSet(places=ramified)
