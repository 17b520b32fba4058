"""Prime-field arithmetic: primality, inverses, quadratic characters, square roots."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_MODULUS = 1 << 61

# Deterministic Miller-Rabin witness set, sufficient for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Decide primality deterministically (Miller-Rabin, exact below 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def require_prime(p: int) -> int:
    """Validate a modulus: prime and below the supported bound; return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"modulus must be an int, got {type(p).__name__}")
    if p >= MAX_MODULUS:
        raise ValueError(f"modulus {p} exceeds supported bound 2^61")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def inv_mod(a: int, p: int) -> int:
    """Return the inverse of a modulo the prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible modulo {p}")
    return pow(a, p - 2, p)


def legendre(a: int, p: int) -> int:
    """Return the Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    require_prime(p)
    if p == 2:
        raise ValueError("Legendre symbol requires an odd prime modulus")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


@lru_cache(maxsize=None)
def _least_nonresidue(p: int) -> int:
    """Return the smallest quadratic nonresidue modulo the odd prime p."""
    for z in range(2, p):
        if legendre(z, p) == -1:
            return z
    raise AssertionError(f"no quadratic nonresidue modulo {p}")


def sqrt_mod(a: int, p: int) -> int | None:
    """Return the smaller square root of a modulo prime p, or None if a is a nonresidue."""
    require_prime(p)
    a %= p
    if p == 2 or a == 0:
        return a
    if legendre(a, p) == -1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks, deterministic via the least nonresidue.
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = _least_nonresidue(p)
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class Fp:
    """An element of the prime field F_p, stored as a reduced residue."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        require_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: "Fp | int") -> "Fp":
        if isinstance(other, int) and not isinstance(other, bool):
            return Fp(other, self.modulus)
        if isinstance(other, Fp):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}"
                )
            return other
        raise TypeError(f"cannot combine Fp with {type(other).__name__}")

    def __add__(self, other: "Fp | int") -> "Fp":
        o = self._coerce(other)
        return Fp(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: "Fp | int") -> "Fp":
        o = self._coerce(other)
        return Fp(self.value - o.value, self.modulus)

    def __rsub__(self, other: "Fp | int") -> "Fp":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other: "Fp | int") -> "Fp":
        o = self._coerce(other)
        return Fp(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other: "Fp | int") -> "Fp":
        o = self._coerce(other)
        return Fp(self.value * inv_mod(o.value, self.modulus), self.modulus)

    def __rtruediv__(self, other: "Fp | int") -> "Fp":
        return self._coerce(other).__truediv__(self)

    def __neg__(self) -> "Fp":
        return Fp(-self.value, self.modulus)

    def __pow__(self, e: int) -> "Fp":
        if e < 0:
            return Fp(inv_mod(self.value, self.modulus), self.modulus) ** (-e)
        return Fp(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> "Fp":
        """Return the multiplicative inverse."""
        return Fp(inv_mod(self.value, self.modulus), self.modulus)

    def legendre(self) -> int:
        """Return the Legendre symbol of this element (odd modulus only)."""
        return legendre(self.value, self.modulus)

    def sqrt(self) -> "Fp | None":
        """Return the smaller square root as an Fp, or None for a nonresidue."""
        r = sqrt_mod(self.value, self.modulus)
        if r is None:
            return None
        return Fp(r, self.modulus)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def arith(a: Fp, b: "Fp | int", op: str) -> Fp:
    """Apply a named field operation: one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
