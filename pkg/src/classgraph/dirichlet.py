"""Deterministic search for primes in arithmetic progressions.

Dirichlet guarantees infinitely many primes ``residue (mod modulus)`` when
the two are coprime, but says nothing about how early they appear, so the
scan runs to an explicit ceiling and reports exhaustion as an error rather
than looping forever.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BoundExhausted
from .primes import is_prime

DEFAULT_SEARCH_BOUND = 10**9


@dataclass(frozen=True)
class PrimeRequest:
    """How many primes to find, in which progression, skipping which ones."""

    count: int
    modulus: int
    residue: int
    exclude: frozenset[int] = field(default_factory=frozenset)
    bound: int = DEFAULT_SEARCH_BOUND

    def __post_init__(self) -> None:
        object.__setattr__(self, "exclude", frozenset(self.exclude))
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if math.gcd(self.residue, self.modulus) != 1:
            raise ValueError(
                f"residue {self.residue} and modulus {self.modulus} are not coprime"
            )
        if self.bound <= self.modulus:
            raise ValueError(f"bound {self.bound} must exceed modulus {self.modulus}")


def find_primes_in_ap(request: PrimeRequest) -> list[int]:
    """The first `count` primes in the progression, ascending.

    Deterministic: same request, same list.  Raises BoundExhausted when the
    ceiling is reached first.
    """
    out: list[int] = []
    n = request.residue % request.modulus
    if n == 0:
        n = request.modulus  # modulus == 1 only, by the coprimality invariant
    while n <= request.bound:
        if n >= 2 and n not in request.exclude and is_prime(n):
            out.append(n)
            if len(out) == request.count:
                return out
        n += request.modulus
    raise BoundExhausted(
        f"found {len(out)} of {request.count} primes congruent to "
        f"{request.residue % request.modulus} (mod {request.modulus}) below {request.bound}"
    )
