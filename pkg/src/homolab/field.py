"""Prime fields F_p with canonical representatives in [0, p)."""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_CHARACTERISTIC = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if not isinstance(self.p, int) or not (2 <= self.p < 2**31):
            raise ValueError(f"characteristic out of range: {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in F_%d" % self.p)
        return pow(a, -1, self.p)

    def signed(self, a: int) -> int:
        """Representative in (-p/2, p/2], used only for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __str__(self):
        return f"F_{self.p}"
