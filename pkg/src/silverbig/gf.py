"""Small finite fields GF(q) for the plane constructions.

Elements are integers 0..q-1. For prime q this is arithmetic mod q. For
q in {4, 8, 9} the integer encodes a polynomial over GF(p) in base p
(least significant coefficient first) and multiplication is reduced by a
fixed irreducible polynomial:

    GF(4): x^2 + x + 1      GF(8): x^3 + x + 1      GF(9): x^2 + 1

Only the orders needed for the desk-scale planes are supported.
"""

from __future__ import annotations

_PRIME_POWERS = {4: (2, 2), 8: (2, 3), 9: (3, 2)}

# irreducible polynomial coefficients, low degree first, monic leading term included
_IRREDUCIBLE = {4: (1, 1, 1), 8: (1, 1, 0, 1), 9: (1, 0, 1)}

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)


class GF:
    """Arithmetic tables for GF(q), q in SUPPORTED_ORDERS."""

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise ValueError(f"unsupported field order {q}")
        self.q = q
        if q in _PRIME_POWERS:
            p, deg = _PRIME_POWERS[q]
            self.p, self.deg = p, deg
        else:
            self.p, self.deg = q, 1
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]

    def _coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.deg):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, coeffs: list[int]) -> int:
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + c % self.p
        return val

    def _add_raw(self, a: int, b: int) -> int:
        if self.deg == 1:
            return (a + b) % self.p
        ca, cb = self._coeffs(a), self._coeffs(b)
        return self._encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.deg == 1:
            return (a * b) % self.p
        ca, cb = self._coeffs(a), self._coeffs(b)
        prod = [0] * (2 * self.deg - 1)
        for i, x in enumerate(ca):
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by the irreducible polynomial
        irr = _IRREDUCIBLE[self.q]
        for i in range(len(prod) - 1, self.deg - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j, ic in enumerate(irr[:-1]):
                prod[i - self.deg + j] = (prod[i - self.deg + j] - c * ic) % self.p
        return self._encode(prod[: self.deg])

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]
