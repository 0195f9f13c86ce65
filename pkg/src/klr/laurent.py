"""Sparse Laurent polynomials in one variable q over the integers.

Coefficients are arbitrary-precision ints stored in a dict exponent -> coeff
with no zero values.  Includes the balanced quantum integers [n], factorials
[n]! and binomials used throughout.
"""

from __future__ import annotations


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Immutable by convention: methods return new instances and never mutate
    ``self.coeffs``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def const(n):
        return LaurentPoly({0: n})

    @staticmethod
    def q_power(e, c=1):
        return LaurentPoly({e: c})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def __getitem__(self, e):
        return self.coeffs.get(e, 0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self):
        """Substitute q -> q^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``DivisibilityError`` on a remainder.

        Both operands are shifted to honest polynomials first, then ordinary
        univariate division by leading terms is performed over the integers.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division of LaurentPoly by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.min_exp() - divisor.min_exp()
        num = {e - self.min_exp(): c for e, c in self.coeffs.items()}
        den = {e - divisor.min_exp(): c for e, c in divisor.coeffs.items()}
        dlead = max(den)
        dc = den[dlead]
        quot = {}
        while num:
            nlead = max(num)
            if nlead < dlead:
                raise DivisibilityError(f"nonzero remainder {num}")
            nc = num[nlead]
            if nc % dc != 0:
                raise DivisibilityError(
                    f"leading coefficient {nc} not divisible by {dc}")
            qe, qc = nlead - dlead, nc // dc
            quot[qe] = qc
            for e, c in den.items():
                v = num.get(e + qe, 0) - qc * c
                if v:
                    num[e + qe] = v
                else:
                    num.pop(e + qe, None)
        return LaurentPoly({e + shift: c for e, c in quot.items()})

    def truncate(self, cutoff):
        """Drop all terms with exponent > cutoff."""
        return LaurentPoly({e: c for e, c in self.coeffs.items() if e <= cutoff})

    # -- formatting --------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                t = str(c)
            else:
                qp = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    t = qp
                elif c == -1:
                    t = f"-{qp}"
                else:
                    t = f"{c}*{qp}"
            parts.append(t)
        s = parts[0]
        for t in parts[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


class DivisibilityError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def qint(n):
    """Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}."""
    assert n >= 0
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def qfact(n):
    """Quantum factorial [n]! = [n][n-1]...[1]."""
    out = LaurentPoly.one()
    for k in range(2, n + 1):
        out = out * qint(k)
    return out


def qbinom(n, k):
    """Balanced quantum binomial [n choose k]; exact Laurent division."""
    assert 0 <= k <= n
    return qfact(n).exact_div(qfact(k) * qfact(n - k))
