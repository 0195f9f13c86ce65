"""Characters, shuffle products, the twisted coproduct, and the bilinear form.

The character of a monomial projective P_theta is the vector of graded
dimensions of its idempotent truncations; on the plain sequence k it equals
gdim_hom(k, expand(theta)) / theta!.  The bilinear form on monomials is
gdim_hom(expand(theta'), expand(theta)) / (theta! theta'!), and is computed a
second, independent way through the coproduct recursion (x, y y') =
(r(x), y tensor y').  Tightness of a monomial is the statement that its
self-pairing lies in 1 + q N[[q]], tested by series expansion to a cutoff.
"""

from __future__ import annotations

from .cartan import weight_add, weight_of_seq
from .gdim import GradedDim
from .laurent import LaurentPoly
from .sequences import (
    concat,
    divided_weight,
    expand,
    factorial_poly,
    format_divided,
    format_seq,
    reverse,
    seq_enumerate,
    shuffles,
)


class MalformedPairingError(ValueError):
    """A pairing series produced a negative exponent."""


class CharacterVector:
    """A map from sequences of a fixed weight to graded dimensions."""

    __slots__ = ("weight", "values")

    def __init__(self, weight, values):
        self.weight = weight
        self.values = {k: v for k, v in values.items() if not v.is_zero()}

    def value(self, seq):
        return self.values.get(tuple(seq), GradedDim.zero())

    def __add__(self, other):
        assert self.weight == other.weight
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out[k] + v if k in out else v
        return CharacterVector(self.weight, out)

    def scale(self, p: LaurentPoly):
        return CharacterVector(self.weight,
                               {k: v * p for k, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, CharacterVector):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self.value(k) == other.value(k) for k in keys)

    def __hash__(self):
        raise TypeError("CharacterVector is unhashable")

    def to_json(self):
        return {format_seq(k): v.to_json() for k, v in sorted(self.values.items())}

    def __str__(self):
        return ", ".join(f"{format_seq(k)}: {v}"
                         for k, v in sorted(self.values.items())) or "0"


class K0Vector:
    """An integer-Laurent combination of monomial symbols [P_theta].

    Symbols are not linearly independent; equality is decided only through
    the bilinear form (equal_in_f), never by comparing coefficients.
    """

    __slots__ = ("weight", "coeffs")

    def __init__(self, weight, coeffs):
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}
        self.weight = weight

    @staticmethod
    def monomial(theta, coeff=None):
        theta = tuple(theta)
        return K0Vector(divided_weight(theta),
                        {theta: coeff if coeff is not None else LaurentPoly.one()})

    def __add__(self, other):
        assert self.weight == other.weight
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return K0Vector(self.weight, out)

    def __neg__(self):
        return K0Vector(self.weight, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: LaurentPoly):
        return K0Vector(self.weight, {k: c * p for k, c in self.coeffs.items()})

    def to_json(self):
        return {format_divided(k): {str(e): c for e, c in sorted(v.coeffs.items())}
                for k, v in sorted(self.coeffs.items())}

    def __str__(self):
        return " + ".join(f"({c})*[P_{format_divided(k)}]"
                          for k, c in sorted(self.coeffs.items())) or "0"


# -- factorial division ----------------------------------------------------

def _divide_factorial(gd: GradedDim, divided) -> GradedDim:
    """Divide by the quantum factorial of a divided sequence, exactly.

    Prefers the denominator identity (1-q^2)^n [n]! q^{n(n-1)/2} =
    prod_{a<=n} (1-q^{2a}), which consumes n copies of the factor (1-q^2);
    falls back to exact numerator division when those copies are absent.
    """
    num, den = gd.num, list(gd.den)
    for v, n in divided:
        if n <= 1:
            continue
        if den.count(1) >= n:
            for _ in range(n):
                den.remove(1)
            den.extend(range(1, n + 1))
            num = num * LaurentPoly.q_power(n * (n - 1) // 2)
        else:
            num = num.exact_div(factorial_poly(((v, n),)))
    return GradedDim(num, sorted(den))


# -- characters ------------------------------------------------------------

def char_projective(ring, theta):
    """Character of the monomial projective: gdim_hom(k, expand) / theta!."""
    theta = tuple(theta)
    hat = expand(theta)
    weight = weight_of_seq(hat)
    fact = factorial_poly(theta)
    values = {}
    for seq in seq_enumerate(weight):
        gd = ring.gdim_hom(seq, hat)
        if gd.is_zero():
            continue
        values[seq] = _divide_factorial(gd, theta)
    return CharacterVector(weight, values)


def char_at_divided(cv: CharacterVector, theta):
    """Evaluate a character at a divided sequence: value at expansion / theta!."""
    theta = tuple(theta)
    return cv.value(expand(theta)).divide_poly(factorial_poly(theta))


def shuffle_product(graph, f: CharacterVector, g: CharacterVector):
    """Quantum shuffle product of character vectors."""
    weight = weight_add(f.weight, g.weight)
    values = {}
    for si, vi in f.values.items():
        for sj, vj in g.values.items():
            prod = vi * vj
            for seq, deg in shuffles(graph, si, sj):
                contrib = prod * LaurentPoly.q_power(deg)
                values[seq] = values[seq] + contrib if seq in values else contrib
    return CharacterVector(weight, values)


# -- coproduct -------------------------------------------------------------

def _bilinear(graph, w1, w2):
    return sum(n1 * n2 * graph.cartan(v1, v2)
               for v1, n1 in w1 for v2, n2 in w2)


def comultiply(graph, theta):
    """Coproduct terms (left, right, coeff) of a divided monomial.

    Each block i^(n) splits as sum over a+b=n of q^{-ab} i^(a) (x) i^(b);
    blocks are assembled left to right in the twisted tensor product, so a
    block landing on the left picks up q^{-B(weight(right so far), a*i)}.
    Blocks are kept unmerged in the output.
    """
    terms = [((), (), (), LaurentPoly.one())]  # (left, right, right weight, coeff)
    for v, n in theta:
        new_terms = []
        for left, right, rw, coeff in terms:
            for a in range(n + 1):
                b = n - a
                c = coeff * LaurentPoly.q_power(-a * b)
                if a:
                    twist = -_bilinear(graph, rw, ((v, a),))
                    c = c * LaurentPoly.q_power(twist)
                nl = left + ((v, a),) if a else left
                nr = right + ((v, b),) if b else right
                nrw = weight_add(rw, ((v, b),)) if b else rw
                new_terms.append((nl, nr, nrw, c))
        terms = new_terms
    return [(l, r, c) for l, r, _, c in terms]


# -- the bilinear form -----------------------------------------------------

def pair_monomials(ring, theta, theta2) -> GradedDim:
    """(theta, theta') via the hom-space graded dimension."""
    theta, theta2 = tuple(theta), tuple(theta2)
    if divided_weight(theta) != divided_weight(theta2):
        return GradedDim.zero()
    gd = ring.gdim_hom(expand(theta2), expand(theta))
    return _divide_factorial(gd.divide_poly(factorial_poly(theta2)), theta)


def pair_recursive(ring, theta, theta2) -> GradedDim:
    """(theta, theta') via the coproduct adjunction, an independent route.

    Peels letters of the expansion of theta' through (x, y i) =
    sum (r(x)_left, y)(r(x)_right, i), with (i^(1), i) = 1/(1-q^2) and
    (1, 1) = 1; finally divides by theta'! since [P_expansion] =
    theta'! [P_theta'].
    """
    theta, theta2 = tuple(theta), tuple(theta2)
    if divided_weight(theta) != divided_weight(theta2):
        return GradedDim.zero()
    raw = _pair_plain(ring, theta, expand(theta2))
    return _divide_factorial(raw, theta2)


def _pair_plain(ring, theta, plain_seq):
    if not plain_seq:
        return GradedDim.one() if not theta else GradedDim.zero()
    last = plain_seq[-1]
    out = GradedDim.zero()
    single = ((last, 1),)
    for left, right, coeff in comultiply(ring.graph, theta):
        if right != single:
            continue
        sub = _pair_plain(ring, left, plain_seq[:-1])
        if sub.is_zero():
            continue
        out = out + sub * coeff * GradedDim(LaurentPoly.one(), (1,))
    return out


def pair_k0(ring, u: K0Vector, theta) -> GradedDim:
    """Pair a K0 vector against a single monomial."""
    out = GradedDim.zero()
    for sym, c in u.coeffs.items():
        p = pair_monomials(ring, sym, theta)
        if not p.is_zero():
            out = out + p * c
    return out


def equal_in_f(ring, u: K0Vector, v: K0Vector) -> bool:
    """True iff u - v pairs to zero against every plain monomial.

    Plain monomials span the weight space and the form is non-degenerate,
    so this decides equality of the underlying classes.
    """
    if u.weight != v.weight:
        return False
    diff = u - v
    for seq in seq_enumerate(u.weight):
        theta = tuple((x, 1) for x in seq)
        if not (pair_k0(ring, diff, theta) == 0):
            return False
    return True


def bar_k0(u: K0Vector) -> K0Vector:
    """q -> 1/q on coefficients; monomial symbols are bar-invariant."""
    return K0Vector(u.weight, {k: c.bar() for k, c in u.coeffs.items()})


def sigma_k0(u: K0Vector) -> K0Vector:
    """Reverse every divided sequence; coefficients unchanged."""
    return K0Vector(u.weight, {reverse(k): c for k, c in u.coeffs.items()})


# -- tightness -------------------------------------------------------------

class TightReport:
    __slots__ = ("theta", "tight", "cutoff", "constant_term", "first_bad")

    def __init__(self, theta, tight, cutoff, constant_term, first_bad):
        self.theta = theta
        self.tight = tight
        self.cutoff = cutoff
        self.constant_term = constant_term
        self.first_bad = first_bad  # (exponent, coefficient) or None

    def to_json(self):
        return {"monomial": format_divided(self.theta),
                "tight": self.tight,
                "cutoff": self.cutoff,
                "constant_term": self.constant_term,
                "first_bad": list(self.first_bad) if self.first_bad else None}

    def __str__(self):
        if self.tight:
            return f"TIGHT (up to q^{self.cutoff})"
        e, c = self.first_bad
        if e == 0:
            return f"NOT TIGHT: constant term {self.constant_term}"
        return f"NOT TIGHT: coefficient of q^{e} is {c}"


def tight(ring, theta, cutoff=20) -> TightReport:
    """Is the self-pairing in 1 + q N[[q]], up to the cutoff exponent?"""
    theta = tuple(theta)
    series = pair_monomials(ring, theta, theta).series(cutoff)
    if not series.is_zero() and series.min_exp() < 0:
        raise MalformedPairingError(
            f"self-pairing of {format_divided(theta)} has a q^"
            f"{series.min_exp()} term")
    constant = series[0]
    first_bad = None
    if constant != 1:
        first_bad = (0, constant)
    else:
        for e in range(1, cutoff + 1):
            if series[e] < 0:
                first_bad = (e, series[e])
                break
    return TightReport(theta, first_bad is None, cutoff, constant, first_bad)


# -- structural checks -----------------------------------------------------

def serre_check(ring, i, j) -> bool:
    """K0-level Serre relations between two distinct vertices."""
    assert i != j
    two = LaurentPoly({1: 1, -1: 1})
    if ring.graph.cartan(i, j) == 0:
        return equal_in_f(ring, K0Vector.monomial(((i, 1), (j, 1))),
                          K0Vector.monomial(((j, 1), (i, 1))))
    iji = K0Vector.monomial(((i, 1), (j, 1), (i, 1)))
    iij = K0Vector.monomial(((i, 1), (i, 1), (j, 1)))
    jii = K0Vector.monomial(((j, 1), (i, 1), (i, 1)))
    d2j = K0Vector.monomial(((i, 2), (j, 1)))
    jd2 = K0Vector.monomial(((j, 1), (i, 2)))
    return (equal_in_f(ring, iji.scale(two), iij + jii)
            and equal_in_f(ring, iji, d2j + jd2))


def orthogonal_idempotents_check(ring, i, j) -> bool:
    """The triple crossings on iji split 1_iji into orthogonal idempotents."""
    assert ring.graph.cartan(i, j) == -1
    seq = (i, j, i)
    e1 = ring.evaluate_word(seq, [("C", 1), ("C", 2), ("C", 1)])
    e2 = -ring.evaluate_word(seq, [("C", 2), ("C", 1), ("C", 2)])
    one = ring.idempotent(seq)
    return (e1 * e1 == e1 and e2 * e2 == e2
            and (e1 * e2).is_zero() and (e2 * e1).is_zero()
            and e1 + e2 == one)


def cycle_alpha(ring, n):
    """The degree-0 block-swap element on the doubled cycle sequence.

    Returns (alpha, alpha squared).  alpha is the basis element of the
    permutation sending position a to a+n mod 2n over the sequence
    1 2 ... n 1 2 ... n; its defining properties (degree 0, endomorphism of
    the sequence, the degree-0 sector being two-dimensional) are asserted.
    """
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    verts = tuple(str(k) for k in range(1, n + 1))
    assert set(verts) <= set(ring.graph.vertices), "ring is not over the n-cycle"
    seq = verts + verts
    w = tuple((a + n) % (2 * n) for a in range(2 * n))
    m = 2 * n
    alpha = ring.element({(seq, w, (0,) * m): 1})
    assert alpha.degree() == 0
    from .permutations import apply_perm_to_seq
    assert apply_perm_to_seq(w, seq) == seq
    sector = ring.gdim_hom(seq, seq).series(0)
    assert sector[0] == 2, "degree-0 endomorphism sector should be {1, alpha}"
    return alpha, alpha * alpha
