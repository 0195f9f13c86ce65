"""Normal-form arithmetic in the diagram ring R(nu) of a Cartan graph.

Elements are integer combinations of basis keys (i, w, u): bottom sequence
i, permutation w rendered as the crossings of its canonical (lex-min)
reduced word, and a monomial of dots x^u at the bottom.  Multiplication
rewrites any stacked diagram back into this basis using the local relations:

* a double crossing is 0 (equal labels), the identity (pairing 0), or a sum
  of two single dots (pairing -1);
* dots slide freely through distinct-label crossings, and through an
  equal-label crossing at the cost of +/- the diagram with that crossing
  deleted;
* two reduced words of the same permutation differ by braid moves, and a
  braid move whose outer strands carry equal labels adjacent to the middle
  label costs +/- the diagram with the three crossings deleted.

The directed rewriting primitive is ``_bring_to_front``: move a chosen
descent crossing to the top of a reduced word by commutation and braid
moves, collecting correction words.  Iterating it canonicalizes any word.
All per-generator products are cached per (letter, sequence, permutation);
dots at the bottom commute with everything below them, so the cache ignores
the dot vector and the shift is applied afterwards.
"""

from __future__ import annotations

from .cartan import weight_of_seq
from .gdim import GradedDim
from .laurent import LaurentPoly
from .permutations import (
    all_permutations,
    apply_perm_to_seq,
    apply_word_to_seq,
    block_sum,
    canonical_word,
    identity,
    inverse,
    inversions,
    left_mult_letter,
    longest_element,
    word_to_perm,
)


class WeightMismatchError(ValueError):
    """Operands live over different weights."""


class InhomogeneousError(ValueError):
    """Degree requested for a zero or inhomogeneous element."""


def diagram_degree(graph, seq, w):
    """Sum of -(i_a . i_b) over the inversions of w on the labeled strands."""
    return -sum(graph.cartan(seq[a], seq[b]) for a, b in inversions(w))


def _acc(target, terms, scalar=1):
    for key, c in terms.items():
        v = target.get(key, 0) + scalar * c
        if v:
            target[key] = v
        else:
            target.pop(key, None)


def _shift_u(terms, u):
    if not any(u):
        return dict(terms)
    return {(i, w, tuple(a + b for a, b in zip(uu, u))): c
            for (i, w, uu), c in terms.items()}


class KLRElement:
    """An element of R(nu) in normal form (immutable by convention)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if c != 0}

    @property
    def weight(self):
        for (i, _, _) in self.terms:
            return weight_of_seq(i)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, KLRElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        _acc(out, other.terms)
        return KLRElement(self.ring, out)

    def __neg__(self):
        return KLRElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return KLRElement(self.ring, {k: c * other for k, c in self.terms.items()})
        return self.ring.multiply(self, other)

    def __rmul__(self, other):
        assert isinstance(other, int)
        return KLRElement(self.ring, {k: c * other for k, c in self.terms.items()})

    def degree(self):
        """Common degree of all terms; raises if zero or inhomogeneous."""
        degs = {diagram_degree(self.ring.graph, i, w) + 2 * sum(u)
                for (i, w, u) in self.terms}
        if not degs:
            raise InhomogeneousError("degree of the zero element is undefined")
        if len(degs) > 1:
            return "inhomogeneous"
        return degs.pop()

    # -- io ----------------------------------------------------------------

    def to_json(self):
        return [{"source": list(i),
                 "permutation": [x + 1 for x in w],
                 "dots": list(u),
                 "coeff": str(c)}
                for (i, w, u), c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, w, u) in sorted(self.terms,
                                key=lambda k: (k[0], k[1],
                                               tuple(-x for x in k[2]))):
            c = self.terms[(i, w, u)]
            factors = [f"s{l}" for l in canonical_word(w)]
            factors += [f"x{p+1}" if e == 1 else f"x{p+1}^{e}"
                        for p, e in enumerate(u) if e]
            body = "*".join(factors) if factors else "1"
            seq = "".join(i) if all(len(v) == 1 for v in i) else " ".join(i)
            if c == 1:
                t = f"{body}[{seq}]"
            elif c == -1:
                t = f"-{body}[{seq}]"
            else:
                t = f"{c}*{body}[{seq}]"
            parts.append(t)
        s = parts[0]
        for t in parts[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s

    __repr__ = __str__


class KLRRing:
    """The rings R(nu) for all weights over a fixed Cartan graph."""

    def __init__(self, graph):
        self.graph = graph
        self._cross_cache = {}
        self._dot_cache = {}
        self._word_cache = {}
        self._rword_cache = {}
        self._bring_cache = {}

    # -- constructors ------------------------------------------------------

    def element(self, terms):
        return KLRElement(self, terms)

    def zero(self):
        return KLRElement(self, {})

    def element_from_json(self, data):
        terms = {}
        for obj in data:
            key = (tuple(obj["source"]),
                   tuple(x - 1 for x in obj["permutation"]),
                   tuple(obj["dots"]))
            terms[key] = terms.get(key, 0) + int(obj["coeff"])
        return KLRElement(self, terms)

    def idempotent(self, seq):
        seq = tuple(seq)
        m = len(seq)
        return KLRElement(self, {(seq, identity(m), (0,) * m): 1})

    def generator(self, token, seq):
        """token = ('D', k) for a dot or ('C', k) for a crossing, 1-based."""
        seq = tuple(seq)
        m = len(seq)
        typ, k = token
        if typ == "D":
            if not 1 <= k <= m:
                raise IndexError(f"dot position {k} out of range for {m} strands")
            u = tuple(1 if p == k - 1 else 0 for p in range(m))
            return KLRElement(self, {(seq, identity(m), u): 1})
        if typ == "C":
            if not 1 <= k <= m - 1:
                raise IndexError(f"crossing {k} out of range for {m} strands")
            w = tuple(k if x == k - 1 else k - 1 if x == k else x for x in range(m))
            return KLRElement(self, {(seq, w, (0,) * m): 1})
        raise ValueError(f"unknown token type {typ!r}")

    def evaluate_word(self, seq, tokens):
        """Stack generator tokens bottom-to-top over the idempotent of seq."""
        seq = tuple(seq)
        m = len(seq)
        acc = {(seq, identity(m), (0,) * m): 1}
        for typ, k in tokens:
            if typ == "D":
                if not 1 <= k <= m:
                    raise IndexError(f"dot position {k} out of range")
                acc = self._elem_dot(k, acc)
            elif typ == "C":
                if not 1 <= k <= m - 1:
                    raise IndexError(f"crossing {k} out of range")
                acc = self._elem_cross(k, acc)
            else:
                raise ValueError(f"unknown token type {typ!r}")
        return KLRElement(self, acc)

    # -- ring operations ---------------------------------------------------

    def multiply(self, x, y):
        wx, wy = x.weight, y.weight
        if wx is not None and wy is not None and wx != wy:
            raise WeightMismatchError(f"weights differ: {wx} vs {wy}")
        out = {}
        for (ix, px, ux), cx in x.terms.items():
            word_x = tuple(reversed(canonical_word(px)))
            for (iy, py, uy), cy in y.terms.items():
                if apply_perm_to_seq(py, iy) != ix:
                    continue
                acc = {(iy, py, uy): cx * cy}
                for pos, mult in enumerate(ux):
                    for _ in range(mult):
                        acc = self._elem_dot(pos + 1, acc)
                for letter in word_x:
                    acc = self._elem_cross(letter, acc)
                _acc(out, acc)
        return KLRElement(self, out)

    def psi(self, x):
        """Horizontal flip: antiautomorphism fixing idempotents and dots."""
        out = {}
        for (i, w, u), c in x.terms.items():
            top = apply_perm_to_seq(w, i)
            acc = self._word_elem(top, tuple(reversed(canonical_word(w))))
            for pos, mult in enumerate(u):
                for _ in range(mult):
                    acc = self._elem_dot(pos + 1, acc)
            _acc(out, acc, c)
        return KLRElement(self, out)

    def sigma(self, x):
        """Vertical flip with sign (-1)^(number of equal-label crossings)."""
        out = {}
        for (i, w, u), c in x.terms.items():
            m = len(i)
            sign = 1
            for a, b in inversions(w):
                if i[a] == i[b]:
                    sign = -sign
            i2 = tuple(reversed(i))
            word2 = tuple(m - l for l in canonical_word(w))
            acc = _shift_u(self._word_elem(i2, word2), tuple(reversed(u)))
            _acc(out, acc, sign * c)
        return KLRElement(self, out)

    def juxtapose(self, x, y):
        """Place diagrams side by side (the non-unital inclusion)."""
        out = {}
        for (i1, w1, u1), c1 in x.terms.items():
            for (i2, w2, u2), c2 in y.terms.items():
                key = (i1 + i2, block_sum(w1, w2), u1 + u2)
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
        return KLRElement(self, out)

    def gdim_hom(self, seq_j, seq_i):
        """Graded dimension of the (j, i) sector, a GradedDim."""
        seq_i, seq_j = tuple(seq_i), tuple(seq_j)
        if weight_of_seq(seq_i) != weight_of_seq(seq_j):
            raise WeightMismatchError("sequences have different weights")
        m = len(seq_i)
        num = LaurentPoly.zero()
        for w in all_permutations(m):
            if apply_perm_to_seq(w, seq_i) == seq_j:
                num = num + LaurentPoly.q_power(
                    diagram_degree(self.graph, seq_i, w))
        return GradedDim(num, (1,) * m)

    def nilhecke_em(self, m, vertex):
        """The degree-0 primitive idempotent on m equal-label strands.

        In normal form this is the single key (longest element, staircase
        dots (m-1, m-2, ..., 0)).
        """
        seq = (vertex,) * m
        u = tuple(range(m - 1, -1, -1))
        return KLRElement(self, {(seq, longest_element(m), u): 1})

    def divided_idempotent(self, divided):
        """Tensor product of the nilHecke block idempotents."""
        out = KLRElement(self, {((), (), ()): 1})
        for v, n in divided:
            out = self.juxtapose(out, self.nilhecke_em(n, v))
        return out

    # -- rewriting kernel --------------------------------------------------

    def _elem_cross(self, k, terms):
        out = {}
        for (i, w, u), c in terms.items():
            _acc(out, _shift_u(self._cross(k, i, w), u), c)
        return out

    def _elem_dot(self, k, terms):
        out = {}
        for (i, w, u), c in terms.items():
            _acc(out, _shift_u(self._dot(k, i, w), u), c)
        return out

    def _cross(self, k, i, w):
        """Normal form of crossing k stacked on top of the basis diagram w."""
        key = (k, i, w)
        hit = self._cross_cache.get(key)
        if hit is not None:
            return hit
        m = len(i)
        inv = inverse(w)
        v = left_mult_letter(k, w)
        if inv[k - 1] < inv[k]:
            # length goes up: the word k + canonical(w) is reduced for v
            cw = canonical_word(w)
            if canonical_word(v) == (k,) + cw:
                out = {(i, v, (0,) * m): 1}
            else:
                out = self._reduced_word_elem(i, (k,) + cw)
        else:
            # length goes down: expose the double crossing at the top
            w1, corrs = self._bring_to_front(k, canonical_word(w), i)
            rest = w1[1:]
            below = apply_perm_to_seq(v, i)
            la, lb = below[k - 1], below[k]
            out = {}
            if la == lb:
                pass  # double crossing of equal labels is zero
            elif self.graph.cartan(la, lb) == 0:
                _acc(out, self._reduced_word_elem(i, rest))
            else:
                inner = self._reduced_word_elem(i, rest)
                _acc(out, self._elem_dot(k, inner))
                _acc(out, self._elem_dot(k + 1, inner))
            for sign, cword in corrs:
                _acc(out, self._elem_cross(k, self._word_elem(i, cword)), sign)
        self._cross_cache[key] = out
        return out

    def _dot(self, k, i, w):
        """Normal form of a dot at top position k over the basis diagram w."""
        key = (k, i, w)
        hit = self._dot_cache.get(key)
        if hit is not None:
            return hit
        word = canonical_word(w)
        r = len(word)
        # sequence at the level just below each crossing, top-to-bottom
        below_seq = [None] * r
        cur = i
        for t in range(r - 1, -1, -1):
            below_seq[t] = cur
            c = word[t]
            lst = list(cur)
            lst[c - 1], lst[c] = lst[c], lst[c - 1]
            cur = tuple(lst)
        out = {}
        p = k
        for t in range(r):
            c = word[t]
            if p != c and p != c + 1:
                continue
            if below_seq[t][c - 1] != below_seq[t][c]:
                p = c + 1 if p == c else c
            else:
                deleted = word[:t] + word[t + 1:]
                if p == c:
                    _acc(out, self._word_elem(i, deleted), 1)
                    p = c + 1
                else:
                    _acc(out, self._word_elem(i, deleted), -1)
                    p = c
        u = tuple(1 if a == p - 1 else 0 for a in range(len(i)))
        _acc(out, {(i, w, u): 1})
        self._dot_cache[key] = out
        return out

    def _word_elem(self, i, word):
        """Normal form of an arbitrary crossing word (top-to-bottom) over i."""
        key = (i, word)
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            m = len(i)
            out = {(i, identity(m), (0,) * m): 1}
        else:
            out = self._elem_cross(word[0], self._word_elem(i, word[1:]))
        self._word_cache[key] = out
        return out

    def _reduced_word_elem(self, i, word):
        """Normal form of a reduced word over i, via canonicalization."""
        key = (i, word)
        hit = self._rword_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            m = len(i)
            out = {(i, identity(m), (0,) * m): 1}
        else:
            v = word_to_perm(word, len(i))
            c = canonical_word(v)[0]
            w1, corrs = self._bring_to_front(c, word, i)
            out = self._elem_cross(c, self._reduced_word_elem(i, w1[1:]))
            for sign, cword in corrs:
                _acc(out, self._word_elem(i, cword), sign)
        self._rword_cache[key] = out
        return out

    def _bring_to_front(self, c, word, i):
        """Rewrite a reduced word to start with the left descent c.

        Returns (new_word, corrections) where each correction is (sign,
        word-with-three-fewer-letters) over the same bottom sequence, so
        that  word == new_word + sum sign * correction  as diagrams.
        """
        key = (c, word, i)
        hit = self._bring_cache.get(key)
        if hit is not None:
            return hit
        a = word[0]
        if a == c:
            result = (word, ())
        elif abs(a - c) >= 2:
            w1, sub = self._bring_to_front(c, word[1:], i)
            corrs = tuple((s, (a,) + cw) for s, cw in sub)
            result = ((c, a) + w1[1:], corrs)
        else:
            w1, sub = self._bring_to_front(c, word[1:], i)
            corrs = [(s, (a,) + cw) for s, cw in sub]
            w2, sub2 = self._bring_to_front(a, w1[1:], i)
            corrs += [(s, (a, c) + cw) for s, cw in sub2]
            rest = w2[1:]
            t = apply_word_to_seq(rest, i)
            mpos = min(a, c)
            if (t[mpos - 1] == t[mpos + 1]
                    and self.graph.cartan(t[mpos - 1], t[mpos]) == -1):
                corrs.append((1 if a == mpos else -1, rest))
            result = ((c, a, c) + rest, tuple(corrs))
        self._bring_cache[key] = result
        return result
