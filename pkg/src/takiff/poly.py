"""Sparse exact polynomials in h and hb.

BiPoly is the workhorse: an element of Q[h, hb] stored as a dict
mapping exponent pairs (i, j) -> coefficient, zero coefficients never
stored.  ``h`` is the Cartan variable, ``hb`` ("h bar") its degree-one
partner; the module actions are built from three primitive moves on
BiPoly: shift of h, differentiation in hb, and multiplication.

UniPoly is the one-variable restriction Q[hb], used for the
polynomial parameters alpha(hb), beta(hb) and for induced-module
coefficients.

The degree of the zero polynomial is None, deliberately: callers must
treat "no degree" explicitly instead of relying on a -1 sentinel
surviving arithmetic.
"""

from math import comb

from .scalars import Q, ZERO, format_scalar, parse_scalar, ScalarParseError


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _strip_zeros(d):
    return {k: c for k, c in d.items() if c != 0}


class BiPoly:
    """Polynomial in Q[h, hb], sparse dict of (h-exp, hb-exp) -> Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _strip_zeros(terms) if terms else {}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        c = Q(c)
        return cls({(0, 0): c}) if c != 0 else cls()

    @classmethod
    def monomial(cls, c, i, j):
        c = Q(c)
        if i < 0 or j < 0:
            raise ValueError("negative exponent in monomial")
        return cls({(i, j): c}) if c != 0 else cls()

    @classmethod
    def var_h(cls):
        return cls({(1, 0): Q(1)})

    @classmethod
    def var_hb(cls):
        return cls({(0, 1): Q(1)})

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            out = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    k = (i1 + i2, j1 + j2)
                    s = out.get(k, ZERO) + c1 * c2
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
            return BiPoly._raw(out)
        # scalar
        c = Q(other)
        if c == 0:
            return BiPoly()
        return BiPoly._raw({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"BiPoly({self.text()!r})"

    @classmethod
    def _raw(cls, d):
        p = cls.__new__(cls)
        p.terms = d
        return p

    # -- the three primitive moves --------------------------------------

    def shift_h(self, delta):
        """p(h, hb) -> p(h + delta, hb), delta an exact rational."""
        delta = Q(delta)
        if delta == 0 or not self.terms:
            return self
        out = {}
        for (i, j), c in self.terms.items():
            for t in range(i + 1):
                k = (t, j)
                s = out.get(k, ZERO) + c * comb(i, t) * delta ** (i - t)
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiPoly._raw(out)

    def dbar(self):
        """Partial derivative in hb."""
        out = {}
        for (i, j), c in self.terms.items():
            if j:
                out[(i, j - 1)] = c * j
        return BiPoly._raw(out)

    # -- inspection -----------------------------------------------------

    def deg_h(self):
        """h-degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(i for i, _ in self.terms)

    def deg_hb(self):
        if not self.terms:
            return None
        return max(j for _, j in self.terms)

    def coefficient(self, i, j):
        return self.terms.get((i, j), ZERO)

    def divisible_by_hb(self):
        """True iff every term carries a positive hb power (zero counts)."""
        return all(j >= 1 for _, j in self.terms)

    def is_zero(self):
        return not self.terms

    # -- text -----------------------------------------------------------

    def text(self):
        """Canonical form: terms in descending lex (h-exp, hb-exp) order."""
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            parts.append(_format_term(self.terms[(i, j)], (("h", i), ("hb", j))))
        return " + ".join(parts)

    @classmethod
    def parse(cls, text):
        return _parse_poly(text, allow_h=True)


class UniPoly:
    """Polynomial in Q[hb], sparse dict of hb-exp -> Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _strip_zeros(terms) if terms else {}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        c = Q(c)
        return cls({0: c}) if c != 0 else cls()

    @classmethod
    def monomial(cls, c, j):
        c = Q(c)
        if j < 0:
            raise ValueError("negative exponent in monomial")
        return cls({j: c}) if c != 0 else cls()

    @classmethod
    def var_hb(cls):
        return cls({1: Q(1)})

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return UniPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            out = {}
            for j1, c1 in self.terms.items():
                for j2, c2 in other.terms.items():
                    k = j1 + j2
                    s = out.get(k, ZERO) + c1 * c2
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
            return UniPoly(out)
        c = Q(other)
        return UniPoly({k: c * v for k, v in self.terms.items()}) if c else UniPoly()

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"UniPoly({self.text()!r})"

    def derivative(self):
        return UniPoly({j - 1: c * j for j, c in self.terms.items() if j})

    def deg(self):
        if not self.terms:
            return None
        return max(self.terms)

    def coefficient(self, j):
        return self.terms.get(j, ZERO)

    def is_zero(self):
        return not self.terms

    def to_bipoly(self):
        return BiPoly({(0, j): c for j, c in self.terms.items()})

    def eval_at(self, x):
        x = Q(x)
        return sum((c * x**j for j, c in self.terms.items()), ZERO)

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for j in sorted(self.terms, reverse=True):
            parts.append(_format_term(self.terms[j], (("hb", j),)))
        return " + ".join(parts)

    @classmethod
    def parse(cls, text):
        p = _parse_poly(text, allow_h=False)
        return cls({j: c for (_, j), c in p.terms.items()})


def _format_term(coeff, factors):
    pieces = []
    for name, e in factors:
        if e == 1:
            pieces.append(name)
        elif e > 1:
            pieces.append(f"{name}^{e}")
    if not pieces:
        return format_scalar(coeff)
    if coeff == 1:
        return "*".join(pieces)
    if coeff == -1:
        return "-" + "*".join(pieces)
    return "*".join([format_scalar(coeff)] + pieces)


# -- parsing ------------------------------------------------------------
#
# poly   := [sign] term (sign term)*
# term   := factor ('*' factor)*
# factor := number | var ['^' digits]
# number := digits ['/' digits]
# var    := 'hb' | 'h'


def _tokenize(text):
    tokens = []  # (kind, value, position)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == "/":
                i += 1
                if i >= n or not text[i].isdigit():
                    raise PolyParseError("expected digits after '/'", i)
                while i < n and text[i].isdigit():
                    i += 1
            tokens.append(("num", text[start:i], start))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            tokens.append(("name", text[start:i], start))
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    return tokens


def _parse_poly(text, allow_h):
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    result = {}
    pos = 0
    n = len(tokens)

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    while pos < n:
        sign = Q(1)
        while pos < n and tokens[pos][0] in "+-":
            if tokens[pos][0] == "-":
                sign = -sign
            pos += 1
        if pos >= n:
            raise PolyParseError("dangling sign", tokens[-1][2])
        coeff = sign
        exps = {"h": 0, "hb": 0}
        expecting_factor = True
        while expecting_factor:
            kind, value, at = take()
            if kind == "num":
                try:
                    coeff = coeff * parse_scalar(value)
                except ScalarParseError:
                    raise PolyParseError(f"bad number {value!r}", at) from None
            elif kind == "name":
                if value not in ("h", "hb"):
                    raise PolyParseError(f"unknown variable {value!r}", at)
                if value == "h" and not allow_h:
                    raise PolyParseError("variable 'h' not allowed here", at)
                e = 1
                if pos < n and tokens[pos][0] == "^":
                    pos += 1
                    if pos >= n or tokens[pos][0] != "num" or "/" in tokens[pos][1]:
                        raise PolyParseError("expected integer exponent after '^'",
                                             tokens[pos - 1][2])
                    e = int(tokens[pos][1])
                    pos += 1
                exps[value] += e
            else:
                raise PolyParseError(f"unexpected token {value!r}", at)
            if pos < n and tokens[pos][0] == "*":
                pos += 1
                if pos >= n:
                    raise PolyParseError("dangling '*'", tokens[-1][2])
            else:
                expecting_factor = False
        key = (exps["h"], exps["hb"])
        s = result.get(key, ZERO) + coeff
        if s:
            result[key] = s
        else:
            result.pop(key, None)
    return BiPoly(result)
