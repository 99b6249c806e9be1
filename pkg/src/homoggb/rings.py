"""Ring descriptors and monomial arithmetic for both monomial kinds."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .orderings import HOMOG_LETTER, OrderingSpec, letter, letter_index, sort_key
from .scalars import QQ, Field

COMM = "comm"
FREE = "free"


@dataclass(frozen=True)
class RingDescriptor:
    """A polynomial ring ``K[x_1..x_n(,t)]`` or free algebra ``K<X_1..X_n(,T)>``.

    ``variables`` are listed from highest to lowest precedence; the ring's
    graded lex order ranks ``variables[0]`` above every other variable.  The
    optional ``homog_var`` is always of weight 1 and ranks below all of them.
    """

    kind: str
    variables: tuple
    weights: tuple = None
    homog_var: str | None = None
    field: Field = QQ

    def __post_init__(self):
        if self.kind not in (COMM, FREE):
            raise ValueError(f"ring kind must be {COMM!r} or {FREE!r}, got {self.kind!r}")
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * len(self.variables))
        else:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("variable weights must be positive")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        for name in self.variables + ((self.homog_var,) if self.homog_var else ()):
            if not name.isidentifier():
                raise ValueError(f"invalid variable name {name!r}")
        if self.homog_var is not None and self.homog_var in self.variables:
            raise ValueError(f"homogenizing variable {self.homog_var!r} clashes with a ring variable")

    # -- derived structure -------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_free(self) -> bool:
        return self.kind == FREE

    @cached_property
    def ordering(self) -> OrderingSpec:
        return OrderingSpec(self.kind, self.variables, self.weights, self.homog_var)

    @cached_property
    def key(self):
        return sort_key(self.ordering)

    @cached_property
    def all_names(self) -> tuple:
        if self.homog_var is None:
            return self.variables
        return self.variables + (self.homog_var,)

    def extend(self, homog_var: str = None) -> "RingDescriptor":
        """The same ring with a homogenizing variable adjoined."""
        if self.homog_var is not None:
            raise ValueError("ring already has a homogenizing variable")
        if homog_var is None:
            homog_var = "T" if self.is_free else "t"
        return RingDescriptor(self.kind, self.variables, self.weights, homog_var, self.field)

    def base(self) -> "RingDescriptor":
        """The same ring with the homogenizing variable removed."""
        return RingDescriptor(self.kind, self.variables, self.weights, None, self.field)

    # -- monomials ---------------------------------------------------------

    @cached_property
    def one(self):
        """The identity monomial."""
        if self.is_free:
            return ""
        return (0,) * len(self.all_names)

    def var_monomial(self, name: str):
        if name == self.homog_var and name is not None:
            if self.is_free:
                return HOMOG_LETTER
            return (0,) * self.nvars + (1,)
        try:
            i = self.variables.index(name)
        except ValueError:
            raise KeyError(name) from None
        if self.is_free:
            return letter(i, self.nvars)
        e = [0] * len(self.all_names)
        e[i] = 1
        return tuple(e)

    def monomial(self, spec):
        """Build a monomial from names.

        Commutative: a mapping ``{name: exponent}`` or an exponent sequence
        aligned with :attr:`all_names`.  Free: a sequence of names.
        """
        if self.is_free:
            if isinstance(spec, str):
                spec = [spec]
            return "".join(self.var_monomial(name) for name in spec)
        if isinstance(spec, dict):
            e = [0] * len(self.all_names)
            for name, k in spec.items():
                e[self.all_names.index(name)] += k
            return tuple(e)
        e = tuple(int(k) for k in spec)
        if len(e) != len(self.all_names) or min(e, default=0) < 0:
            raise ValueError("bad exponent vector")
        return e

    def names_of(self, m) -> list:
        """Free kind: the letters of a word as variable names."""
        n = self.nvars
        return [self.all_names[letter_index(c, n)] for c in m]

    def mono_degree(self, m) -> int:
        if self.is_free:
            n = self.nvars
            total = 0
            for c in m:
                i = letter_index(c, n)
                total += 1 if i == n else self.weights[i]
            return total
        d = sum(a * b for a, b in zip(m, self.weights))
        if self.homog_var is not None:
            d += m[-1]
        return d

    def mono_mul(self, a, b):
        if self.is_free:
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    def homog_power(self, r: int):
        """The monomial ``t^r`` (or ``T^r``)."""
        if self.homog_var is None:
            raise ValueError("ring has no homogenizing variable")
        if self.is_free:
            return HOMOG_LETTER * r
        return (0,) * self.nvars + (r,)

    def monomials_of_degree(self, d: int) -> list:
        """All monomials of weighted degree ``d``, ascending in the ring order."""
        if self.is_free:
            out = self._words_of_degree(d)
        else:
            weights = self.weights + ((1,) if self.homog_var is not None else ())
            out = []
            for e in product(*(range(d // w + 1) for w in weights)):
                if sum(a * b for a, b in zip(e, weights)) == d:
                    out.append(tuple(e))
        out.sort(key=self.key)
        return out

    def _words_of_degree(self, d: int) -> list:
        letters = [(self.var_monomial(v), w) for v, w in zip(self.variables, self.weights)]
        if self.homog_var is not None:
            letters.append((HOMOG_LETTER, 1))
        table = {0: [""]}
        for k in range(1, d + 1):
            table[k] = [
                c + rest
                for c, w in letters
                if w <= k
                for rest in table[k - w]
            ]
        return table[d]

    def format_monomial(self, m) -> str:
        """``t^2*x*y^3`` style; the identity prints as ``1``."""
        if self.is_free:
            names = self.names_of(m)
            parts = []
            i = 0
            while i < len(names):
                j = i
                while j < len(names) and names[j] == names[i]:
                    j += 1
                k = j - i
                parts.append(names[i] if k == 1 else f"{names[i]}^{k}")
                i = j
            return "*".join(parts) if parts else "1"
        names = self.all_names
        order = list(range(len(names)))
        if self.homog_var is not None:
            # the homogenizing variable prints first: t^2*x
            order = [len(names) - 1] + order[:-1]
        parts = []
        for i in order:
            k = m[i]
            if k == 1:
                parts.append(names[i])
            elif k > 1:
                parts.append(f"{names[i]}^{k}")
        return "*".join(parts) if parts else "1"

    # -- polynomials -------------------------------------------------------

    def __call__(self, text: str):
        """Parse a polynomial in this ring."""
        from .syntax import parse_polynomial

        return parse_polynomial(text, self)

    def gens(self) -> tuple:
        """The variables (and homogenizing variable) as polynomials."""
        from .polynomial import Polynomial

        one = self.field.one
        return tuple(Polynomial(self, {self.var_monomial(v): one}) for v in self.all_names)

    def describe(self) -> str:
        kind = "K<" if self.is_free else "K["
        close = ">" if self.is_free else "]"
        return f"{self.field!r}{kind[1:]}{','.join(self.all_names)}{close}"


def polynomial_ring(variables, weights=None, homog_var=None, field=QQ) -> RingDescriptor:
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    return RingDescriptor(COMM, tuple(variables), weights, homog_var, field)


def free_algebra(variables, weights=None, homog_var=None, field=QQ) -> RingDescriptor:
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    return RingDescriptor(FREE, tuple(variables), weights, homog_var, field)
