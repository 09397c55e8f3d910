"""Exact sparse multivariate polynomials and rational generating functions.

Coefficients are arbitrary-precision integers; a polynomial is a map from
exponent vectors to nonzero coefficients.  Rational generating functions
are numerator/denominator pairs whose first variable is the length marker
``x``; series expansion is linear-recurrence long division on the x-slices.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class MultiPoly:
    """Immutable sparse polynomial over named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[tuple[int, ...], int] | None = None):
        object.__setattr__(self, "variables", tuple(variables))
        clean: dict[tuple[int, ...], int] = {}
        arity = len(self.variables)
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ValueError(f"exponent vector {exps} has arity {len(exps)}, "
                                 f"expected {arity}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coef:
                clean[exps] = clean.get(exps, 0) + coef
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: int) -> "MultiPoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def monomial(cls, variables: Sequence[str], coef: int = 1,
                 **exps: int) -> "MultiPoly":
        variables = tuple(variables)
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        key = tuple(exps.get(v, 0) for v in variables)
        return cls(variables, {key: coef})

    # -- ring operations ----------------------------------------------

    def _check_same(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(self.variables, other)
        self._check_same(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.constant(self.variables, other) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self.variables,
                             {e: c * other for e, c in self.terms.items()})
        self._check_same(other)
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MultiPoly)
                and self.variables == other.variables
                and self.terms == other.terms)

    __hash__ = None  # mutable-looking equality; not hashable

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ----------------------------------------------------

    def specialize(self, values: Mapping[str, int]) -> "MultiPoly":
        """Substitute integers for some variables; the rest remain."""
        unknown = set(values) - set(self.variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        keep = [i for i, v in enumerate(self.variables) if v not in values]
        out: dict[tuple[int, ...], int] = {}
        for exps, coef in self.terms.items():
            for i, v in enumerate(self.variables):
                if v in values:
                    coef *= values[v] ** exps[i]
            key = tuple(exps[i] for i in keep)
            out[key] = out.get(key, 0) + coef
        return MultiPoly(tuple(self.variables[i] for i in keep), out)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return MultiPoly(tuple(mapping.get(v, v) for v in self.variables), self.terms)

    def as_int(self) -> int:
        """The value of a variable-free (or constant) polynomial."""
        extra = [e for e in self.terms if any(e)]
        if extra:
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), 0)

    def weighted_total(self, var: str) -> int:
        """Sum of (exponent of var) * coefficient over all terms, i.e. the
        derivative in var evaluated with every variable set to 1."""
        idx = self.variables.index(var)
        return sum(e[idx] * c for e, c in self.terms.items())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order of the declared variables."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    # -- serialization ------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if coef < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_terms(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables!r}, {self.to_text()!r})"


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


class RationalGF:
    """Quotient of two polynomials whose first variable is the series
    variable ``x``; the denominator's constant term normalizes to 1."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: MultiPoly, denominator: MultiPoly):
        if numerator.variables != denominator.variables:
            raise ValueError("numerator and denominator must share variables")
        if not numerator.variables or numerator.variables[0] != "x":
            raise ValueError("the first variable must be the series variable x")
        arity = len(denominator.variables)
        const = denominator.terms.get((0,) * arity, 0)
        if const == 0:
            raise ValueError("denominator has no constant term; cannot expand")
        if const != 1:
            def exact_div(p: MultiPoly) -> MultiPoly:
                out = {}
                for e, c in p.terms.items():
                    if c % const:
                        raise ValueError(
                            f"denominator constant term {const} does not divide "
                            "all coefficients; normalization impossible")
                    out[e] = c // const
                return MultiPoly(p.variables, out)
            numerator = exact_div(numerator)
            denominator = exact_div(denominator)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RationalGF is immutable")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.numerator.variables

    @property
    def aux_variables(self) -> tuple[str, ...]:
        return self.variables[1:]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RationalGF)
                and self.numerator == other.numerator
                and self.denominator == other.denominator)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalGF(({self.numerator.to_text()}) / ({self.denominator.to_text()}))"


def _x_slices(p: MultiPoly) -> dict[int, MultiPoly]:
    """Split by the exponent of x into polynomials over the other variables."""
    aux = p.variables[1:]
    slices: dict[int, dict[tuple[int, ...], int]] = {}
    for exps, coef in p.terms.items():
        slices.setdefault(exps[0], {})[exps[1:]] = coef
    return {d: MultiPoly(aux, t) for d, t in slices.items()}


def expand(gf: RationalGF, n_max: int) -> list[MultiPoly]:
    """Coefficients of x^0..x^n_max as polynomials in the other variables.

    With numerator slices N_j and denominator slices D_j (D_0 = 1), the
    coefficients satisfy c_n = N_n - sum_{j>=1} D_j c_{n-j}.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    aux = gf.aux_variables
    num = _x_slices(gf.numerator)
    den = _x_slices(gf.denominator)
    if den.get(0) != MultiPoly.constant(aux, 1):
        raise ValueError("denominator's x^0 slice must be the constant 1")
    zero = MultiPoly.zero(aux)
    coeffs: list[MultiPoly] = []
    for n in range(n_max + 1):
        c = num.get(n, zero)
        for j, dj in den.items():
            if 1 <= j <= n:
                c = c - dj * coeffs[n - j]
        coeffs.append(c)
    return coeffs


def expand_ints(gf: RationalGF, n_max: int) -> list[int]:
    """expand() for a univariate gf, coefficients as plain integers."""
    if gf.aux_variables:
        raise ValueError("expand_ints requires a gf in x alone")
    return [c.as_int() for c in expand(gf, n_max)]


def total_weight_series(gf: RationalGF, var: str, n_max: int) -> list[int]:
    """For each n <= n_max, the total of the statistic marked by `var`:
    sum over terms of (exponent of var) * coefficient, all other
    auxiliary variables set to 1."""
    if var == "x":
        raise ValueError("x is the series variable, not a statistic marker")
    if var not in gf.aux_variables:
        raise ValueError(f"unknown variable {var!r}")
    return [c.weighted_total(var) for c in expand(gf, n_max)]


# ---------------------------------------------------------------------
# Family constructors.  Each builds the closed rational form directly;
# the verify module checks every coefficient against brute force.

def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"parameter k must be >= 2, got {k}")


def _build(variables: Sequence[str],
           terms: Iterable[tuple[int, tuple[int, ...]]]) -> MultiPoly:
    out: dict[tuple[int, ...], int] = {}
    for coef, exps in terms:
        out[exps] = out.get(exps, 0) + coef
    return MultiPoly(variables, out)


def gf_polyomino(k: int) -> RationalGF:
    """Generating function in (x, p, q): x marks word length, p the
    semiperimeter and q the area of the polyomino."""
    _check_k(k)
    v = ("x", "p", "q")
    num = _build(v, [
        (1, (1, 2, 1)), (1, (1, 3, 2)),
        (-1, (2, 3, 3)), (1, (2, 4, 3)),
        (-1, (k, k + 2, 2 * k)), (-1, (k + 1, k + 3, 2 * k + 1)),
    ])
    den = _build(v, [
        (1, (0, 0, 0)),
        (-1, (1, 1, 1)), (-1, (1, 1, 2)),
        (1, (2, 2, 3)), (-1, (2, 3, 3)),
        (1, (k + 1, k + 2, 2 * k + 1)),
    ])
    return RationalGF(num, den)


def gf_graph(k: int) -> RationalGF:
    """Generating function in (x, p, q): p marks edges, q marks vertices
    of the grid graph."""
    _check_k(k)
    v = ("x", "p", "q")
    num = _build(v, [
        (1, (1, 4, 4)), (1, (1, 7, 6)),
        (-1, (2, 9, 7)), (1, (2, 10, 8)),
        (-1, (k, 5 * k + 2, 3 * k + 3)), (-1, (k + 1, 5 * k + 5, 3 * k + 5)),
    ])
    den = _build(v, [
        (1, (0, 0, 0)),
        (-1, (1, 3, 2)), (-1, (1, 5, 3)),
        (1, (2, 8, 5)), (-1, (2, 9, 6)),
        (1, (k + 1, 5 * k + 4, 3 * k + 3)),
    ])
    return RationalGF(num, den)


def gf_degree(k: int) -> RationalGF:
    """Generating function in (x, q2, q3, q4): qd marks the number of
    degree-d vertices.  The closed form carries a global 1/q4 whose
    factor is present in every numerator term; it is cancelled here so
    all exponents stay non-negative."""
    _check_k(k)
    v = ("x", "q2", "q3", "q4")
    num = _build(v, [
        (1, (1, 4, 2, 0)), (1, (1, 4, 0, 0)),
        (-1, (2, 4, 2, 1)), (2, (2, 5, 2, 1)), (-1, (2, 4, 4, 0)),
        (-1, (k, 4, 2 * k, k - 1)),
        (1, (k + 1, 4, 2 * k + 2, k - 1)), (-2, (k + 1, 5, 2 * k, k)),
    ])
    den = _build(v, [
        (1, (0, 0, 0, 0)),
        (-1, (1, 0, 2, 0)), (-1, (1, 0, 2, 1)),
        (1, (2, 0, 4, 1)), (-1, (2, 2, 2, 2)),
        (1, (k + 1, 2, 2 * k, k + 1)),
    ])
    return RationalGF(num, den)


def gf_hamiltonian(k: int) -> RationalGF:
    """Generating function in (x, q): q marks whether the grid graph has a
    Hamiltonian cycle (exponent 1) or not (exponent 0)."""
    _check_k(k)
    v = ("x", "q")
    a = 2 * ((k - 1) // 2)
    b = 2 * (k // 2)
    x = MultiPoly.monomial(v, 1, x=1)
    q = MultiPoly.monomial(v, 1, q=1)
    one = MultiPoly.constant(v, 1)
    xp = lambda e: MultiPoly.monomial(v, 1, x=e)
    num = x * ((one - x) * x * (one - xp(a))
               - q * (one + x) * (one - 2 * x + xp(k + 1)) * (x + xp(b) - 2))
    den = (one - 2 * x + xp(k + 1)) * (one - x - 2 * x * x + xp(3) + xp(b + 2))
    return RationalGF(num, den)


_TOTAL_NAMES = ("area", "perimeter", "vertices", "edges", "deg2", "deg3", "deg4", "ham")


def gf_named_total(name: str, k: int) -> RationalGF:
    """Univariate generating function of a statistic's total over all
    words of each length: area, perimeter, vertices, edges, deg2, deg3,
    deg4 (vertex-degree counts) or ham (number of Hamiltonian graphs)."""
    _check_k(k)
    v = ("x",)
    if name == "ham":
        b = 2 * (k // 2)
        x = MultiPoly.monomial(v, 1, x=1)
        one = MultiPoly.constant(v, 1)
        xp = lambda e: MultiPoly.monomial(v, 1, x=e)
        num = x * (one + x) * (2 - x - xp(b))
        den = one - x - 2 * x * x + xp(3) + xp(b + 2)
        return RationalGF(num, den)
    try:
        num_terms = {
            "area": [(3, 1), (-2 * k, k), (-2 * (2 - k), k + 1), (1, 2 * k + 1)],
            "perimeter": [(5, 1), (-5, 2), (-(2 + k), k), (-(1 - k), k + 1),
                          (4, k + 2), (-1, 2 * k + 2)],
            "vertices": [(10, 1), (-9, 2), (-3 * (1 + k), k), (-(4 - 3 * k), k + 1),
                         (8, k + 2), (-2, 2 * k + 2)],
            "edges": [(11, 1), (-5, 2), (-(2 + 5 * k), k), (-(9 - 5 * k), k + 1),
                      (4, k + 2), (2, 2 * k + 1), (-1, 2 * k + 2)],
            "deg2": [(8, 1), (-14, 2), (-4, k), (2, k + 1), (14, k + 2),
                     (-2, 2 * k + 1), (-4, 2 * k + 2)],
            "deg3": [(2, 1), (2, 2), (-2 * k, k), (-2 * (1 - k), k + 1),
                     (-4, k + 2), (2, 2 * k + 2)],
            "deg4": [(3, 2), (1 - k, k), (-(4 - k), k + 1), (-2, k + 2),
                     (2, 2 * k + 1)],
        }[name]
    except KeyError:
        raise ValueError(f"unknown total {name!r}; expected one of {_TOTAL_NAMES}")
    num = _build(v, [(c, (e,)) for c, e in num_terms])
    den = _build(v, [(1, (0,)), (-2, (1,)), (1, (k + 1,))]) ** 2
    return RationalGF(num, den)


def gf_deg4_alternate(k: int) -> RationalGF:
    """The rejected candidate for the degree-4 total: same numerator but
    denominator (1 - 2x + 2x^(k+1))^2.  Kept only so the adjudication
    test can show where it first disagrees with brute force."""
    _check_k(k)
    adopted = gf_named_total("deg4", k)
    v = ("x",)
    den = _build(v, [(1, (0,)), (-2, (1,)), (2, (k + 1,))]) ** 2
    return RationalGF(adopted.numerator, den)
