"""Sparse bivariate truncated power series, log-series, and theta-operators.

A BiSeries holds exact rational coefficients keyed by exponent pairs
(m0, m1), keeping only nonzero entries with m0 + m1 <= order.  Truncation
is always by total degree.  Values are immutable by convention: no
operation mutates its inputs, and the constructor normalizes (drops zeros
and out-of-range exponents).
"""

from fractions import Fraction


class BiSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        d = {}
        if coeffs:
            for (m0, m1), c in coeffs.items():
                if m0 < 0 or m1 < 0:
                    raise ValueError("negative exponent (%d, %d)" % (m0, m1))
                if m0 + m1 > order:
                    continue
                c = Fraction(c)
                if c != 0:
                    d[(m0, m1)] = c
        self.coeffs = d

    def coeff(self, m0, m1) -> Fraction:
        return self.coeffs.get((m0, m1), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0, 0), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def items_sorted(self):
        """Coefficients in the canonical order: by (total degree, m0)."""
        return sorted(self.coeffs.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    def __eq__(self, other):
        return (isinstance(other, BiSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items())))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __neg__(self):
        return scale(-1, self)

    def __repr__(self):
        entries = ", ".join("%s: %s" % (e, c) for e, c in self.items_sorted()[:6])
        more = "" if len(self.coeffs) <= 6 else ", ..."
        return "BiSeries(order=%d, {%s%s})" % (self.order, entries, more)


def zero(order) -> BiSeries:
    return BiSeries(order)


def one(order) -> BiSeries:
    return BiSeries(order, {(0, 0): 1})


def monomial(order, e, c=1) -> BiSeries:
    return BiSeries(order, {tuple(e): c})


def truncate(S: BiSeries, order) -> BiSeries:
    if order >= S.order:
        return S
    return BiSeries(order, S.coeffs)


def agree_through(S: BiSeries, T: BiSeries, N) -> bool:
    """True when S and T have identical coefficients at all total degrees <= N."""
    keys = set(S.coeffs) | set(T.coeffs)
    return all(S.coeff(*e) == T.coeff(*e) for e in keys if e[0] + e[1] <= N)


def add(S: BiSeries, T: BiSeries) -> BiSeries:
    N = min(S.order, T.order)
    d = dict(S.coeffs)
    for e, c in T.coeffs.items():
        d[e] = d.get(e, Fraction(0)) + c
    return BiSeries(N, d)


def sub(S: BiSeries, T: BiSeries) -> BiSeries:
    return add(S, scale(-1, T))


def scale(c, S: BiSeries) -> BiSeries:
    c = Fraction(c)
    return BiSeries(S.order, {e: c * v for e, v in S.coeffs.items()})


def mul(S: BiSeries, T: BiSeries) -> BiSeries:
    N = min(S.order, T.order)
    d = {}
    for (a0, a1), ca in S.coeffs.items():
        for (b0, b1), cb in T.coeffs.items():
            if a0 + b0 + a1 + b1 <= N:
                e = (a0 + b0, a1 + b1)
                d[e] = d.get(e, Fraction(0)) + ca * cb
    return BiSeries(N, d)


def shift(S: BiSeries, e) -> BiSeries:
    """Multiply by the monomial x0^e0 x1^e1; the order grows with the shift
    so no stored coefficient is lost."""
    s0, s1 = e
    return BiSeries(S.order + s0 + s1,
                    {(m0 + s0, m1 + s1): c for (m0, m1), c in S.coeffs.items()})


def inv_unit(T: BiSeries) -> BiSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    c0 = T.constant_term()
    if c0 == 0:
        raise ValueError("inv_unit needs a nonzero constant term")
    N = T.order
    u = scale(Fraction(1) / c0, T)
    u = BiSeries(N, {e: c for e, c in u.coeffs.items() if e != (0, 0)})
    r = one(N)
    term = one(N)
    for _ in range(N):
        term = scale(-1, mul(term, u))
        if term.is_zero():
            break
        r = add(r, term)
    return scale(Fraction(1) / c0, r)


def div_unit(S: BiSeries, T: BiSeries) -> BiSeries:
    """S / T for unit T (nonzero constant term)."""
    return mul(S, inv_unit(T))


def exp_nil(S: BiSeries) -> BiSeries:
    """exp of a series with zero constant term: sum_{r<=order} S^r / r!."""
    if S.constant_term() != 0:
        raise ValueError("exp_nil needs a zero constant term")
    N = S.order
    r = one(N)
    term = one(N)
    for n in range(1, N + 1):
        term = scale(Fraction(1, n), mul(term, S))
        if term.is_zero():
            break
        r = add(r, term)
    return r


def log_unit(S: BiSeries) -> BiSeries:
    """log of a series with constant term 1; inverse of exp_nil."""
    if S.constant_term() != 1:
        raise ValueError("log_unit needs constant term 1")
    N = S.order
    u = BiSeries(N, {e: c for e, c in S.coeffs.items() if e != (0, 0)})
    r = zero(N)
    term = one(N)
    for n in range(1, N + 1):
        term = mul(term, u)
        if term.is_zero():
            break
        r = add(r, scale(Fraction((-1) ** (n + 1), n), term))
    return r


def theta(S: BiSeries, axis) -> BiSeries:
    """x_axis * d/dx_axis: multiplies each coefficient by its exponent."""
    return BiSeries(S.order, {e: c * e[axis] for e, c in S.coeffs.items()})


def substitute_pair(S: BiSeries, u: BiSeries, v: BiSeries) -> BiSeries:
    """S(u, v) for substitutions with zero constant term."""
    if u.constant_term() != 0 or v.constant_term() != 0:
        raise ValueError("substitutions must have zero constant term")
    N = min(S.order, u.order, v.order)
    m0max = max((e[0] for e in S.coeffs), default=0)
    m1max = max((e[1] for e in S.coeffs), default=0)
    pw0 = [one(N)]
    for _ in range(m0max):
        pw0.append(mul(pw0[-1], truncate(u, N)))
    pw1 = [one(N)]
    for _ in range(m1max):
        pw1.append(mul(pw1[-1], truncate(v, N)))
    r = zero(N)
    for (a, b), c in S.coeffs.items():
        r = add(r, scale(c, mul(pw0[a], pw1[b])))
    return r


def revert_pair(q0: BiSeries, q1: BiSeries):
    """Invert the map q_i = x_i * u_i(x0, x1) with unit u_i.

    Fixed-point iteration on x_i <- q_i / u_i(x0(q), x1(q)), which gains at
    least one exact total degree per pass.  Returns (x0(q), x1(q)) as series
    in the q variables, exact through min(q0.order, q1.order); composing
    with the forward map gives the identity to that order.
    """
    M = min(q0.order, q1.order)
    u0 = BiSeries(M, {(e0 - 1, e1): c for (e0, e1), c in q0.coeffs.items() if e0 >= 1})
    u1 = BiSeries(M, {(e0, e1 - 1): c for (e0, e1), c in q1.coeffs.items() if e1 >= 1})
    if any(e0 == 0 for (e0, _) in q0.coeffs) or u0.constant_term() != 1:
        raise ValueError("q0 must be x0 times a unit series")
    if any(e1 == 0 for (_, e1) in q1.coeffs) or u1.constant_term() != 1:
        raise ValueError("q1 must be x1 times a unit series")
    cur0 = monomial(M, (1, 0))
    cur1 = monomial(M, (0, 1))
    for _ in range(M + 1):
        c0 = substitute_pair(truncate(u0, M - 1) if M else u0, cur0, cur1)
        c1 = substitute_pair(truncate(u1, M - 1) if M else u1, cur0, cur1)
        cur0 = truncate(shift(inv_unit(c0), (1, 0)), M)
        cur1 = truncate(shift(inv_unit(c1), (0, 1)), M)
    return cur0, cur1


def lagrange_good_coeff(m0, m1, h0: BiSeries, h1: BiSeries, which,
                        determinant=False) -> Fraction:
    """Inverse-map coefficient via the auxiliary-series formula.

    Reads off the coefficient of x0^(m0-1) x1^m1 (which=0) or
    x0^m0 x1^(m1-1) (which=1) of

        (1 + theta0 h0 + theta1 h1) * exp(-m0 h0 - m1 h1).

    With determinant=True the prefactor is completed to the Jacobian-type
    determinant by adding (theta0 h0)(theta1 h1) - (theta1 h0)(theta0 h1);
    only the completed form reproduces revert_pair coefficient for
    coefficient.  The h_i must have zero constant term.
    """
    if m0 + m1 < 1:
        raise ValueError("need m0 + m1 >= 1")
    if h0.constant_term() != 0 or h1.constant_term() != 0:
        raise ValueError("h series must have zero constant term")
    need = m0 + m1 - 1
    if h0.order < need or h1.order < need:
        raise ValueError("truncation order too small for (%d, %d)" % (m0, m1))
    E = exp_nil(add(scale(-m0, h0), scale(-m1, h1)))
    T = add(add(one(E.order), theta(h0, 0)), theta(h1, 1))
    if determinant:
        T = add(T, sub(mul(theta(h0, 0), theta(h1, 1)),
                       mul(theta(h0, 1), theta(h1, 0))))
    P = mul(T, E)
    tgt = (m0 - 1, m1) if which == 0 else (m0, m1 - 1)
    return P.coeff(*tgt)


class LogSeries:
    """a + b0*log x0 + b1*log x1 with BiSeries components of a common order."""

    __slots__ = ("a", "b0", "b1")

    def __init__(self, a: BiSeries, b0: BiSeries, b1: BiSeries):
        N = min(a.order, b0.order, b1.order)
        self.a = truncate(a, N)
        self.b0 = truncate(b0, N)
        self.b1 = truncate(b1, N)

    @property
    def order(self):
        return self.a.order

    def is_zero(self):
        return self.a.is_zero() and self.b0.is_zero() and self.b1.is_zero()

    def __eq__(self, other):
        return (isinstance(other, LogSeries) and self.a == other.a
                and self.b0 == other.b0 and self.b1 == other.b1)

    def __add__(self, other):
        return LogSeries(add(self.a, other.a), add(self.b0, other.b0),
                         add(self.b1, other.b1))

    def __repr__(self):
        return "LogSeries(a=%r, b0=%r, b1=%r)" % (self.a, self.b0, self.b1)


def pure(S: BiSeries) -> LogSeries:
    """Lift a log-free series."""
    return LogSeries(S, zero(S.order), zero(S.order))


def _poly_eval(p, v):
    m0, m1 = Fraction(v[0]), Fraction(v[1])
    return sum(c * m0 ** a * m1 ** b for (a, b), c in p.items())


def _poly_diff(p, axis):
    r = {}
    for (a, b), c in p.items():
        if axis == 0 and a > 0:
            e = (a - 1, b)
            r[e] = r.get(e, Fraction(0)) + c * a
        elif axis == 1 and b > 0:
            e = (a, b - 1)
            r[e] = r.get(e, Fraction(0)) + c * b
    return {e: c for e, c in r.items() if c != 0}


class ThetaOperator:
    """Finite sum of terms x0^s0 x1^s1 * p(theta0, theta1).

    terms is a list of (shift, poly) with shift a nonnegative exponent pair
    and poly a sparse table {(a, b): coefficient} for theta0^a theta1^b.
    Stored fully expanded; apply_op needs no symbolic algebra.
    """

    __slots__ = ("terms", "name")

    def __init__(self, terms, name=""):
        canon = []
        for s, p in terms:
            s = (int(s[0]), int(s[1]))
            if s[0] < 0 or s[1] < 0:
                raise ValueError("operator shifts must be nonnegative")
            p = {(int(a), int(b)): Fraction(c) for (a, b), c in p.items()
                 if Fraction(c) != 0}
            if not p:
                raise ValueError("operator term with empty polynomial")
            canon.append((s, p))
        self.terms = canon
        self.name = name

    @property
    def max_shift(self):
        return max(s0 + s1 for (s0, s1), _ in self.terms)

    def __repr__(self):
        return "ThetaOperator(%s, %d terms)" % (self.name or "?", len(self.terms))


def apply_op(L: ThetaOperator, S: LogSeries) -> LogSeries:
    """Apply the operator, with the product rule on log components.

    theta_i acting on B*log x_i contributes (theta_i B)*log x_i + B, so each
    term's polynomial p feeds (dp/dtheta_i B) into the log-free component.
    The result order is S.order minus the largest total shift: coefficients
    above that are truncation garbage and are dropped.
    """
    N = S.order - L.max_shift
    ra, rb0, rb1 = {}, {}, {}
    for s, p in L.terms:
        d0 = _poly_diff(p, 0)
        d1 = _poly_diff(p, 1)
        for src, dst, dp in ((S.a.coeffs, ra, None),
                             (S.b0.coeffs, rb0, d0),
                             (S.b1.coeffs, rb1, d1)):
            for v, c in src.items():
                u = (v[0] + s[0], v[1] + s[1])
                if u[0] + u[1] > N:
                    continue
                pv = _poly_eval(p, v)
                if pv:
                    dst[u] = dst.get(u, Fraction(0)) + pv * c
                if dp:
                    dv = _poly_eval(dp, v)
                    if dv:
                        ra[u] = ra.get(u, Fraction(0)) + dv * c
    return LogSeries(BiSeries(max(N, 0), ra), BiSeries(max(N, 0), rb0),
                     BiSeries(max(N, 0), rb1))
