"""Closed-form solutions, mirror maps, inverses, and integrality checks.

The compact-phase solution space is spanned by a holomorphic series g0
supported on the ray (w1*m, m) and two logarithmic partners; the maps
q_i = x_i * exp(h_i/g0) are built from those.  Local phases replace the
logarithmic partners by univariate exponentials.  Everything is exact:
coefficients are Fractions and comparisons downstream are equality.
"""

from fractions import Fraction

from .scalars import factorial_ratio_seq, harmonic
from .series import (BiSeries, LogSeries, zero, one, shift, truncate, add,
                     scale, mul, div_unit, exp_nil, log_unit, inv_unit,
                     substitute_pair, revert_pair)
from .geometry import (COMPACT, COMPACT_TILDE, LOCAL_OUTER, LOCAL_INNER_A,
                       LOCAL_INNER_B)


class ObstructionError(Exception):
    """No solution with the requested leading behavior exists; carries the
    operator name, the exponent position, and the residual that cannot be
    cancelled."""

    def __init__(self, op_name, position, residual):
        self.op_name = op_name
        self.position = position
        self.residual = residual
        super().__init__("%s residual %s at %s cannot be cancelled"
                         % (op_name, residual, position))


class MirrorMapBundle:
    """Maps q_i = x_i * u_i with unit series u_i, tagged by phase."""

    __slots__ = ("ws", "phase", "order", "u0", "u1")

    def __init__(self, ws, phase, order, u0, u1):
        if u0.constant_term() != 1 or u1.constant_term() != 1:
            raise ValueError("unit factors must have constant term 1")
        self.ws = ws
        self.phase = phase
        self.order = order
        self.u0 = u0
        self.u1 = u1

    def q(self, i):
        """q_i as a series: x_i times the unit factor.  Exact through
        order+1 since every monomial carries the x_i."""
        u = self.u0 if i == 0 else self.u1
        return shift(u, (1, 0) if i == 0 else (0, 1))

    def __repr__(self):
        return "MirrorMapBundle(%s, %s, order=%d)" % (
            self.ws.label(), self.phase, self.order)


class IntegralityReport:
    __slots__ = ("checked_order", "violations")

    def __init__(self, checked_order, violations):
        self.checked_order = checked_order
        self.violations = list(violations)

    @property
    def integral(self):
        return not self.violations

    def __repr__(self):
        return "IntegralityReport(order=%d, violations=%d)" % (
            self.checked_order, len(self.violations))


class ProductFormExponents:
    """Sparse exponent table for Q_i = q_i * prod (1 - q^m)^table[m]
    (direction "alpha") or the reverse substitution (direction "beta")."""

    __slots__ = ("direction", "which", "order", "table")

    def __init__(self, direction, which, order, table):
        self.direction = direction
        self.which = which
        self.order = order
        self.table = {e: Fraction(c) for e, c in table.items() if c != 0}

    @property
    def integral(self):
        return all(c.denominator == 1 for c in self.table.values())

    def items_sorted(self):
        return sorted(self.table.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    def __repr__(self):
        return "ProductFormExponents(%s, i=%d, order=%d, %d entries)" % (
            self.direction, self.which, self.order, len(self.table))


def g0_series(ws, N) -> BiSeries:
    """Holomorphic solution: sum of F(m) * (x0^w1 x1)^m with
    F(m) = (km)!/prod (w_i m)!, an integer."""
    w1 = ws.w1
    top = N // (w1 + 1)
    F = factorial_ratio_seq(ws.k, ws.ws, top)
    return BiSeries(N, {(w1 * m, m): F[m] for m in range(top + 1)})


def _offdiag(ws, m0, m1):
    num = 1
    for j in range(1, m0 + (ws.k - ws.w1) * m1 + 1):
        num *= j
    den = 1
    for j in range(1, m0 + 1):
        den *= j
    for w in ws.ws[1:]:
        for j in range(1, w * m1 + 1):
            den *= j
    return Fraction(num, den * (m0 - ws.w1 * m1))


def g1_series(ws, N, which, diagonal="printed") -> LogSeries:
    """Logarithmic partner: g0 * log(x_which) plus a correction series.

    Off the ray m0 = w1*m1 the correction coefficient is
    (m0+(k-w1)m1)! / (m0! prod_{i>=2} (w_i m1)!) / (m0 - w1*m1), negated and
    scaled by w1 for which=1.  On the ray there are two conventions:
    diagonal="printed" uses the harmonic combinations
        which=0:  F(m) * (H_{km} - H_m/w1)
        which=1:  F(m) * ((k-w1) H_{km} - sum_{i>=2} H_{w_i m})
    exactly as the reference expansions state them, while
    diagonal="operator" uses the combinations the operator system actually
    forces (H_{w1 m} in place of H_m/w1, and weights inside the inner sum):
        which=0:  F(m) * (H_{km} - H_{w1 m})
        which=1:  F(m) * ((k-w1) H_{km} - sum_{i>=2} w_i H_{w_i m}).
    The two agree whenever every relevant weight is 1.
    """
    if diagonal not in ("printed", "operator"):
        raise ValueError("diagonal must be 'printed' or 'operator'")
    k, w1 = ws.k, ws.w1
    g0 = g0_series(ws, N)
    Fseq = factorial_ratio_seq(k, ws.ws, N // (w1 + 1))
    a = {}
    for m1 in range(N + 1):
        for m0 in range(N + 1 - m1):
            if m0 + m1 == 0:
                continue
            if m0 == w1 * m1:
                m = m1
                F = Fseq[m]
                if diagonal == "printed":
                    c = (harmonic(k * m) - harmonic(m) / w1) if which == 0 else \
                        ((k - w1) * harmonic(k * m)
                         - sum(harmonic(w * m) for w in ws.ws[1:]))
                else:
                    c = (harmonic(k * m) - harmonic(w1 * m)) if which == 0 else \
                        ((k - w1) * harmonic(k * m)
                         - sum(w * harmonic(w * m) for w in ws.ws[1:]))
                a[(m0, m1)] = F * c
            else:
                base = _offdiag(ws, m0, m1)
                a[(m0, m1)] = base if which == 0 else -w1 * base
    A = BiSeries(N, a)
    if which == 0:
        return LogSeries(A, g0, zero(N))
    return LogSeries(A, zero(N), g0)


def open_closed_map(ws, N) -> MirrorMapBundle:
    """Compact-phase maps q_i = x_i exp(h_i/g0), h_i the log-free part of
    the logarithmic solutions (printed diagonal convention)."""
    g0 = g0_series(ws, N)
    us = []
    for which in (0, 1):
        h = g1_series(ws, N, which).a
        us.append(exp_nil(div_unit(h, g0)))
    return MirrorMapBundle(ws, COMPACT, N, us[0], us[1])


def invert_map(bundle):
    """Inverse pair (x0(q), x1(q)) by fixed-point reversion; composing with
    the forward maps gives the identity through the returned order."""
    return revert_pair(bundle.q(0), bundle.q(1))


def _f_over_m_series(ws, N, expo, weight_num, weight_den):
    """sum_{m>=1} F(m) * weight_num/(weight_den*m) * y^m with y-exponent
    step expo; the building block of every local unit factor."""
    step = expo[0] + expo[1]
    top = N // step if step else 0
    F = factorial_ratio_seq(ws.k, ws.ws, top)
    return BiSeries(N, {(expo[0] * m, expo[1] * m):
                        Fraction(weight_num * F[m], weight_den * m)
                        for m in range(1, top + 1)})


def local_map(ws, phase, N) -> MirrorMapBundle:
    """Local-phase maps; all unit factors are exponentials of univariate
    series in the phase's natural variable (x1 for the outer phase, x0*x1
    for inner-a, x0^w1*x1 for inner-b)."""
    k, w1 = ws.k, ws.w1
    if phase == LOCAL_OUTER:
        u0 = exp_nil(_f_over_m_series(ws, N, (0, 1), 1, 1))
        u1 = exp_nil(_f_over_m_series(ws, N, (0, 1), -1, k))
    elif phase == LOCAL_INNER_A:
        u0 = exp_nil(_f_over_m_series(ws, N, (1, 1), -1, k))
        u1 = exp_nil(_f_over_m_series(ws, N, (1, 1), k - 1, k))
    elif phase == LOCAL_INNER_B:
        u0 = exp_nil(_f_over_m_series(ws, N, (w1, 1), 1, k))
        u1 = exp_nil(_f_over_m_series(ws, N, (w1, 1), k - w1, k))
    else:
        raise ValueError("not a local phase: %r" % (phase,))
    return MirrorMapBundle(ws, phase, N, u0, u1)


def local_inner_b_inverse(ws, A):
    """Coefficient lists (C0, C1) of the closed-form inverse
    x_i = Q_i * sum_a C_a^{(i)} (Q0^w1 Q1)^a, length A+1 each.

    C_a^{(i)} is the y^a coefficient of (sum_{m>=0} F(m) y^m) times
    exp(-(k*a + e_i) sum_{m>=1} G(m) y^m) with e_0 = 1, e_1 = k - w1 and
    G(m) = (km-1)!/prod (w_i m)! = F(m)/(km).  The m=0 term of the leading
    factor is included so C_0 = 1 and the composition with the forward map
    is the identity.
    """
    k, w1 = ws.k, ws.w1
    F = factorial_ratio_seq(k, ws.ws, A)
    SF = BiSeries(A, {(0, m): F[m] for m in range(A + 1)})
    SG = BiSeries(A, {(0, m): Fraction(F[m], k * m) for m in range(1, A + 1)})
    out = []
    for e in (1, k - w1):
        cs = []
        for a in range(A + 1):
            E = exp_nil(scale(-(k * a + e), SG))
            cs.append(mul(SF, E).coeff(0, a))
        out.append(cs)
    return out[0], out[1]


def integrality_report(series_list, labels, N) -> IntegralityReport:
    """Scan every stored coefficient of total degree <= N; a violation is a
    (label, exponent, value) triple with denominator != 1."""
    violations = []
    for S, label in zip(series_list, labels):
        for e, c in S.items_sorted():
            if e[0] + e[1] <= N and c.denominator != 1:
                violations.append((label, e, c))
    return IntegralityReport(N, violations)


def product_form_exponents(from_bundle, to_bundle, N, which,
                           direction="alpha") -> ProductFormExponents:
    """Exponent table relating two unit-factor maps over the same variables:
    to_i(x) = from_i(x) * prod_{|m|>=1} (1 - from^m)^table[m].

    Computes to_i in from-coordinates (composing with the reversion of the
    from-map), divides out the linear monomial, and solves triangularly by
    total degree: at each exponent v the only new contribution to
    log(ratio) is -table[v], everything else comes from r-th powers of
    lower-degree entries.
    """
    if from_bundle.ws != to_bundle.ws:
        raise ValueError("bundles describe different weight systems")
    if min(from_bundle.order, to_bundle.order) < N:
        raise ValueError("bundle orders too small for the requested table")
    inv0, inv1 = invert_map(from_bundle)
    Q = substitute_pair(truncate(to_bundle.q(which), N + 1),
                        truncate(inv0, N + 1), truncate(inv1, N + 1))
    lead = (1, 0) if which == 0 else (0, 1)
    down = {}
    for (a, b), c in Q.coeffs.items():
        a -= lead[0]
        b -= lead[1]
        if a < 0 or b < 0:
            raise ValueError("maps are not related by a unit factor")
        down[(a, b)] = c
    if down.get((0, 0)) != 1:
        raise ValueError("ratio has a nonunit linear term: %s"
                         % down.get((0, 0), 0))
    L = log_unit(BiSeries(N, down))
    table = {}
    for d in range(1, N + 1):
        for b in range(d + 1):
            v = (d - b, b)
            resid = L.coeff(*v)
            for r in range(2, d + 1):
                if v[0] % r == 0 and v[1] % r == 0:
                    resid += table.get((v[0] // r, v[1] // r), Fraction(0)) / r
            if resid:
                table[v] = -resid
    return ProductFormExponents(direction, which, N, table)


def _zero_shift_poly(op):
    acc = {}
    for s, p in op.terms:
        if s == (0, 0):
            for e, c in p.items():
                acc[e] = acc.get(e, Fraction(0)) + c
    return {e: c for e, c in acc.items() if c != 0}


def _peval(p, v):
    m0, m1 = Fraction(v[0]), Fraction(v[1])
    return sum(c * m0 ** a * m1 ** b for (a, b), c in p.items())


def _pdiff(p, axis):
    r = {}
    for (a, b), c in p.items():
        if axis == 0 and a > 0:
            r[(a - 1, b)] = r.get((a - 1, b), Fraction(0)) + c * a
        elif axis == 1 and b > 0:
            r[(a, b - 1)] = r.get((a, b - 1), Fraction(0)) + c * b
    return r


def _march(ops, B0, B1, a00, N):
    """Degree-by-degree solve of ops[...] (A + B0 log x0 + B1 log x1) = 0
    for A, given the log parts.  Each new coefficient is pinned by the
    first operator whose zero-shift polynomial is nonzero at that exponent
    (exponents no operator pins stay 0); after each degree every residual
    of every operator through that degree is checked, and the first nonzero
    one aborts the solve.
    """
    zshift = [(_zero_shift_poly(op), op) for op in ops]
    A = {(0, 0): Fraction(a00)}

    def residual(op, v):
        r = Fraction(0)
        for s, p in op.terms:
            u = (v[0] - s[0], v[1] - s[1])
            if u[0] < 0 or u[1] < 0:
                continue
            if u in A:
                r += _peval(p, u) * A[u]
            if B0 and u in B0:
                r += _peval(_pdiff(p, 0), u) * B0[u]
            if B1 and u in B1:
                r += _peval(_pdiff(p, 1), u) * B1[u]
        return r

    for d in range(1, N + 1):
        for m0 in range(d, -1, -1):
            v = (m0, d - m0)
            for p0, op in zshift:
                cv = _peval(p0, v)
                if cv == 0:
                    continue
                A[v] = Fraction(0)
                rest = residual(op, v)
                if rest:
                    A[v] = -rest / cv
                else:
                    del A[v]
                break
        for _, op in zshift:
            for dd in range(0, d + 1):
                for m0 in range(dd, -1, -1):
                    v = (m0, dd - m0)
                    r = residual(op, v)
                    if r != 0:
                        raise ObstructionError(op.name, v, r)
    return BiSeries(N, A)


def recursive_pf_solve(ops, seed, N) -> LogSeries:
    """Solve the operator system degree by degree from a leading behavior.

    seed "holomorphic" asks for constant term 1 and no logs; "log_x0" and
    "log_x1" ask for (holomorphic solution)*log x_i plus a log-free
    correction vanishing at the origin.  Raises ObstructionError when the
    system admits no such solution; this is an independent oracle for the
    closed-form builders.
    """
    if seed == "holomorphic":
        return LogSeries(_march(ops, None, None, 1, N), zero(N), zero(N))
    if seed not in ("log_x0", "log_x1"):
        raise ValueError("seed must be holomorphic, log_x0, or log_x1")
    hol = _march(ops, None, None, 1, N)
    B = hol.coeffs
    if seed == "log_x0":
        a = _march(ops, B, None, 0, N)
        return LogSeries(a, hol, zero(N))
    a = _march(ops, None, B, 0, N)
    return LogSeries(a, zero(N), hol)
