"""Unit-fraction weight systems, charge vectors, and theta-operator systems.

A solution of 1/k_1 + ... + 1/k_n = 1 determines k = lcm(k_i) and weights
w_i = k/k_i with sum(w_i) = k.  One weight is distinguished (the "brane"
slot w_1); rotating a different k_i into the first slot gives the other
phases of the same multiset.  Each phase of the associated geometry car-
ries a system of two or three theta-operators whose kernels the series
modules build and check.
"""

from fractions import Fraction
from math import lcm

from .series import ThetaOperator

COMPACT = "compact"
COMPACT_TILDE = "compact-tilde"
LOCAL_OUTER = "local-outer"
LOCAL_INNER_A = "local-inner-a"
LOCAL_INNER_B = "local-inner-b"
PHASES = (COMPACT, COMPACT_TILDE, LOCAL_OUTER, LOCAL_INNER_A, LOCAL_INNER_B)


def enumerate_solutions(n, ordered=True):
    """All positive integer tuples (k_1,...,k_n) with sum 1/k_i = 1.

    ordered=True keeps one representative per multiset, k_1 <= ... <= k_n;
    ordered=False emits every permutation as its own tuple.  Output is
    lexicographically sorted, largest first, so the n=3 list starts with
    (3,3,3).  The search at slot i bounds k_i by (slots left)/(sum left).

    >>> enumerate_solutions(3)
    [(3, 3, 3), (2, 4, 4), (2, 3, 6)]
    """
    if not 2 <= n <= 6:
        raise ValueError("n must be between 2 and 6")
    out = []

    def rec(prefix, lo, rest):
        slots = n - len(prefix)
        if slots == 0:
            if rest == 0:
                out.append(tuple(prefix))
            return
        if rest <= 0:
            return
        kmin = max(lo, -(-rest.denominator // rest.numerator))
        kmax = (slots * rest.denominator) // rest.numerator
        for kk in range(kmin, kmax + 1):
            prefix.append(kk)
            rec(prefix, kk, rest - Fraction(1, kk))
            prefix.pop()

    rec([], 2, Fraction(1))
    if not ordered:
        seen = set()
        for sol in out:
            seen.update(_permutations(sol))
        out = list(seen)
    return sorted(out, reverse=True)


def _permutations(t):
    if len(t) <= 1:
        yield t
        return
    for i in range(len(t)):
        for rest in _permutations(t[:i] + t[i + 1:]):
            yield (t[i],) + rest


class WeightSystem:
    """(k | w_1,...,w_n) with k_i*w_i = sum(w_i) = k; w_1 is the brane slot."""

    __slots__ = ("n", "k", "ws")

    def __init__(self, ws):
        ws = tuple(int(w) for w in ws)
        if not ws or any(w <= 0 for w in ws):
            raise ValueError("weights must be positive")
        k = sum(ws)
        if any(k % w for w in ws):
            raise ValueError("every weight must divide their sum")
        self.n = len(ws)
        self.k = k
        self.ws = ws

    @property
    def w1(self):
        return self.ws[0]

    def label(self):
        return "%d|%s" % (self.k, ",".join(str(w) for w in self.ws))

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self.ws == other.ws

    def __hash__(self):
        return hash(self.ws)

    def __repr__(self):
        return "WeightSystem(%s)" % self.label()


def weight_system(ks, brane_index=1):
    """Weight system for a unit-fraction solution with the chosen brane slot.

    brane_index is 1-based; that k is rotated to the front (it becomes w_1),
    the rest keep their original order.

    >>> weight_system((6, 2, 3), 1).ws
    (1, 3, 2)
    """
    ks = tuple(int(k) for k in ks)
    if any(k <= 0 for k in ks):
        raise ValueError("denominators must be positive")
    if sum(Fraction(1, k) for k in ks) != 1:
        raise ValueError("%s ≠ 1" % "+".join("1/%d" % k for k in ks))
    if not 1 <= brane_index <= len(ks):
        raise ValueError("brane index out of range")
    i = brane_index - 1
    arranged = (ks[i],) + ks[:i] + ks[i + 1:]
    k = lcm(*arranged)
    return WeightSystem(tuple(k // ki for ki in arranged))


def charge_vectors(ws, phase):
    """The displayed two-row charge matrix (length n+3, rows sum to zero).

    Rows are returned exactly as the reference tables print them, which for
    the compact phase means the final two columns appear swapped once n >= 4
    (the tables change convention there; both orders sum to zero and the
    operators are unaffected).  Row order is (l1, l0).
    """
    k, w1, n = ws.k, ws.w1, ws.n
    mid = [0] * (n - 1)
    if phase == COMPACT or phase == LOCAL_INNER_B:
        l1 = [-(k - w1), 0, *ws.ws[1:], w1, -w1]
        l0 = [-1, 1, *mid, -1, 1]
        if phase == COMPACT and n >= 4:
            l1[-2], l1[-1] = l1[-1], l1[-2]
            l0[-2], l0[-1] = l0[-1], l0[-2]
    elif phase == COMPACT_TILDE:
        l1 = [-k, *ws.ws, 0, 0]
        l0 = [-1, 1, *mid, -1, 1]
    elif phase == LOCAL_OUTER:
        l1 = [-k, *ws.ws, 0, 0]
        l0 = [1, -1, *mid, 1, -1]
    elif phase == LOCAL_INNER_A:
        l1 = [-(k - 1), w1 - 1, *ws.ws[1:], -1, 1]
        l0 = [-1, 1, *mid, 1, -1]
    else:
        raise ValueError("unknown phase %r" % (phase,))
    return [l1, l0]


def _poly(factors, sign=1):
    """Expand a product of linear factors (c0, c1, cc) = c0*th0 + c1*th1 + cc
    times sign into a sparse {(a,b): coeff} table."""
    p = {(0, 0): Fraction(sign)}
    for c0, c1, cc in factors:
        q = {}
        for (a, b), c in p.items():
            for e, cf in (((a + 1, b), c0), ((a, b + 1), c1), ((a, b), cc)):
                if cf:
                    q[e] = q.get(e, Fraction(0)) + c * cf
        p = q
    return p


def pf_operators(ws, phase):
    """The extended operator system for a phase, fully expanded.

    Every operator is a ThetaOperator, x-monomials on the left and the
    theta-polynomials multiplied out.  The compact-tilde middle operator is
    returned cleared of its 1/x0^w1 prefactor (multiplied through by x0^w1,
    which changes no kernels and keeps all shifts nonnegative).
    """
    k, w1 = ws.k, ws.w1
    tail = [(0, w, -j) for w in ws.ws[1:] for j in range(w)]
    if phase == COMPACT:
        L0 = ThetaOperator([((0, 0), _poly([(1, 0, 0), (1, -w1, 0)])),
                            ((1, 0), _poly([(1, k - w1, 1), (1, -w1, 0)], -1))],
                           name="L0")
        L1 = ThetaOperator(
            [((0, 0), _poly(tail + [(-1, w1, -j) for j in range(w1)])),
             ((0, 1), _poly([(1, k - w1, j) for j in range(1, k - w1 + 1)]
                            + [(-1, w1, j) for j in range(w1)], -1))],
            name="L1")
        L1p = ThetaOperator(
            [((0, 0), _poly([(1, 0, -j) for j in range(w1)] + tail)),
             ((w1, 1), _poly([(1, k - w1, j) for j in range(1, k + 1)], -1))],
            name="L1p")
        return [L0, L1, L1p]
    if phase == COMPACT_TILDE:
        L0 = ThetaOperator([((0, 0), _poly([(1, w1, 0), (1, 0, 0)])),
                            ((1, 0), _poly([(1, k, 1), (1, 0, 0)], -1))],
                           name="L0")
        L1 = ThetaOperator(
            [((w1, 0), _poly(tail + [(-1, 0, -j) for j in range(w1)])),
             ((0, 1), _poly([(1, k, j) for j in range(1, k - w1 + 1)]
                            + [(-1, 0, j) for j in range(w1)], -1))],
            name="L1")
        L1p = ThetaOperator(
            [((0, 0), _poly([(1, w1, -j) for j in range(w1)] + tail)),
             ((0, 1), _poly([(1, k, j) for j in range(1, k + 1)], -1))],
            name="L1p")
        return [L0, L1, L1p]
    if phase == LOCAL_OUTER:
        L0 = ThetaOperator([((0, 0), _poly([(1, 0, 0), (1, -k, 0)])),
                            ((1, 0), _poly([(1, 0, 0), (1, -w1, 0)], -1))],
                           name="L0")
        L1 = ThetaOperator(
            [((0, 0), _poly([(-1, w1, -j) for j in range(w1)] + tail)),
             ((0, 1), _poly([(1, -k, -j) for j in range(k)], -((-1) ** k)))],
            name="L1")
        return [L0, L1]
    if phase == LOCAL_INNER_A:
        L0 = ThetaOperator([((0, 0), _poly([(1, -1, 0), (1, w1 - 1, 0)])),
                            ((1, 0), _poly([(-1, 1, 0), (-1, -(k - 1), 0)], -1))],
                           name="L0")
        L1 = ThetaOperator(
            [((0, 0), _poly([(1, -1, 0)]
                            + [(1, w1 - 1, -j) for j in range(w1 - 1)] + tail)),
             ((0, 1), _poly([(-1, 1, 0)]
                            + [(1, k - 1, j) for j in range(k - 1)], -1))],
            name="L1")
        return [L0, L1]
    if phase == LOCAL_INNER_B:
        L0 = ThetaOperator([((0, 0), _poly([(1, 0, 0), (1, -w1, 0)])),
                            ((1, 0), _poly([(1, k - w1, 0), (1, -w1, 0)], -1))],
                           name="L0")
        L1 = ThetaOperator(
            [((0, 0), _poly(tail + [(-1, w1, -j) for j in range(w1)])),
             ((0, 1), _poly([(1, k - w1, j) for j in range(k - w1)]
                            + [(-1, w1, j) for j in range(w1)], -1))],
            name="L1")
        L1p = ThetaOperator(
            [((0, 0), _poly([(1, 0, -j) for j in range(w1)] + tail)),
             ((w1, 1), _poly([(1, k - w1, j) for j in range(k)], -1))],
            name="L1p")
        return [L0, L1, L1p]
    raise ValueError("unknown phase %r" % (phase,))
