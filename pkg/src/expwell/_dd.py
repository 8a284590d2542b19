"""Error-free transformations for compensated (double-double) summation.

A double-double value is a pair ``(hi, lo)`` of doubles representing
``hi + lo`` with roughly 32 significant decimal digits.  Every helper here
works unchanged on Python floats and on numpy arrays, because it only uses
``+ - * /`` (IEEE-754 semantics are identical for both, so the scalar and
vector code paths produce bit-identical results).

two_sum / two_prod are the classical Knuth and Dekker transforms; the
splitting constant 2**27 + 1 is for binary64.
"""

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    """Exact sum: returns (s, e) with s = fl(a+b) and a + b = s + e."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def fast_two_sum(a, b):
    """two_sum variant assuming |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    """Exact product: returns (p, e) with p = fl(a*b) and a * b = p + e."""
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(xh, xl, yh, yl):
    """Double-double addition (sloppy renormalization, ~106-bit accurate)."""
    sh, sl = two_sum(xh, yh)
    sl = sl + (xl + yl)
    return fast_two_sum(sh, sl)


def dd_mul(xh, xl, yh, yl):
    """Double-double multiplication."""
    ph, pl = two_prod(xh, yh)
    pl = pl + (xh * yl + xl * yh)
    return fast_two_sum(ph, pl)


def dd_div(xh, xl, yh, yl):
    """Double-double division via one Newton correction of the hi quotient."""
    q1 = xh / yh
    ph, pl = two_prod(q1, yh)
    pl = pl + q1 * yl
    rh, rl = dd_add(xh, xl, -ph, -pl)
    q2 = (rh + rl) / yh
    return fast_two_sum(q1, q2)
