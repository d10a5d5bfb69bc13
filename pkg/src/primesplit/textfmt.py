"""Shared text format for univariate polynomials.

Polynomials are written as sums of terms like ``t^3 - t^2 - 2*t - 8``.
The ``*`` between a coefficient and the variable is optional on input
("2t" and "2*t" both parse), whitespace is ignored, and the variable
letter is configurable.  ``parse_poly`` and ``format_poly`` round-trip
exactly on canonical coefficient sequences.
"""

import re

DEFAULT_VAR = "t"

_TERM_RE_CACHE = {}


def _term_re(var):
    try:
        return _TERM_RE_CACHE[var]
    except KeyError:
        # sign, optional coefficient, optional variable with optional exponent
        pat = re.compile(
            r"([+-]?)(\d+)?(?:\*?(%s)(?:\^(\d+))?)?" % re.escape(var)
        )
        _TERM_RE_CACHE[var] = pat
        return pat


def parse_poly(text, var=DEFAULT_VAR):
    """Parse polynomial text into an ascending coefficient list.

    Returns a list of ints [a0, a1, ...] with no trailing zeros
    ([] for the zero polynomial).  Raises ValueError on malformed input.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    coeffs = {}
    pos = 0
    pat = _term_re(var)
    first = True
    while pos < len(s):
        m = pat.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError("cannot parse polynomial at %r" % s[pos:])
        sign, digits, v, exp = m.groups()
        if not sign and not first:
            raise ValueError("missing +/- between terms in %r" % text)
        if digits is None and v is None:
            raise ValueError("cannot parse polynomial at %r" % s[pos:])
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        if v is None:
            e = 0
        elif exp is None:
            e = 1
        else:
            e = int(exp)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
    if not coeffs:
        raise ValueError("empty polynomial text")
    deg = max(coeffs)
    out = [coeffs.get(i, 0) for i in range(deg + 1)]
    while out and out[-1] == 0:
        out.pop()
    return out


def format_poly(coeffs, var=DEFAULT_VAR):
    """Render an ascending coefficient sequence as text, highest degree first."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return "0"
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            x = var if e == 1 else "%s^%d" % (var, e)
            body = x if mag == 1 else "%d*%s" % (mag, x)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
