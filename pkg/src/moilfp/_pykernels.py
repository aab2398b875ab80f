"""Pure-Python tableau kernels (fallback for the compiled ``_ckernels``).

Rows are lists whose entry 0 is the right-hand side and entry ``1 + j`` is
the coefficient of column ``j``. Entries are immutable rationals, so every
kernel rebinds list slots rather than mutating numbers.
"""


def pivot(rows, r, col):
    """Gauss-Jordan pivot on ``rows[r][col]`` (``col`` is a list position)."""
    prow = rows[r]
    piv = prow[col]
    nz = []
    for c, v in enumerate(prow):
        if v:
            prow[c] = v / piv
            nz.append(c)
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[col]
        if not f:
            continue
        for c in nz:
            row[c] = row[c] - f * prow[c]


def sub_scaled(dst, src, f):
    """``dst -= f * src`` over the nonzero entries of ``src``."""
    for c, v in enumerate(src):
        if v:
            dst[c] = dst[c] - f * v


def gammas(num_row, den_row, cols):
    """Reduced gradients ``den_value * p_j - num_value * q_j`` for each position in ``cols``.

    Objective rows store ``-p_j`` / ``-q_j`` at coefficient positions, so
    the result is ``num_value * den_row[c] - den_value * num_row[c]``.
    """
    a = num_row[0]
    b = den_row[0]
    return [a * den_row[c] - b * num_row[c] for c in cols]
