"""Pure-Python versions of the inner loops.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Inputs and outputs are plain Python ints so both versions are exact.
"""


def convolve(a, b, n):
    """Cauchy product of integer sequences ``a`` and ``b``, coefficients 0..n."""
    out = [0] * (n + 1)
    la = min(len(a), n + 1)
    lb = len(b)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = min(lb, n + 1 - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def power_sums(count, max_exp):
    """Return ``[sum(x**e for x in range(count)) for e in range(max_exp + 1)]``."""
    sums = [0] * (max_exp + 1)
    if count <= 0:
        return sums
    sums[0] = count
    if max_exp == 0:
        return sums
    for x in range(1, count):
        xe = x
        for e in range(1, max_exp + 1):
            sums[e] += xe
            xe *= x
    return sums


def stirling1_rows(max_n):
    """Signed first-kind Stirling numbers as a list of rows 0..max_n."""
    rows = [[1]]
    for n in range(max_n):
        prev = rows[-1]
        row = [0] * (n + 2)
        for l in range(1, n + 2):
            left = prev[l - 1]
            here = prev[l] if l <= n else 0
            row[l] = left - n * here
        rows.append(row)
    return rows


def stirling2_rows(max_n):
    """Second-kind Stirling numbers as a list of rows 0..max_n."""
    rows = [[1]]
    for m in range(max_n):
        prev = rows[-1]
        row = [0] * (m + 2)
        for n in range(1, m + 2):
            here = prev[n] if n <= m else 0
            row[n] = n * here + prev[n - 1]
        rows.append(row)
    return rows
