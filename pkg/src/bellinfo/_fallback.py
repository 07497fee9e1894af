"""Pure-Python grid kernels; the reference for :mod:`bellinfo._kernels`."""
import numpy as np


def _flow(theta):
    x = 4.0 * np.asarray(theta, dtype=np.float64) - 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        plus = np.where(x > -1.0, (1.0 + x) * np.log1p(x), 0.0)
        minus = np.where(x < 1.0, (1.0 - x) * np.log1p(-x), 0.0)
    return np.maximum(0.5 * (plus + minus), 0.0)


def theta_table(mus, nus, s):
    a = np.asarray(mus, dtype=np.float64)[:, None]
    b = np.asarray(nus, dtype=np.float64)[None, :]
    h = 0.5 * (a + b) if s == 0 else 0.5 * (a - b)
    return 0.5 * np.sin(h) ** 2


def flow_table(mus, nus, s):
    return _flow(theta_table(mus, nus, s))


def triple_scan(table, tol):
    """See :func:`bellinfo._kernels.triple_scan`."""
    t = np.asarray(table, dtype=np.float64)
    m = t.shape[0]
    if t.shape != (m, m):
        raise ValueError("table must be square")
    best, arg, n_below = np.inf, (0, 0, 0), 0
    for i in range(m):
        # worst[j, k] = max(t[i, j], t[i, k], t[j, k])
        worst = np.maximum(np.maximum(t[i][:, None], t[i][None, :]), t)
        n_below += int(np.count_nonzero(worst <= tol))
        flat = int(np.argmin(worst))
        if worst.flat[flat] < best:
            best = float(worst.flat[flat])
            arg = (i, *divmod(flat, m))
    return best, arg, n_below


def independent_multisets(ok, n):
    """See :func:`bellinfo._kernels.independent_multisets`."""
    g = np.asarray(ok, dtype=bool)
    m = g.shape[0]
    if g.shape != (m, m):
        raise ValueError("ok must be square")
    if n < 1:
        raise ValueError("n must be >= 1")
    adj = g.tolist()
    out = []

    def extend(prefix, start):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for c in range(start, m):
            if all(adj[p][c] for p in prefix):
                prefix.append(c)
                extend(prefix, c)
                prefix.pop()

    extend([], 0)
    return out
