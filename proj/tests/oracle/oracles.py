"""Independent reference computations used to freeze expected values in the C++ tests.

Everything here is written directly from the geometric definitions with numpy and
shares no code with the library. Run `python3 tests/oracle/oracles.py` to reprint
the frozen numbers.
"""
import math

import numpy as np


def circle(n):
    t = np.arange(n)
    a = 2 * math.pi * t / n
    return np.stack([0.5 * np.cos(a), 0.5 * np.sin(a)], axis=1)


def arc_center(n, eps):
    m = int(math.floor(math.sqrt(eps) * n * (1 + 1e-12)))
    cols = math.ceil(math.sqrt(m))
    rows = math.ceil(m / cols)
    h = min(eps / 100, eps / (4 * cols))
    ymax = (rows - 1) * h / 2
    x0 = 2 * ymax / math.sqrt(3) + eps / 20
    pts = []
    for t in range(m):
        pts.append((x0 + (t % cols) * h, -ymax + (t // cols) * h))
    na = n - m
    for t in range(na):
        th = -math.pi / 6 + t * (math.pi / 3) / (na - 1) if na > 1 else 0.0
        pts.append((math.cos(th), math.sin(th)))
    return np.array(pts), m


def pair_counts(p, eps):
    diff = p[:, None, :] - p[None, :, :]
    d = np.sqrt((diff ** 2).sum(-1))
    iu = np.triu_indices(len(p), 1)
    dd = d[iu]
    return int((dd <= eps).sum()), int((dd >= 1 - eps).sum())


def margin(nb, an, eps):
    return nb * math.sqrt(math.log(1 / eps)) / (an * math.sqrt(eps))


def two_circle(c0, r0, c1, r1):
    # generic circle-circle intersection, returns the upper point(s)
    (x0, y0), (x1, y1) = c0, c1
    dx, dy = x1 - x0, y1 - y0
    D = math.hypot(dx, dy)
    a = (r0 * r0 - r1 * r1 + D * D) / (2 * D)
    h = math.sqrt(r0 * r0 - a * a)
    mx, my = x0 + a * dx / D, y0 + a * dy / D
    pts = [(mx + h * dy / D, my - h * dx / D), (mx - h * dy / D, my + h * dx / D)]
    return max(pts, key=lambda q: q[1])


def box_max_corner(ca, cb, s):
    best = 0.0
    for sx in (-1, 1):
        for sy in (-1, 1):
            for tx in (-1, 1):
                for ty in (-1, 1):
                    a = (ca[0] + sx * s / 2, ca[1] + sy * s / 2)
                    b = (cb[0] + tx * s / 2, cb[1] + ty * s / 2)
                    best = max(best, math.hypot(a[0] - b[0], a[1] - b[1]))
    return best


def cover(d, eps, rin, rout, sub=8):
    """Rasterized cell count of the upper intersection region of two annuli."""
    h = eps / 2
    # bounding box generously from the outer circle
    xa = ((rout ** 2 - rin ** 2) / (2 * d)) * 1.5 + h
    ylo = math.sqrt(max(rin ** 2 - (d / 2 + xa) ** 2, 0)) - h
    yhi = math.sqrt(rout ** 2 - d * d / 4) + h
    i0, i1 = math.floor(-xa / h), math.ceil(xa / h)
    j0, j1 = math.floor(ylo / h), math.ceil(yhi / h)
    offs = (np.arange(sub) + 0.5) / sub
    cnt = 0
    for i in range(i0, i1):
        xs = (i + offs) * h
        for j in range(j0, j1):
            ys = (j + offs) * h
            X, Y = np.meshgrid(xs, ys)
            r0 = np.hypot(X + d / 2, Y)
            r1 = np.hypot(X - d / 2, Y)
            inside = (r0 >= rin) & (r0 <= rout) & (r1 >= rin) & (r1 <= rout) & (Y >= 0)
            if inside.any():
                cnt += 1
    return cnt


if __name__ == "__main__":
    p = circle(2000)
    for e in (0.08, 0.04, 0.02, 0.01, 0.005):
        nb, an = pair_counts(p, e)
        print(f"circle n=2000 eps={e}: neighbors={nb} antipodes={an} margin={margin(nb, an, e):.6f}")
    for e in (0.08, 0.04, 0.02, 0.01, 0.005):
        q, m = arc_center(2000, e)
        nb, an = pair_counts(q, e)
        print(f"arc n=2000 eps={e}: m={m} neighbors={nb} antipodes={an} m(n-m)={m*(2000-m)} margin={margin(nb, an, e):.6f}")
    for d, e in ((0.5, 0.01), (1.0, 0.01)):
        top = two_circle((-d / 2, 0), 1, (d / 2, 0), 1)
        bot = two_circle((-d / 2, 0), 1 - e, (d / 2, 0), 1 - e)
        side = two_circle((-d / 2, 0), 1, (d / 2, 0), 1 - e)
        print(f"vertices d={d} eps={e}: outer={top} inner={bot} side={side}")
    print("box max", box_max_corner((0, 0), (1, 0), 0.05))
