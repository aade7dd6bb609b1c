"""STO-3G basis construction and molecular integrals.

McMurchie-Davidson scheme over contracted Cartesian Gaussians with s and
p angular momentum, which covers H through F.  The STO-3G exponents come
from the universal three-Gaussian expansion of a zeta=1 Slater orbital
scaled by per-element Slater exponents.
"""

from __future__ import annotations

import numpy as np
from scipy.special import hyp1f1

ANG2BOHR = 1.8897259886

# Universal STO-3G expansion: exponents for a zeta=1 Slater function and
# the matching contraction coefficients (1s shell, then the shared-sp shell).
_ALPHA_1S = np.array([2.227660584, 0.405771156, 0.109817510])
_COEF_1S = np.array([0.154328967, 0.535328142, 0.444634542])
_ALPHA_2SP = np.array([0.994203, 0.231031, 0.0751386])
_COEF_2S = np.array([-0.09996723, 0.39951283, 0.70011547])
_COEF_2P = np.array([0.15591627, 0.60768372, 0.39195739])

# Slater exponents (zeta_1s, zeta_2sp) from the original STO-3G fits.
_ZETA = {
    "H": (1.24, None),
    "Li": (2.69, 0.80),
    "Be": (3.68, 1.15),
    "B": (4.68, 1.45),
    "C": (5.67, 1.72),
    "N": (6.67, 1.95),
    "O": (7.66, 2.25),
    "F": (8.65, 2.55),
}
NUCLEAR_CHARGE = {"H": 1, "Li": 3, "Be": 4, "B": 5, "C": 6, "N": 7, "O": 8, "F": 9}


def boys(m: int, t: float) -> float:
    return hyp1f1(m + 0.5, m + 1.5, -t) / (2.0 * m + 1.0)


def _hermite_e(i, j, t, qx, a, b):
    p = a + b
    mu = a * b / p
    if t < 0 or t > (i + j):
        return 0.0
    if i == j == t == 0:
        return np.exp(-mu * qx * qx)
    if j == 0:
        return (_hermite_e(i - 1, j, t - 1, qx, a, b) / (2 * p)
                - (mu * qx / a) * _hermite_e(i - 1, j, t, qx, a, b)
                + (t + 1) * _hermite_e(i - 1, j, t + 1, qx, a, b))
    return (_hermite_e(i, j - 1, t - 1, qx, a, b) / (2 * p)
            + (mu * qx / b) * _hermite_e(i, j - 1, t, qx, a, b)
            + (t + 1) * _hermite_e(i, j - 1, t + 1, qx, a, b))


def _overlap_prim(a, la, ra, b, lb, rb):
    p = a + b
    out = (np.pi / p) ** 1.5
    for d in range(3):
        out *= _hermite_e(la[d], lb[d], 0, ra[d] - rb[d], a, b)
    return out


def _kinetic_prim(a, la, ra, b, lb, rb):
    def s1d(d, i, j):
        if i < 0 or j < 0:
            return 0.0
        return (np.pi / (a + b)) ** 0.5 * _hermite_e(i, j, 0, ra[d] - rb[d], a, b)

    total = 0.0
    for d in range(3):
        j = lb[d]
        td = -2.0 * b * b * s1d(d, la[d], j + 2) + b * (2 * j + 1) * s1d(d, la[d], j)
        if j >= 2:
            td -= 0.5 * j * (j - 1) * s1d(d, la[d], j - 2)
        for e in range(3):
            if e != d:
                td *= s1d(e, la[e], lb[e])
        total += td
    return total


def _hermite_coulomb(t, u, v, m, p, pc):
    if t < 0 or u < 0 or v < 0:
        return 0.0
    if t == u == v == 0:
        big_t = p * (pc[0] ** 2 + pc[1] ** 2 + pc[2] ** 2)
        return (-2.0 * p) ** m * boys(m, big_t)
    if t > 0:
        return ((t - 1) * _hermite_coulomb(t - 2, u, v, m + 1, p, pc)
                + pc[0] * _hermite_coulomb(t - 1, u, v, m + 1, p, pc))
    if u > 0:
        return ((u - 1) * _hermite_coulomb(t, u - 2, v, m + 1, p, pc)
                + pc[1] * _hermite_coulomb(t, u - 1, v, m + 1, p, pc))
    return ((v - 1) * _hermite_coulomb(t, u, v - 2, m + 1, p, pc)
            + pc[2] * _hermite_coulomb(t, u, v - 1, m + 1, p, pc))


def _nuclear_prim(a, la, ra, b, lb, rb, rc):
    p = a + b
    pp = (a * ra + b * rb) / p
    pc = pp - rc
    val = 0.0
    for t in range(la[0] + lb[0] + 1):
        for u in range(la[1] + lb[1] + 1):
            for v in range(la[2] + lb[2] + 1):
                e = (_hermite_e(la[0], lb[0], t, ra[0] - rb[0], a, b)
                     * _hermite_e(la[1], lb[1], u, ra[1] - rb[1], a, b)
                     * _hermite_e(la[2], lb[2], v, ra[2] - rb[2], a, b))
                if e != 0.0:
                    val += e * _hermite_coulomb(t, u, v, 0, p, pc)
    return 2.0 * np.pi / p * val


def _eri_prim(a, la, ra, b, lb, rb, c, lc, rc, d, ld, rd):
    p = a + b
    q = c + d
    rho = p * q / (p + q)
    pp = (a * ra + b * rb) / p
    qq = (c * rc + d * rd) / q
    pq = pp - qq
    val = 0.0
    for t in range(la[0] + lb[0] + 1):
        for u in range(la[1] + lb[1] + 1):
            for v in range(la[2] + lb[2] + 1):
                e1 = (_hermite_e(la[0], lb[0], t, ra[0] - rb[0], a, b)
                      * _hermite_e(la[1], lb[1], u, ra[1] - rb[1], a, b)
                      * _hermite_e(la[2], lb[2], v, ra[2] - rb[2], a, b))
                if e1 == 0.0:
                    continue
                for tt in range(lc[0] + ld[0] + 1):
                    for uu in range(lc[1] + ld[1] + 1):
                        for vv in range(lc[2] + ld[2] + 1):
                            e2 = (_hermite_e(lc[0], ld[0], tt, rc[0] - rd[0], c, d)
                                  * _hermite_e(lc[1], ld[1], uu, rc[1] - rd[1], c, d)
                                  * _hermite_e(lc[2], ld[2], vv, rc[2] - rd[2], c, d))
                            if e2 == 0.0:
                                continue
                            val += (e1 * e2 * (-1.0) ** (tt + uu + vv)
                                    * _hermite_coulomb(t + tt, u + uu, v + vv, 0, rho, pq))
    return val * 2.0 * np.pi ** 2.5 / (p * q * np.sqrt(p + q))


def _prim_norm(a: float, l) -> float:
    big_l = sum(l)

    def dfact(k):
        return 1.0 if k <= 0 else float(np.prod(np.arange(2 * k - 1, 0, -2)))

    return ((2 * a / np.pi) ** 0.75 * (4 * a) ** (big_l / 2.0)
            / np.sqrt(dfact(l[0]) * dfact(l[1]) * dfact(l[2])))


class ContractedGaussian:
    def __init__(self, center, l, alphas, coefs):
        self.center = np.asarray(center, dtype=float)
        self.l = tuple(l)
        self.alphas = np.asarray(alphas, dtype=float)
        scaled = np.asarray(coefs, dtype=float) * np.array(
            [_prim_norm(a, self.l) for a in self.alphas]
        )
        norm = 0.0
        for ci, ai in zip(scaled, self.alphas):
            for cj, aj in zip(scaled, self.alphas):
                norm += ci * cj * _overlap_prim(ai, self.l, self.center, aj, self.l, self.center)
        self.coefs = scaled / np.sqrt(norm)


def build_basis(atoms) -> list[ContractedGaussian]:
    """STO-3G AO list for [(symbol, xyz_bohr), ...]; p shells give x,y,z AOs."""
    aos = []
    for sym, xyz in atoms:
        z1, z2 = _ZETA[sym]
        aos.append(ContractedGaussian(xyz, (0, 0, 0), _ALPHA_1S * z1**2, _COEF_1S))
        if z2 is not None:
            aos.append(ContractedGaussian(xyz, (0, 0, 0), _ALPHA_2SP * z2**2, _COEF_2S))
            for d in range(3):
                l = tuple(1 if e == d else 0 for e in range(3))
                aos.append(ContractedGaussian(xyz, l, _ALPHA_2SP * z2**2, _COEF_2P))
    return aos


def _contract2(fn, A: ContractedGaussian, B: ContractedGaussian) -> float:
    out = 0.0
    for ca, aa in zip(A.coefs, A.alphas):
        for cb, ab in zip(B.coefs, B.alphas):
            out += ca * cb * fn(aa, A.l, A.center, ab, B.l, B.center)
    return out


def one_electron_integrals(atoms, aos):
    n = len(aos)
    s = np.zeros((n, n))
    t = np.zeros((n, n))
    v = np.zeros((n, n))
    charges = [(NUCLEAR_CHARGE[sym], np.asarray(xyz, dtype=float)) for sym, xyz in atoms]
    for i in range(n):
        for j in range(i, n):
            s[i, j] = s[j, i] = _contract2(_overlap_prim, aos[i], aos[j])
            t[i, j] = t[j, i] = _contract2(_kinetic_prim, aos[i], aos[j])
            vij = 0.0
            for zc, rc in charges:
                vij -= zc * _contract2(
                    lambda aa, la, ra, ab, lb, rb: _nuclear_prim(aa, la, ra, ab, lb, rb, rc),
                    aos[i], aos[j],
                )
            v[i, j] = v[j, i] = vij
    return s, t, v


def electron_repulsion_integrals(aos):
    """Chemist-notation (ij|kl) tensor using 8-fold permutational symmetry."""
    n = len(aos)
    eri = np.zeros((n, n, n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for ij, (i, j) in enumerate(pairs):
        for kl in range(ij + 1):
            k, l = pairs[kl]
            val = 0.0
            A, B, C, D = aos[i], aos[j], aos[k], aos[l]
            for ca, aa in zip(A.coefs, A.alphas):
                for cb, ab in zip(B.coefs, B.alphas):
                    for cc, ac in zip(C.coefs, C.alphas):
                        for cd, ad in zip(D.coefs, D.alphas):
                            val += ca * cb * cc * cd * _eri_prim(
                                aa, A.l, A.center, ab, B.l, B.center,
                                ac, C.l, C.center, ad, D.l, D.center,
                            )
            for p, q in ((i, j), (j, i)):
                for r, t in ((k, l), (l, k)):
                    eri[p, q, r, t] = eri[r, t, p, q] = val
    return eri


def nuclear_repulsion(atoms) -> float:
    e = 0.0
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            zi, ri = NUCLEAR_CHARGE[atoms[i][0]], np.asarray(atoms[i][1])
            zj, rj = NUCLEAR_CHARGE[atoms[j][0]], np.asarray(atoms[j][1])
            e += zi * zj / np.linalg.norm(ri - rj)
    return e
