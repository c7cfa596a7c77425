"""Lean scratch validation. Vectorized sncndn; small grids."""
import numpy as np

# ---------- vectorized descending-Landen sncndn ----------

def _chain(m):
    """AGM chain for parameter m in [0,1). Returns (scale c, [(a_i, b_i)...])."""
    a, emc = 1.0, 1.0 - m
    pairs = []
    c = 0.5 * (a + np.sqrt(emc))
    for _ in range(16):
        emc = np.sqrt(emc)
        pairs.append((a, emc))
        c = 0.5 * (a + emc)
        if abs(a - emc) <= 1e-8 * a:
            break
        emc *= a
        a = c
    return c, pairs

def sncndn(u, m):
    u = np.asarray(u, dtype=float)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    if m == 0.0:
        out = np.sin(u), np.cos(u), np.ones_like(u)
    elif m == 1.0:
        out = np.tanh(u), 1/np.cosh(u), 1/np.cosh(u)
    else:
        c, pairs = _chain(m)
        uu = c * u
        sn, cn, dn = np.sin(uu), np.cos(uu), np.ones_like(uu)
        nz = sn != 0.0
        with np.errstate(divide='ignore', invalid='ignore'):
            a = np.where(nz, cn / np.where(nz, sn, 1.0), 0.0)
            cc = c * a
            for (b, e) in reversed(pairs):
                a = a * cc
                cc = cc * dn
                dn = (e + a) / (b + a)
                a = cc / b
            a = 1.0 / np.sqrt(cc * cc + 1.0)
            snn = np.where(sn >= 0, a, -a)
            cnn = cc * snn
        sn = np.where(nz, snn, sn)
        cn = np.where(nz, cnn, cn)
        dn = np.where(nz, dn, 1.0)
        out = sn, cn, dn
    if scalar:
        return out[0][0], out[1][0], out[2][0]
    return out

def agm_K(m):
    a, b = 1.0, np.sqrt(1.0 - m)
    for _ in range(60):
        if abs(a - b) <= 2e-16 * a:
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    return np.pi / (2 * a)

import mpmath as mp
mp.mp.dps = 25

for m in [0.1, 0.5, 5/9, 0.9]:
    K = agm_K(m)
    sn, cn, dn = sncndn(K, m)
    print(f"m={m:.4f} dK={K-float(mp.ellipk(m)):.2e} dn(K)-sqrt(1-m)={dn-np.sqrt(1-m):.2e} sn(K)-1={sn-1:.2e}")

worst = 0.0
for m in [0.1, 0.5, 0.9]:
    K = agm_K(m)
    us = np.linspace(-4*K, 4*K, 17)
    sn, cn, dn = sncndn(us, m)
    worst = max(worst, np.max(np.abs(sn**2+cn**2-1)), np.max(np.abs(m*sn**2+dn**2-1)))
    for u, s, c_, d in zip(us[::4], sn[::4], cn[::4], dn[::4]):
        worst = max(worst,
                    abs(s - float(mp.ellipfun('sn', u, m))),
                    abs(c_ - float(mp.ellipfun('cn', u, m))),
                    abs(d - float(mp.ellipfun('dn', u, m))))
print("sncndn worst:", worst)
print("K(0.5) =", mp.nstr(mp.ellipk(mp.mpf(1)/2), 22))
print("K(5/9) =", mp.nstr(mp.ellipk(mp.mpf(5)/9), 22))

# ---------- frame ----------

class Ctx:
    def __init__(self, a, b, H):
        self.a, self.b, self.H = a, b, H
        self.kappa = a*a/(b*b); self.kp = 1-self.kappa
        self.Kp = agm_K(self.kp); self.Q = 2*a*b/H

def v0_arr(ctx, y):
    _, _, dn = sncndn(2*ctx.b*np.asarray(y, dtype=float), ctx.kp)
    return 2*ctx.b/ctx.H*dn

def v0_dot(ctx, y):
    sn, cn, dn = sncndn(2*ctx.b*y, ctx.kp)
    return -4*ctx.b**2*ctx.kp/ctx.H*sn*cn

def xi_mat(ctx, lam):
    a, b = ctx.a, ctx.b
    return 1j*np.array([[0, a/lam + b*lam], [b/lam + a*lam, 0]])

def mu_circle(ctx, t):
    lam = np.exp(1j*t)
    m2 = -(ctx.a*ctx.b*(lam**2 + lam**-2) + ctx.a**2 + ctx.b**2)
    mu = np.sqrt(m2 + 0j)
    return -mu if mu.imag < 0 else mu

def omega(ctx, lam): return 1j*(ctx.b/lam + ctx.a*lam)

def Omega1_arr(ctx, y, lam):
    v = v0_arr(ctx, y)
    return 0.5j*v*ctx.H/lam + 2j*ctx.a*ctx.b/(ctx.H*v)*lam

def tracked_sqrt(ctx, y, lam, n=257):
    ys = np.linspace(0.0, y, n)
    P = omega(ctx, lam)*Omega1_arr(ctx, ys, lam)
    ph = np.unwrap(np.angle(P))
    assert np.max(np.abs(np.diff(ph))) < np.pi/2
    return omega(ctx, lam)*np.exp(0.5j*(ph[-1]-ph[0]))*np.sqrt(abs(P[-1])/abs(P[0]))

def T_mat(ctx, y, lam):
    s = tracked_sqrt(ctx, y, lam)
    v = float(v0_arr(ctx, y)); vd = v0_dot(ctx, y)
    return np.array([[complex(Omega1_arr(ctx, y, lam)), -0.5j*vd/v], [0, omega(ctx, lam)]])/s

GLX, GLW = np.polynomial.legendre.leggauss(16)

def quad_panels(fun, y, w):
    if y == 0: return 0j
    sgn = 1.0; a_, b_ = 0.0, y
    if y < 0: sgn, a_, b_ = -1.0, y, 0.0
    npan = max(1, int(np.ceil((b_-a_)/w)))
    edges = np.linspace(a_, b_, npan+1)
    tot = 0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, hw = 0.5*(lo+hi), 0.5*(hi-lo)
        tot += hw*np.sum(GLW*fun(mid + hw*GLX))
    return sgn*tot

def f_int(ctx, y, lam):
    def g(z):
        v = v0_arr(ctx, z)
        return 8*ctx.a*ctx.b*lam/(4j*ctx.a*ctx.b*lam + 1j*ctx.H**2/lam*v**2)
    w = ctx.Kp/(8*ctx.b)
    I1 = quad_panels(g, y, w); I2 = quad_panels(g, y, w/2)
    assert abs(I1-I2) < 1e-11, abs(I1-I2)
    return I2

def exp_traceless(c, X, mu=None):
    if mu is None: mu = np.sqrt(-np.linalg.det(X)+0j)
    w = c*mu
    sc = 1 + w**2/6 + w**4/120 if abs(w) < 1e-4 else np.sinh(w)/w
    return np.cosh(w)*np.eye(2) + c*sc*X

def frame(ctx, x, y, t):
    lam = np.exp(1j*t)
    bf = x + 1j*y + f_int(ctx, y, lam)
    return exp_traceless(bf, xi_mat(ctx, lam), mu_circle(ctx, t)) @ T_mat(ctx, y, lam)

def alpha1(ctx, y, lam):
    v = float(v0_arr(ctx, y)); vd = v0_dot(ctx, y); Q = ctx.Q; H = ctx.H
    return 0.5j*np.array([[vd/v, 2*Q/(v*lam) + v*lam*H], [v*H/lam + 2*Q*lam/v, -vd/v]])

def alpha2(ctx, y, lam):
    v = float(v0_arr(ctx, y)); Q = ctx.Q; H = ctx.H
    return 0.5*np.array([[0, -2*Q/(v*lam) + v*lam*H], [-v*H/lam + 2*Q*lam/v, 0]])

ctx = Ctx(0.4, 0.6, 1.0)
print("\nKp =", ctx.Kp)
t0 = 0.7; lam0 = np.exp(1j*t0)
print("T(0)-I:", np.abs(T_mat(ctx, 0, lam0)-np.eye(2)).max())
F = frame(ctx, 0.3, 0.45, t0)
print("unitarity:", np.abs(F@F.conj().T-np.eye(2)).max(), "detF-1:", abs(np.linalg.det(F)-1))

h = 1e-4; x, y = 0.3, 0.45
a1_fd = np.linalg.inv(F)@(frame(ctx, x+h, y, t0)-frame(ctx, x-h, y, t0))/(2*h)
a2_fd = np.linalg.inv(F)@(frame(ctx, x, y+h, t0)-frame(ctx, x, y-h, t0))/(2*h)
print("MC x residual:", np.abs(a1_fd-alpha1(ctx, y, lam0)).max())
print("MC y residual:", np.abs(a2_fd-alpha2(ctx, y, lam0)).max())

q = ctx.Kp/ctx.b
for tt in [0.3, 1.1, 2.2]:
    fq = f_int(ctx, q, np.exp(1j*tt))
    print(f"t={tt}: Im f(q)+q = {fq.imag+q:.3e}")
lam = np.exp(1j*0.9)
print("additivity:", abs(f_int(ctx, 1.3+q, lam)-f_int(ctx, 1.3, lam)-f_int(ctx, q, lam)))
Typ = T_mat(ctx, 0.37+q, lam); Ty = T_mat(ctx, 0.37, lam)
print("T periodicity:", min(np.abs(Typ-Ty).max(), np.abs(Typ+Ty).max()))
print("T(q) = +/-I:", min(np.abs(T_mat(ctx, q, lam)-np.eye(2)).max(), np.abs(T_mat(ctx, q, lam)+np.eye(2)).max()))

# ---------- basis + Sym-Bobenko ----------
s1 = np.array([[0, 1], [1, 0]], dtype=complex)
s2 = np.array([[0, -1j], [1j, 0]])
s3 = np.array([[1, 0], [0, -1]], dtype=complex)
E1, E2, E3 = -0.5j*s3, -0.5j*s1, -0.5j*s2

def vec2(X):
    return np.array([(2j*X[0, 0]).real, (1j*(X[0, 1]+X[1, 0])).real, (X[1, 0]-X[0, 1]).real])

for V in [np.eye(3)[i] for i in range(3)] + [np.array([.3, -.7, 1.1])]:
    X = V[0]*E1 + V[1]*E2 + V[2]*E3
    assert np.allclose(vec2(X), V)
print("basis ok; [E1,E2]-E3:", np.abs(E1@E2-E2@E1-E3).max())

def frame_deriv_fd(ctx, x, y, t, h=1e-6):
    return (frame(ctx, x, y, t+h)-frame(ctx, x, y, t-h))/(2*h)

def sym_b(ctx, x, y, t, sign):
    F = frame(ctx, x, y, t)
    trans = frame_deriv_fd(ctx, x, y, t)@np.linalg.inv(F)
    Nmat = F@E1@F.conj().T
    return vec2(-1.0/(2*ctx.H)*((-sign)*Nmat + trans))

hh = 1e-5
for (x, y, tt) in [(0.2, 0.3, 0.8)]:
    fx = (sym_b(ctx, x+hh, y, tt, -1)-sym_b(ctx, x-hh, y, tt, -1))/(2*hh)
    fy = (sym_b(ctx, x, y+hh, tt, -1)-sym_b(ctx, x, y-hh, tt, -1))/(2*hh)
    v = float(v0_arr(ctx, y))
    print(f"|fx|-v0={np.linalg.norm(fx)-v:.3e} |fy|-v0={np.linalg.norm(fy)-v:.3e} <fx,fy>={fx@fy:.3e}")
    N = vec2(frame(ctx, x, y, tt)@E1@frame(ctx, x, y, tt).conj().T)
    print("N.fx, N.fy:", N@fx, N@fy, "|N|:", np.linalg.norm(N))
    print("cross-v^2N:", np.abs(np.cross(fx, fy)-v*v*N).max())

p1 = sym_b(ctx, .2, .3, .8, +1); m1 = sym_b(ctx, .2, .3, .8, -1)
N = vec2(frame(ctx, .2, .3, .8)@E1@frame(ctx, .2, .3, .8).conj().T)
print("parallel identity:", np.abs(m1+N/ctx.H-p1).max())

# screw equivariance: f(x+s,y) = exp(s*Phi(xi)) . f(x,y)
def xi_prime_mat(ctx, lam):
    a, b = ctx.a, ctx.b
    return np.array([[0, a/lam - b*lam], [b/lam - a*lam, 0]])

def exp_motion(rotmat, transvec, s):
    # rotation part exp(s*rotmat); translation via beta' = rot x beta + eta
    R = exp_traceless(s, rotmat)
    rv = vec2(rotmat)
    w = np.linalg.norm(rv)
    u = rv/w
    eta_par = (transvec@u)*u; eta_perp = transvec-eta_par
    zeta = np.cross(rv, transvec)/w**2
    # Ad R action on vectors:
    def AdR(p):
        return vec2(R@(p[0]*E1+p[1]*E2+p[2]*E3)@R.conj().T)
    beta = s*eta_par + (zeta - AdR(zeta))
    return R, beta

s = 0.9; tt = 0.8; lam = np.exp(1j*tt)
R, beta = exp_motion(xi_mat(ctx, lam), vec2(xi_prime_mat(ctx, lam)), s)
f0 = sym_b(ctx, 0.2, 0.3, tt, -1)
f1 = sym_b(ctx, 0.2+s, 0.3, tt, -1)
moved = vec2(R@(f0[0]*E1+f0[1]*E2+f0[2]*E3)@R.conj().T) + beta
print("screw equivariance:", np.abs(f1-moved).max())

# round cylinder radius & axis: a=b=0.5, H=1 via closed form frame
a = 0.5; H = 1.0
def cyl_frame(x, y, t):
    lam = np.exp(1j*t); z = x+1j*y
    c = 1j*a*(z/lam + np.conj(z)*lam)
    return exp_traceless(c, s1.astype(complex))
def cyl_frame_d(x, y, t):
    lam = np.exp(1j*t); z = x+1j*y
    cp = a*(z/lam - np.conj(z)*lam)
    c = 1j*a*(z/lam + np.conj(z)*lam)
    # d/dt exp(c*s1) = cp * s1 @ exp(c*s1) since s1 commutes
    return cp*s1@exp_traceless(c, s1.astype(complex))
def cyl_sym(x, y, t, sign=-1):
    F = cyl_frame(x, y, t); Fp = cyl_frame_d(x, y, t)
    return vec2(-1/(2*H)*((-sign)*F@E1@F.conj().T + Fp@np.linalg.inv(F)))
pts = np.array([cyl_sym(x, y, 0.6) for x in np.linspace(0, 3, 7) for y in np.linspace(0, 2, 5)])
# axis direction = xi direction: xi = i a(lam^-1+lam) s1 -> E2 comp
rv = vec2(1j*a*(np.exp(-0.6j)+np.exp(0.6j))*s1)
eta = vec2(a*(np.exp(-0.6j)-np.exp(0.6j))*s1)
w = np.linalg.norm(rv); u = rv/w
zeta = np.cross(rv, eta)/w**2
d = pts - zeta
dist = np.linalg.norm(d - np.outer(d@u, u), axis=1)
print("cyl distances: mean", dist.mean(), "spread", dist.max()-dist.min(), "expected r =", 1/(2*H))
print("pitch:", (eta@u))
