"""High-precision reference values frozen into the C++ unit tests.

Run with `python3 tests/oracles/freeze_constants.py`. Uses mpmath at 40 digits;
every value here is computed directly from the closed forms, independent of the
C++ code paths under test.
"""
import mpmath as mp

mp.mp.dps = 40
coth = lambda x: 1 / mp.tanh(x)

# engine: omega1=0.1, omega2=1, T_h=2, T_c=0.01
w1, w2, th, tc = mp.mpf("0.1"), mp.mpf(1), mp.mpf(2), mp.mpf("0.01")
ch = coth(w2 / th / 2)
cc = coth(w1 / tc / 2)


def chi_of(z, p):
    return mp.acosh((1 - mp.cos(p)) * mp.cosh(z) ** 2 + mp.cos(p))


def theta_of(z, p):
    return mp.acos(mp.sin(p) / mp.sqrt(mp.sin(p) ** 2 + (1 - mp.cos(p)) ** 2 * mp.cosh(z) ** 2))


def show(name, v):
    print(f"{name:28s} {mp.nstr(v, 20)}")


z, p = mp.mpf(2), mp.mpf("0.1")
show("chi(2,0.1)", chi_of(z, p))
show("theta(2,0.1)", theta_of(z, p))
show("n_out(0,chi(2,0.1))", mp.cosh(chi_of(z, p)) - 1)
chimax = mp.acosh((w1 * cc + w2 * ch) / (w2 * cc + w1 * ch))
show("chi_max fig3", chimax)
show("phi_max(2,chi_max)", mp.acos(1 - 2 * mp.sinh(chimax / 2) ** 2 / mp.sinh(2) ** 2))
show("h_a", w1 * cc)
show("h_c", w2 * ch)
show("w_ab(chi=0)", (w2 - w1) * cc)
show("q_bc(chi=0)", w2 * (ch - cc))
show("w_cd(chi=0)", (w1 - w2) * ch)
show("w_net(chi=0)", -((w2 - w1) * cc + (w1 - w2) * ch))
show("w_fric(chi=1)", 2 * w1 * mp.sinh(mp.mpf("0.5")) ** 2 * ch)
show("var_n(chi=0)", (ch ** 2 - 1) / 2)
show("dn_dphi_paper(2,0.1)", mp.sin(p) * mp.sinh(z) ** 2 * ch ** 2)
show("dn_dphi_chain(2,0.1)", mp.sin(p) * mp.sinh(z) ** 2 * ch)
show("n_phi(3.4)", ch * mp.cosh(mp.mpf("3.4")) - 1)
show("snl(3.4)", 1 / mp.sqrt(ch * mp.cosh(mp.mpf("3.4")) - 1))
show("thermal N (b=.5,w=1)", coth(mp.mpf("0.25")) - 1)

print("# log-gamma reference points (re, im, re lnG, im lnG)")
for zz in [mp.mpc(0.5, 0), mp.mpc(1, 0), mp.mpc(3.7, 0), mp.mpc(0.3, 0.2), mp.mpc(1, -0.35),
           mp.mpc(0, 2.5), mp.mpc(1, 40), mp.mpc(-2.5, 1.5), mp.mpc(0, -700), mp.mpc(1, 1000),
           mp.mpc(-0.75, 0), mp.mpc(0.1, -12)]:
    lg = mp.loggamma(zz)
    print(f"{{{mp.nstr(zz.real, 17)}, {mp.nstr(zz.imag, 17)}, {mp.nstr(lg.real, 20)}, {mp.nstr(lg.imag, 20)}}},")

print("# Bogoliubov (w_i=1, w_f=0.35): nu, Re ab, Im ab, |beta|^2")


def bog(wi, wf, nu):
    wp, wm = (wi + wf) / 2, (wf - wi) / 2
    g, j = mp.gamma, mp.mpc(0, 1)
    a = mp.sqrt(wf / wi) * g(1 - j * wi / nu) * g(-j * wf / nu) / (g(-j * wp / nu) * g(1 - j * wp / nu))
    b = mp.sqrt(wf / wi) * g(1 - j * wi / nu) * g(j * wf / nu) / (g(j * wm / nu) * g(1 + j * wm / nu))
    return a, b


for nu in ["0.5", "2", "20"]:
    a, b = bog(mp.mpf(1), mp.mpf("0.35"), mp.mpf(nu))
    print(nu, mp.nstr((a * b).real, 20), mp.nstr((a * b).imag, 20), mp.nstr(abs(b) ** 2, 20))

print("# transmission line defaults, j=1")
phi0 = mp.mpf("2.067833848e-15")
L, C, EC = mp.mpf("60e-12"), mp.mpf("0.4e-12"), mp.mpf("1e-9")
show("circuit term", 4 * mp.sin(mp.pi / 100) ** 2 / (L * C))
show("josephson term (E0)", (2 * mp.pi / phi0) ** 2 * EC)
wi = mp.sqrt(4 * mp.sin(mp.pi / 100) ** 2 / (L * C) + (2 * mp.pi / phi0) ** 2 * EC * mp.mpf("1.78"))
wf = mp.sqrt(4 * mp.sin(mp.pi / 100) ** 2 / (L * C) + (2 * mp.pi / phi0) ** 2 * EC * mp.mpf("0.22"))
show("expansion omega_i", wi)
show("expansion omega_f", wf)
