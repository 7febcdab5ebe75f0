"""Regenerates reference_values.hpp with mpmath (moments by tanh-sinh quadrature,
monic polynomials from the moment system, recurrence terms read off from them)."""

import mpmath as mp

mp.mp.dps = 60
NMAX = 8

CANONICAL = {
    "jp": dict(alpha0=0.5, alphas=[0.25, 0.75]),
    "ml1": dict(alphas=[0.3, 0.8]),
    "ml2": dict(alpha0=0.5, cs=[1.0, 2.0]),
    "mh": dict(cs=[0.5, -0.5]),
    "ja": dict(a=-1.0, alpha=0.5, beta=0.5, gamma=0.5),
    "jl": dict(a=-1.0, alpha=0.5, beta=0.5),
    "lh": dict(beta=0.5),
}


def f(x):
    return mp.mpf(x)


def weights(fam, p):
    """List of (integrand(x, k), interval) pairs, one per weight."""
    if fam == "jp":
        a0 = f(p["alpha0"])
        return [(lambda x, k, a=f(a): x**k * x**a * (1 - x) ** a0, [0, 1]) for a in p["alphas"]]
    if fam == "ml1":
        return [(lambda x, k, a=f(a): x**k * x**a * mp.exp(-x), [0, mp.inf]) for a in p["alphas"]]
    if fam == "ml2":
        a0 = f(p["alpha0"])
        return [(lambda x, k, c=f(c): x**k * x**a0 * mp.exp(-c * x), [0, mp.inf]) for c in p["cs"]]
    if fam == "mh":
        return [(lambda x, k, c=f(c): x**k * mp.exp(-x * x + c * x), [-mp.inf, 0, mp.inf]) for c in p["cs"]]
    if fam == "ja":
        a, al, be, ga = (f(p[k]) for k in ("a", "alpha", "beta", "gamma"))
        w = lambda x, k: x**k * abs(x - a) ** al * abs(x) ** be * abs(1 - x) ** ga
        return [(w, [a, 0]), (w, [0, 1])]
    if fam == "jl":
        a, al, be = (f(p[k]) for k in ("a", "alpha", "beta"))
        w = lambda x, k: x**k * abs(x - a) ** al * abs(x) ** be * mp.exp(-x)
        return [(w, [a, 0]), (w, [0, mp.inf])]
    if fam == "lh":
        be = f(p["beta"])
        w = lambda x, k: x**k * abs(x) ** be * mp.exp(-x * x)
        return [(w, [-mp.inf, 0]), (w, [0, mp.inf])]
    raise ValueError(fam)


def moments(fam, p, kmax):
    out = []
    for w, iv in weights(fam, p):
        out.append([mp.quad(lambda x: w(x, k), iv) for k in range(kmax + 1)])
    return out


def monic(mom, n1, n2):
    N = n1 + n2
    if N == 0:
        return [mp.mpf(1)]
    rows, rhs = [], []
    for j, nj in enumerate((n1, n2)):
        m = mom[j]
        for k in range(nj):
            rows.append([m[k + i] / m[0] for i in range(N)])
            rhs.append(-m[k + N] / m[0])
    c = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
    return [c[i] for i in range(N)] + [mp.mpf(1)]


def stepline(N):
    return (N - N // 2, N // 2)


def recurrence(polys, n):
    # x P_n - P_{n+1} = b P_n + c P_{n-1} + d P_{n-2}
    lhs = [mp.mpf(0)] + polys[n]
    nxt = polys[n + 1]
    r = [lhs[i] - nxt[i] for i in range(n + 2)]
    b = r[n]
    r = [r[i] - b * (polys[n][i] if i <= n else 0) for i in range(n + 1)]
    c = r[n - 1] if n >= 1 else mp.mpf(0)
    if n >= 1:
        r = [r[i] - c * (polys[n - 1][i] if i <= n - 1 else 0) for i in range(n)]
    d = r[n - 2] if n >= 2 else mp.mpf(0)
    return b, c, d


def x_ratio(fam, p, n):
    a = f(p["a"])
    al, be = f(p["alpha"]), f(p["beta"])
    if fam == "ja":
        ga = f(p["gamma"])
        w = lambda x: (x - a) ** (al + n) * abs(x) ** (be + n) * (1 - x) ** (ga + n)
    else:
        w = lambda x: (x - a) ** (al + n) * abs(x) ** (be + n) * mp.exp(-x)
    return mp.quad(lambda x: x * w(x), [a, 0]) / mp.quad(w, [a, 0])


def s(v):
    return '"' + mp.nstr(v, 45, min_fixed=-5, max_fixed=5) + '"'


def main():
    out = ["// Generated by make_reference.py; do not edit.", "#pragma once", "", "#include <array>",
           "", "namespace refdata {", "", f"constexpr int kMaxDegree = {NMAX};", ""]
    out.append("struct FamilyReference {")
    out.append("    const char* family;")
    out.append(f"    std::array<std::array<const char*, {NMAX + 1}>, {NMAX + 1}> poly;  // poly[N][k]")
    out.append(f"    std::array<const char*, {NMAX}> b, c, d;                          // n = 0..{NMAX - 1}")
    out.append("};")
    out.append("")
    out.append("inline const FamilyReference kFamilies[] = {")
    for fam, p in CANONICAL.items():
        mom = moments(fam, p, 2 * NMAX + 2)
        polys = [monic(mom, *stepline(N)) for N in range(NMAX + 1)]
        rec = [recurrence(polys, n) for n in range(NMAX)]
        out.append(f'    {{"{fam}",')
        out.append("     {{")
        for N in range(NMAX + 1):
            vals = [s(polys[N][k]) if k <= N else '""' for k in range(NMAX + 1)]
            out.append("         {" + ", ".join(vals) + "},")
        out.append("     }},")
        for idx in range(3):
            out.append("     {" + ", ".join(s(r[idx]) for r in rec) + "},")
        out.append("    },")
    out.append("};")
    out.append("")
    for fam in ("ja", "jl"):
        vals = [s(x_ratio(fam, CANONICAL[fam], n)) for n in range(6)]
        out.append(f"inline const char* const kX_{fam}[] = {{" + ", ".join(vals) + "};")
    out.append("")
    out.append("}  // namespace refdata")
    print("\n".join(out))


if __name__ == "__main__":
    main()
