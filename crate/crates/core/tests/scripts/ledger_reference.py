"""Reference values for the constant ledger, computed with exact fractions.

Run with `python3 ledger_reference.py`; the printed values are frozen in
`tests/limits_props.rs`.
"""
from fractions import Fraction as F
from math import ceil, comb, log


def big_m(edges, k):
    return comb(edges + 2 * k, 2)


def lemma_upper(edges, k, eps):
    m = big_m(edges, k)
    return 2 * ((8 * k + 1) * m + comb(2 * k, 2)) / eps, 2 * m / eps


def lbound(edges, k, eps, alpha):
    beta = eps / (8 * alpha)
    c = (comb(k, 2) + alpha) / beta
    q0 = 2 * k * (2 * edges + 2 * c + 4 * k) * (1 + beta) + 4 * k * k + 2 * alpha
    n0 = ceil(2 * q0 / eps)
    q = 8 * c * (n0 + 1) * (1 + beta) + 4 * k * k * (n0 + 2) ** 2 + 2 * comb(k, 2)
    n1 = ceil(2 * q / eps)
    return beta, c, q0, n0, q, n1


def theorem(edges, k, eps):
    m = big_m(edges, k)
    n2, a0 = lemma_upper(edges, k, eps / 2)
    eps1 = eps / 2
    while True:
        alpha_d, alpha_u = eps1 / 2, m + eps1 / 2
        beta_d, beta_u = eps1 / (8 * alpha_u), eps1 / (8 * alpha_d)
        c_d = (comb(k, 2) + alpha_d) / beta_u
        c_u = (comb(k, 2) + alpha_u) / beta_d
        q0_d = 2 * k * (2 * edges + 2 * c_d + 4 * k) * (1 + beta_d) + 4 * k * k + 2 * alpha_d
        q0_u = 2 * k * (2 * edges + 2 * c_u + 4 * k) * (1 + beta_u) + 4 * k * k + 2 * alpha_u
        n0_d = ceil(2 * q0_d / eps1)
        n0_u = ceil(2 * q0_u / eps1)
        if k == 0 or n0_d >= n2:
            break
        eps1 /= 2
    q_u = 8 * c_u * (n0_u + 1) * (1 + beta_u) + 4 * k * k * (n0_u + 2) ** 2 + 2 * comb(k, 2)
    n1_u = ceil(2 * q_u / eps1)
    return dict(n2=n2, a0=a0, eps1=eps1, n0_d=n0_d, n0_u=n0_u, q_u=q_u, n1_u=n1_u,
                N=ceil(a0 * n1_u))


if __name__ == "__main__":
    print("lbound(|E|=1, k=1, eps=1, alpha=1):", lbound(1, 1, F(1), F(1)))
    print("lemma_upper(|E|=1, k=1, eps=1):", lemma_upper(1, 1, F(1)))
    grid = [F(1, 2 ** i) for i in range(6)]
    for edges, k in [(1, 1), (4, 2), (2, 3)]:
        ns = []
        for eps in grid:
            t = theorem(edges, k, eps)
            ns.append(t["N"])
            print(f"theorem(|E|={edges}, k={k}, eps={eps}):", t)
        xs = [log(1 / float(e)) for e in grid]
        ys = [log(n) for n in ns]
        mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
        print(f"slope(|E|={edges}, k={k}) = {slope:.4f}")
