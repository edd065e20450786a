"""Writes b057681.txt and b057682.txt for n = 0..100.

Uses the linear recurrence a(n) = 3 a(n-1) - 3 a(n-2) (n >= 3), which is
independent of the binomial-sum generator under test.
"""

SEEDS = {"b057681.txt": (1, 1, 1), "b057682.txt": (0, 1, 2)}
N_MAX = 100


def terms(seed):
    a = list(seed)
    while len(a) <= N_MAX:
        a.append(3 * a[-1] - 3 * a[-2])
    return a[: N_MAX + 1]


for name, seed in SEEDS.items():
    with open(name, "w", newline="\n") as f:
        for n, v in enumerate(terms(seed)):
            f.write(f"{n} {v}\n")
