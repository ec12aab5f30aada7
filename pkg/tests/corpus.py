"""Fixed-seed corpora shared by the unit tests and the acceptance suite."""

from monoforge.generate import (
    random_3sat22,
    random_balanced_qbf,
    random_mono_3sat_star22,
    random_mono_nae_e2,
)

# 20 duplicate-literal monotone (2,2) instances, up to 12 variables
STAR22_SPECS = [((seed % 3 + 2) * 3, seed) for seed in range(1, 21)]

# 20 mixed (2,2) instances, up to 10 variables (sizes divisible by 3)
SAT22_SPECS = [((seed % 2 + 2) * 3, seed) for seed in range(21, 41)]

# 200 two-appearance all-positive instances, 6..60 variables
NAE_SPECS = [(6 + 3 * ((seed - 1) % 19), seed) for seed in range(1, 201)]

# balanced two-level corpora, universal count at most 4
QBF_1122_SPECS = [(p, 100 + i) for i, p in enumerate((2, 2, 2, 3, 3, 3, 3, 3, 4, 4))]
QBF_2222_SPECS = [(3, 200 + i) for i in range(10)]

# pinned seeds for the miner rediscovery run
REDISCOVERY_PERTURB_SEED = 2
REDISCOVERY_MINE_SEED = 0


def star22_corpus():
    return [random_mono_3sat_star22(n, seed) for n, seed in STAR22_SPECS]


def sat22_corpus():
    return [random_3sat22(n, seed) for n, seed in SAT22_SPECS]


def nae_corpus():
    return [random_mono_nae_e2(n, seed) for n, seed in NAE_SPECS]


def qbf_1122_corpus():
    return [random_balanced_qbf(p, 1, 1, seed) for p, seed in QBF_1122_SPECS]


def qbf_2222_corpus():
    return [random_balanced_qbf(p, 2, 2, seed) for p, seed in QBF_2222_SPECS]
