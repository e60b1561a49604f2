"""Compare the numba kernels against the pure-numpy fallback.

Usage: python3 bench/benchmark_kernels.py [--train-size N] [--epochs E]

Runs each hot rule once per backend on the same data and seed, reports
seconds/epoch and the speedup, and verifies both backends end at the same
validation accuracy.
"""

from __future__ import annotations

import argparse
import os
import time

from mlpgrid.dataset import load_mnist_dir, subset
from mlpgrid.learners import LearningRule, train
from mlpgrid.network import NetworkSpec


def run(backend: str, spec, rule, tr, va):
    os.environ["MLPGRID_BACKEND"] = backend
    if backend == "numba":  # trigger JIT outside the timed region
        warm_tr, warm_va = subset(tr, 32, 8, 0)
        train(spec, rule, warm_tr, warm_va)
    t0 = time.time()
    hist, _ = train(spec, rule, tr, va)
    dt = (time.time() - t0) / rule.epochs
    return dt, hist.final_val_acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mnist-dir", default="data/mnist")
    ap.add_argument("--train-size", type=int, default=2000)
    ap.add_argument("--val-size", type=int, default=500)
    ap.add_argument("--epochs", type=int, default=1)
    args = ap.parse_args()

    full = load_mnist_dir(args.mnist_dir)
    tr, va = subset(full, args.train_size, args.val_size, 0)
    spec = NetworkSpec((784, 500, 500, 500, 10))
    cases = [("sgd", 1), ("cp", 1), ("mbgd", 4), ("mbgd", 8)]
    print(f"{'rule':8} {'numpy s/ep':>12} {'numba s/ep':>12} {'speedup':>9}  acc(np/nb)")
    for kind, batch in cases:
        rule = LearningRule(kind=kind, batch=batch, epochs=args.epochs, seed=0)
        t_np, acc_np = run("numpy", spec, rule, tr, va)
        t_nb, acc_nb = run("numba", spec, rule, tr, va)
        label = kind if batch == 1 else f"{kind}{batch}"
        print(f"{label:8} {t_np:12.2f} {t_nb:12.2f} {t_np / t_nb:8.1f}x"
              f"  {acc_np:.4f}/{acc_nb:.4f}")


if __name__ == "__main__":
    main()
