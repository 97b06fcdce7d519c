"""Print the lacunary recurrences for G_6n, G_6n+2, G_6n+4 in integer form and verify each."""
import argparse
import time

from lacuna.relations import evaluate_relation, romik_vector, theorem_6n4_vector, theorem_6n_vector
from lacuna.serialize import render_relation


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--format", choices=["text", "latex"], default="text")
    args = parser.parse_args()

    rows = []
    for n in range(1, args.max_n + 1):
        if n >= 2:
            rows.append(theorem_6n_vector(n))
        rows.append(romik_vector(n))
        rows.append(theorem_6n4_vector(n))
    for vec in sorted(rows, key=lambda v: v.weight):
        start = time.perf_counter()
        ok = evaluate_relation(vec, max(vec.weight, 20)).is_zero()
        ms = 1000 * (time.perf_counter() - start)
        print(f"{vec.weight:4d}  {'ok ' if ok else 'BAD'}  {ms:7.1f} ms  {render_relation(vec, args.format)}")


if __name__ == "__main__":
    main()
