"""Sparsest relation of each even weight, compared with the balanced odd triple."""
import argparse

from lacuna.relations import lacunarity_search
from lacuna.serialize import render_relation


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-weight", type=int, default=8)
    parser.add_argument("--max-weight", type=int, default=40)
    parser.add_argument("--show", action="store_true", help="print the best relation")
    args = parser.parse_args()

    print("weight  best(r,s,t)   sparsity  series used")
    for k in range(args.min_weight, args.max_weight + 1, 2):
        hits = lacunarity_search(k, 1)
        if not hits:
            print(f"{k:6d}  none")
            continue
        h = hits[0]
        support = len(h.vector.eisenstein_support)
        print(f"{k:6d}  {str(h.spec.as_tuple()):12s}  {h.sparsity:8d}  {support} of {k // 2 - 2}")
        if args.show:
            print("        " + render_relation(h.vector))


if __name__ == "__main__":
    main()
