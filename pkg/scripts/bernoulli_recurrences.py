"""Bernoulli-number identities obtained from constant terms of the lacunary recurrences."""
import argparse

from lacuna.relations import bernoulli_identity, theorem_6n4_vector, theorem_6n_vector, romik_vector


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=3)
    args = parser.parse_args()
    for n in range(1, args.max_n + 1):
        vecs = [romik_vector(n), theorem_6n4_vector(n)]
        if n >= 2:
            vecs.insert(0, theorem_6n_vector(n))
        for vec in vecs:
            ident = bernoulli_identity(vec)
            status = "holds" if ident.holds else f"FAILS {ident.residuals}"
            print(f"weight {vec.weight}: {ident.bernoulli_form}   [{status}]")


if __name__ == "__main__":
    main()
