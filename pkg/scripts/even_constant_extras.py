"""List H^2(U_1, k) classes whose weights are not in the expected tables, with their cocycles."""
import argparse

from liecoh import paper_tables as pt
from liecoh.cohomology import h_n_u1
from liecoh.rootsystem import parse_system


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("systems", nargs="*", default=["B2", "B3", "C3", "G2"])
    args = ap.parse_args()
    for name in args.systems:
        rs = parse_system(name)
        rep = pt.verify_h2_u1(rs)
        print(f"{rs.name}: expected {rep.expected_total}, computed {rep.computed_total}")
        classes = {pt.weight_key(c.simple): c for c in h_n_u1(rs, 2).classes.values()}
        for key in sorted(rep.extra_in_computed):
            for r in classes[key].reps:
                terms = " + ".join(
                    "*".join("phi" + "".join(map(str, rs.positive_roots[i])) for i in mono) for mono in sorted(r))
                print(f"  {key}: {terms}")


if __name__ == "__main__":
    main()
