"""Compare the root-sum equations with and without the single-monomial cocycle filter in type A."""
from liecoh.rootsum import RootSumQuery, Variant, new_general_weights, solve
from liecoh.rootsystem import build_root_system


def main():
    print("rank  beta1(raw)  beta1(filtered)  general-only(raw)  general-only(filtered)")
    for n in range(2, 9):
        rs = build_root_system("A", n)
        raw = len(solve(rs, RootSumQuery(Variant.PLAIN_BETA1)))
        filt = len(solve(rs, RootSumQuery(Variant.PLAIN_BETA1, admissible_only=True)))
        print(f"A{n:<4} {raw:>10} {filt:>16} {len(new_general_weights(rs)):>18} "
              f"{len(new_general_weights(rs, admissible_only=True)):>23}")


if __name__ == "__main__":
    main()
