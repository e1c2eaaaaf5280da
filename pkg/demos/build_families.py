"""Walk through the two prime-based family constructions.

Run with: python3 demos/build_families.py
"""

from molsnet import make_mols_family, validate_latin


def show(square, title):
    print(f"{title}  [{square.provenance}]")
    for row in square.cells:
        print("   ", " ".join(str(s) for s in row))
    print()


def main():
    print("=" * 60)
    print("Order 4: n+1 = 5 is prime, so we get the shift family.")
    print("The base square holds (i*j) mod 5; the others cycle its rows.")
    print("=" * 60)
    family = make_mols_family(4)
    for k, square in enumerate(family):
        show(square, f"square {k + 1} of {len(family)}")

    print("=" * 60)
    print("Order 5: n = 5 is prime, so we get the additive family.")
    print("Square h holds (i + h*j) mod 5, with residue 0 written as 5.")
    print("=" * 60)
    family = make_mols_family(5)
    for k, square in enumerate(family):
        show(square, f"square {k + 1} of {len(family)}")

    print("Every member passes the Latin validator:")
    for n in (4, 5, 6, 7, 10, 11):
        family = make_mols_family(n)
        ok = all(validate_latin(square).ok for square in family)
        print(f"  order {n:2d}: {len(family)} squares ({family.family_kind}), all Latin: {ok}")

    print()
    print("Orders where neither n nor n+1 is prime have no construction:")
    from molsnet import ConstructionError
    for n in (9, 14, 15):
        try:
            make_mols_family(n)
        except ConstructionError as exc:
            print(f"  order {n}: {exc}")


if __name__ == "__main__":
    main()
