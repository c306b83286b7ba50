"""Hunting for obstructed second-order thickenings of the projective plane.

For a split rank-3 bundle E on P^2 the second-order thickenings of the split
first-order model are classified by H^1(T tensor Lambda^2 E), and such a
thickening extends one order higher exactly when the image of its class in
H^2(Lambda^3 E tensor E-dual) vanishes.  This script searches a degree
window, evaluates the three classical existence conditions, and then settles
obstructedness by exact computation of that image.
"""

from superthick.bott import SplitBundleDegrees
from superthick.obstruct import check_split_conditions, search_split_triples
from superthick.pipeline import pipeline_obstructed_cp2


def main():
    print("degree triples in [-8, 8] meeting k1+k2 > 2, k1+k3 = -3, k2+k3 < -3:")
    hits = search_split_triples(-8, 8)
    for h in hits:
        mark = "conditions hold" if h.direct_all else "condition 2 fails exactly"
        print(f"  {h.degrees.degrees}  witnesses {h.witnesses}  ({mark})")
    print(f"{len(hits)} triples\n")

    for degrees in [(3, 0, -6), (4, -1, -7)]:
        print(f"== degrees {degrees} ==")
        rep = check_split_conditions(SplitBundleDegrees(degrees))
        for i, (holds, witness) in enumerate(rep.direct_conditions, start=1):
            print(f"  condition {i}: {holds} (dimension {witness})")
        out = pipeline_obstructed_cp2(degrees)
        (cls,) = out["classes"]
        print(f"  H^1 of first-order extensions: {out['h1_dim']}")
        print(f"  obstruction target H^2: {out['h2_dim']} dimensional")
        print(f"  image class coordinates: {cls['class_coordinates']}")
        print(f"  verdict: {out['status']}\n")

    print("The three conditions hold for (3, 0, -6), yet its image class is")
    print("exactly zero: every second-order thickening of that split model")
    print("extends, so the conditions are not sufficient as stated.  The")
    print("middle degree is the reason: the image couples the extension class")
    print("to the derivative of the middle frame factor, which a zero middle")
    print("degree kills.  One step away, (4, -1, -7) has image coordinate -1")
    print("on the h^2(O(-3)) line: an explicitly obstructed second-order")
    print("thickening of the projective plane, certified in exact arithmetic.")


if __name__ == "__main__":
    main()
