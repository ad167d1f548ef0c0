"""Quick end-to-end check of the adcpy bindings."""
import adcpy

c2 = adcpy.cube(2)
assert c2.degree_ranks() == [4, 4, 1]
assert c2.is_valid()
assert adcpy.is_strong_steiner(c2)
assert adcpy.is_total_order(c2)
assert adcpy.automorphism_count(c2) == 1

assert adcpy.isomorphic(adcpy.tensor(adcpy.cube(1), adcpy.cube(1)), c2)
assert adcpy.suspend(adcpy.unit()) == adcpy.globe(1)
assert adcpy.dual(adcpy.dual(c2, "odd"), "odd") == c2
assert adcpy.theta("s(s(*))").degree_ranks() == [2, 2, 1]

nerve = adcpy.nerve_counts(c2, 2, cap=4)
assert nerve["counts"] == [4, 10, 11]
assert not nerve["truncated"]

assert adcpy.parse(adcpy.serialize(c2)).degree_ranks() == [4, 4, 1]
assert '"0" -> "?"' in adcpy.to_dot(adcpy.cube(1))

for rep in (
    adcpy.verify_cube_order(2),
    adcpy.verify_oriental_cube_retract(2),
    adcpy.verify_gray_cylinder(adcpy.cube(1)),
):
    assert rep["pass"], rep["summary"]

try:
    adcpy.cube(13)
except ValueError:
    pass
else:
    raise AssertionError("cube(13) should raise")

print("smoke ok")
