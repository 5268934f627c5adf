"""Built-in algebras and the ten-vertex example used by the golden tests.

The ten-vertex algebra is the triangle-shaped quiver bound by mesh
relations: the three interior squares commute and the three composites
along the bottom boundary vanish.  Module names follow radical-series
labels such as "9/6/2" and "6|2,8|5"; for this algebra all relevant
modules have 0/1 dimension vectors, so the support determines the label.
"""

from __future__ import annotations

from .algebra import Quiver, Relation, build_algebra
from .errors import ValidationError
from .linalg import FieldSpec


def a2_algebra(field=None):
    """The path algebra of 1 -> 2, no relations."""
    field = field or FieldSpec.rationals()
    q = Quiver(["1", "2"], [("a", "1", "2")])
    return build_algebra(field, q, [])


def loop_algebra(field=None, nilpotency=2):
    """One vertex, one loop x with x^nilpotency = 0."""
    field = field or FieldSpec.rationals()
    q = Quiver(["1"], [("x", "1", "1")])
    rel = Relation([(field.one(), ("x",) * nilpotency)], q, field)
    return build_algebra(field, q, [rel])


def linear_an_algebra(n, orientation=None, field=None):
    """Type A_n quiver on vertices 1..n, no relations.

    ``orientation`` is a sequence of n-1 booleans; True points arrow i
    forwards (i -> i+1), False backwards.  Default: all forwards.
    """
    field = field or FieldSpec.prime(2)
    if orientation is None:
        orientation = [True] * (n - 1)
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i, fwd in enumerate(orientation, start=1):
        if fwd:
            arrows.append((f"a{i}", str(i), str(i + 1)))
        else:
            arrows.append((f"a{i}", str(i + 1), str(i)))
    return build_algebra(field, Quiver(vertices, arrows), [])


# -- the ten-vertex triangle algebra ------------------------------------------

TRIANGLE_ARROWS = [
    ("a", "4", "7"),
    ("b", "7", "9"),
    ("c", "9", "10"),
    ("d", "10", "8"),
    ("e", "9", "6"),
    ("f", "7", "3"),
    ("g", "3", "6"),
    ("h", "6", "8"),
    ("i", "6", "2"),
    ("j", "8", "5"),
    ("l", "2", "5"),
    ("m", "5", "1"),
]

# support -> radical series label for every module the example touches
TRIANGLE_LABELS = {
    frozenset({"1"}): "1",
    frozenset({"5", "1"}): "5/1",
    frozenset({"8", "5", "1"}): "8/5/1",
    frozenset({"10", "8", "5", "1"}): "10/8/5/1",
    frozenset({"2", "5"}): "2/5",
    frozenset({"6", "2", "8", "5"}): "6|2,8|5",
    frozenset({"9", "10", "6", "8", "2", "5"}): "9|10,6|8,2|5",
    frozenset({"3", "6", "8"}): "3/6/8",
    frozenset({"7", "3", "9", "6", "10", "8"}): "7|3,9|6,10|8",
    frozenset({"4", "7", "9", "10"}): "4/7/9/10",
    frozenset({"9", "6", "2"}): "9/6/2",
    frozenset({"6", "2"}): "6/2",
    frozenset({"7", "3", "9", "6"}): "7|3,9|6",
    frozenset({"2"}): "2",
    frozenset({"3", "6"}): "3/6",
    frozenset({"4", "7", "9"}): "4/7/9",
    frozenset({"7", "3"}): "7/3",
    frozenset({"3"}): "3",
    frozenset({"4", "7"}): "4/7",
    frozenset({"4"}): "4",
}

X_SUBCATEGORY_LABELS = [
    "1",
    "8/5/1",
    "10/8/5/1",
    "9|10,6|8,2|5",
    "4/7/9/10",
    "6|2,8|5",
    "6/2",
    "9/6/2",
    "4/7/9",
    "4/7",
]


def triangle_algebra(field=None):
    """The ten-vertex mesh-bound quiver algebra (dimension 35)."""
    field = field or FieldSpec.prime(101)
    q = Quiver([str(i) for i in range(1, 11)], TRIANGLE_ARROWS)
    one = field.one()
    neg = field.neg(one)
    rels = [
        Relation([(one, ("c", "d")), (neg, ("e", "h"))], q, field),
        Relation([(one, ("b", "e")), (neg, ("f", "g"))], q, field),
        Relation([(one, ("h", "j")), (neg, ("i", "l"))], q, field),
        Relation([(one, ("a", "f"))], q, field),
        Relation([(one, ("g", "i"))], q, field),
        Relation([(one, ("l", "m"))], q, field),
    ]
    return build_algebra(field, q, rels)


def triangle_label(rep) -> str:
    """Radical-series label of a module over the triangle algebra."""
    if any(d > 1 for d in rep.dims.values()):
        raise ValidationError("no label: dimension vector not 0/1")
    key = rep.support()
    if key not in TRIANGLE_LABELS:
        raise ValidationError(f"no label for support {sorted(key)}")
    return TRIANGLE_LABELS[key]


def triangle_figure1_modules(alg):
    """All twenty modules of the 2-cluster-tilting subcategory, by label.

    Generated as the higher-translate orbits of the indecomposable
    injectives, then named by radical series.
    """
    from .homology import dtr_d, is_projective_module

    out = {}
    for v in alg.quiver.vertices:
        m = alg.injective_at(v)
        while True:
            label = triangle_label(m)
            if label in out:
                break
            m.name = label
            out[label] = m
            if is_projective_module(m):
                break
            m = dtr_d(m, 2)
    return out


def triangle_F_subcat(alg, modules=None):
    from .approx import SubcatSpec

    modules = modules or triangle_figure1_modules(alg)
    order = sorted(modules)
    return SubcatSpec(alg, [modules[k] for k in order], name="F", check=False)


def triangle_X_subcat(alg, modules=None):
    from .approx import SubcatSpec

    modules = modules or triangle_figure1_modules(alg)
    return SubcatSpec(
        alg, [modules[k] for k in X_SUBCATEGORY_LABELS], name="X", check=False
    )
