"""Machine-checkable property suites over the built-in corpus.

Each suite checks one guarantee of the library against an independent
computation (brute-force enumeration, literal set arithmetic, or interval
numerics) and reports the number of checks and any failures.  The suites are
deterministic: fixed seeds, sorted iteration orders.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations

from . import corpus
from .coxgroup import _first_sign, order_of_product
from .errors import RetryCapExceeded
from .oracle import all_parabolics, brute_intersect, enumerate_group
from .parabolic import conjugacy_normalize, intersect, make
from .paraclose import ClosureQuery, ClosureStatus, pc, pc_oracle_finite
from .roots import descend_root, reflection_of_root, root_depths
from .scalar import FieldContext, double_cosine_poly
from .titscone import fundamental_point, locate, stabilizer

EXPECTED_ORDERS = {"a2": 6, "b2": 8, "g2": 12, "a1xa1": 4,
                   "a3": 24, "b3": 48, "h3": 120}
EXPECTED_POSITIVE_ROOTS = {"a2": 3, "b2": 4, "g2": 6, "a1xa1": 2,
                           "a3": 6, "b3": 9, "h3": 15}


class SuiteResult:
    __slots__ = ("name", "checks", "failures", "seconds")

    def __init__(self, name: str, checks: int, failures: list[str], seconds: float):
        self.name = name
        self.checks = checks
        self.failures = failures
        self.seconds = seconds

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "ok" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: {self.checks} checks, {state} [{self.seconds:.1f}s]"


def _random_scalar(ctx: FieldContext, rng: random.Random):
    return ctx.scalar([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                       for _ in range(ctx.degree)])


def _interval_sign(ctx: FieldContext, coeffs, max_prec: int = 1280) -> int:
    """Sign by rigorous interval numerics (mpmath), an independent route;
    0 means the interval still straddles zero at the highest precision."""
    from mpmath import iv
    prec = 80
    while prec <= max_prec:
        old = iv.prec
        try:
            iv.prec = prec
            theta = 2 * iv.cos(iv.pi / ctx.L)
            acc = iv.mpf(0)
            for c in reversed(coeffs):
                acc = acc * theta + iv.mpf(c.numerator) / c.denominator
            if acc.a > 0:
                return 1
            if acc.b < 0:
                return -1
        finally:
            iv.prec = old
        prec *= 2
    return 0


def _corpus_fields():
    seen = {}
    for name, system in corpus.all_systems():
        seen.setdefault(system.field.L, (name, system.field))
    return [seen[L] for L in sorted(seen)]


def suite_kernel(seed: int = 0, cases: int = 1000) -> SuiteResult:
    """Field arithmetic: ring axioms and exact signs on random scalars, the
    minimal polynomial vanishing at theta, and the doubled-cosine identity
    for every finite label."""
    start = time.monotonic()
    checks, failures = 0, []
    for name, ctx in _corpus_fields():
        rng = random.Random(seed)
        zero, one = ctx.zero, ctx.one
        checks += 1
        if not ctx.evaluate_minpoly_at_theta().is_zero():
            failures.append(f"{name}: minpoly(theta) != 0")
        for i in range(cases):
            a = _random_scalar(ctx, rng)
            b = _random_scalar(ctx, rng)
            c = _random_scalar(ctx, rng)
            checks += 1
            ok = ((a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
                  and a * (b + c) == a * b + a * c and a + b == b + a
                  and a * b == b * a and a + (-a) == zero and a * one == a)
            if ok and not a.is_zero():
                ok = a * (one / a) == one and (b / a) * a == b
            if not ok:
                failures.append(f"{name} case {i}: ring axiom failed")
                continue
            checks += 1
            if a.sign() * b.sign() != (a * b).sign():
                failures.append(f"{name} case {i}: sign not multiplicative")
        for i in range(cases):
            a = _random_scalar(ctx, rng)
            b = _random_scalar(ctx, rng)
            total = a + b
            checks += 1
            reference = _interval_sign(ctx, total.coeffs)
            if reference == 0:
                if not total.is_zero():
                    failures.append(f"{name} case {i}: interval sign undecided "
                                    "on a nonzero scalar")
            elif reference != total.sign():
                failures.append(f"{name} case {i}: exact sign {total.sign()} "
                                f"disagrees with interval sign {reference}")
    for name, system in corpus.all_systems():
        for i in range(system.rank):
            for j in range(i + 1, system.rank):
                m = system.matrix[i][j]
                if m == float("inf"):
                    continue
                checks += 1
                doubled = 2 * -system.form[i][j]
                acc = system.field.zero
                for co in reversed(double_cosine_poly(m)):
                    acc = acc * doubled + system.field.from_rational(co)
                if acc + 2 != system.field.zero:
                    failures.append(f"{name}: D_{m}(2cos(pi/{m})) + 2 != 0")
    return SuiteResult("kernel", checks, failures, time.monotonic() - start)


def suite_faithful(seed: int = 0) -> SuiteResult:
    """Finite groups come out with the right order, and distinct canonical
    words always carry distinct matrices."""
    start = time.monotonic()
    checks, failures = 0, []
    for name, expected in sorted(EXPECTED_ORDERS.items()):
        system = corpus.load(name)
        elements = system.enumerate_elements(10 * expected)
        checks += 1
        if len(elements) != expected:
            failures.append(f"{name}: order {len(elements)} != {expected}")
        by_matrix = {}
        for g in elements:
            checks += 1
            other = by_matrix.setdefault(g.matrix, g)
            if other is not g:
                failures.append(f"{name}: words {g} and {other} share a matrix")
    return SuiteResult("faithful-representation", checks, failures,
                       time.monotonic() - start)


def suite_product_orders(seed: int = 0) -> SuiteResult:
    """order_of_product(s, t) equals the matrix label for every generator
    pair of every corpus group, with (sigma_s sigma_t)^m the exact identity
    for finite labels and no repetition within the cap for inf."""
    start = time.monotonic()
    checks, failures = 0, []
    for name, system in corpus.all_systems():
        for i in range(system.rank):
            for j in range(system.rank):
                if i == j:
                    continue
                checks += 1
                try:
                    got = order_of_product(system, i, j)
                except AssertionError as exc:
                    failures.append(f"{name} ({i},{j}): {exc}")
                    continue
                m = system.matrix[i][j]
                if got != m:
                    failures.append(f"{name} ({i},{j}): order {got} != {m}")
                    continue
                if m != float("inf"):
                    P = system.compose_matrix((i, j) * m)
                    checks += 1
                    if P != system._identity_matrix:
                        failures.append(f"{name} ({i},{j}): power m not identity")
    return SuiteResult("product-orders", checks, failures,
                       time.monotonic() - start)


def suite_root_dichotomy(seed: int = 0, depth: int = 8) -> SuiteResult:
    """Every root produced through the stated depth in every corpus group is
    one-signed with unit norm, and the finite groups yield exactly the known
    positive-root counts."""
    start = time.monotonic()
    checks, failures = 0, []
    for name, system in corpus.all_systems():
        try:
            found = root_depths(system, depth)
        except Exception as exc:  # RootSignViolation would land here
            failures.append(f"{name}: enumeration failed: {exc}")
            continue
        for root in found:
            checks += 2
            if not root.is_positive():
                failures.append(f"{name}: enumerated root {root} not positive")
            if root.norm() != 1:
                failures.append(f"{name}: root {root} has norm {root.norm()}")
        expected = EXPECTED_POSITIVE_ROOTS.get(name)
        if expected is not None:
            checks += 1
            if len(found) != expected:
                failures.append(f"{name}: {len(found)} roots != {expected}")
    return SuiteResult("root-dichotomy", checks, failures,
                       time.monotonic() - start)


def suite_length_sign(seed: int = 0) -> SuiteResult:
    """Exhaustively over the finite corpus groups: multiplying by the
    reflection of a positive root increases length exactly when the element
    maps the root to a positive root.  Lengths come from canonical words via
    the multiplication table; signs come from the matrix action."""
    start = time.monotonic()
    checks, failures = 0, []
    for name in sorted(EXPECTED_ORDERS):
        system = corpus.load(name)
        table = enumerate_group(system)
        roots = sorted(root_depths(system, 64),
                       key=lambda r: tuple(c.coeffs for c in r.coords))
        reflections = [(r, reflection_of_root(r).element) for r in roots]
        for w in table.elements:
            wi = table.element_index(w)
            M = w.matrix
            n = system.rank
            for root, refl in reflections:
                product = table.elements[table.mult(wi, table.element_index(refl))]
                grows = product.length > w.length
                image = tuple(
                    sum((M[i][k] * root.coords[k] for k in range(n)),
                        system.field.zero) for i in range(n))
                positive = _first_sign(image) > 0
                checks += 1
                if grows != positive:
                    failures.append(
                        f"{name}: w={w}, root={root}: length says {grows}, "
                        f"sign says {positive}")
    return SuiteResult("length-vs-root-sign", checks, failures,
                       time.monotonic() - start)


def suite_subsystem_roots(seed: int = 0) -> SuiteResult:
    """For every generator subset I: the roots supported inside I are exactly
    the roots of the subsystem on I (depth-6 truncations for the infinite
    groups), and each such root factors through descend_root as promised."""
    start = time.monotonic()
    checks, failures = 0, []
    groups = [("a2", 64), ("b2", 64), ("a1xa1", 64), ("a3", 64), ("b3", 64),
              ("dihedral_inf", 6), ("affine_a2", 6)]
    for name, depth in groups:
        system = corpus.load(name)
        full = root_depths(system, depth)
        for size in range(system.rank + 1):
            for subset in combinations(range(system.rank), size):
                I = frozenset(subset)
                supported = {r for r in full if r.support <= I}
                sub = set(root_depths(system, depth, gens=I))
                checks += 1
                if supported != sub:
                    failures.append(f"{name} I={sorted(I)}: support-filtered "
                                    "roots differ from subsystem roots")
                for root in sorted(supported,
                                   key=lambda r: tuple(c.coeffs for c in r.coords)):
                    checks += 1
                    try:
                        u, s = descend_root(root, I)
                    except Exception as exc:
                        failures.append(f"{name} I={sorted(I)} {root}: {exc}")
                        continue
                    ok = (set(u.word) <= I and s in I
                          and u.act(system.basis_vector(s)) == root.coords)
                    if not ok:
                        failures.append(f"{name} I={sorted(I)} {root}: "
                                        "descend_root round-trip failed")
    return SuiteResult("subsystem-roots", checks, failures,
                       time.monotonic() - start)


def suite_pairwise_intersection(seed: int = 0) -> SuiteResult:
    """intersect agrees with literal set intersection on every ordered pair
    of distinct parabolics of A3 and B3, with no retry-cap failures."""
    start = time.monotonic()
    checks, failures = 0, []
    for name in ("a3", "b3"):
        system = corpus.load(name)
        table = enumerate_group(system)
        paras = all_parabolics(table)
        for i, (p1, m1) in enumerate(paras):
            for j, (p2, m2) in enumerate(paras):
                if i == j:
                    continue
                checks += 1
                try:
                    q = intersect(p1, p2)
                except RetryCapExceeded as exc:
                    failures.append(f"{name} {p1.describe()} {p2.describe()}: {exc}")
                    continue
                if table.subgroup_elements(q) != brute_intersect(m1, m2):
                    failures.append(f"{name}: intersect({p1.describe()}, "
                                    f"{p2.describe()}) disagrees with sets")
    return SuiteResult("pairwise-intersection", checks, failures,
                       time.monotonic() - start)


def suite_conjugate_generator_sets(seed: int = 0) -> SuiteResult:
    """Whenever brute-force conjugation shows w W_J w^{-1} = W_I, the ranks
    match and conjugacy_normalize produces a witness mapping the simple
    roots of J exactly onto those of I."""
    start = time.monotonic()
    checks, failures = 0, []
    for name in ("a2", "a1xa1", "b2", "a3"):
        system = corpus.load(name)
        table = enumerate_group(system)
        n = system.rank
        subsets = [frozenset(c) for size in range(n + 1)
                   for c in combinations(range(n), size)]
        for I in subsets:
            set_i = table.special_subgroup(I)
            for J in subsets:
                set_j = table.special_subgroup(J)
                for wi, w in enumerate(table.elements):
                    if table.conjugate_set(wi, set_j) != set_i:
                        continue
                    checks += 1
                    if len(I) != len(J):
                        failures.append(f"{name}: conjugate subsets "
                                        f"{sorted(I)} vs {sorted(J)} differ in rank")
                        continue
                    witness = conjugacy_normalize(system, I, J, w)
                    if witness is None:
                        failures.append(f"{name}: refutation on true pair "
                                        f"I={sorted(I)}, J={sorted(J)}, w={w}")
                        continue
                    w0 = witness.w0
                    images = {t: w0.act(system.basis_vector(t)) for t in J}
                    ok = (sorted(witness.mapping) == sorted(J)
                          and set(witness.mapping.values()) == set(I)
                          and all(images[t] == system.basis_vector(witness.mapping[t])
                                  for t in J))
                    if not ok:
                        failures.append(f"{name}: invalid witness for "
                                        f"I={sorted(I)}, J={sorted(J)}, w={w}")
    return SuiteResult("conjugate-generator-sets", checks, failures,
                       time.monotonic() - start)


def suite_rank_drop(seed: int = 0) -> SuiteResult:
    """For incomparable parabolic pairs of A3 and B3 the intersection has
    strictly smaller rank than either side."""
    start = time.monotonic()
    checks, failures = 0, []
    for name in ("a3", "b3"):
        system = corpus.load(name)
        table = enumerate_group(system)
        paras = all_parabolics(table)
        for i, (p1, m1) in enumerate(paras):
            for p2, m2 in paras[i + 1:]:
                if m1 <= m2 or m2 <= m1:
                    continue
                checks += 1
                q = intersect(p1, p2)
                if not q.rank < min(p1.rank, p2.rank):
                    failures.append(f"{name}: rank {q.rank} did not drop below "
                                    f"{p1.rank} and {p2.rank}")
    return SuiteResult("rank-drop", checks, failures, time.monotonic() - start)


def suite_parabolic_closure(seed: int = 0, samples: int = 200) -> SuiteResult:
    """Scanning closure equals the brute-force closure (with its minimal-rank
    uniqueness assertions) on random query sets in every finite corpus group."""
    start = time.monotonic()
    checks, failures = 0, []
    for gi, name in enumerate(sorted(EXPECTED_ORDERS)):
        system = corpus.load(name)
        table = enumerate_group(system)
        rng = random.Random(seed + 7 * gi)
        for case in range(samples):
            k = rng.randint(1, 3)
            elements = [table.elements[rng.randrange(table.order)] for _ in range(k)]
            checks += 1
            result = pc(ClosureQuery(elements, 64))
            oracle_p, oracle_m = pc_oracle_finite(elements)
            ok = (result.status is ClosureStatus.EXACT
                  and table.subgroup_elements(result.closure) == oracle_m
                  and result.closure.equals(oracle_p)
                  and all(result.closure.contains_element(g) for g in elements))
            if not ok:
                failures.append(
                    f"{name} case {case}: pc {result.closure.describe()} "
                    f"disagrees with oracle {oracle_p.describe()}")
    return SuiteResult("parabolic-closure", checks, failures,
                       time.monotonic() - start)


def suite_infinite_closure(seed: int = 0) -> SuiteResult:
    """Closure in the infinite dihedral group: a rotation closes up to the
    whole group with a short audit trail, a reflection to itself."""
    start = time.monotonic()
    checks, failures = 0, []
    system = corpus.load("dihedral_inf")
    rotation = pc(ClosureQuery([system.element("s t")], 6))
    checks += 1
    full = make(system.identity, frozenset(range(system.rank)))
    if not (rotation.closure.equals(full)
            and len(rotation.refinements) <= 2
            and rotation.status is ClosureStatus.RADIUS_LIMITED):
        failures.append(f"rotation closure wrong: {rotation!r}")
    reflection = pc(ClosureQuery([system.element("s")], 6))
    checks += 1
    if not (reflection.closure.equals(make(system.identity, frozenset({0})))
            and reflection.status is ClosureStatus.RADIUS_LIMITED):
        failures.append(f"reflection closure wrong: {reflection!r}")
    return SuiteResult("infinite-closure", checks, failures,
                       time.monotonic() - start)


def suite_cone_stabilizers(seed: int = 0, samples: int = 100) -> SuiteResult:
    """stabilizer(w(f_I)) equals w W_I w^{-1} for random pairs in all corpus
    groups, and locate recovers the dominant representative f_I exactly."""
    start = time.monotonic()
    checks, failures = 0, []
    for gi, (name, system) in enumerate(corpus.all_systems()):
        rng = random.Random(seed + 13 * gi)
        finite = name in EXPECTED_ORDERS
        if finite:
            pool = enumerate_group(system).elements
        n = system.rank
        for case in range(samples):
            if finite:
                w = pool[rng.randrange(len(pool))]
            else:
                w = system.normalize([rng.randrange(n)
                                      for _ in range(rng.randint(0, 8))])
            I = frozenset(s for s in range(n) if rng.random() < 0.5)
            f0 = fundamental_point(system, I)
            f = f0.transformed_by(w)
            loc = locate(f)
            checks += 1
            ok = (loc.point == f0
                  and stabilizer(f).equals(make(w, I)))
            if not ok:
                failures.append(f"{name} case {case}: w={w}, I={sorted(I)}")
    return SuiteResult("cone-stabilizers", checks, failures,
                       time.monotonic() - start)


SUITES = {
    "kernel": suite_kernel,
    "faithful-representation": suite_faithful,
    "product-orders": suite_product_orders,
    "root-dichotomy": suite_root_dichotomy,
    "length-vs-root-sign": suite_length_sign,
    "subsystem-roots": suite_subsystem_roots,
    "pairwise-intersection": suite_pairwise_intersection,
    "conjugate-generator-sets": suite_conjugate_generator_sets,
    "rank-drop": suite_rank_drop,
    "parabolic-closure": suite_parabolic_closure,
    "infinite-closure": suite_infinite_closure,
    "cone-stabilizers": suite_cone_stabilizers,
}


def run_suites(names=None, seed: int = 0) -> list[SuiteResult]:
    if names is None:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"no suite named {name!r}")
        results.append(SUITES[name](seed))
    return results
