"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import io
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from stringalg.cli import main  # noqa: E402
from stringalg.decompose import (  # noqa: E402
    BandModule, Decomposition, StringModule, cg_tensor, jordan_tensor, make_string, normalize_band,
)
from stringalg.fibre import linear_components  # noqa: E402
from stringalg.generators import random_algebras, random_indecomposable  # noqa: E402
from stringalg.ideals import closure_matches, eigenvalue_window, principal_ideal, tensor_closure  # noqa: E402
from stringalg.linalg import RationalMatrix  # noqa: E402
from stringalg.oracle import characteristic, jordan_type, push_down_string, verify_decomposition  # noqa: E402
from stringalg.presentations import bundled, gelfand_ponomarev, kronecker, linear_quiver  # noqa: E402
from stringalg.repring import (  # noqa: E402
    Idem, RingElement, Universe, idempotent_to_strings, multiply_indecomposables, ring_multiply,
    to_idempotent_form,
)
from stringalg.shapes import Shape, enumerate_cyclic_shapes, enumerate_linear_shapes, shape_from_word  # noqa: E402

GOLDEN = Path(__file__).parent / "golden" / "gp3_tensor.txt"
SEED = 20240611


def _report(n, ok, detail, seconds):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}  ({seconds:.2f} s)"
    print(line, flush=True)
    return line


def criterion_1():
    """GP(3) golden file through the CLI, byte-exact, under a second."""
    start = time.perf_counter()
    out = io.StringIO()
    code = main(["tensor", "gp3.quiver", "a a b^- a", "b^- a a b^- b^-"], out=out)
    elapsed = time.perf_counter() - start
    same = out.getvalue() == GOLDEN.read_text(encoding="utf-8")
    return code == 0 and same and elapsed < 1.0, f"golden match={same}, exit={code}", elapsed


def criterion_2():
    """Closed-form Jordan type against ranks of exact Kronecker products."""
    start = time.perf_counter()
    lams = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2)]
    bad = checked = 0
    for lam in lams:
        for mu in lams:
            for s in range(1, 7):
                for t in range(1, 7):
                    A = RationalMatrix.jordan_block(lam, s).kron(RationalMatrix.jordan_block(mu, t))
                    jd = jordan_tensor(lam, s, mu, t)
                    checked += 1
                    if tuple(sorted(jd.sizes, reverse=True)) != jordan_type(A, lam * mu):
                        bad += 1
    elapsed = time.perf_counter() - start
    return bad == 0 and elapsed < 30, f"{checked} products, {bad} mismatches", elapsed


def criterion_3():
    """Random pairs over GP3, Kronecker and 20+ random algebras pass the matrix check."""
    start = time.perf_counter()
    rng = random.Random(SEED)
    algebras = [gelfand_ponomarev(3), kronecker()] + random_algebras(SEED, 24)
    pairs = failures = 0
    for i in range(260):
        pres = algebras[i % len(algebras)]
        u = random_indecomposable(pres, rng, max_len=6, max_size=3, band_prob=0.35)
        v = random_indecomposable(pres, rng, max_len=6, max_size=3, band_prob=0.35)
        report = verify_decomposition(u, v, cg_tensor(u, v))
        pairs += 1
        failures += not report.passed
    elapsed = time.perf_counter() - start
    ok = failures == 0 and pairs >= 200 and len(algebras) - 2 >= 20 and elapsed < 300
    return ok, f"{pairs} pairs over {len(algebras)} presentations, {failures} failures", elapsed


def criterion_4():
    """Orthogonal idempotents and the string action, expanded through cg_tensor."""
    start = time.perf_counter()
    checked = bad = 0
    for pres in (gelfand_ponomarev(3), kronecker(), bundled("gentle4")):
        U = Universe(pres, 6)
        es = {w: idempotent_to_strings(w, U) for w in U.words}
        for w1, x in es.items():
            s1 = RingElement.basis(StringModule(U.shape(w1)))
            for w2, y in es.items():
                checked += 1
                if multiply_indecomposables(x, y, U) != (x if w1 == w2 else RingElement()):
                    bad += 1
                action = to_idempotent_form(multiply_indecomposables(s1, y, U), U)
                want = oracles.factor_count(pres, oracles.as_triple(w1), oracles.as_triple(w2))
                if action != want * RingElement.basis(Idem(w2)):
                    bad += 1
    elapsed = time.perf_counter() - start
    return bad == 0, f"{checked} idempotent pairs, {bad} failures", elapsed


def criterion_5():
    """Kronecker band products carry no idempotent part; the band eigen-equation holds."""
    start = time.perf_counter()
    pres = kronecker()
    U = Universe(pres, 6)
    G = shape_from_word(pres, "(a b^-)")
    lams = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3)]
    bad = checked = 0
    for lam in lams:
        for mu in lams:
            for s in range(1, 5):
                for t in range(1, 5):
                    x, y = BandModule(G, lam, s), BandModule(G, mu, t)
                    prod = ring_multiply(RingElement.basis(x), RingElement.basis(y), U)
                    want = RingElement({BandModule(G, lam * mu, l): 1 for l in jordan_tensor(lam, s, mu, t).sizes})
                    checked += 1
                    bad += prod != want
    for lam in lams:
        for s in range(1, 5):
            b = RingElement.basis(BandModule(G, lam, s))
            for w in U.words:
                # through the string basis, independent of the ring's band formula
                got = to_idempotent_form(multiply_indecomposables(b, idempotent_to_strings(w, U), U), U)
                n = oracles.factor_count(pres, oracles.as_triple(G.word), oracles.as_triple(w))
                checked += 1
                bad += got != s * n * RingElement.basis(Idem(w))
    elapsed = time.perf_counter() - start
    return bad == 0, f"{checked} identities, {bad} failures", elapsed


def criterion_6():
    """Sum over components of |H:F| equals |F1:F| |F2:F|."""
    start = time.perf_counter()
    rng = random.Random(SEED + 6)
    algebras = [gelfand_ponomarev(3), kronecker(), bundled("gentle4")] + random_algebras(SEED + 6, 20)
    triples = bad = 0
    for i in range(300):
        pres = algebras[i % len(algebras)]
        words = enumerate_linear_shapes(pres, 6)
        F1, F2, F = (rng.choice(words) for _ in range(3))

        def count(big):
            return oracles.factor_count(pres, oracles.as_triple(big), oracles.as_triple(F))

        lhs = sum(n * count(h) for h, n in linear_components(Shape(pres, F1), Shape(pres, F2)).items())
        triples += 1
        bad += lhs != count(F1) * count(F2)
    elapsed = time.perf_counter() - start
    return bad == 0 and triples >= 100, f"{triples} triples, {bad} failures", elapsed


def criterion_7():
    """Breadth-first tensor closure equals the described principal ideal."""
    start = time.perf_counter()
    rng = random.Random(SEED + 7)
    window = eigenvalue_window(1)
    presentations = [gelfand_ponomarev(3), kronecker(), bundled("gentle4")] + random_algebras(SEED + 7, 6)
    strings = bands = bad = 0
    for pres in presentations:
        words = enumerate_linear_shapes(pres, 4)
        for w in rng.sample(words, min(4, len(words))):
            x = StringModule(Shape(pres, w))
            strings += 1
            bad += not closure_matches(principal_ideal(x, 4), tensor_closure(x, 4, eigenvalues=window), window)
        for g in enumerate_cyclic_shapes(pres, 3)[:2]:
            x = normalize_band(pres, g, rng.choice([Fraction(3), Fraction(-1, 2), Fraction(1)]), rng.randint(1, 3))
            bands += 1
            bad += not closure_matches(principal_ideal(x, 3), tensor_closure(x, 3, eigenvalues=window), window)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and strings >= 20 and bands >= 5
    return ok, f"{strings} string and {bands} band generators, {bad} mismatches", elapsed


def _interval_word(orientation, i, j):
    if i == j:
        return f"@v{i}"
    return " ".join(f"a{k}" if orientation[k] == ">" else f"a{k}^-" for k in range(i, j))


def criterion_8():
    """chi(P1) (x) chi(P2) is chi of the intersection on relation-free linear quivers."""
    start = time.perf_counter()
    rng = random.Random(SEED + 8)
    pairs = bad = 0
    for _ in range(40):
        n = rng.randint(1, 6)
        orientation = "".join(rng.choice("<>") for _ in range(n))
        pres = linear_quiver(orientation)
        i1, j1 = sorted(rng.sample(range(n + 1), 2)) if rng.random() < 0.8 else (0, 0)
        i2, j2 = sorted(rng.randint(0, n) for _ in range(2))
        u = make_string(pres, _interval_word(orientation, i1, j1))
        v = make_string(pres, _interval_word(orientation, i2, j2))
        # the push-downs are the characteristic modules of the chains
        chi = characteristic(pres, [f"v{k}" for k in range(i1, j1 + 1)], [f"a{k}" for k in range(i1, j1)])
        pd = push_down_string(u.shape)
        lo, hi = max(i1, i2), min(j1, j2)
        predicted = Decomposition()
        if lo <= hi:
            predicted[make_string(pres, _interval_word(orientation, lo, hi))] = 1
        pairs += 1
        ok = chi.dims == pd.dims and chi.mats == pd.mats
        ok = ok and verify_decomposition(u, v, predicted).passed and cg_tensor(u, v) == predicted
        bad += not ok
    elapsed = time.perf_counter() - start
    return bad == 0 and pairs >= 20, f"{pairs} chain pairs, {bad} failures", elapsed


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail, elapsed = CRITERIA[n - 1]()
    with capsys.disabled():
        print()
        _report(n, ok, detail, elapsed)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, start=1):
        ok, detail, elapsed = fn()
        _report(n, ok, detail, elapsed)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
