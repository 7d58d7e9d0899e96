"""Compute generator matrices and factor them through blowup links.

For a model with extra automorphisms, aut_generators returns explicit
2 x 2 matrices acting on {H, W}. Every generator also factors as a word
of at most two catalog links (blow up a curve on the surface, run the
birational link, come back), and realize_generator finds such a word and
compose_word certifies that the composite equals the generator exactly.

Run with: python demos/generator_walkthrough.py
"""
from quartaut import (
    classify_aut,
    compose_word,
    curve_model,
    gluing_ok,
    is_isometry,
    minimal_gluing_exponent,
    minimal_quadeq_solution,
    realize_generator,
    torelli_ok,
)


def show(r: int):
    # the link search needs the model spanned by H and the marked curve
    L, (g, d) = curve_model(r)
    kind = classify_aut(L)
    print(f"r = {r}, frame of a genus-{g} degree-{d} curve,"
          f" (b, c) = ({L.b}, {L.c}), group {kind.tag}")
    if kind.tag == "Z":
        alpha, beta = minimal_quadeq_solution(L)
        k = minimal_gluing_exponent(L)
        print(f"  minimal positive solution of the trace conic: "
              f"(alpha, beta) = ({alpha}, {beta})")
        print(f"  smallest power extending to the surface: k = {k}")
    for m in kind.generators:
        ok = is_isometry(L, m) and gluing_ok(L, m) and torelli_ok(L, m)
        print(f"  generator {m}  (isometry+gluing+ample: {ok})")
        word = realize_generator(L, m)
        for step in word.steps:
            rec = step.record
            via = "" if step.change == ((1, 0), (0, 1)) else f" after basis change {step.change}"
            print(f"    link: blow up a ({rec.gd[0]}, {rec.gd[1]})-curve,"
                  f" {rec.source} to {rec.target}{via}")
        assert compose_word(word) == m
        print(f"    composite of {len(word.steps)} step(s) equals the generator")
    print()


def main():
    for r in (17, 28, 48, 40):
        show(r)


if __name__ == "__main__":
    main()
