"""Command line interface.

Word formats
  braid word   whitespace separated signed generator indices, "1 -2 3" is
               s1 s2^-1 s3; or a single constant name such as "Delta",
               "d", "sigma_ij:1,3", "c_i:3".
  free word    syllables over c, w such as "c w^-1 c^2"; "1" is the identity.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import b4, checks, garside, homs, pure, specht
from .braid import CONSTANT_NAMES, BraidWord, make_constant


class InputError(Exception):
    pass


def parse_word(text: str, strands: int) -> BraidWord:
    text = text.strip()
    try:
        if text and (text[0].isalpha() or text[0] == "_"):
            return make_constant(text, strands)
        return BraidWord.parse(text, strands)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_kw(text: str):
    try:
        return b4.kw(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_nf(args):
    print(garside.normal_form(parse_word(args.word, args.strands)))
    return 0


def cmd_eq(args):
    a, b = parse_word(args.a, args.strands), parse_word(args.b, args.strands)
    same = garside.equal(a, b)
    print("equal" if same else "not equal")
    return 0 if same else 1


def cmd_const(args):
    print(parse_word(args.name, args.strands))
    return 0


def cmd_split(args):
    pair = b4.split(parse_word(args.word, 4))
    print(f"k: {pair.k}")
    print(f"b: {pair.b}")
    return 0


def cmd_lk(args):
    a = parse_word(args.word, args.strands)
    try:
        print(pure.linking(a, args.i, args.j))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return 0


def cmd_abelianize(args):
    a = parse_word(args.word, args.strands)
    if not pure.is_pure(a):
        raise InputError("word is not a pure braid")
    print(pure.abelianize_pure(a))
    return 0


def cmd_act(args):
    print(b4.act(parse_word(args.word, args.strands), parse_kw(args.free)))
    return 0


def cmd_klein(args):
    print(b4.klein_nf(parse_kw(args.free)))
    return 0


def cmd_pi(args):
    text = args.word_opt if args.word_opt is not None else args.word
    if text is None:
        raise InputError("pi needs a word")
    print(b4.pi(parse_word(text, 4)))
    return 0


def cmd_hom_verify(args):
    try:
        with open(args.file) as fh:
            h = homs.parse_hom_spec(fh.read())
    except OSError as exc:
        raise InputError(str(exc)) from None
    except homs.HomSpecError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    bad = homs.failing_relators(h)
    for lhs, rhs in bad:
        print(f"relator fails: {lhs} = {rhs}")
    print("verified" if not bad else "not a homomorphism")
    return 0 if not bad else 1


def cmd_specht(args):
    n = args.n
    if n < 5:
        raise InputError("--n must be at least 5")
    dec = specht.decompose(n)
    print(f"n = {n}")
    print(f"dim W  = {len(dec.W)}")
    print(f"dim W2 = {len(dec.W2)}")
    print(f"dim W3 = {len(dec.W3)}")
    print(f"commutant dimension under A_n = {specht.commutant_dimension(dec.W, specht.an_generators(n))}")
    a, b = specht.solve_equivariant_coefficients(n)
    print(f"(a, b) = ({a}, {b})")
    return 0


def cmd_scan(args):
    rep = b4.commutator_scan(args.syllables, args.exp)
    print(f"enumerated {rep.enumerated} words, {rep.in_f} with [w^-1, A] in F")
    for cx in rep.counterexamples:
        print(f"counterexample: A = {cx}")
    print(f"counterexamples: {len(rep.counterexamples)}")
    return 0 if rep.ok else 1


def cmd_verify(args):
    results = checks.run_checks(args.seed)
    if args.json:
        print(json.dumps({
            "seed": args.seed,
            "passed": all(r.ok for r in results),
            "checks": {r.key: {"ok": r.ok, "label": r.label, "detail": r.detail} for r in results},
        }, indent=2))
    else:
        print(f"# braidkit identity report, seed {args.seed}")
        for r in results:
            print(f"[{'PASS' if r.ok else 'FAIL'}] {r.key}: {r.label} ({r.detail})")
        print(f"# {sum(r.ok for r in results)}/{len(results)} passed")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="braidkit",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("nf", cmd_nf, "print the left normal form as 'D^p | f1 | f2 ...'")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("word")

    sp = add("eq", cmd_eq, "decide whether two braid words are equal")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("const", cmd_const, "print a named braid: " + ", ".join(CONSTANT_NAMES))
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("name")

    sp = add("split", cmd_split, "split a 4-braid as (K4 word in c, w) * (3-braid)")
    sp.add_argument("word")

    sp = add("lk", cmd_lk, "linking number of strands i, j of a pure braid")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("word")
    sp.add_argument("i", type=int)
    sp.add_argument("j", type=int)

    sp = add("abelianize", cmd_abelianize, "image of a pure braid in P_n^ab as 'A12:1 A34:-1'")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("word")

    sp = add("act", cmd_act, "conjugate a K4 element (free word in c, w) by a braid")
    sp.add_argument("--strands", type=int, default=4, choices=(3, 4))
    sp.add_argument("word")
    sp.add_argument("free")

    sp = add("klein-nf", cmd_klein, "normal form c^a w^b modulo w c = c^-1 w")
    sp.add_argument("free")

    sp = add("pi", cmd_pi, "matrix of the action of a 4-braid on K4^ab, basis (c, w)")
    sp.add_argument("word", nargs="?")
    sp.add_argument("--word", dest="word_opt")

    sp = add("hom-verify", cmd_hom_verify, "check a homomorphism file (see braidkit.homs.parse_hom_spec)")
    sp.add_argument("file")

    sp = add("specht", cmd_specht, "dimensions, commutant and (a, b) for Sym^2 V")
    sp.add_argument("--n", type=int, required=True)

    sp = add("scan-lemma38", cmd_scan, "search bounded A in K4 with [w^-1, A] in F but not [w^-1, c^k]")
    sp.add_argument("--syllables", type=int, default=4)
    sp.add_argument("--exp", type=int, default=3)

    sp = add("verify-paper", cmd_verify, "run every identity check and report pass/fail")
    sp.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    sp.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
