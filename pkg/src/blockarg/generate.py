"""Random frameworks and ABA documents for property tests and the CLI."""

from __future__ import annotations

import random

from .aba import ABADoc, Rule
from .flatrep import occurrence_count
from .model import AtomDef, BlockDef, FrameworkDoc, validate


def random_framework(
    rng: random.Random,
    *,
    max_children: int = 5,
    max_depth: int = 3,
    block_prob: float = 0.3,
    attack_prob: float = 0.3,
    support_prob: float = 0.15,
    contents: int = 4,
    reuse_prob: float = 0.3,
) -> FrameworkDoc:
    """A random valid document.

    Atom contents come from a small pool and block names are sometimes
    reused, so Eq-equal occurrences (and hence S and STAR instances) are
    common. ``max_depth`` bounds the nesting depth below the root.
    """
    defs: dict[str, AtomDef | BlockDef] = {}
    blocks_by_depth: dict[int, list[str]] = {}

    def new_atom() -> str:
        name = f"x{len(defs)}"
        defs[name] = AtomDef(f"c{rng.randrange(contents)}")
        return name

    def make_block(depth: int) -> str:
        n = rng.randint(1, max_children)
        kids: list[str] = []
        for _ in range(n):
            if depth < max_depth and rng.random() < block_prob:
                pool = [b for d in range(depth + 1, max_depth + 1) for b in blocks_by_depth.get(d, [])]
                pool = [b for b in pool if b not in kids]
                child = rng.choice(pool) if pool and rng.random() < reuse_prob else make_block(depth + 1)
            else:
                atoms = [a for a, d in defs.items() if isinstance(d, AtomDef) and a not in kids]
                child = rng.choice(atoms) if atoms and rng.random() < reuse_prob else new_atom()
            if child not in kids:
                kids.append(child)
        attacks = tuple((a, b) for a in kids for b in kids if a != b and rng.random() < attack_prob)
        supports = tuple((a, b) for a in kids for b in kids if a != b and rng.random() < support_prob)
        name = f"B{len(defs)}"
        defs[name] = BlockDef(tuple(kids), attacks, supports)
        blocks_by_depth.setdefault(depth, []).append(name)
        return name

    root = make_block(0)
    return FrameworkDoc(defs, root)


def random_aba(
    rng: random.Random,
    *,
    max_sentences: int = 6,
    max_rules: int = 6,
    max_body: int = 2,
    contrary_prob: float = 0.8,
) -> ABADoc:
    """A random flat ABA document whose rule dependencies are acyclic.

    Sentences are ordered and every rule body only uses sentences earlier
    than its head, which rules out cycles by construction.
    """
    n = rng.randint(2, max_sentences)
    sentences = tuple(f"p{i}" for i in range(n))
    k = rng.randint(1, n - 1)
    assumptions = frozenset(rng.sample(sentences, k))
    heads = [i for i, s in enumerate(sentences) if s not in assumptions and i > 0]
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        if not heads:
            break
        h = rng.choice(heads)
        body = frozenset(rng.sample(sentences[:h], rng.randint(0, min(max_body, h))))
        rules.append(Rule(sentences[h], body))
    contrary = {
        a: rng.choice(sentences) for a in sorted(assumptions) if rng.random() < contrary_prob
    }
    return ABADoc(sentences, tuple(dict.fromkeys(rules)), assumptions, contrary)


def random_corpus(
    count: int, seed: int = 0, *, max_occurrences: int = 40, **kwargs
) -> list[FrameworkDoc]:
    """``count`` random documents with at most ``max_occurrences`` occurrences.

    Oversized draws are discarded and redrawn, so the corpus is
    deterministic for a given seed.
    """
    rng = random.Random(seed)
    out: list[FrameworkDoc] = []
    while len(out) < count:
        doc = random_framework(rng, **kwargs)
        if occurrence_count(validate(doc)) <= max_occurrences:
            out.append(doc)
    return out
