"""Generators for benchmark formula families."""

from random import Random

from .exceptions import FamilySizeError

CHAIN_MIN_SIZE = 2


def chain_formula(k: int) -> str:
    """
    Return ``dep(x1;xk) & ... & dep(x(k-1);xk)``.

    Every satisfying team with at least three members is constant on ``xk``, which
    is why this family has no polynomial-delay enumeration by cardinality once the
    size bound grows faster than a polynomial.
    """
    if k < CHAIN_MIN_SIZE:
        raise FamilySizeError("chain", k, CHAIN_MIN_SIZE)
    return " & ".join(f"dep(x{i};x{k})" for i in range(1, k))


def random_formula(rng: Random, n: int, atoms: int, literals: int = 0) -> str:
    """
    Return a random conjunction over ``x1..xn`` with a fixed ``vars:`` header.

    Parameters
    ----------
    rng : random.Random
        Source of randomness; seed it for reproducible families.
    n : int
        Number of declared variables, at least 1.
    atoms : int
        Number of dependence atoms. P is any subset, Q a non-empty subset.
    literals : int
        Number of random positive or negative literals.

    Returns
    -------
    str
        Formula text, ``1`` as the body when no term was requested.

    """
    if n < 1:
        raise FamilySizeError("random", n, 1)
    names = [f"x{i}" for i in range(1, n + 1)]
    terms: list[str] = []
    for _ in range(atoms):
        p = sorted(rng.sample(names, rng.randint(0, n - 1)), key=names.index)
        q = sorted(rng.sample(names, rng.randint(1, min(2, n))), key=names.index)
        terms.append(f"dep({','.join(p)};{','.join(q)})")
    for _ in range(literals):
        name = rng.choice(names)
        terms.append(rng.choice((name, f"!{name}")))
    rng.shuffle(terms)
    body = " & ".join(terms) if terms else "1"
    return f"vars: {','.join(names)}; {body}"
