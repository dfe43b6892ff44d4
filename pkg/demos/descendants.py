"""Derivative descendants and ascendants of extended cyclic codes.

Shows the exponent-set calculus: differentiating a codeword in any nonzero
direction lands in one fixed smaller code (the cyclic derivative
descendant), and the ascendant construction inverts the step as far as
possible.  Ends with the order-r weight-formula family, where both maps
shift the order by exactly one.
"""

from __future__ import annotations

import numpy as np

from ddcodes.cyclic import code_from_generator, is_member, rm_exponent_set
from ddcodes.derivative import (cyclic_da, cyclic_dd, da_code, dd_code,
                                derivative_codeword)
from ddcodes.gf2m import field_for_length


def main() -> None:
    field = field_for_length(16)
    spec = code_from_generator(field, 0x1D1)
    down = dd_code(spec)
    up = da_code(spec)
    print(f"code      ({spec.n:3}, {spec.k:2})  exponents {sorted(spec.exponents.members)}")
    print(f"descendant({down.n:3}, {down.k:2})  exponents {sorted(down.exponents.members)}")
    print(f"ascendant ({up.n:3}, {up.k:2})  exponents {sorted(up.exponents.members)}")
    print()

    rng = np.random.default_rng(1)
    word = (rng.integers(0, 2, size=spec.k, dtype=np.uint8) @ spec.G) % 2
    inside = all(is_member(down, derivative_codeword(word, beta, field))
                 for beta in field.antilog)
    print(f"derivatives of a codeword in all {field.n} directions "
          f"lie in the descendant: {inside}")
    print()

    f64 = field_for_length(64)
    big = code_from_generator(f64, 0x782CF)
    print(f"(64, {big.k}) -> descendant dimension {dd_code(big).k}, "
          f"ascendant dimension {da_code(big).k}")
    print()

    m = 5
    print(f"order-r family at length {1 << m}: both maps shift the order by one")
    for r in range(1, m):
        S = rm_exponent_set(r, m)
        down_ok = cyclic_dd(S).members == rm_exponent_set(r - 1, m).members
        up_size = len(cyclic_da(S).members)
        print(f"  r={r}: |S|={len(S.members):2}  descendant=order-{r - 1}: "
              f"{down_ok}  ascendant size {up_size}")


if __name__ == "__main__":
    main()
