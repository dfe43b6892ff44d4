"""Tour of the spectral view of an extended cyclic code.

Builds the (16, 7) code from its generator polynomial, prints the exponent
set that characterises it, and shows that a codeword's spectrum support
stays inside that set while a corrupted word's does not.
"""

from __future__ import annotations

import numpy as np

from ddcodes.cyclic import bch_bound, code_from_generator, ms_transform
from ddcodes.gf2m import field_for_length


def main() -> None:
    field = field_for_length(16)
    spec = code_from_generator(field, 0x1D1)
    S = spec.exponents
    print(f"code: ({spec.n}, {spec.k}) with generator {spec.gen_poly:#x}")
    print(f"exponent set      : {sorted(S.members)}")
    print(f"representatives   : {S.representatives()}")
    print(f"distance bound    : {bch_bound(S)}")
    print()

    rng = np.random.default_rng(7)
    msg = rng.integers(0, 2, size=spec.k, dtype=np.uint8)
    word = (msg @ spec.G) % 2
    support = [j for j, v in enumerate(ms_transform(word[1:], field)) if v]
    print(f"codeword          : {''.join(map(str, word))}")
    print(f"spectrum support  : {support}  (inside the exponent set)")

    flipped = word.copy()
    flipped[3] ^= 1
    support = [j for j, v in enumerate(ms_transform(flipped[1:], field)) if v]
    print(f"one bit flipped   : support becomes {support}")


if __name__ == "__main__":
    main()
