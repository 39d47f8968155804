"""Reference generator matrices for the Steane [[7,1,3]] code, rows as ``x | z``."""

_Z7 = (0,) * 7

#: Prescriptive-method LDI form, canonical ``[I X2 | Z1 Z2]`` layout.
STEANE_PRESCRIPTIVE_LDI = (
    (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0),
    (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0),
    (0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0),
)

#: The prescriptive form after Fourier transforms on registers 3, 4, 5 (0-based).
STEANE_CSS_LDI = (
    (1, 0, 0, 0, 1, 1, 1) + _Z7,
    (0, 1, 0, 1, 1, 1, 0) + _Z7,
    (0, 0, 1, 1, 0, 1, 1) + _Z7,
    _Z7 + (-1, 1, 0, -1, 0, 0, 1),
    _Z7 + (0, 1, -1, 0, -1, 0, 1),
    _Z7 + (1, 1, 1, 0, 0, -1, 0),
)

#: Binary CSS presentation.
STEANE_CSS = (
    (1, 1, 1, 1, 0, 0, 0) + _Z7,
    (0, 1, 1, 0, 1, 1, 0) + _Z7,
    (0, 1, 0, 1, 1, 0, 1) + _Z7,
    _Z7 + (1, 1, 1, 1, 0, 0, 0),
    _Z7 + (0, 1, 1, 0, 1, 1, 0),
    _Z7 + (0, 1, 0, 1, 1, 0, 1),
)

#: A sign-flipped presentation that is not LDI: the third X row
#: and the second Z row have integer product -2.
STEANE_SIGNED = (
    (1, 1, 1, 1, 0, 0, 0) + _Z7,
    (0, 1, 1, 0, 1, 1, 0) + _Z7,
    (0, 0, 1, 1, 0, 1, 1) + _Z7,
    _Z7 + (1, -1, 1, -1, 0, 0, 0),
    _Z7 + (0, 1, -1, 0, 1, -1, 0),
    _Z7 + (0, 0, 1, -1, 0, -1, 1),
)

#: The [[5,1,3]] code, cyclic shifts of X Z Z X I.
FIVE_QUBIT = (
    (1, 0, 0, 1, 0, 0, 1, 1, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 1, 1, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 1, 1),
    (0, 1, 0, 1, 0, 1, 0, 0, 0, 1),
)
