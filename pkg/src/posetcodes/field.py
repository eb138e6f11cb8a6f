"""Arithmetic in prime fields GF(q) and on vectors of residues.

Residues are stored canonically in ``[0, q)`` and vectors are plain tuples
of residues, so equality and hashing are exact and cheap.  Only prime
moduli are supported; extension fields would need polynomial arithmetic
that nothing here requires.
"""

from dataclasses import dataclass

from .errors import ValidationError


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(q)."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise ValidationError(f"field modulus must be an integer >= 2, got {self.q!r}")
        if not is_prime(self.q):
            raise ValidationError(f"field modulus must be prime, got {self.q}")

    def normalize(self, a: int) -> int:
        return a % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ValidationError("division by zero in GF(q)")
        return pow(a, self.q - 2, self.q)


def make_field(q: int) -> FieldSpec:
    """Build a prime-field spec, rejecting composite moduli."""
    return FieldSpec(q)


Vector = tuple


def validate_vector(field: FieldSpec, x, n: int | None = None) -> tuple:
    """Check residues are canonical and, when given, the length is ``n``."""
    vec = tuple(x)
    if n is not None and len(vec) != n:
        raise ValidationError(f"expected vector of length {n}, got {len(vec)}")
    for v in vec:
        if not isinstance(v, int) or not 0 <= v < field.q:
            raise ValidationError(f"entry {v!r} is not a residue in [0, {field.q})")
    return vec


def vec_add(field: FieldSpec, u, v) -> tuple:
    if len(u) != len(v):
        raise ValidationError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple((a + b) % field.q for a, b in zip(u, v))


def vec_sub(field: FieldSpec, u, v) -> tuple:
    if len(u) != len(v):
        raise ValidationError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple((a - b) % field.q for a, b in zip(u, v))


def vec_neg(field: FieldSpec, u) -> tuple:
    return tuple((-a) % field.q for a in u)


def scalar_mul(field: FieldSpec, scalar: int, u) -> tuple:
    return tuple((scalar * a) % field.q for a in u)


def parse_vector(text: str, q: int) -> tuple:
    """Parse a comma-separated residue vector, e.g. ``"1,0,2"``."""
    field = FieldSpec(q)
    try:
        entries = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"cannot parse vector {text!r}") from exc
    return tuple(field.normalize(e) for e in entries)


def format_vector(x) -> str:
    return ",".join(str(v) for v in x)
