# Copyright 2026 The phekit Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Partially homomorphic encryption with ten classic cryptosystems.

    >>> cs = Cryptosystem("paillier", key_size=1024)
    >>> c = cs.encrypt(10000) + cs.encrypt(500)
    >>> cs.decrypt(c)
    10500
"""

from fractions import Fraction
from numbers import Rational

from phekit._core import (
    CapabilityError,
    Error,
    OperandMismatchError,
    ParseError,
    PlaintextRangeError,
    algorithms,
    capabilities,
)
from phekit import _core

__all__ = [
    "CapabilityError",
    "Ciphertext",
    "Cryptosystem",
    "Error",
    "OperandMismatchError",
    "ParseError",
    "PlaintextRangeError",
    "algorithms",
    "capabilities",
]


def _scalar_text(k):
    if isinstance(k, bool):
        raise TypeError("scalar must be a number, not bool")
    if isinstance(k, (int, Rational)):
        value = Fraction(k)
    elif isinstance(k, (float, str)):
        # repr() of a float is its shortest round-tripping decimal, so 1.05
        # becomes 21/20 rather than the nearest binary fraction.
        value = Fraction(repr(k) if isinstance(k, float) else k)
    else:
        return NotImplemented
    if value < 0:
        raise ValueError("scalar must be non-negative")
    return f"{value.numerator}/{value.denominator}"


class Ciphertext:
    """Encrypted value bound to the Cryptosystem that produced it."""

    __slots__ = ("_system", "_raw")

    def __init__(self, system, raw):
        self._system = system
        self._raw = raw

    @property
    def algorithm(self):
        return self._raw.algorithm

    @property
    def scale_denominator(self):
        return self._raw.scale_denominator

    def to_json(self):
        return self._raw.to_json()

    def _wrap(self, raw):
        return Ciphertext(self._system, raw)

    def __add__(self, other):
        if not isinstance(other, Ciphertext):
            return NotImplemented
        return self._wrap(self._system._session.add(self._raw, other._raw))

    def __mul__(self, other):
        if isinstance(other, Ciphertext):
            return self._wrap(
                self._system._session.multiply(self._raw, other._raw))
        text = _scalar_text(other)
        if text is NotImplemented:
            return NotImplemented
        return self._wrap(self._system._session.scalar(self._raw, text))

    def __rmul__(self, other):
        if isinstance(other, Ciphertext):
            return NotImplemented
        return self.__mul__(other)

    def __xor__(self, other):
        if not isinstance(other, Ciphertext):
            return NotImplemented
        return self._wrap(self._system._session.xor(self._raw, other._raw))

    def __eq__(self, other):
        return isinstance(other, Ciphertext) and self._raw == other._raw

    __hash__ = None

    def __repr__(self):
        return f"<Ciphertext {self.algorithm} scale={self.scale_denominator}>"


class Cryptosystem:
    """One key pair of a chosen algorithm.

    Keys come either from generation (algorithm plus key_size, with optional
    curve, s, dlp_bound, block_size, prime_count) or from a JSON document
    via from_json. A fixed seed gives reproducible randomness for tests.
    """

    def __init__(self, algorithm, key_size=1024, *, curve="", s=None,
                 dlp_bound=None, block_size=None, prime_count=None,
                 seed=None, _session=None):
        if _session is not None:
            self._session = _session
            return
        self._session = _core.Session.generate(
            algorithm, key_size, curve=curve, s=s, dlp_bound=dlp_bound,
            block_size=block_size, prime_count=prime_count, seed=seed)

    @classmethod
    def from_json(cls, text, *, seed=None):
        return cls(None, _session=_core.Session.from_json(text, seed=seed))

    @property
    def algorithm(self):
        return self._session.algorithm

    @property
    def security_bits(self):
        return self._session.security_bits

    @property
    def has_private_key(self):
        return self._session.has_private

    @property
    def plaintext_bound(self):
        return self._session.plaintext_bound

    @property
    def capabilities(self):
        return capabilities(self.algorithm)

    def export_keys(self, include_private=True):
        return self._session.export_keys(include_private)

    def public(self):
        """Copy holding only the public key, enough for every operation
        except decryption."""
        return Cryptosystem.from_json(self.export_keys(include_private=False))

    def encrypt(self, m, bit_width=None):
        return Ciphertext(self, self._session.encrypt(m, bit_width))

    def decrypt(self, c):
        """Returns an int, or a Fraction after rational scalar products."""
        num, den = self._session.decrypt_scaled(c._raw)
        return num if den == 1 else Fraction(num, den)

    def regenerate(self, c):
        return Ciphertext(self, self._session.regenerate(c._raw))

    def ciphertext_from_json(self, text):
        return Ciphertext(self, _core.Ciphertext.from_json(text))
