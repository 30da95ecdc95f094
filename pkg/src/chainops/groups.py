"""Group descriptors for MacLane models: Sigma_n, C_n, and products.

Group elements are lightweight values: permutations for Sigma_n,
exponents 0..n-1 for C_n (the class of T^i), and tuples for products.
"""

from itertools import product as _product

from .errors import InvalidInput
from .perms import Perm, all_perms


class SymmetricGroup:
    def __init__(self, n):
        if n < 1:
            raise InvalidInput("arity must be >= 1")
        self.n = n
        self.identity = Perm.identity(n)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def elements(self):
        return all_perms(self.n)

    def order(self):
        out = 1
        for i in range(2, self.n + 1):
            out *= i
        return out

    def is_identity(self, a):
        return a.is_identity()

    def parity(self, a):
        return a.parity()

    def key(self, a):
        return a.images

    def encode(self, a):
        return list(a.images)

    def decode(self, data):
        return Perm(data)

    def format(self, a):
        return " ".join(str(v) for v in a.images)

    def __eq__(self, other):
        return isinstance(other, SymmetricGroup) and other.n == self.n

    def __hash__(self):
        return hash(("S", self.n))

    def __repr__(self):
        return f"Sigma_{self.n}"


class CyclicGroup:
    def __init__(self, n):
        if n < 1:
            raise InvalidInput("order must be >= 1")
        self.n = n
        self.identity = 0

    def mul(self, a, b):
        return (a + b) % self.n

    def inv(self, a):
        return (-a) % self.n

    def elements(self):
        return range(self.n)

    def order(self):
        return self.n

    def is_identity(self, a):
        return a % self.n == 0

    def key(self, a):
        return a

    def encode(self, a):
        return a

    def decode(self, data):
        return data % self.n

    def format(self, a):
        return str(a % self.n)

    def __eq__(self, other):
        return isinstance(other, CyclicGroup) and other.n == self.n

    def __hash__(self):
        return hash(("C", self.n))

    def __repr__(self):
        return f"C_{self.n}"


class ProductGroup:
    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise InvalidInput("empty product group")
        self.identity = tuple(g.identity for g in self.factors)

    def mul(self, a, b):
        return tuple(g.mul(x, y) for g, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(g.inv(x) for g, x in zip(self.factors, a))

    def elements(self):
        for combo in _product(*(tuple(g.elements()) for g in self.factors)):
            yield combo

    def order(self):
        out = 1
        for g in self.factors:
            out *= g.order()
        return out

    def is_identity(self, a):
        return all(g.is_identity(x) for g, x in zip(self.factors, a))

    def key(self, a):
        return tuple(g.key(x) for g, x in zip(self.factors, a))

    def encode(self, a):
        return [g.encode(x) for g, x in zip(self.factors, a)]

    def decode(self, data):
        return tuple(g.decode(x) for g, x in zip(self.factors, data))

    def format(self, a):
        return "(" + ",".join(g.format(x) for g, x in zip(self.factors, a)) + ")"

    def __eq__(self, other):
        return isinstance(other, ProductGroup) and other.factors == self.factors

    def __hash__(self):
        return hash(("prod", self.factors))

    def __repr__(self):
        return " x ".join(repr(g) for g in self.factors)
