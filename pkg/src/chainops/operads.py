"""Operad structure maps: the symmetric-group operad, the Barratt-Eccles
operad on N(ESigma_n), and the surjection operad on S(n).

The recursive twisted-equivariant engine defines O_B(b) = H_s O_B(db)
on basis tensors and extends by O_B(g^ x) = O_Sigma(g^) O_B(tau_g x);
the closed forms (EZ followed by vertexwise O_Sigma for Barratt-Eccles,
k-divisions with caesura-shuffle signs for the Berger-Fresse surjection
operad) are implemented independently and tested against it.  The ms
and aj surjection structure maps are obtained by conjugating with the
flavor isomorphisms.
"""

from functools import lru_cache
from itertools import combinations_with_replacement, product as _product

from .complexes import TensorComplex, act, boundary, contract
from .errors import InvalidInput
from .maclane import sym_eg
from .perms import Perm, block_perm, koszul_sign
from .rings import ZZ
from .simplex import shuffle_words
from .surjections import caesuras, iso, surjection_complex


def sigma_compose(u, vs):
    """O_Sigma(u; v_1, ..., v_r): permute within blocks, then blocks by u."""
    if u.n != len(vs):
        raise InvalidInput("outer arity does not match the number of inner inputs")
    sizes = [v.n for v in vs]
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    out = []
    for i in range(1, u.n + 1):
        b = u(i)
        base = starts[b - 1]
        out.extend(base + vs[b - 1](j) for j in range(1, sizes[b - 1] + 1))
    return Perm(out)


def oplus(vs):
    """v_1 + ... + v_r acting blockwise (the direct-sum permutation)."""
    return sigma_compose(Perm.identity(len(vs)), vs)


# -- the recursive twisted-equivariant engine -------------------------------------


class OperadComponents:
    """A family n -> contracted Sigma_n-complex closed under the engine."""

    def component(self, n):
        raise NotImplementedError


class BarrattEcclesComponents(OperadComponents):
    name = "barratt-eccles"

    def component(self, n):
        return sym_eg(n)


class SurjectionComponents(OperadComponents):
    def __init__(self, flavor="bf"):
        self.flavor = flavor
        self.name = f"surjection-{flavor}"

    def component(self, n):
        return surjection_complex(self.flavor, n)


class TwistedOperadMap:
    """The standard twisted-equivariant procedure structure map O_B."""

    def __init__(self, components, ring=ZZ):
        self.components = components
        self.ring = ring
        self._memo = {}

    @lru_cache(maxsize=None)
    def domain(self, arities):
        factors = (self.components.component(arities[0]),) + tuple(
            self.components.component(s) for s in arities[1:]
        )
        return TensorComplex(factors)

    def target(self, arities):
        return self.components.component(sum(arities[1:]))

    def on_basis(self, arities, gen):
        key = (arities, gen)
        try:
            return self._memo[key]
        except KeyError:
            pass
        dom = self.domain(arities)
        target = self.target(arities)
        if dom.degree_of(gen) == 0:
            value = target.el(self.ring, target.basepoint_gen())
        else:
            db = boundary(dom.el(self.ring, gen))
            value = contract(self.apply(arities, db))
        self._memo[key] = value
        return value

    def _on_gen(self, arities, gen):
        dom = self.domain(arities)
        ghat, coeff, b = dom.decompose(gen)
        g, hs = ghat[0], ghat[1:]
        inner = b[1:]
        new_arities = arities
        sign = 1
        if not g.is_identity():
            degrees = [
                self.components.component(s).degree_of(x)
                for s, x in zip(arities[1:], inner)
            ]
            sign = koszul_sign(g.inverse(), degrees)
            inner = tuple(inner[g(i) - 1] for i in range(1, g.n + 1))
            new_arities = (arities[0],) + tuple(
                arities[g(i)] for i in range(1, g.n + 1)
            )
        value = self.on_basis(new_arities, (b[0],) + inner)
        osig = sigma_compose(g, list(hs))
        if not osig.is_identity():
            value = act(osig, value)
        return (coeff * sign) * value

    def apply(self, arities, x):
        target = self.target(arities)
        if x.is_zero():
            return target.zero(self.ring, x.degree)
        return x.map_terms(
            lambda gen: self._on_gen(arities, gen), codomain=target
        )


def engine_compose(engine, outer, inners):
    """Evaluate a TwistedOperadMap on elements (outer; inner_1, ..., inner_r)."""
    comp = engine.components

    def arity_of(e):
        c = e.complex
        return c.group.n

    r = arity_of(outer)
    if r != len(inners):
        raise InvalidInput("outer arity does not match the number of inner inputs")
    arities = (r,) + tuple(arity_of(y) for y in inners)
    dom = engine.domain(arities)
    from .complexes import tensor_elements

    x = tensor_elements(dom, outer, *inners)
    return engine.apply(arities, x)


# -- closed form: Barratt-Eccles ----------------------------------------------------


def be_compose_terms(gen, arities):
    """EZ of the tuple tensor followed by vertexwise O_Sigma."""
    dims = [len(t) - 1 for t in gen]
    out = []
    for sign, word in shuffle_words(dims):
        idx = [0] * len(gen)
        cols = []
        col = tuple(t[0] for t in gen)
        cols.append(sigma_compose(col[0], list(col[1:])))
        for letter in word:
            idx[letter] += 1
            col = tuple(t[idx[i]] for i, t in enumerate(gen))
            cols.append(sigma_compose(col[0], list(col[1:])))
        out.append((sign, tuple(cols)))
    return out


def be_compose(outer, inners, ring=ZZ):
    """O_E: N(ESigma_r) (x) N(ESigma_s1) (x) ... -> N(ESigma_s), closed form."""
    r = outer.complex.group.n
    if r != len(inners):
        raise InvalidInput("outer arity does not match the number of inner inputs")
    sizes = tuple(y.complex.group.n for y in inners)
    s = sum(sizes)
    target = sym_eg(s)
    dom = TensorComplex((outer.complex,) + tuple(y.complex for y in inners))
    from .complexes import tensor_elements

    x = tensor_elements(dom, outer, *inners)
    arities = (r,) + sizes
    return x.map_terms(
        lambda gen: be_compose_terms(gen, arities), codomain=target
    )


# -- closed form: the surjection operad (Berger-Fresse signs) ------------------------


def k_divisions(y, k):
    """All k-divisions of the tuple y: k subtuples overlapping in k-1
    repeated entries."""
    m = len(y)
    for cuts in combinations_with_replacement(range(1, m + 1), k - 1):
        subs = []
        prev = 1
        for c in cuts:
            subs.append(y[prev - 1 : c])
            prev = c
        subs.append(y[prev - 1 :])
        yield tuple(subs)


def division_substitution(x, divisions):
    """D x: replace the successive i-entries of x by the division subtuples
    of y_i; record the x-caesura positions (final entries of non-final
    subtuples) and the value tag of every position."""
    counters = [0] * (len(divisions) + 1)
    seq = []
    x_caesura_pos = set()
    tags = []
    for v in x:
        sub = divisions[v - 1][counters[v - 1]]
        is_final = counters[v - 1] == len(divisions[v - 1]) - 1
        counters[v - 1] += 1
        seq.extend(sub)
        tags.extend([v] * len(sub))
        if not is_final:
            x_caesura_pos.add(len(seq))
    return tuple(seq), x_caesura_pos, tags


def division_sign(dx, x_caesura_pos, tags):
    """(-1)^sh(C_x, C_D): parity of the stable shuffle sorting the tagged
    caesura word of D x into (x-caesuras, y_1-caesuras, ..., y_r-caesuras).

    An x-caesura (rank 0) preceded by any y-caesura is an inversion, and
    so is a y_j-caesura preceded by a y_i-caesura with i > j; omitting
    the second kind breaks d.Phi = Phi.d at total degree 3.
    """
    word = [
        0 if p in x_caesura_pos else tags[p - 1] for p in caesuras(dx)
    ]
    count = 0
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            if word[a] > word[b]:
                count += 1
    return -1 if count % 2 else 1


def surj_compose_bf_terms(x, ys):
    """Summands of Phi(x; y_1, ..., y_r) in S^bf with caesura-shuffle signs."""
    r = max(x)
    counts = [0] * r
    for v in x:
        counts[v - 1] += 1
    shifts = [0]
    for y in ys:
        shifts.append(shifts[-1] + max(y))
    shifted = [tuple(v + shifts[i] for v in y) for i, y in enumerate(ys)]
    out = []
    for combo in _product(
        *(list(k_divisions(y, counts[i])) for i, y in enumerate(shifted))
    ):
        dx, xpos, tags = division_substitution(x, combo)
        out.append((division_sign(dx, xpos, tags), dx))
    return out


def surj_compose_terms(gen, arities):
    """O_S^bf on a pure tensor (x, y_1, ..., y_r) of generators.

    The division formula applies verbatim when the outer x is
    a basis generator; a general x = g.b is handled by the twisted
    equivariance O(g b; y_i) = kappa . g_*(s_i) O(b; y_g(1), ...), with
    the Koszul sign kappa of the tau_g factor permutation.
    """
    x, ys = gen[0], list(gen[1:])
    r = arities[0]
    sizes = list(arities[1:])
    comp = surjection_complex("bf", r)
    g = comp.first_occurrence_perm(x)
    if g.is_identity():
        return surj_compose_bf_terms(x, ys)
    degrees = [len(y) - s for y, s in zip(ys, sizes)]
    kappa = koszul_sign(g.inverse(), degrees)
    reordered = [ys[g(i) - 1] for i in range(1, r + 1)]
    b = tuple(g.inverse()(v) for v in x)
    base = surj_compose_bf_terms(b, reordered)
    blocks = block_perm(g, sizes)
    return [
        (kappa * c, tuple(blocks(v) for v in t)) for c, t in base
    ]


def surj_compose(flavor, outer, inners, ring=ZZ):
    """O_S on S^flavor; bf natively, ms/aj by conjugating the isomorphisms."""
    if flavor != "bf":
        outer_bf = iso(flavor, "bf", outer)
        inners_bf = [iso(flavor, "bf", y) for y in inners]
        return iso("bf", flavor, surj_compose("bf", outer_bf, inners_bf, ring))
    r = outer.complex.n
    if r != len(inners):
        raise InvalidInput("outer arity does not match the number of inner inputs")
    sizes = tuple(y.complex.n for y in inners)
    s = sum(sizes)
    target = surjection_complex("bf", s)
    dom = TensorComplex((outer.complex,) + tuple(y.complex for y in inners))
    from .complexes import tensor_elements

    x = tensor_elements(dom, outer, *inners)
    arities = (r,) + sizes
    return x.map_terms(
        lambda gen: surj_compose_terms(gen, arities), codomain=target
    )


def partial_compose(flavor, i, x, y, ring=ZZ):
    """O_i(x; y): the structure map with all inner inputs trivial except the
    i-th."""
    r = x.complex.n
    if not 1 <= i <= r:
        raise InvalidInput(f"slot {i} outside 1..{r}")
    unit = surjection_complex(flavor, 1).el(ring, (1,))
    inners = [unit] * r
    inners[i - 1] = y
    return surj_compose(flavor, x, inners, ring)


def be_engine(ring=ZZ):
    return TwistedOperadMap(BarrattEcclesComponents(), ring)


def surj_engine(flavor="bf", ring=ZZ):
    return TwistedOperadMap(SurjectionComponents(flavor), ring)


def verify_operad(max_degree=2):
    """Axiom report for the symmetric-group, Barratt-Eccles, and surjection
    operads: equivariance, units, associativity squares, goldens."""
    from .suites import operads_suite

    return operads_suite(max_degree)


def verify_morphisms():
    """Report for the quotient square (table reduction) and the square into
    the functorial coendomorphism operad."""
    from .suites import morphism_squares_suite

    return morphism_squares_suite()
