"""The Berger-Fresse chain-level action Phi: S^bf(n) (x) N(Delta^m) ->
N(Delta^m)^(x)n, its composites, mod-p constants, and the dual cochain
evaluation.

The closed formula sums over monomials of the (n+k)-fold multidiagonal
of Delta^m with the shuffle and position signs; the functorial
recursion phi(b (x) Delta^m) = h(phi(d(b (x) Delta^m))) with faces
pushed forward from their models is kept alongside as the oracle.
"""

from functools import lru_cache
from itertools import combinations_with_replacement

from .complexes import boundary, contract
from .elements import Element
from .errors import InvalidInput
from .maclane import MacLaneComplex, cyc_eg, cyclic_into_symmetric, induced_map, sym_eg
from .minimal import MinimalComplex, phi_to_EC
from .morphisms import table_reduction
from .perms import koszul_sign
from .rings import ZZ
from .simplex import (
    face_vmap,
    push_face,
    push_simplex_element,
    tensor_power,
)
from .surjections import SurjectionComplex, caesuras, iso, surjection_complex


def bf_action_terms(x, m):
    """Signed tensor terms of Phi(x (x) Delta^m) for a bf generator x."""
    n = max(x)
    nk = len(x)
    caes = set(caesuras(x))
    out = []
    for interior in combinations_with_replacement(range(m + 1), nk - 1):
        ms = (0,) + interior + (m,)
        # blocks B_j = (ms[j-1] .. ms[j]); faces F_l amalgamate by value
        faces = [[] for _ in range(n)]
        degenerate = False
        pos_exp = 0
        lengths = []
        for j in range(1, nk + 1):
            lo, hi = ms[j - 1], ms[j]
            f = faces[x[j - 1] - 1]
            if f and f[-1] == lo:
                degenerate = True
                break
            f.extend(range(lo, hi + 1))
            if j in caes:
                lengths.append(hi - lo + 1)
                pos_exp += hi
            else:
                lengths.append(hi - lo)
        if degenerate:
            continue
        sh_exp = 0
        for j in range(nk):
            for jp in range(j + 1, nk):
                if x[j] > x[jp]:
                    sh_exp += lengths[j] * lengths[jp]
        sign = -1 if (sh_exp + pos_exp) % 2 else 1
        out.append((sign, tuple(tuple(f) for f in faces)))
    return out


def bf_action(x, m):
    """Phi(x (x) Delta^m), linear in an S^bf element x."""
    src = x.complex
    if not isinstance(src, SurjectionComplex) or src.flavor != "bf":
        raise InvalidInput("bf_action expects an S^bf element")
    target = tensor_power(m, src.n)
    return x.map_terms(
        lambda gen: bf_action_terms(gen, m), codomain=target, degree_shift=m
    )


def perm_act(g, x):
    """Left Sigma_n action on a tensor power with Koszul signs."""
    T = x.complex
    ginv = g.inverse()

    def terms(gen):
        degrees = [f.degree_of(a) for f, a in zip(T.factors, gen)]
        sign = koszul_sign(g, degrees)
        out = tuple(gen[ginv(i) - 1] for i in range(1, g.n + 1))
        return [(sign, out)]

    return x.map_terms(terms)


class BFActionStandard:
    """The functorial standard procedure for Phi, memoized on (basis
    generator, ambient dimension)."""

    def __init__(self, n, ring=ZZ):
        self.n = n
        self.ring = ring
        self.S = surjection_complex("bf", n)
        self._memo = {}

    def target(self, m):
        return tensor_power(m, self.n)

    def on_basis(self, b, m):
        key = (b, m)
        try:
            return self._memo[key]
        except KeyError:
            pass
        k = self.S.degree_of(b)
        target = self.target(m)
        if k == 0:
            from .simplex import multidiagonal_standard

            value = multidiagonal_standard(self.n, m)
        elif m == 0:
            value = target.zero(self.ring, k)
        else:
            total = self.apply(boundary(self.S.el(self.ring, b)), m)
            inner = self.on_gen_element(b, m - 1)
            for j in range(m + 1):
                vmap = face_vmap(m, j)
                total = total + ((-1) ** (k + j)) * push_simplex_element(
                    inner, vmap, target
                )
            value = contract(total)
        self._memo[key] = value
        return value

    def on_gen_element(self, gen, m):
        g, coeff, b = self.S.decompose(gen)
        value = self.on_basis(b, m)
        if not g.is_identity():
            value = perm_act(g, value)
        return coeff * value

    def apply(self, x, m):
        target = self.target(m)
        if x.is_zero():
            return target.zero(self.ring, x.degree)
        return x.map_terms(
            lambda gen: self.on_gen_element(gen, m), codomain=target
        )


@lru_cache(maxsize=None)
def bf_action_standard(n):
    return BFActionStandard(n)


# -- composites through TR, phi, and the flavor isomorphisms -----------------------


def action_for(x, m):
    """The chain-level action for elements of N(ESigma_n), M_*, S^aj, S^ms:
    the composite through the bf action, table reduction, and the flavor isomorphisms."""
    src = x.complex
    if isinstance(src, SurjectionComplex):
        if src.flavor == "bf":
            return bf_action(x, m)
        return bf_action(iso(src.flavor, "bf", x), m)
    if isinstance(src, MacLaneComplex):
        from .groups import SymmetricGroup

        if not isinstance(src.group, SymmetricGroup):
            raise InvalidInput("action_for needs a symmetric MacLane model")
        return bf_action(table_reduction("bf", x), m)
    if isinstance(src, MinimalComplex):
        p = src.n
        incl = induced_map(cyclic_into_symmetric(p), cyc_eg(p), sym_eg(p), x.ring)
        return bf_action(table_reduction("bf", incl(phi_to_EC(x))), m)
    raise InvalidInput(f"no chain action for elements of {src}")


def steenrod_constant(m, p):
    """c_{m,p} = (-1)^((m(m-1)/2)(p(p-1)/2)) (q!)^m mod p, q = (p-1)/2."""
    if p == 2 or p % 2 == 0:
        raise InvalidInput("steenrod_constant expects an odd prime")
    q = (p - 1) // 2
    qfac = 1
    for i in range(2, q + 1):
        qfac *= i
    sign = -1 if ((m * (m - 1) // 2) * (p * (p - 1) // 2)) % 2 else 1
    return (sign * qfac**m) % p


# -- cochain evaluation through the graded duality pairing --------------------------


class FaceTable:
    """A finite simplicial-set fragment: nondegenerate simplices with ids,
    dimensions, and ordered face ids (null marks a degenerate face)."""

    def __init__(self, data):
        self.dim = data["dim"]
        self.dims = {}
        self.faces = {}
        for s in data["simplices"]:
            sid = s["id"]
            self.dims[sid] = s["dim"]
            self.faces[sid] = list(s.get("faces", []))
            if s["dim"] > 0 and len(self.faces[sid]) != s["dim"] + 1:
                raise InvalidInput(f"simplex {sid} needs {s['dim'] + 1} faces")

    def simplices(self, dim=None):
        for sid, d in sorted(self.dims.items(), key=lambda kv: str(kv[0])):
            if dim is None or d == dim:
                yield sid

    def face(self, sid, j):
        return self.faces[sid][j]

    def subface(self, sid, vertices):
        """The iterated face of sid spanned by a vertex subset of its model."""
        d = self.dims[sid]
        missing = [v for v in range(d + 1) if v not in set(vertices)]
        for v in reversed(missing):
            if sid is None:
                return None
            sid = self.face(sid, v)
        return sid


class Cochain:
    def __init__(self, degree, values):
        self.degree = degree
        self.values = dict(values)

    def __call__(self, sid):
        return self.values.get(sid, 0)


def cochain_evaluate(x, cochains, table, sid, ring=ZZ):
    """< Phi(x (x) alpha_1 (x) ... (x) alpha_n), c >  for the simplex c = sid.

    Signs follow the preferred hom-complex convention: the outer factor
    (-1)^(|x|(1+|c|)) and the duality pairing sign (-1)^(l(l-1)/2) with l
    the number of odd-degree tensor factors.
    """
    if isinstance(x, Element):
        src = x.complex
    else:
        raise InvalidInput("cochain_evaluate expects an S^bf element")
    if not isinstance(src, SurjectionComplex) or src.flavor != "bf":
        raise InvalidInput("cochain_evaluate expects an S^bf element")
    n = src.n
    if len(cochains) != n:
        raise InvalidInput(f"need {n} cochains")
    d = table.dims[sid]
    k = x.degree
    total = 0
    value = bf_action(x, d)
    for gen, coeff in value.terms.items():
        dims = [len(f) - 1 for f in gen]
        if any(dims[j] != cochains[j].degree for j in range(n)):
            continue
        odd = sum(1 for t in dims if t % 2)
        pair_sign = -1 if (odd * (odd - 1) // 2) % 2 else 1
        prod = coeff * pair_sign
        for j in range(n):
            target_id = table.subface(sid, gen[j])
            if target_id is None:
                prod = 0
                break
            prod *= cochains[j](target_id)
            if prod == 0:
                break
        total += prod
    outer = -1 if (k * (1 + d)) % 2 else 1
    return ring.normalize(outer * total)


def dual_operation(x, cochains, table, ring=ZZ):
    """The cochain Phi(x (x) alpha_1 ... alpha_n) as a Cochain on the table."""
    out_dim = sum(a.degree for a in cochains) - x.degree
    values = {}
    if out_dim >= 0:
        for sid in table.simplices(out_dim):
            v = cochain_evaluate(x, cochains, table, sid, ring)
            if v:
                values[sid] = v
    return Cochain(out_dim, values)


def cochain_coboundary(alpha, table, ring=ZZ):
    """< d(alpha), c > = (-1)^{|c|} < alpha, dc > with |c| the new degree."""
    out = {}
    d = alpha.degree + 1
    if d <= 0:
        return Cochain(d, out)
    for sid in table.simplices(d):
        total = 0
        for j in range(d + 1):
            f = table.face(sid, j)
            if f is None:
                continue
            total += (-1) ** j * alpha(f)
        total = ring.normalize((-1) ** d * total)
        if total:
            out[sid] = total
    return Cochain(d, out)


# -- the surjection -> Eilenberg-Zilber operad square --------------------------------


def sz_square(x, ys, m, ring=ZZ):
    """Both composites of the S -> Z operad-morphism square evaluated on
    (x (x) y_1 (x) ... (x) y_r (x) Delta^m); returns (left, right)."""
    from .operads import surj_compose

    r = x.complex.n
    sizes = [y.complex.n for y in ys]
    s = sum(sizes)
    target = tensor_power(m, s)

    # across the top: Phi(O_S(x; y) (x) Delta^m)
    left = bf_action(surj_compose("bf", x, ys, ring), m)

    # down and across: +- (v_1 ox ... ox v_r)(u(Delta^m)) with evaluation signs
    u_val = bf_action(x, m)
    ydegs = [y.degree for y in ys]
    tau_exp = x.degree * sum(ydegs)
    right = target.zero(ring, left.degree)
    for gen, coeff in u_val.terms.items():
        dims = [len(f) - 1 for f in gen]
        eval_exp = 0
        for j in range(r):
            eval_exp += ydegs[j] * sum(dims[:j])
        sign = -1 if (tau_exp + eval_exp) % 2 else 1
        pieces = []
        dead = False
        for j in range(r):
            vmap = list(gen[j])
            inner = bf_action(ys[j], dims[j])
            pushed = inner.map_terms(
                lambda g: [(1, tuple(push_face(vmap, f) for f in g))],
                codomain=tensor_power(m, sizes[j]),
            )
            if pushed.is_zero():
                dead = True
                break
            pieces.append(pushed)
        if dead:
            continue
        # amalgamate the s_j-tensors into one s-tensor
        from itertools import product as _product

        for combo in _product(*(list(p.terms.items()) for p in pieces)):
            g_out = tuple(f for piece_gen, _ in combo for f in piece_gen)
            c_out = coeff * sign
            for _, c in combo:
                c_out *= c
            g_canon = target.canonical(g_out)
            if g_canon is None:
                continue
            right = right + target.el(ring, g_canon, c_out)
    return left, right
