"""Projective covers, minimal resolutions, duality, higher transpose and Ext.

Ext groups are realized as cocycle spaces on minimal projective
resolutions; classes of exact sequences are extracted by comparison
lifts, and pushforward/pullback act at the cocycle level.
"""

from __future__ import annotations

from .errors import NotExact, ValidationError, VerificationFailed
from .linalg import Matrix, kernel_basis, rank, row_space_basis, rref, solve
from .reps import (
    ModMorphism,
    Representation,
    end_radical,
    hom_basis,
    hom_space,
    kernel,
    zero_representation,
)


class ProjSum:
    """A direct sum of indecomposable projectives with path bookkeeping.

    ``vertices`` lists one vertex per summand; the underlying
    representation has, at each vertex w, the concatenated residue paths
    of every summand that reach w.
    """

    def __init__(self, alg, vertices):
        self.alg = alg
        self.vertices = [str(v) for v in vertices]
        fld = alg.field
        verts = alg.quiver.vertices
        self.paths_at = {w: [] for w in verts}  # (summand index, path)
        for idx, v in enumerate(self.vertices):
            for p in alg.basis_paths_from(v):
                self.paths_at[alg._path_target(p)].append((idx, p))
        dims = {w: len(self.paths_at[w]) for w in verts}
        self.index_at = {
            w: {key: i for i, key in enumerate(self.paths_at[w])} for w in verts
        }
        maps = {}
        for a, s, t in alg.quiver.arrows:
            m = Matrix.zeros(dims[s], dims[t], fld)
            for row, (idx, p) in enumerate(self.paths_at[s]):
                for q, c in alg.reduce_path(alg._extend(p, a)).items():
                    m.data[row][self.index_at[t][(idx, q)]] = c
            maps[a] = m
        self.rep = Representation(alg, dims, maps, check=False)
        self.rep.name = "P(" + "+".join(self.vertices) + ")" if vertices else "0"

    def is_zero(self):
        return not self.vertices

    def generator_position(self, idx):
        """(vertex, row index) of the idx-th summand's trivial path."""
        v = self.vertices[idx]
        return v, self.index_at[v][(idx, ("", v))]

    def morphism_from_generators(self, target, gen_images):
        """ModMorphism rep -> target sending summand generators to the given
        row vectors (one list per summand, a vector in target at its vertex)."""
        alg = self.alg
        fld = alg.field
        mats = {
            w: Matrix.zeros(self.rep.dims[w], target.dims[w], fld)
            for w in alg.quiver.vertices
        }
        for w in alg.quiver.vertices:
            for row, (idx, p) in enumerate(self.paths_at[w]):
                vec = gen_images[idx]
                if p[0] == "":
                    img = list(vec)
                else:
                    m = Matrix(1, len(vec), [list(vec)], fld) * target.path_matrix(p)
                    img = m.data[0]
                mats[w].data[row] = list(img)
        return ModMorphism(self.rep, target, mats, check=False)

    def element_matrix(self, f: ModMorphism, target: "ProjSum"):
        """Element form of a morphism into another ProjSum.

        Returns {(src_idx, tgt_idx): {path: coeff}} with the element a
        combination of paths from target summand's vertex to the source
        summand's vertex.
        """
        out = {}
        for i in range(len(self.vertices)):
            v, row = self.generator_position(i)
            image = f.mats[v].data[row]
            for col, c in enumerate(image):
                if c == 0:
                    continue
                j, path = target.paths_at[v][col]
                out.setdefault((i, j), {})
                out[(i, j)][path] = c
        return out


def morphism_from_elements(source: ProjSum, target: ProjSum, elements):
    """Inverse of element_matrix: maps given by left multiplication."""
    alg = source.alg
    gen_images = []
    fld = alg.field
    for i, v in enumerate(source.vertices):
        vec = [fld.zero()] * target.rep.dims[v]
        for (si, tj), elt in elements.items():
            if si != i:
                continue
            for path, c in elt.items():
                key = (tj, path)
                vec[target.index_at[v][key]] = fld.add(
                    vec[target.index_at[v][key]], c
                )
        gen_images.append(vec)
    return source.morphism_from_generators(target.rep, gen_images)


# -- projective covers and resolutions ----------------------------------------


def radical_submodule_rows(m):
    """Per-vertex matrices whose row spaces are rad(m) = m * (arrow ideal)."""
    alg = m.alg
    fld = alg.field
    rows = {v: [] for v in alg.quiver.vertices}
    for a, s, t in alg.quiver.arrows:
        rows[t].extend(m.maps[a].data)
    return {
        v: (
            row_space_basis(Matrix(len(rows[v]), m.dims[v], rows[v], fld))
            if rows[v]
            else Matrix.zeros(0, m.dims[v], fld)
        )
        for v in rows
    }


def projective_cover(m):
    """(ProjSum P, epi P.rep -> m), minimal by construction."""
    alg = m.alg
    fld = alg.field
    rad = radical_submodule_rows(m)
    vertices = []
    gen_images = []
    for v in alg.quiver.vertices:
        rad_rows = rad[v]
        if m.dims[v] == 0:
            continue
        _, pivots, _ = rref(rad_rows)
        free = [c for c in range(m.dims[v]) if c not in pivots]
        for c in free:
            vertices.append(v)
            vec = [fld.zero()] * m.dims[v]
            vec[c] = fld.one()
            gen_images.append(vec)
    ps = ProjSum(alg, vertices)
    cover = ps.morphism_from_generators(m, gen_images)
    if not cover.is_epi():
        raise VerificationFailed("projective cover is not surjective")
    return ps, cover


class ProjResolution:
    """A minimal projective resolution P_len -> ... -> P_0 -> m -> 0."""

    def __init__(self, module):
        self.module = module
        p0, aug = projective_cover(module)
        self.terms = [p0]
        self.augmentation = aug
        self.differentials = []  # differentials[i]: terms[i+1].rep -> terms[i].rep
        self._kernel = kernel(aug)  # (K, inclusion into terms[-1].rep)

    def extend_to(self, length):
        while len(self.terms) <= length:
            k, incl = self._kernel
            if k.total_dim == 0:
                self.terms.append(ProjSum(self.module.alg, []))
                self.differentials.append(
                    ModMorphism.zero(self.terms[-1].rep, self.terms[-2].rep)
                )
                self._kernel = (k, ModMorphism.zero(k, self.terms[-1].rep))
                continue
            ps, cover = projective_cover(k)
            self.terms.append(ps)
            self.differentials.append(cover.then(incl))
            self._kernel = kernel(cover)

    def term(self, i) -> ProjSum:
        self.extend_to(i)
        return self.terms[i]

    def differential(self, i) -> ModMorphism:
        """d_i: P_i -> P_{i-1} for i >= 1."""
        self.extend_to(i)
        return self.differentials[i - 1]

    def is_projective_module(self):
        self.extend_to(1)
        return self.terms[1].is_zero()


def minimal_resolution(m, length) -> ProjResolution:
    cache = m.alg.cache("resolution")
    if m.uid not in cache:
        cache[m.uid] = ProjResolution(m)
    res = cache[m.uid]
    res.extend_to(length)
    return res


def global_dimension_bound(alg, bound=16):
    """Largest pd over the simple modules, or None if it exceeds bound."""
    worst = 0
    for v in alg.quiver.vertices:
        s = simple_at(alg, v)
        res = minimal_resolution(s, bound + 1)
        pd = None
        for i in range(bound + 2):
            if res.term(i).is_zero():
                pd = i - 1
                break
        if pd is None:
            return None
        worst = max(worst, pd)
    return worst


def simple_at(alg, v):
    v = str(v)
    dims = {w: (1 if w == v else 0) for w in alg.quiver.vertices}
    rep = Representation(alg, dims, {}, name=f"S({v})", check=False)
    return rep


# -- duality and higher transpose ----------------------------------------------


def duality_D(m) -> Representation:
    """Standard k-duality: mod A -> mod A^op."""
    opp = m.alg.opposite()
    maps = {}
    for a, s, t in opp.quiver.arrows:
        # a runs t -> s in the original algebra
        maps[a] = m.maps[a].transpose()
    return Representation(opp, dict(m.dims), maps, name=m.name, check=False)


def transpose_Tr_d(m, d) -> Representation:
    """Tr_d(m) = Coker(Hom(P_{d-1}, A) -> Hom(P_d, A)) over the opposite."""
    if d < 1:
        raise ValidationError("transpose needs d >= 1")
    opp = m.alg.opposite()
    res = minimal_resolution(m, d)
    if res.term(d).is_zero():
        return zero_representation(opp)
    pd, pdm1 = res.term(d), res.term(d - 1)
    elts = pd.element_matrix(res.differential(d), pdm1)
    star_src = ProjSum(opp, pdm1.vertices)
    star_tgt = ProjSum(opp, pd.vertices)
    star_elts = {}
    for (i, j), elt in elts.items():
        # component P_d[i] -> P_{d-1}[j] dualizes to star_src[j] -> star_tgt[i]
        star_elts[(j, i)] = {tuple(reversed(p)): c for p, c in elt.items()}
    star = morphism_from_elements(star_src, star_tgt, star_elts)
    coker, _ = _cokernel(star)
    return coker


def _cokernel(f):
    from .reps import cokernel

    return cokernel(f)


def dtr_d(m, d) -> Representation:
    """The higher Auslander-Reiten translate D Tr_d, a module over m's algebra."""
    tr = transpose_Tr_d(m, d)
    if tr.total_dim == 0:
        return zero_representation(m.alg)
    return duality_D(tr)


# -- factorization helpers -----------------------------------------------------


def factor_through(h: ModMorphism, g: ModMorphism):
    """Some phi with phi.then(g) = h (h: A -> C, g: B -> C), or None."""
    hs = hom_space(h.source, g.source)
    target_hs = hom_space(h.source, h.target)
    if hs.dim == 0:
        return ModMorphism.zero(h.source, g.source) if h.is_zero() else None
    rows = [target_hs.coords(b.then(g)) for b in hs.basis]
    fld = h.source.alg.field
    mat = Matrix(len(rows), target_hs.dim, rows, fld) if target_hs.dim else Matrix(len(rows), 0, [[] for _ in rows], fld)
    want = target_hs.coords(h)
    sol = solve(mat.transpose(), Matrix(len(want), 1, [[x] for x in want], fld))
    if sol is None:
        return None
    return hs.from_coords([sol.data[i][0] for i in range(hs.dim)])


def cofactor_through(h: ModMorphism, g: ModMorphism):
    """Some psi with g.then(psi) = h (h: A -> C, g: A -> B), or None."""
    hs = hom_space(g.target, h.target)
    target_hs = hom_space(h.source, h.target)
    if hs.dim == 0:
        return ModMorphism.zero(g.target, h.target) if h.is_zero() else None
    rows = [target_hs.coords(g.then(b)) for b in hs.basis]
    fld = h.source.alg.field
    mat = Matrix(len(rows), target_hs.dim, rows, fld) if target_hs.dim else Matrix(len(rows), 0, [[] for _ in rows], fld)
    want = target_hs.coords(h)
    sol = solve(mat.transpose(), Matrix(len(want), 1, [[x] for x in want], fld))
    if sol is None:
        return None
    return hs.from_coords([sol.data[i][0] for i in range(hs.dim)])


# -- Ext spaces ----------------------------------------------------------------


class ExtCocycle:
    """An element of Ext^n(a, b): a cocycle on the minimal resolution of a."""

    def __init__(self, a, b, degree, cocycle, resolution):
        self.a = a
        self.b = b
        self.degree = degree
        self.cocycle = cocycle
        self.resolution = resolution

    def __repr__(self):
        return f"ExtCocycle(Ext^{self.degree}({self.a.label()}, {self.b.label()}))"


class ExtSpace:
    """Ext^n(a, b) with a chosen basis of cocycle representatives."""

    def __init__(self, a, b, degree):
        if degree < 1:
            raise ValidationError("ext degree must be >= 1")
        self.a = a
        self.b = b
        self.degree = degree
        n = degree
        res = minimal_resolution(a, n + 1)
        self.resolution = res
        fld = a.alg.field
        hn = hom_space(res.term(n).rep, b)
        hnp = hom_space(res.term(n + 1).rep, b)
        hnm = hom_space(res.term(n - 1).rep, b) if n >= 1 else None
        # cocycles: kernel of postcomposition with d_{n+1}
        if hn.dim == 0:
            self._z_vectors = []
        elif hnp.dim == 0:
            self._z_vectors = [
                [fld.one() if i == j else fld.zero() for i in range(hn.dim)]
                for j in range(hn.dim)
            ]
        else:
            d_next = res.differential(n + 1)
            rows = [hnp.coords(d_next.then(phi)) for phi in hn.basis]
            mat = Matrix(len(rows), hnp.dim, rows, fld)
            kb = kernel_basis(mat.transpose())
            self._z_vectors = [
                [kb.data[i][j] for i in range(hn.dim)] for j in range(kb.cols)
            ]
        # coboundaries: image of postcomposition with d_n
        b_rows = []
        if n >= 1 and hn.dim and hnm.dim:
            d_n = res.differential(n)
            b_rows = [hn.coords(d_n.then(psi)) for psi in hnm.basis]
        self._b_basis = (
            row_space_basis(Matrix(len(b_rows), hn.dim, b_rows, fld))
            if b_rows
            else Matrix.zeros(0, hn.dim, fld)
        )
        self._hn = hn
        # quotient representatives, deterministically greedy
        reps = []
        stack = self._b_basis
        for z in self._z_vectors:
            cand = stack.vstack(Matrix(1, hn.dim, [z], fld))
            if rank(cand) > rank(stack):
                reps.append(z)
                stack = cand
        self._rep_vectors = reps
        self._solve_stack = None
        self.basis = [
            ExtCocycle(a, b, n, hn.from_coords(v), res) for v in reps
        ]

    @property
    def dim(self):
        return len(self._rep_vectors)

    def zero(self) -> ExtCocycle:
        return ExtCocycle(
            self.a,
            self.b,
            self.degree,
            ModMorphism.zero(self.resolution.term(self.degree).rep, self.b),
            self.resolution,
        )

    def coords(self, e: ExtCocycle):
        """Coordinates of a class in the chosen quotient basis."""
        fld = self.a.alg.field
        cocycle = self._transport(e)
        vec = self._hn.coords(cocycle)
        if not self._rep_vectors:
            return []
        rows = self._rep_vectors + [self._b_basis.row(i) for i in range(self._b_basis.rows)]
        mat = Matrix(len(rows), self._hn.dim, rows, fld)
        sol = solve(mat.transpose(), Matrix(len(vec), 1, [[x] for x in vec], fld))
        if sol is None:
            raise VerificationFailed("cocycle not in the cocycle space")
        return [sol.data[i][0] for i in range(len(self._rep_vectors))]

    def _transport(self, e: ExtCocycle) -> ModMorphism:
        if e.resolution is self.resolution:
            return e.cocycle
        raise ValidationError("cocycle on a foreign resolution")

    def from_coords(self, vec) -> ExtCocycle:
        fld = self.a.alg.field
        coords = [fld.zero()] * self._hn.dim
        for c, rv in zip(vec, self._rep_vectors):
            for i in range(self._hn.dim):
                coords[i] = fld.add(coords[i], fld.mul(c, rv[i]))
        return ExtCocycle(self.a, self.b, self.degree, self._hn.from_coords(coords), self.resolution)

    def is_zero_class(self, e: ExtCocycle) -> bool:
        return all(c == 0 for c in self.coords(e))

    def classes_equal(self, e1, e2) -> bool:
        return self.coords(e1) == self.coords(e2)


def ext_space(a, b, degree) -> ExtSpace:
    cache = a.alg.cache("ext")
    key = (a.uid, b.uid, degree)
    if key not in cache:
        cache[key] = ExtSpace(a, b, degree)
    return cache[key]


def ext_dim(a, b, degree) -> int:
    return ext_space(a, b, degree).dim


# -- classes of sequences, pushforward, pullback -------------------------------


def class_of_sequence(terms, maps, check_exact=True) -> ExtCocycle:
    """Yoneda class of an exact sequence 0 -> B -> E^1 ... E^d -> A -> 0.

    ``terms`` has d+2 entries, ``maps`` d+1.  The class lives in
    Ext^d(A, B) on the minimal resolution of A.
    """
    d = len(terms) - 2
    if d < 1 or len(maps) != d + 1:
        raise ValidationError("malformed sequence")
    if check_exact and not sequence_is_exact(terms, maps):
        raise NotExact("sequence is not exact")
    a = terms[-1]
    b = terms[0]
    res = minimal_resolution(a, d + 1)
    phi = factor_through(res.augmentation, maps[-1])
    if phi is None:
        raise VerificationFailed("cannot lift augmentation through an epi")
    for i in range(1, d + 1):
        target = res.differential(i).then(phi)
        phi = factor_through(target, maps[d - i])
        if phi is None:
            raise VerificationFailed("comparison lift failed on exact sequence")
    if not res.term(d + 1).is_zero():
        check = res.differential(d + 1).then(phi)
        if not check.is_zero():
            raise VerificationFailed("comparison lift is not a cocycle")
    return ExtCocycle(a, b, d, phi, res)


def sequence_is_exact(terms, maps) -> bool:
    """Exactness in mod Phi, with mono first map and epi last map."""
    for f, g in zip(maps, maps[1:]):
        if not f.then(g).is_zero():
            return False
    if not maps[0].is_mono() or not maps[-1].is_epi():
        return False
    for i in range(1, len(terms) - 1):
        fin, fout = maps[i - 1], maps[i]
        for v in terms[i].dims:
            if rank(fin.mats[v]) + rank(fout.mats[v]) != terms[i].dims[v]:
                return False
    return True


def push_class(f: ModMorphism, e: ExtCocycle) -> ExtCocycle:
    """Ext^d(a, f): postcompose the cocycle with f: b -> b'."""
    if f.source.uid != e.b.uid:
        raise ValidationError("push endpoint mismatch")
    return ExtCocycle(e.a, f.target, e.degree, e.cocycle.then(f), e.resolution)


def pull_class(e: ExtCocycle, g: ModMorphism) -> ExtCocycle:
    """Ext^d(g, b): comparison lift of g: a' -> a, then precompose."""
    if g.target.uid != e.a.uid:
        raise ValidationError("pull endpoint mismatch")
    res_a = e.resolution
    res_g = minimal_resolution(g.source, e.degree + 1)
    lift = factor_through(res_g.augmentation.then(g), res_a.augmentation)
    if lift is None:
        raise VerificationFailed("comparison lift of augmentations failed")
    for i in range(1, e.degree + 1):
        target = res_g.differential(i).then(lift)
        lift = factor_through(target, res_a.differential(i))
        if lift is None:
            raise VerificationFailed("comparison lift failed")
    return ExtCocycle(g.source, e.b, e.degree, lift.then(e.cocycle), res_g)


# -- stable endomorphism ring ---------------------------------------------------


def projectively_trivial_ideal(x):
    """Row space (in End coordinates) of morphisms factoring through projectives."""
    alg = x.alg
    es = hom_space(x, x)
    rows = []
    for v in alg.quiver.vertices:
        pv = alg.projective_at(v)
        to_p = hom_basis(x, pv)
        from_p = hom_basis(pv, x)
        for f in to_p:
            for g in from_p:
                rows.append(es.coords(f.then(g)))
    fld = alg.field
    if not rows:
        return Matrix.zeros(0, es.dim, fld)
    return row_space_basis(Matrix(len(rows), es.dim, rows, fld))


def is_projective_module(m) -> bool:
    if m.total_dim == 0:
        return True
    return minimal_resolution(m, 1).is_projective_module()


def stable_end(x, seed=0):
    """(dimension of End/P(x), whether the quotient is a division ring)."""
    from .reps import indecomposable_summands

    es = hom_space(x, x)
    pid = projectively_trivial_ideal(x)
    stable_dim = es.dim - pid.rows
    if stable_dim == 0:
        return 0, False
    slots = indecomposable_summands(x, seed=seed)
    nonproj = [r for r, _ in slots if not is_projective_module(r)]
    if len(slots) == 1:
        rad = end_radical(x)
        return stable_dim, pid.rows == len(rad)
    if len(nonproj) != 1:
        # two non-projective summands give orthogonal idempotents mod P
        return stable_dim, False
    rad = end_radical(nonproj[0])
    sub_pid = projectively_trivial_ideal(nonproj[0])
    sub_dim = hom_space(nonproj[0], nonproj[0]).dim - sub_pid.rows
    return stable_dim, sub_pid.rows == len(rad) and sub_dim == stable_dim
