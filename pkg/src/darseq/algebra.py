"""Quivers, admissible relations and finite-dimensional path algebra quotients.

An algebra presentation computes a k-basis of residue paths for kQ/I by
breadth-first path enumeration with linear reduction at each length.
Relations must be length-homogeneous (every path in one relation has the
same length); that covers zero relations and commutativity relations, the
admissible ideals this artifact works with.
"""

from __future__ import annotations

from .errors import InfiniteDimensional, ValidationError
from .linalg import FieldSpec, Matrix, rref

DEFAULT_PATH_BOUND = 32


class Quiver:
    """A finite quiver: named vertices and named arrows between them."""

    def __init__(self, vertices, arrows):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex names")
        vset = set(self.vertices)
        self.arrows = []
        seen = set()
        for name, src, tgt in arrows:
            name, src, tgt = str(name), str(src), str(tgt)
            if name in seen:
                raise ValidationError(f"duplicate arrow name {name!r}")
            if src not in vset or tgt not in vset:
                raise ValidationError(f"arrow {name!r} has unknown endpoint")
            seen.add(name)
            self.arrows.append((name, src, tgt))
        self.source = {a: s for a, s, _ in self.arrows}
        self.target = {a: t for a, _, t in self.arrows}
        self.arrows_from = {v: [] for v in self.vertices}
        for a, s, _ in self.arrows:
            self.arrows_from[s].append(a)

    def arrow_names(self):
        return [a for a, _, _ in self.arrows]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [(a, t, s) for a, s, t in self.arrows])

    def path_source(self, path: tuple, at: str | None = None) -> str:
        return self.source[path[0]] if path else at

    def path_target(self, path: tuple, at: str | None = None) -> str:
        return self.target[path[-1]] if path else at


class Relation:
    """A k-linear combination of parallel paths of equal length >= 2.

    Paths are tuples of arrow names, composed left to right.
    """

    def __init__(self, terms, quiver: Quiver, field: FieldSpec):
        if not terms:
            raise ValidationError("empty relation")
        self.terms = []
        src = tgt = length = None
        for coeff, path in terms:
            path = tuple(path)
            if len(path) < 2:
                raise ValidationError("relation path shorter than 2 (not admissible)")
            for x, y in zip(path, path[1:]):
                if quiver.target[x] != quiver.source[y]:
                    raise ValidationError(f"path {'.'.join(path)} not composable")
            s, t = quiver.source[path[0]], quiver.target[path[-1]]
            if src is None:
                src, tgt, length = s, t, len(path)
            elif (s, t) != (src, tgt):
                raise ValidationError("relation paths not parallel")
            elif len(path) != length:
                raise ValidationError(
                    "relation mixes path lengths (only homogeneous relations supported)"
                )
            self.terms.append((field.of(coeff), path))
        self.source, self.target, self.length = src, tgt, length


class AlgebraPresentation:
    """The bound quiver algebra kQ/I with a computed path basis.

    ``basis`` lists residue paths; a path is a tuple of arrow names and the
    empty-path at vertex v is represented as ``("e", v)`` marker-free: we
    encode trivial paths as ``(v,)``-keyed entries in ``trivial``.
    Internally every path is a tuple of arrow names together with its
    source vertex (needed for empty paths).
    """

    _uid_counter = [0]

    def __init__(self, field, quiver, relations, path_bound=DEFAULT_PATH_BOUND):
        self.field = field
        self.quiver = quiver
        self.relations = relations
        self.path_bound = path_bound
        self._opposite = None
        self._caches = {}
        AlgebraPresentation._uid_counter[0] += 1
        self.uid = AlgebraPresentation._uid_counter[0]
        self._compute_basis()

    # -- basis computation ------------------------------------------------

    def _compute_basis(self):
        q = self.quiver
        f = self.field
        # basis[L] = ordered list of basis paths of length L (tuples of arrows)
        # reduction[path] = dict basis_path -> coeff, for every enumerated path
        self.reduction = {}
        trivial = [("", v) for v in q.vertices]
        basis_by_len = [list(trivial)]
        for p in trivial:
            self.reduction[p] = {p: f.one()}
        rels_by_len = {}
        for r in self.relations:
            rels_by_len.setdefault(r.length, []).append(r)

        prev_paths = trivial
        length = 0
        while prev_paths:
            length += 1
            if length > self.path_bound:
                raise InfiniteDimensional(
                    f"path enumeration alive at length {self.path_bound}"
                )
            # raw paths of this length extend raw surviving paths of previous
            paths = []
            for p in prev_paths:
                at = self._path_target(p)
                for a in q.arrows_from[at]:
                    paths.append(self._extend(p, a))
            if not paths:
                break
            index = {p: i for i, p in enumerate(paths)}
            # ideal component at this length: u * relation * w
            rows = []
            for rlen, rels in rels_by_len.items():
                if rlen > length:
                    continue
                for rel in rels:
                    for u in self._paths_into(rel.source, length - rlen):
                        ulen = self._plen(u)
                        wlen = length - rlen - ulen
                        if wlen < 0:
                            continue
                        for w in self._paths_out_of(rel.target, wlen):
                            row = [f.zero()] * len(paths)
                            ok = False
                            for coeff, rpath in rel.terms:
                                full = self._concat(u, rpath, w)
                                if full in index:
                                    row[index[full]] = f.add(
                                        row[index[full]], coeff
                                    )
                                    ok = True
                            if ok:
                                rows.append(row)
            if rows:
                mat = Matrix(len(rows), len(paths), rows, f)
                ech, pivots, _ = rref(mat)
                pivset = set(pivots)
                survivors = [p for i, p in enumerate(paths) if i not in pivset]
                for p in survivors:
                    self.reduction[p] = {p: f.one()}
                for r, c in enumerate(pivots):
                    expr = {}
                    for j in range(c + 1, len(paths)):
                        if j in pivset:
                            continue
                        v = ech.data[r][j]
                        if v != 0:
                            expr[paths[j]] = f.neg(v)
                    self.reduction[paths[c]] = expr
            else:
                survivors = list(paths)
                for p in survivors:
                    self.reduction[p] = {p: f.one()}
            basis_by_len.append(survivors)
            if not survivors:
                break
            prev_paths = paths  # extend raw paths, reduction applied lazily

        # order: by length, then enumeration order
        self.basis = []
        for level in basis_by_len:
            self.basis.extend(level)
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._basis_from = {}
        for p in self.basis:
            self._basis_from.setdefault(self._path_source(p), []).append(p)

    # path encoding: trivial path at v is ("", v); non-trivial is a tuple of
    # arrow names.
    @staticmethod
    def _plen(p):
        return 0 if p and p[0] == "" else len(p)

    def _path_source(self, p):
        if p and p[0] == "":
            return p[1]
        return self.quiver.source[p[0]]

    def _path_target(self, p):
        if p and p[0] == "":
            return p[1]
        return self.quiver.target[p[-1]]

    @staticmethod
    def _extend(p, arrow):
        if p and p[0] == "":
            return (arrow,)
        return p + (arrow,)

    def _concat(self, u, mid, w):
        parts = []
        for seg in (u, mid, w):
            if seg and seg[0] == "":
                continue
            parts.extend(seg)
        if not parts:
            raise ValidationError("empty concatenation")
        return tuple(parts)

    def _paths_into(self, vertex, max_len):
        """All raw paths of length <= max_len ending at vertex (0 allowed)."""
        out = [("", vertex)]
        frontier = [("", vertex)]
        for _ in range(max_len):
            nxt = []
            for p in frontier:
                src = self._path_source(p)
                for a, s, t in self.quiver.arrows:
                    if t == src:
                        q = (a,) + (() if p[0] == "" else p)
                        nxt.append(q)
            out.extend(nxt)
            frontier = nxt
        return out

    def _paths_out_of(self, vertex, exact_len):
        if exact_len == 0:
            return [("", vertex)]
        frontier = [("", vertex)]
        for _ in range(exact_len):
            nxt = []
            for p in frontier:
                at = self._path_target(p)
                for a in self.quiver.arrows_from[at]:
                    nxt.append(self._extend(p, a))
            frontier = nxt
        return frontier

    # -- residue arithmetic -------------------------------------------------

    def reduce_path(self, p):
        """Residue of a raw path as {basis_path: coeff}; {} if zero in kQ/I."""
        red = self.reduction.get(p)
        if red is not None:
            return dict(red)
        if self._plen(p) <= 1:
            raise ValidationError(f"unknown short path {p!r}")
        # beyond the enumerated lengths: peel the last arrow
        head, last = p[:-1], p[-1]
        base = self.reduce_path(head)
        f = self.field
        out = {}
        for bp, c in base.items():
            # bp is parallel to head, so bp+last is a genuine path; if it was
            # never enumerated it lies past the die-out length, hence is zero
            ered = self.reduction.get(self._extend(bp, last), {})
            for q, c2 in ered.items():
                v = f.add(out.get(q, f.zero()), f.mul(c, c2))
                if v == 0:
                    out.pop(q, None)
                else:
                    out[q] = v
        self.reduction[p] = dict(out)
        return out

    def multiply(self, elem_a: dict, elem_b: dict) -> dict:
        """Product of residues given as {basis_path: coeff} dicts."""
        f = self.field
        out = {}
        for p, cp in elem_a.items():
            for q, cq in elem_b.items():
                if self._path_target(p) != self._path_source(q):
                    continue
                if self._plen(p) == 0:
                    prod = {q: f.one()}
                elif self._plen(q) == 0:
                    prod = {p: f.one()}
                else:
                    prod = self.reduce_path(p + q)
                c = f.mul(cp, cq)
                for r, cr in prod.items():
                    v = f.add(out.get(r, f.zero()), f.mul(c, cr))
                    if v == 0:
                        out.pop(r, None)
                    else:
                        out[r] = v
        return out

    def basis_paths_from(self, v):
        return list(self._basis_from.get(str(v), []))

    def path_name(self, p) -> str:
        if p[0] == "":
            return f"e_{p[1]}"
        return ".".join(p)

    # -- derived algebras & modules -----------------------------------------

    def opposite(self) -> "AlgebraPresentation":
        """The opposite algebra; an involution on presentations."""
        if self._opposite is None:
            q = self.quiver.opposite()
            rels = [
                Relation(
                    [(c, tuple(reversed(path))) for c, path in r.terms],
                    q,
                    self.field,
                )
                for r in self.relations
            ]
            opp = AlgebraPresentation(self.field, q, rels, self.path_bound)
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def projective_at(self, v):
        from .reps import Representation

        v = str(v)
        if v not in set(self.quiver.vertices):
            raise ValidationError(f"unknown vertex {v}")
        paths = self.basis_paths_from(v)
        by_vertex = {}
        for p in paths:
            by_vertex.setdefault(self._path_target(p), []).append(p)
        dims = {w: len(by_vertex.get(w, [])) for w in self.quiver.vertices}
        maps = {}
        f = self.field
        for a, s, t in self.quiver.arrows:
            src_paths = by_vertex.get(s, [])
            tgt_paths = by_vertex.get(t, [])
            tgt_index = {p: i for i, p in enumerate(tgt_paths)}
            m = Matrix.zeros(len(src_paths), len(tgt_paths), f)
            for i, p in enumerate(src_paths):
                for q, c in self.reduce_path(self._extend(p, a)).items():
                    m.data[i][tgt_index[q]] = c
            maps[a] = m
        rep = Representation(self, dims, maps, name=f"P({v})")
        rep.projective_paths = {w: list(ps) for w, ps in by_vertex.items()}
        rep.projective_vertex = v
        return rep

    def injective_at(self, v):
        from .homology import duality_D

        inj = duality_D(self.opposite().projective_at(v))
        inj.name = f"I({v})"
        return inj

    def cache(self, key):
        return self._caches.setdefault(key, {})

    def __repr__(self):
        return f"AlgebraPresentation(dim={self.dim} over {self.field})"


def build_algebra(field, quiver, relations, path_bound=DEFAULT_PATH_BOUND):
    return AlgebraPresentation(field, quiver, relations, path_bound)
