"""Combinatorial Lagrangian-projection diagrams and their DGAs.

A diagram is stored combinatorially: a signed Gauss code (cyclic visit
sequence with over/under), per-crossing gradings, and per-edge turning data
in quarter turns.  The planar structure at a crossing is recovered from the
sign: listing the four edge-ends counterclockwise starting at the over-out
end gives

    sign +1:  over-out, under-out, over-in, under-in
    sign -1:  over-out, under-in, over-in, under-out

Quadrant i sits between ends i and i+1; its Reeb sign is positive exactly
when end i+1 lies on the under strand, so the canonical corner pattern is
always "+-+-" and the `corners` lines of a diagram file are validated
against it.

Disks for the differential are enumerated as boundary walks: starting at a
positive quadrant, the walk keeps the disk on its left, either passing a
crossing straight or turning through a quadrant (a convex corner), never
reusing a directed edge, and closing only when the accumulated turning
(edge quarter-turns plus one quarter per corner) equals a full +4.  Negative
corners are recorded counterclockwise from the positive corner.

Generated diagrams are built from explicit rectilinear curves (axis-parallel
closed polylines with an over/under rule per self-intersection); the
combinatorial data above is derived from the drawing, which also supports
the connected-sum splice.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .dga import DGA
from .freealg import Algebra, Poly

Point = Tuple[int, int]


class DiagramError(ValueError):
    pass


class DiskEnumerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Geometry:
    """Closed rectilinear curve with an over/under rule per self-intersection."""

    points: Tuple[Point, ...]
    over: Dict[Point, str]  # crossing point -> 'h' | 'v' (which strand is on top)
    names: Dict[Point, Tuple[str, int]]  # crossing point -> (name, grading)
    kink_points: Dict[str, Tuple[Point, ...]]  # kink name -> its loop waypoints
    splice_kink: Optional[str] = None  # kink consumed when this is the left summand


@dataclass(frozen=True)
class Disk:
    """One rigid polygon: positive corner chord plus the negative-corner word."""

    positive_corner: str
    word: Tuple[str, ...]


class LagrangianDiagram:
    def __init__(
        self,
        names: Sequence[str],
        gradings: Dict[str, int],
        visits: Sequence[Tuple[str, str]],  # (crossing name, 'o' | 'u'), cyclic
        signs: Dict[str, int],
        turning: Sequence[int],
        kinks: FrozenSet[str] = frozenset(),
        geometry: Optional[Geometry] = None,
    ):
        self.names = tuple(names)
        self.gradings = dict(gradings)
        self.visits = tuple(visits)
        self.signs = dict(signs)
        self.turning = tuple(turning)
        self.kinks = frozenset(kinks)
        self.geometry = geometry
        self._validate()
        self._build_ends()

    # -- validation and derived structure -------------------------------------

    def _validate(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise DiagramError("crossing names must be unique")
        if len(self.visits) != 2 * n:
            raise DiagramError("gauss code must visit each crossing twice")
        seen: Dict[str, List[str]] = {}
        for name, kind in self.visits:
            if name not in self.gradings:
                raise DiagramError(f"gauss code mentions unknown crossing {name}")
            if kind not in ("o", "u"):
                raise DiagramError(f"bad visit kind {kind!r}")
            seen.setdefault(name, []).append(kind)
        for name in self.names:
            if sorted(seen.get(name, [])) != ["o", "u"]:
                raise DiagramError(f"crossing {name} needs one over and one under visit")
            if self.signs.get(name) not in (1, -1):
                raise DiagramError(f"crossing {name} needs a sign")
        if len(self.turning) != 2 * n:
            raise DiagramError("need one turning entry per edge")

    def _build_ends(self):
        """Canonical end tables: per crossing the ccw (visit, in/out) list."""
        over_visit: Dict[str, int] = {}
        under_visit: Dict[str, int] = {}
        for idx, (name, kind) in enumerate(self.visits):
            if kind == "o":
                over_visit[name] = idx
            else:
                under_visit[name] = idx
        self.ends: Dict[str, Tuple[Tuple[int, str], ...]] = {}
        for name in self.names:
            ov, uv = over_visit[name], under_visit[name]
            if self.signs[name] == 1:
                ends = ((ov, "out"), (uv, "out"), (ov, "in"), (uv, "in"))
            else:
                ends = ((ov, "out"), (uv, "in"), (ov, "in"), (uv, "out"))
            self.ends[name] = ends
        self.over_visit = over_visit
        self.under_visit = under_visit

    @property
    def crossing_count(self) -> int:
        return len(self.names)

    def corner_pattern(self, name: str) -> str:
        """Reeb signs of the four quadrants in canonical ccw order."""
        ends = self.ends[name]
        under = self.under_visit[name]
        out = []
        for i in range(4):
            later_visit = ends[(i + 1) % 4][0]
            out.append("+" if later_visit == under else "-")
        return "".join(out)

    # -- classical invariants ---------------------------------------------------

    def tb(self) -> int:
        """Thurston-Bennequin number as the writhe of the projection."""
        return sum(self.signs[name] for name in self.names)

    def rotation(self) -> int:
        total = sum(self.turning)
        if total % 4:
            raise DiagramError(f"turning data sums to {total}, not a full turn count")
        return total // 4

    def census(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for name in self.names:
            out[self.gradings[name]] = out.get(self.gradings[name], 0) + 1
        return out

    # -- disk enumeration --------------------------------------------------------

    def _arrival(self, edge: int, direction: int) -> Tuple[str, int]:
        """Crossing and canonical end index reached by traversing (edge, dir)."""
        m = len(self.visits)
        if direction == 1:
            visit = (edge + 1) % m
            want = (visit, "in")
        else:
            visit = edge
            want = (visit, "out")
        name = self.visits[visit][0]
        for i, end in enumerate(self.ends[name]):
            if end == want:
                return name, i
        raise AssertionError("end table inconsistent")

    def _departure(self, name: str, end_index: int) -> Tuple[int, int]:
        """Directed edge leaving the crossing through the given end."""
        visit, io = self.ends[name][end_index]
        m = len(self.visits)
        if io == "in":
            return (visit - 1) % m, -1
        return visit, 1

    def _face_data(self):
        """Faces of the 4-valent planar map as orbits of the always-turn walk."""
        if hasattr(self, "_faces"):
            return self._faces
        m = len(self.visits)
        states = [(e, d) for e in range(m) for d in (1, -1)]
        face_id: Dict[Tuple[int, int], int] = {}
        turnings: List[int] = []
        for s in states:
            if s in face_id:
                continue
            fid = len(turnings)
            total = 0
            cur = s
            while cur not in face_id:
                face_id[cur] = fid
                edge, direction = cur
                total += direction * self.turning[edge] + 1
                crossing, end = self._arrival(edge, direction)
                cur = self._departure(crossing, (end - 1) % 4)
            turnings.append(total)
        outer = [i for i, t in enumerate(turnings) if t == -4]
        if len(outer) != 1 or any(
            t != 4 for i, t in enumerate(turnings) if i != outer[0]
        ):
            raise DiagramError(
                "turning data inconsistent with a planar drawing "
                f"(face turnings {turnings})"
            )
        self._faces = (face_id, len(turnings), outer[0])
        return self._faces

    def _face_of_quadrant(self, name: str, qidx: int) -> int:
        face_id, _, _ = self._face_data()
        return face_id[self._departure(name, qidx)]

    def _windings(self, used) -> Optional[List[int]]:
        """Winding number of a closed walk around each face (None if disconnected)."""
        face_id, nfaces, outer = self._face_data()
        m = len(self.visits)
        w: List[Optional[int]] = [None] * nfaces
        w[outer] = 0
        queue = [outer]
        while queue:
            f = queue.pop()
            for e in range(m):
                left, right = face_id[(e, 1)], face_id[(e, -1)]
                net = (1 if (e, 1) in used else 0) - (1 if (e, -1) in used else 0)
                if left == f and w[right] is None:
                    w[right] = w[f] - net
                    queue.append(right)
                elif right == f and w[left] is None:
                    w[left] = w[f] + net
                    queue.append(left)
        if any(v is None for v in w):
            raise DiagramError("face adjacency is disconnected")
        return [v for v in w]  # type: ignore[misc]

    def enumerate_disks(self) -> List[Disk]:
        """Boundary-immersed convex polygons with exactly one positive corner.

        A closed walk counts only if its total turning is one full
        counterclockwise turn and it winds non-negatively around every face
        while covering each of its corner quadrants.
        """
        disks: List[Disk] = []
        cap = 4 * self.crossing_count
        _, _, outer = self._face_data()
        for name in self.names:
            pattern = self.corner_pattern(name)
            for q in range(4):
                if pattern[q] != "+":
                    continue
                f0 = self._face_of_quadrant(name, q)
                if f0 == outer:
                    continue
                closing = (name, (q + 1) % 4)
                start = self._departure(name, q)
                self._walk(start, closing, cap, [], {start}, 1, [f0], disks, name)
        return disks

    def _accept(self, visited, covered_faces) -> bool:
        w = self._windings(visited)
        if any(v < 0 for v in w):
            return False
        return all(w[f] >= 1 for f in covered_faces)

    def _walk(self, state, closing, cap, word, visited, turning, covered, disks, pos_name):
        # `covered` lists faces the disk provably overlays: corner quadrants and
        # the quadrants left of every straight pass.  The unbounded face can
        # never be covered, which prunes outward-facing walks immediately.
        if len(visited) > cap:
            raise DiskEnumerationError(
                f"boundary walk exceeded the {cap}-step cap at {pos_name}"
            )
        _, _, outer = self._face_data()
        edge, direction = state
        turning = turning + direction * self.turning[edge]
        crossing, end = self._arrival(edge, direction)
        if (
            (crossing, end) == closing
            and turning == 4
            and self._accept(visited, covered)
        ):
            disks.append(Disk(pos_name, tuple(word)))
        # convex corner through the quadrant entered via its later end
        qidx = (end - 1) % 4
        corner_face = self._face_of_quadrant(crossing, qidx)
        if self.corner_pattern(crossing)[qidx] == "-" and corner_face != outer:
            nxt = self._departure(crossing, qidx)
            if nxt not in visited:
                word.append(crossing)
                visited.add(nxt)
                covered.append(corner_face)
                self._walk(
                    nxt, closing, cap, word, visited, turning + 1, covered,
                    disks, pos_name,
                )
                covered.pop()
                visited.discard(nxt)
                word.pop()
        # straight through the crossing: the disk overlays both left quadrants
        far_face = self._face_of_quadrant(crossing, (end + 2) % 4)
        if corner_face != outer and far_face != outer:
            nxt = self._departure(crossing, (end + 2) % 4)
            if nxt not in visited:
                visited.add(nxt)
                covered.append(corner_face)
                covered.append(far_face)
                self._walk(
                    nxt, closing, cap, word, visited, turning, covered, disks, pos_name
                )
                covered.pop()
                covered.pop()
                visited.discard(nxt)

    def dga(self) -> DGA:
        """Chekanov-Eliashberg DGA; raises if the result fails its own checks."""
        modulus = 2 * abs(self.rotation())
        alg = Algebra(
            [(name, self.gradings[name]) for name in self.names], modulus=modulus
        )
        diff: Dict[str, Poly] = {name: alg.zero() for name in self.names}
        for disk in self.enumerate_disks():
            diff[disk.positive_corner] = diff[disk.positive_corner] + alg.word(
                disk.word
            )
        out = DGA(alg, diff)
        report = out.check()
        if report:
            raise DiagramError(
                "diagram data produced an inconsistent DGA: " + "; ".join(report)
            )
        return out


# -- building diagrams from rectilinear drawings ---------------------------------


def _merge_collinear(points: Sequence[Point]) -> List[Point]:
    pts = list(points)
    out: List[Point] = []
    m = len(pts)
    for i, p in enumerate(pts):
        prev = pts[(i - 1) % m]
        nxt = pts[(i + 1) % m]
        if p == prev:
            continue
        d1 = (_sgn(p[0] - prev[0]), _sgn(p[1] - prev[1]))
        d2 = (_sgn(nxt[0] - p[0]), _sgn(nxt[1] - p[1]))
        if d1 != d2:
            out.append(p)
    return out


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def _turn(d1: Tuple[int, int], d2: Tuple[int, int]) -> int:
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    if cross == 0:
        raise DiagramError("degenerate turn in drawing")
    return 1 if cross > 0 else -1


def diagram_from_geometry(geom: Geometry) -> LagrangianDiagram:
    points = _merge_collinear(geom.points)
    m = len(points)
    if m < 4:
        raise DiagramError("drawing too small")
    segments = []
    for i in range(m):
        a, b = points[i], points[(i + 1) % m]
        if a[0] != b[0] and a[1] != b[1]:
            raise DiagramError(f"segment {a}->{b} is not axis-parallel")
        if a == b:
            raise DiagramError("zero-length segment")
        segments.append((a, b))

    def horizontal(seg):
        return seg[0][1] == seg[1][1]

    # locate crossings: interior intersections of horizontal x vertical segments
    crossings: Dict[Point, Dict[str, int]] = {}
    for i, si in enumerate(segments):
        for j, sj in enumerate(segments[i + 1 :], start=i + 1):
            hseg, vseg, hidx, vidx = None, None, None, None
            if horizontal(si) and not horizontal(sj):
                hseg, vseg, hidx, vidx = si, sj, i, j
            elif not horizontal(si) and horizontal(sj):
                hseg, vseg, hidx, vidx = sj, si, j, i
            else:
                _check_parallel_disjoint(si, sj)
                continue
            y = hseg[0][1]
            x = vseg[0][0]
            x_lo, x_hi = sorted((hseg[0][0], hseg[1][0]))
            y_lo, y_hi = sorted((vseg[0][1], vseg[1][1]))
            adjacent = j == i + 1 or (i == 0 and j == m - 1)
            if x_lo < x < x_hi and y_lo < y < y_hi:
                pt = (x, y)
                if pt in crossings:
                    raise DiagramError(f"triple point at {pt}")
                crossings[pt] = {"h": hidx, "v": vidx}
            elif not adjacent and (x_lo <= x <= x_hi and y_lo <= y <= y_hi):
                raise DiagramError(f"degenerate contact near ({x}, {y})")
    for pt in geom.over:
        if pt not in crossings:
            raise DiagramError(f"over/under rule given for non-crossing {pt}")
    for pt in crossings:
        if pt not in geom.over:
            raise DiagramError(f"missing over/under rule at {pt}")
        if pt not in geom.names:
            raise DiagramError(f"missing name for crossing at {pt}")

    # traversal: order the two passes of every crossing along the curve
    visits_raw: List[Tuple[Point, str]] = []  # (crossing point, 'h' | 'v')
    for i, (a, b) in enumerate(segments):
        on_seg = [
            pt
            for pt, info in crossings.items()
            if info["h" if horizontal((a, b)) else "v"] == i
        ]
        key = (lambda p: (p[0] - a[0]) * _sgn(b[0] - a[0])) if horizontal((a, b)) else (
            lambda p: (p[1] - a[1]) * _sgn(b[1] - a[1])
        )
        for pt in sorted(on_seg, key=key):
            visits_raw.append((pt, "h" if horizontal((a, b)) else "v"))

    def seg_dir(i):
        a, b = segments[i]
        return (_sgn(b[0] - a[0]), _sgn(b[1] - a[1]))

    names, gradings, signs = [], {}, {}
    seen_pts = []
    for pt, _ in visits_raw:
        if pt not in seen_pts:
            seen_pts.append(pt)
    for pt in seen_pts:
        info = crossings[pt]
        name, grading = geom.names[pt]
        names.append(name)
        gradings[name] = grading
        over_seg = info[geom.over[pt]]
        under_seg = info["v" if geom.over[pt] == "h" else "h"]
        od, ud = seg_dir(over_seg), seg_dir(under_seg)
        signs[name] = _turn(od, ud)  # det of (over, under) frame

    visit_list = [
        (geom.names[pt][0], "o" if geom.over[pt] == kind else "u")
        for pt, kind in visits_raw
    ]

    # per-edge turning: quarter turns at polyline corners between crossings
    nvis = len(visits_raw)
    turning = []
    for k in range(nvis):
        pt_a, kind_a = visits_raw[k]
        pt_b, kind_b = visits_raw[(k + 1) % nvis]
        seg_a = crossings[pt_a][kind_a]
        seg_b = crossings[pt_b][kind_b]
        total = 0
        i = seg_a
        while i != seg_b:
            j = (i + 1) % m
            total += _turn(seg_dir(i), seg_dir(j))
            i = j
        if seg_a == seg_b and _along(segments[seg_a], pt_b) <= _along(
            segments[seg_a], pt_a
        ):
            # wraps all the way around the curve
            total = sum(_turn(seg_dir(i), seg_dir((i + 1) % m)) for i in range(m))
        turning.append(total)
    kinks = frozenset(name for name in geom.kink_points if name in gradings)
    return LagrangianDiagram(
        names,
        gradings,
        visit_list,
        signs,
        turning,
        kinks=kinks,
        geometry=replace(geom, points=tuple(points)),
    )


def _along(seg, pt) -> int:
    (ax, ay), (bx, by) = seg
    if ay == by:
        return (pt[0] - ax) * _sgn(bx - ax)
    return (pt[1] - ay) * _sgn(by - ay)


def _check_parallel_disjoint(s1, s2):
    def horizontal(seg):
        return seg[0][1] == seg[1][1]

    if horizontal(s1) != horizontal(s2):
        return
    if horizontal(s1):
        if s1[0][1] != s2[0][1]:
            return
        a = sorted((s1[0][0], s1[1][0]))
        b = sorted((s2[0][0], s2[1][0]))
    else:
        if s1[0][0] != s2[0][0]:
            return
        a = sorted((s1[0][1], s1[1][1]))
        b = sorted((s2[0][1], s2[1][1]))
    if a[0] <= b[1] and b[0] <= a[1]:
        raise DiagramError(f"overlapping collinear segments {s1} / {s2}")


# -- generated families ------------------------------------------------------------


def t2k_diagram(k: int, names: Optional[Sequence[str]] = None) -> LagrangianDiagram:
    """Standard (2k+1)-crossing Lagrangian projection of the (2, 2k-1) torus family.

    2k-1 twist crossings of grading 0 plus two loop crossings of grading 1;
    rotation number 0 and tb = 2k-3.  k = 1 is the three-crossing unknot,
    k = 2 the five-crossing trefoil.
    """
    if k < 1:
        raise DiagramError("k must be at least 1")
    q = 2 * k - 1
    if names is None:
        names = [f"a{i}" for i in range(1, 2 * k + 2)]
    if len(names) != 2 * k + 1:
        raise DiagramError(f"need {2 * k + 1} names")
    ladder_names = list(names[:q])
    kink_top, kink_bot = names[q + 1], names[q]

    R = 4 * q + 2
    pts: List[Point] = [(0, 2)]
    # strand A: enters the ladder on the upper lane
    for i in range(1, q + 1):
        a = 4 * i - 3
        if i % 2 == 1:  # role U: dive
            pts += [(a + 2, 2), (a + 2, -2)]
        else:  # role L: rise through the middle
            pts += [(a + 1, -2), (a + 1, 0), (a + 3, 0), (a + 3, 2)]
    # bottom loop, bottom rail, bottom-left turnback
    pts += [(R + 4, -2), (R + 4, -1), (R + 2, -1), (R + 2, -4), (0, -4), (0, -2)]
    # strand B: enters the ladder on the lower lane
    for i in range(1, q + 1):
        a = 4 * i - 3
        if i % 2 == 1:  # role L
            pts += [(a + 1, -2), (a + 1, 0), (a + 3, 0), (a + 3, 2)]
        else:  # role U
            pts += [(a + 2, 2), (a + 2, -2)]
    # top loop, top rail (the closing segment drops back to the start)
    top_kink_pts = ((R + 4, 2), (R + 4, 1), (R + 2, 1), (R + 2, 4))
    pts += list(top_kink_pts) + [(0, 4)]

    over: Dict[Point, str] = {}
    cnames: Dict[Point, Tuple[str, int]] = {}
    for i in range(1, q + 1):
        pt = (4 * i - 1, 0)
        over[pt] = "v"
        cnames[pt] = (ladder_names[i - 1], 0)
    over[(R + 2, 2)] = "v"
    cnames[(R + 2, 2)] = (kink_top, 1)
    over[(R + 2, -2)] = "h"
    cnames[(R + 2, -2)] = (kink_bot, 1)

    geom = Geometry(
        points=tuple(pts),
        over=over,
        names=cnames,
        kink_points={
            kink_top: top_kink_pts,
            kink_bot: ((R + 4, -2), (R + 4, -1), (R + 2, -1), (R + 2, -4)),
        },
        splice_kink=kink_top,
    )
    return diagram_from_geometry(geom)


def unknot_kink_diagram(name: str = "a1", grading: int = 1) -> LagrangianDiagram:
    """Single-chord immersed-circle unknot projection (one loop crossing)."""
    pts = [(0, 2), (4, 2), (4, 1), (2, 1), (2, 4), (0, 4)]
    geom = Geometry(
        points=tuple(pts),
        over={(2, 2): "v"},
        names={(2, 2): (name, grading)},
        kink_points={name: ((4, 2), (4, 1), (2, 1), (2, 4))},
        splice_kink=name,
    )
    return diagram_from_geometry(geom)


def reverse(d: LagrangianDiagram) -> LagrangianDiagram:
    """Orientation reversal: rotation negates, tb is preserved."""
    if d.geometry is None:
        raise DiagramError("reverse needs construction geometry")
    geom = replace(d.geometry, points=tuple(reversed(d.geometry.points)))
    return diagram_from_geometry(geom)


def connected_sum(d1: LagrangianDiagram, d2: LagrangianDiagram) -> LagrangianDiagram:
    """Splice two drawn diagrams: one loop crossing of the left summand and the
    left turnback of the right summand are traded for a straight band, which
    realizes tb(d1 # d2) = tb(d1) + tb(d2) + 1 by construction."""
    g1, g2 = d1.geometry, d2.geometry
    if g1 is None or g2 is None:
        raise DiagramError("connected sum needs construction geometry on both sides")
    if g1.splice_kink is None or g1.splice_kink not in g1.kink_points:
        raise DiagramError("left summand has no splice loop")
    kink_pts = g1.kink_points[g1.splice_kink]
    pts1 = list(g1.points)
    try:
        i0 = pts1.index(kink_pts[0])
    except ValueError:
        raise DiagramError("splice loop not found in drawing") from None
    if tuple(pts1[i0 : i0 + 4]) != tuple(kink_pts):
        raise DiagramError("splice loop is not contiguous in the drawing")

    dx = max(x for x, _ in pts1) + 4 - min(x for x, _ in g2.points)
    shift = lambda p: (p[0] + dx, p[1])

    # rename second-summand crossings on collisions
    used = set(d1.names)
    rename: Dict[str, str] = {}
    for nm, _ in g2.names.values():
        new = nm
        while new in used:
            new = new + "_r"
        rename[nm] = new
        used.add(new)

    new_points = tuple(pts1[:i0]) + tuple(shift(p) for p in g2.points) + tuple(
        pts1[i0 + 4 :]
    )
    new_over = {pt: s for pt, s in g1.over.items() if g1.names[pt][0] != g1.splice_kink}
    new_names = {
        pt: ng for pt, ng in g1.names.items() if ng[0] != g1.splice_kink
    }
    for pt, s in g2.over.items():
        new_over[shift(pt)] = s
    for pt, (nm, gr) in g2.names.items():
        new_names[shift(pt)] = (rename[nm], gr)
    new_kinks = {
        nm: pts
        for nm, pts in g1.kink_points.items()
        if nm != g1.splice_kink
    }
    for nm, kpts in g2.kink_points.items():
        new_kinks[rename[nm]] = tuple(shift(p) for p in kpts)
    splice = rename.get(g2.splice_kink) if g2.splice_kink else None
    geom = Geometry(new_points, new_over, new_names, new_kinks, splice)
    return diagram_from_geometry(geom)


# -- torus-knot metadata (values from the negative-torus-knot family) --------------


def negative_torus_metadata(p: int, q: int) -> Dict[str, int]:
    """Classical data of the maximal Legendrian (p,-q) torus knot, p >= 3 odd, q > p."""
    if p < 3 or p % 2 == 0:
        raise DiagramError("p must be an odd integer >= 3")
    if q <= p:
        raise DiagramError("q must exceed p")
    return {
        "tb": -p * q,
        "rotation": q - p,
        "maslov": 2 * (q - p),
        "kauffman_mindeg_bound": -p * q + q - p,
    }


# -- text format --------------------------------------------------------------------


def loads_diagram(text: str) -> LagrangianDiagram:
    gradings: Dict[str, int] = {}
    order: List[str] = []
    visits: List[Tuple[str, str]] = []
    signs: Dict[str, int] = {}
    turning: Dict[int, int] = {}
    corners: Dict[str, str] = {}
    kinks: List[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        parts = rest.split()
        if head == "crossing":
            gradings[parts[0]] = int(parts[1])
            order.append(parts[0])
        elif head == "gauss":
            for tok in parts:
                name, _, tail = tok.partition(":")
                kind, sign_ch = tail[0], tail[1:]
                if kind not in "ou" or sign_ch not in ("+", "-"):
                    raise DiagramError(f"bad gauss token {tok!r}")
                visits.append((name, kind))
                sign = 1 if sign_ch == "+" else -1
                if signs.setdefault(name, sign) != sign:
                    raise DiagramError(f"inconsistent sign for {name}")
        elif head == "corners":
            corners[parts[0]] = parts[1]
        elif head == "turning":
            turning[int(parts[0])] = int(parts[1])
        elif head == "kink":
            kinks.append(parts[0])
        else:
            raise DiagramError(f"unknown directive {head!r}")
    turn_list = [turning.get(i, 0) for i in range(len(visits))]
    missing = set(range(len(visits))) - set(turning)
    if missing:
        raise DiagramError(f"missing turning data for edges {sorted(missing)}")
    d = LagrangianDiagram(order, gradings, visits, signs, turn_list, frozenset(kinks))
    for name, pattern in corners.items():
        want = d.corner_pattern(name)
        if pattern != want:
            raise DiagramError(
                f"corner pattern of {name} is {pattern}, inconsistent with "
                f"over/under data ({want})"
            )
    return d


def load_diagram(path) -> LagrangianDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_diagram(fh.read())


def dumps_diagram(d: LagrangianDiagram) -> str:
    lines = []
    for name in d.names:
        lines.append(f"crossing {name} {d.gradings[name]}")
    toks = []
    for name, kind in d.visits:
        sign_ch = "+" if d.signs[name] == 1 else "-"
        toks.append(f"{name}:{kind}{sign_ch}")
    lines.append("gauss " + " ".join(toks))
    for name in d.names:
        lines.append(f"corners {name} {d.corner_pattern(name)}")
    for i, t in enumerate(d.turning):
        lines.append(f"turning {i} {t}")
    for name in sorted(d.kinks):
        lines.append(f"kink {name}")
    return "\n".join(lines) + "\n"


def save_diagram(d: LagrangianDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_diagram(d))
