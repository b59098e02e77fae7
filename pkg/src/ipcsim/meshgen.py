"""Procedural meshes and topology helpers used by presets and tests."""
import numpy as np

# Freudenthal split of the unit cube into 6 tets sharing the (0, 7) diagonal.
_CUBE_TETS = np.array([
    [0, 1, 3, 7], [0, 1, 5, 7], [0, 2, 3, 7],
    [0, 2, 6, 7], [0, 4, 5, 7], [0, 4, 6, 7],
])


def box_tets(size=(1.0, 1.0, 1.0), res=(1, 1, 1), origin=(0.0, 0.0, 0.0)):
    """Structured tetrahedral box with ``res`` cells along each axis."""
    nx, ny, nz = res
    xs = np.linspace(0.0, size[0], nx + 1)
    ys = np.linspace(0.0, size[1], ny + 1)
    zs = np.linspace(0.0, size[2], nz + 1)
    X, Y, Z = np.meshgrid(xs, ys, zs, indexing="ij")
    verts = np.stack([X.ravel(), Y.ravel(), Z.ravel()], axis=1) + np.asarray(origin, float)

    def vid(i, j, k):
        return (i * (ny + 1) + j) * (nz + 1) + k

    i, j, k = np.meshgrid(np.arange(nx), np.arange(ny), np.arange(nz), indexing="ij")
    i, j, k = i.ravel(), j.ravel(), k.ravel()
    corners = np.stack([vid(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)) for c in range(8)], axis=1)
    tets = corners[:, _CUBE_TETS].reshape(-1, 4)
    return verts, orient_tets(verts, tets)


def orient_tets(verts, tets):
    tets = np.array(tets, dtype=np.int64)
    x = verts[tets]
    vol = np.einsum("ij,ij->i", np.cross(x[:, 1] - x[:, 0], x[:, 2] - x[:, 0]), x[:, 3] - x[:, 0])
    flip = vol < 0
    tets[flip, 2], tets[flip, 3] = tets[flip, 3], tets[flip, 2].copy()
    return tets


def single_tet():
    verts = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    return verts, np.array([[0, 1, 2, 3]])


def grid_triangles(size=(1.0, 1.0), res=(10, 10), plane="xy", origin=(0.0, 0.0, 0.0)):
    """Flat cloth grid of ``res`` quads, each split into two triangles."""
    nu, nv = res
    us = np.linspace(0.0, size[0], nu + 1)
    vs = np.linspace(0.0, size[1], nv + 1)
    U, V = np.meshgrid(us, vs, indexing="ij")
    U, V = U.ravel(), V.ravel()
    W = np.zeros_like(U)
    axes = {"xy": (U, V, W), "xz": (U, W, V), "yz": (W, U, V)}[plane]
    verts = np.stack(axes, axis=1) + np.asarray(origin, float)
    i, j = np.meshgrid(np.arange(nu), np.arange(nv), indexing="ij")
    i, j = i.ravel(), j.ravel()
    a = i * (nv + 1) + j
    b = (i + 1) * (nv + 1) + j
    c = (i + 1) * (nv + 1) + j + 1
    d = i * (nv + 1) + j + 1
    alt = ((i + j) % 2).astype(bool)
    t1 = np.where(alt[:, None], np.stack([a, b, d], 1), np.stack([a, b, c], 1))
    t2 = np.where(alt[:, None], np.stack([b, c, d], 1), np.stack([a, c, d], 1))
    tris = np.stack([t1, t2], axis=1).reshape(-1, 3)
    return verts, tris


def icosphere(radius=1.0, subdiv=2, center=(0.0, 0.0, 0.0)):
    t = (1.0 + 5 ** 0.5) / 2.0
    v = [[-1, t, 0], [1, t, 0], [-1, -t, 0], [1, -t, 0], [0, -1, t], [0, 1, t],
         [0, -1, -t], [0, 1, -t], [t, 0, -1], [t, 0, 1], [-t, 0, -1], [-t, 0, 1]]
    f = [[0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11], [1, 5, 9], [5, 11, 4],
         [11, 10, 2], [10, 7, 6], [7, 1, 8], [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8],
         [3, 8, 9], [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1]]
    verts = [np.array(p, float) / np.linalg.norm(p) for p in v]
    faces = f
    for _ in range(subdiv):
        cache = {}
        new = []

        def mid(a, b):
            key = (min(a, b), max(a, b))
            if key not in cache:
                m = verts[a] + verts[b]
                verts.append(m / np.linalg.norm(m))
                cache[key] = len(verts) - 1
            return cache[key]

        for a, b, c in faces:
            ab, bc, ca = mid(a, b), mid(b, c), mid(c, a)
            new += [[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]
        faces = new
    return np.array(verts) * radius + np.asarray(center, float), np.array(faces)


def boundary_faces(tets, verts=None):
    """Faces used by exactly one tet, oriented outward when ``verts`` is given."""
    tets = np.asarray(tets)
    local = np.array([[1, 2, 3, 0], [0, 3, 2, 1], [0, 1, 3, 2], [0, 2, 1, 3]])
    quads = tets[:, local].reshape(-1, 4)
    faces, opp = quads[:, :3], quads[:, 3]
    key = np.sort(faces, axis=1)
    _, inv, counts = np.unique(key, axis=0, return_inverse=True, return_counts=True)
    keep = counts[inv.ravel()] == 1
    faces, opp = faces[keep], opp[keep]
    if verts is not None:
        x = verts[faces]
        n = np.cross(x[:, 1] - x[:, 0], x[:, 2] - x[:, 0])
        inward = np.einsum("ij,ij->i", n, verts[opp] - x[:, 0]) > 0
        faces[inward] = faces[inward][:, [0, 2, 1]]
    return faces


def unique_edges(tris):
    tris = np.asarray(tris)
    if len(tris) == 0:
        return np.zeros((0, 2), dtype=np.int64)
    e = np.concatenate([tris[:, [0, 1]], tris[:, [1, 2]], tris[:, [2, 0]]])
    return np.unique(np.sort(e, axis=1), axis=0)


def hinges(tris):
    """Interior edges as (e0, e1, wing0, wing1) index quadruples."""
    tris = np.asarray(tris)
    if len(tris) == 0:
        return np.zeros((0, 4), dtype=np.int64)
    e = np.concatenate([tris[:, [0, 1]], tris[:, [1, 2]], tris[:, [2, 0]]])
    opp = np.concatenate([tris[:, 2], tris[:, 0], tris[:, 1]])
    key = np.sort(e, axis=1)
    order = np.lexsort((key[:, 1], key[:, 0]))
    key, e, opp = key[order], e[order], opp[order]
    same = np.all(key[1:] == key[:-1], axis=1)
    i = np.nonzero(same)[0]
    return np.stack([e[i, 0], e[i, 1], opp[i], opp[i + 1]], axis=1)


def tet_edges(tets):
    tets = np.asarray(tets)
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    e = np.concatenate([tets[:, list(p)] for p in pairs])
    return np.unique(np.sort(e, axis=1), axis=0)
