# %% [markdown]
# Block-sparse kernels: reduce-by-key, symmetric block storage and SpMV.

# %%
import numpy as np

from ipcsim.sparse import (BlockTripletStream, fast_hash_reduction, fast_segment_reduction, sort_and_canonicalize,
                           srbk_spmv)

# %%
# eight unit values in three runs, reduced with a lane group of width 4
O = np.array([0, 0, 0, 1, 1, 1, 2, 2])
print(fast_segment_reduction(O, np.ones(8), width=4, deterministic=True))

# %%
# element contributions arrive as (row, col, 3x3) triplets with duplicates and both triangles
rng = np.random.default_rng(7)
n = 6
rows = rng.integers(0, n, 40)
cols = rng.integers(0, n, 40)
tiles = rng.normal(size=(40, 3, 3))
tiles[rows == cols] += np.swapaxes(tiles[rows == cols], 1, 2)
stream = sort_and_canonicalize(BlockTripletStream.from_triplets(rows, cols, tiles))
A = fast_hash_reduction(stream, n)
print(f"{len(tiles)} triplets -> {len(A.rows)} stored upper blocks")

# %%
dense = np.zeros((3 * n, 3 * n))
for r, c, B in zip(rows, cols, tiles):
    if r == c:
        dense[3 * r:3 * r + 3, 3 * c:3 * c + 3] += B
    else:
        # an (r, c) tile and its transpose land on both sides of the diagonal
        dense[3 * r:3 * r + 3, 3 * c:3 * c + 3] += B
        dense[3 * c:3 * c + 3, 3 * r:3 * r + 3] += B.T
print("stored matrix matches dense assembly:", np.allclose(A.to_dense(), dense))

# %%
x = rng.normal(size=3 * n)
y = srbk_spmv(A, x, deterministic=True)
print("max |A x - dense x| =", np.abs(y - dense @ x).max())
