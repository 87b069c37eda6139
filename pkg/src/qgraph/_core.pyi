import numpy as np

# mode: 0 = Classical (charge N), 1 = IdealQuantum (charge ceil(sqrt(N)))

def dijkstra_classic(W: np.ndarray, v0: int, mode: int) -> tuple[np.ndarray, ...]: ...
def dijkstra_no_update(W: np.ndarray, v0: int, mode: int) -> tuple[np.ndarray, ...]: ...
def dijkstra_periodic(W: np.ndarray, v0: int, k: int, mode: int) -> tuple[np.ndarray, ...]: ...
def prim_classic(W: np.ndarray, v0: int, mode: int) -> tuple[np.ndarray, ...]: ...
def prim_no_update(W: np.ndarray, v0: int, mode: int) -> tuple[np.ndarray, ...]: ...
def prim_periodic(W: np.ndarray, v0: int, k: int, mode: int) -> tuple[np.ndarray, ...]: ...
def bipartite_partial(A: np.ndarray, B: np.ndarray, v0: int, mode: int) -> tuple[np.ndarray, ...]: ...
