"""Array kernels over a CSR adjacency (``indptr``, ``indices``, ``weights``).

Positions are dense 0..n-1; mapping to node ids is the caller's business.
Every kernel here runs both under numba and as plain Python.
"""
import heapq

import numpy as np

from ._jit import njit


@njit
def bfs_hops(indptr, indices, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue[tail] = v
                tail += 1
    return dist


@njit
def dijkstra(indptr, indices, weights, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, np.inf)
    done = np.zeros(n, dtype=np.bool_)
    dist[source] = 0.0
    heap = [(0.0, source)]
    while len(heap) > 0:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            nd = d + weights[p]
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


@njit
def component_labels(indptr, indices):
    """Label each position with the smallest position in its component."""
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    for root in range(n):
        if labels[root] >= 0:
            continue
        labels[root] = root
        stack[0] = root
        top = 1
        while top > 0:
            top -= 1
            u = stack[top]
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if labels[v] < 0:
                    labels[v] = root
                    stack[top] = v
                    top += 1
    return labels


@njit
def largest_component_size(indptr, indices):
    n = indptr.shape[0] - 1
    if n == 0:
        return 0
    labels = component_labels(indptr, indices)
    counts = np.zeros(n, dtype=np.int64)
    for i in range(n):
        counts[labels[i]] += 1
    return counts.max()


@njit
def max_finite_hops(indptr, indices):
    n = indptr.shape[0] - 1
    best = 0
    for s in range(n):
        dist = bfs_hops(indptr, indices, s)
        for v in range(n):
            if dist[v] > best:
                best = dist[v]
    return best


@njit
def max_finite_distance(indptr, indices, weights):
    n = indptr.shape[0] - 1
    best = 0.0
    for s in range(n):
        dist = dijkstra(indptr, indices, weights, s)
        for v in range(n):
            if dist[v] < np.inf and dist[v] > best:
                best = dist[v]
    return best


@njit
def betweenness_hops(indptr, indices):
    """Brandes accumulation with BFS; unnormalized, unordered pairs."""
    n = indptr.shape[0] - 1
    bc = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    for s in range(n):
        dist[:] = -1
        sigma[:] = 0.0
        delta[:] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = order[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    order[tail] = v
                    tail += 1
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
        for k in range(tail - 1, 0, -1):
            w = order[k]
            coeff = (1.0 + delta[w]) / sigma[w]
            for p in range(indptr[w], indptr[w + 1]):
                v = indices[p]
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return bc / 2.0


@njit
def betweenness_weighted(indptr, indices, weights):
    """Brandes accumulation with Dijkstra; ties in path cost compared exactly."""
    n = indptr.shape[0] - 1
    bc = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    dist = np.empty(n)
    sigma = np.empty(n)
    delta = np.empty(n)
    done = np.empty(n, dtype=np.bool_)
    for s in range(n):
        dist[:] = np.inf
        sigma[:] = 0.0
        delta[:] = 0.0
        done[:] = False
        dist[s] = 0.0
        sigma[s] = 1.0
        count = 0
        heap = [(0.0, s)]
        while len(heap) > 0:
            d, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            order[count] = u
            count += 1
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                nd = d + weights[p]
                if nd < dist[v]:
                    dist[v] = nd
                    sigma[v] = sigma[u]
                    heapq.heappush(heap, (nd, v))
                elif nd == dist[v]:
                    sigma[v] += sigma[u]
        for k in range(count - 1, 0, -1):
            w = order[k]
            coeff = (1.0 + delta[w]) / sigma[w]
            for p in range(indptr[w], indptr[w + 1]):
                v = indices[p]
                if dist[v] + weights[p] == dist[w]:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return bc / 2.0


@njit
def collective_influence(indptr, indices, k, radius):
    """(k_i - 1) times the sum of (k_j - 1) over nodes exactly ``radius`` hops away."""
    n = indptr.shape[0] - 1
    out = np.zeros(n)
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for i in range(n):
        dist[i] = 0
        queue[0] = i
        head = 0
        tail = 1
        frontier = 0.0
        while head < tail:
            u = queue[head]
            head += 1
            if dist[u] == radius:
                frontier += k[u] - 1.0
                continue
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue[tail] = v
                    tail += 1
        out[i] = (k[i] - 1.0) * frontier
        for q in range(tail):
            dist[queue[q]] = -1
    return out


@njit
def katz_sweeps(indptr, indices, weights, alpha, beta, tol, max_sweeps):
    """Jacobi sweeps of x <- alpha*A x + beta starting from x = beta.

    Returns (x, sweeps, converged); converged means the largest per-node
    change of the final sweep fell below ``tol``.
    """
    n = indptr.shape[0] - 1
    x = np.full(n, beta)
    nxt = np.empty(n)
    for sweep in range(1, max_sweeps + 1):
        change = 0.0
        for i in range(n):
            acc = 0.0
            for p in range(indptr[i], indptr[i + 1]):
                acc += weights[p] * x[indices[p]]
            val = alpha * acc + beta
            diff = abs(val - x[i])
            if not diff <= change:  # also propagates nan
                change = diff
            nxt[i] = val
        x, nxt = nxt, x
        if change < tol:
            return x, sweep, True
        if not np.isfinite(change):
            return x, sweep, False
    return x, max_sweeps, False


@njit
def largest_eigenvalue(indptr, indices, weights, tol, max_iter):
    """Largest eigenvalue of a symmetric non-negative matrix by shifted power iteration.

    Stops when the residual ||Av - theta v|| drops to ``tol * theta``; for a
    symmetric matrix that bounds the eigenvalue error by the same amount.
    Returns (theta, converged).
    """
    n = indptr.shape[0] - 1
    if n == 0 or indptr[n] == 0:
        return 0.0, True
    rowsum = np.zeros(n)
    for i in range(n):
        for p in range(indptr[i], indptr[i + 1]):
            rowsum[i] += weights[p]
    # the shift keeps -lambda_max (bipartite graphs) from competing with lambda_max
    shift = 0.5 * rowsum.max()
    v = np.full(n, 1.0 / np.sqrt(n))
    av = np.empty(n)
    theta = 0.0
    for it in range(max_iter):
        for i in range(n):
            acc = 0.0
            for p in range(indptr[i], indptr[i + 1]):
                acc += weights[p] * v[indices[p]]
            av[i] = acc
        theta = 0.0
        for i in range(n):
            theta += v[i] * av[i]
        res = 0.0
        for i in range(n):
            r = av[i] - theta * v[i]
            res += r * r
        if np.sqrt(res) <= tol * theta:
            return theta, True
        norm = 0.0
        for i in range(n):
            av[i] += shift * v[i]
            norm += av[i] * av[i]
        norm = np.sqrt(norm)
        for i in range(n):
            v[i] = av[i] / norm
    return theta, False
