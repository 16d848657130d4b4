"""Combinatorial analysis of the transition matrix.

All functions accept either a MarkovCoding or a plain successor structure
(a sequence whose i-th entry lists the successors of state i), so imported
codings can be analysed without geometry attached.

Strict irreducibility means the matrix P is irreducible and P P^T is
irreducible as well.  The latter is equivalent to connectivity of the
graph joining two states when their rows share a column, which is how the
interval classes are computed; both routes are run and compared.
"""

def _successors(obj):
    if hasattr(obj, "successors"):
        return obj.successors
    return [tuple(row) for row in obj]


def strongly_connected_components(obj):
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    succ = _successors(obj)
    n = len(succ)
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    components = []
    counter = [0]

    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(succ[v])):
                w = succ[v][k]
                if index[w] is None:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
            work.pop()
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return components


def is_irreducible(obj):
    """Whether the transition graph is a single strongly connected component."""
    succ = _successors(obj)
    if any(len(row) == 0 for row in succ):
        return False
    return len(strongly_connected_components(succ)) == 1


def interval_classes(obj):
    """Partition of the states by the transitive closure of sharing a column.

    Two states are joined when their successor sets intersect; classes are
    the connected components of that relation (the support of P P^T).
    """
    succ = _successors(obj)
    n = len(succ)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    owner = {}
    for i in range(n):
        for j in succ[i]:
            if j in owner:
                union(owner[j], i)
            else:
                owner[j] = i
    classes = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    return sorted(sorted(c) for c in classes.values())


def _shared_column_graph(succ):
    n = len(succ)
    sets = [frozenset(row) for row in succ]
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if sets[i] & sets[j]:
                adj[i].append(j)
                adj[j].append(i)
    return adj

def is_strictly_irreducible(obj):
    """P irreducible together with P P^T irreducible.

    Both available routes to the second condition (connectivity of the
    shared-column graph, single interval class) are computed and must
    agree; disagreement would indicate a bug, not a property of P.
    """
    succ = _successors(obj)
    if not is_irreducible(succ):
        return False
    classes = interval_classes(succ)
    adj = _shared_column_graph(succ)
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    connected = len(seen) == len(succ)
    if connected != (len(classes) == 1):
        raise AssertionError(
            "shared-column connectivity and interval classes disagree"
        )
    return connected


def sequence_count(obj, n):
    """Number W_n of admissible symbol sequences of length n, exactly."""
    succ = _successors(obj)
    if n < 1:
        raise ValueError("sequence length must be positive")
    vec = [1] * len(succ)
    for _ in range(n - 1):
        vec = [sum(vec[j] for j in row) for row in succ]
    return sum(vec)


def sequence_counts(obj, n_max):
    """The list [W_1, ..., W_n_max], exactly."""
    succ = _successors(obj)
    vec = [1] * len(succ)
    out = [sum(vec)]
    for _ in range(n_max - 1):
        vec = [sum(vec[j] for j in row) for row in succ]
        out.append(sum(vec))
    return out


def perron_eigenvalue(obj, iterations=200):
    """Spectral radius of P by power iteration on the all-ones vector."""
    succ = _successors(obj)
    vec = [1.0] * len(succ)
    lam = 0.0
    for _ in range(iterations):
        new = [float(sum(vec[j] for j in row)) for row in succ]
        norm = max(new)
        if norm == 0.0:
            return 0.0
        lam = sum(a * b for a, b in zip(new, vec)) / sum(a * a for a in vec)
        vec = [x / norm for x in new]
    return lam


def covering_constant(obj):
    """Smallest K with paths of length <= K between all ordered state pairs.

    Returns None when some pair is never connected (reducible matrix).
    """
    succ = _successors(obj)
    n = len(succ)
    worst = 0
    for s in range(n):
        # shortest path of length >= 1 from s to each target
        dist = {}
        frontier = [s]
        steps = 0
        while frontier and len(dist) < n:
            steps += 1
            nxt = []
            for v in frontier:
                for w in succ[v]:
                    if w not in dist:
                        dist[w] = steps
                        nxt.append(w)
            frontier = nxt
        if len(dist) < n:
            return None
        worst = max(worst, max(dist.values()))
    return worst


def double_cover_check(obj, family):
    """Covering-and-chaining test for a family of single states J_0..J_m.

    True iff (i) the union of the rows of the family members covers every
    column, and (ii) the rows of consecutive members intersect.  When both
    hold every state is equivalent to some J_i and the J_i chain together,
    so a single interval class exists; this only follows when each member
    is one state, so set-valued members are rejected (singletons are
    unwrapped for convenience).
    """
    succ = _successors(obj)
    n = len(succ)
    members = []
    for member in family:
        if not isinstance(member, int):
            unpacked = tuple(member)
            if len(unpacked) != 1:
                raise ValueError("family members must be single states")
            member = unpacked[0]
        members.append(member)
    images = [set(succ[i]) for i in members]
    covered = set().union(*images) if images else set()
    if covered != set(range(n)):
        return False
    for a, b in zip(images, images[1:]):
        if not a & b:
            return False
    return True
