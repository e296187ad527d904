# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled restricted search kernel (same API as ``_xsearch_py``)."""

from libc.stdlib cimport malloc, free


cdef class Searcher:
    cdef int _n
    cdef int* _indptr
    cdef int* _indices
    cdef long long* _forb
    cdef long long* _seen
    cdef long long* _tgt
    cdef long long* _ilast
    cdef int* _parent
    cdef int* _queue
    cdef long long _epoch
    cdef long long _cbase

    def __cinit__(self, adj):
        cdef Py_ssize_t n = len(adj)
        cdef Py_ssize_t total = 0
        cdef Py_ssize_t i, k
        for row in adj:
            total += len(row)
        self._n = <int>n
        self._indptr = <int*>malloc((n + 1) * sizeof(int))
        self._indices = <int*>malloc((total + 1) * sizeof(int))
        self._forb = <long long*>malloc((n + 1) * sizeof(long long))
        self._seen = <long long*>malloc((n + 1) * sizeof(long long))
        self._tgt = <long long*>malloc((n + 1) * sizeof(long long))
        self._ilast = <long long*>malloc((n + 1) * sizeof(long long))
        self._parent = <int*>malloc((n + 1) * sizeof(int))
        self._queue = <int*>malloc((n + 1) * sizeof(int))
        if (self._indptr == NULL or self._indices == NULL or self._forb == NULL
                or self._seen == NULL or self._tgt == NULL or self._ilast == NULL
                or self._parent == NULL or self._queue == NULL):
            raise MemoryError()
        k = 0
        for i in range(n):
            self._indptr[i] = <int>k
            for w in adj[i]:
                self._indices[k] = <int>w
                k += 1
            self._forb[i] = 0
            self._seen[i] = 0
            self._tgt[i] = 0
            self._ilast[i] = -1
            self._parent[i] = -1
        self._indptr[n] = <int>k
        self._epoch = 0
        self._cbase = 0

    def __dealloc__(self):
        free(self._indptr)
        free(self._indices)
        free(self._forb)
        free(self._seen)
        free(self._tgt)
        free(self._ilast)
        free(self._parent)
        free(self._queue)

    @property
    def n(self):
        return self._n

    cdef long long _mark(self, forbidden) except -1:
        self._epoch += 1
        cdef long long ep = self._epoch
        cdef int x
        for x in forbidden:
            self._forb[x] = ep
        return ep

    def components(self, forbidden):
        cdef long long ep = self._mark(forbidden)
        cdef int n = self._n
        cdef int s, v, w, c = 0, head, tail, k
        cdef long long key
        cdef list comp = [-1] * n
        cdef list incidences = []
        cdef list inc
        for s in range(n):
            if self._forb[s] == ep or self._seen[s] == ep:
                continue
            key = self._cbase + c
            inc = []
            self._seen[s] = ep
            comp[s] = c
            self._queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                v = self._queue[head]
                head += 1
                for k in range(self._indptr[v], self._indptr[v + 1]):
                    w = self._indices[k]
                    if self._forb[w] == ep:
                        if self._ilast[w] != key:
                            self._ilast[w] = key
                            inc.append(w)
                    elif self._seen[w] != ep:
                        self._seen[w] = ep
                        comp[w] = c
                        self._queue[tail] = w
                        tail += 1
            inc.sort()
            incidences.append(inc)
            c += 1
        self._cbase += c
        return comp, incidences

    def bfs_path(self, sources, forbidden, targets):
        cdef long long ep = self._mark(forbidden)
        cdef int x, v, w, head = 0, tail = 0, k
        for x in targets:
            self._tgt[x] = ep
        for x in sources:
            if self._seen[x] != ep:
                self._seen[x] = ep
                self._parent[x] = -1
                self._queue[tail] = x
                tail += 1
        while head < tail:
            v = self._queue[head]
            head += 1
            for k in range(self._indptr[v], self._indptr[v + 1]):
                w = self._indices[k]
                if self._seen[w] == ep:
                    continue
                if self._tgt[w] == ep:
                    path = [w]
                    while v != -1:
                        path.append(v)
                        v = self._parent[v]
                    path.reverse()
                    return path
                if self._forb[w] == ep:
                    continue
                self._seen[w] = ep
                self._parent[w] = v
                self._queue[tail] = w
                tail += 1
        return None

    def bfs_tree(self, sources, forbidden):
        cdef long long ep = self._mark(forbidden)
        cdef int x, v, w, head = 0, tail = 0, k
        cdef list parent = [-2] * self._n
        for x in sources:
            if self._seen[x] != ep:
                self._seen[x] = ep
                parent[x] = -1
                self._queue[tail] = x
                tail += 1
        while head < tail:
            v = self._queue[head]
            head += 1
            for k in range(self._indptr[v], self._indptr[v + 1]):
                w = self._indices[k]
                if self._seen[w] == ep or self._forb[w] == ep:
                    continue
                self._seen[w] = ep
                parent[w] = v
                self._queue[tail] = w
                tail += 1
        return parent
