"""Sparse exact Gaussian elimination.

Vectors are dicts ``column -> nonzero scalar``.  Columns are ordered by a
key function and the pivot of a row is its column of *least* key, so with
words as columns and the identity key the pivot is the greatest word
present (its leading word).
"""
from __future__ import annotations

import heapq
from typing import Callable, Hashable, Optional


class Echelon:
    """A row echelon basis with distinct pivots.

    Every stored row is reduced against the rows present when it was
    inserted and normalized so its pivot coefficient is 1.  With
    ``track=True`` each row also remembers which inserted labels it is a
    combination of, so reduction can report coordinates.
    """

    def __init__(self, key: Optional[Callable] = None, track: bool = False):
        self.key = key
        self.track = track
        self.rows: dict = {}
        self.prov: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return self.rows.keys()

    def _k(self, col):
        return col if self.key is None else self.key(col)

    def copy(self) -> "Echelon":
        e = Echelon(self.key, self.track)
        e.rows = dict(self.rows)
        e.prov = dict(self.prov)
        return e

    def reduce(self, vec: dict, prov: Optional[dict] = None) -> tuple:
        """Reduce vec against the stored rows.

        Returns ``(remainder, prov)``.  When tracking, ``prov`` starts from the
        given label combination and has every subtracted row's labels
        subtracted along with it.
        """
        vec = dict(vec)
        prov = dict(prov) if prov is not None else ({} if self.track else None)
        rows = self.rows
        heap = [(self._k(c), c) for c in vec if c in rows]
        heapq.heapify(heap)
        while heap:
            _, col = heapq.heappop(heap)
            c = vec.get(col)
            if c is None:
                continue
            row = rows[col]
            for k, a in row.items():
                v = vec.get(k)
                if v is None:
                    vec[k] = -c * a
                    if k in rows:
                        heapq.heappush(heap, (self._k(k), k))
                else:
                    v = v - c * a
                    if v:
                        vec[k] = v
                    else:
                        del vec[k]
            if prov is not None:
                for lab, a in self.prov[col].items():
                    v = prov.get(lab)
                    v = -c * a if v is None else v - c * a
                    if v:
                        prov[lab] = v
                    else:
                        del prov[lab]
        return vec, prov

    def remainder(self, vec: dict) -> dict:
        return self.reduce(vec)[0]

    def contains(self, vec: dict) -> bool:
        return not self.remainder(vec)

    def insert(self, vec: dict, label: Hashable = None):
        """Add vec to the span; returns the new pivot or None if vec was dependent."""
        start = None
        if self.track and vec:
            start = {label: next(iter(vec.values())).field.one()}
        r, pv = self.reduce(vec, start)
        if not r:
            return None
        piv = min(r, key=self._k)
        inv = r[piv].inverse()
        self.rows[piv] = {k: a * inv for k, a in r.items()}
        if self.track:
            self.prov[piv] = {k: a * inv for k, a in pv.items()}
        return piv

    def coordinates(self, vec: dict) -> tuple:
        """(remainder, coefficients) with vec = remainder + sum coeff * label."""
        if not self.track:
            raise ValueError("coordinates need an echelon built with track=True")
        r, pv = self.reduce(vec, {})
        return r, {lab: -a for lab, a in pv.items()}

    def canonical(self) -> list:
        """Fully reduced rows, sorted by pivot: a normal form of the row space."""
        order = sorted(self.rows, key=self._k, reverse=True)
        done: dict = {}
        for piv in order:
            row = dict(self.rows[piv])
            for k in [k for k in row if k != piv and k in done]:
                c = row.pop(k)
                for kk, a in done[k].items():
                    if kk == k:
                        continue
                    v = row.get(kk)
                    v = -c * a if v is None else v - c * a
                    if v:
                        row[kk] = v
                    else:
                        row.pop(kk, None)
            done[piv] = row
        return [(p, sorted(done[p].items(), key=lambda kv: self._k(kv[0])))
                for p in sorted(done, key=self._k)]
