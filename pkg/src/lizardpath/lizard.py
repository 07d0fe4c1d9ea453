"""Priority structure backing the correction phase: the lizard entity.

Three linked systems share one set of items:

* a binary search tree over the distinct keys (one representative per
  key, called the agency),
* an ascending doubly-linked list (the ARA) threading the same agencies,
  giving O(1) access to the minimum and to in-order neighbors,
* a circular cousin list per agency holding the other items of equal key.

The ARA makes deletion constant-bounded: when a BST node with two
children goes away, its replacement is one ARA step to the right, never a
subtree descent.  There is no rebalancing; after the initial balanced
build the tree is treated as a random tree.

Every operation charges an instrumented cost (the number of structure
nodes it touches), accumulated in :class:`CostCounters`.  Membership via
``node in le`` is plain bookkeeping and charges nothing; the ``contains``
method is the charged structural inquiry.
"""

from __future__ import annotations

from dataclasses import dataclass


class DuplicateNodeError(ValueError):
    def __init__(self, node: int):
        super().__init__(f"node {node} is already stored")
        self.node = node


class MissingNodeError(KeyError):
    def __init__(self, node: int):
        super().__init__(f"node {node} is not stored")
        self.node = node


class EmptyStructureError(IndexError):
    def __init__(self):
        super().__init__("structure is empty")


@dataclass
class CostCounters:
    """Per-operation cost charges and the deletion tally.

    total_cost is the running sum of all charges; deletions counts
    removed items for delete calls and reaped minimum batches.
    """

    build: int = 0
    insert: int = 0
    delete: int = 0
    getmin: int = 0
    contains: int = 0
    deletions: int = 0

    @property
    def total_cost(self) -> int:
        return self.build + self.insert + self.delete + self.getmin + self.contains


class LizardItem:
    """One stored (node, key) pair with its three link systems.

    Only the agency of a key participates in BST and ARA links; cousins
    carry only the circular cousin-list links.
    """

    __slots__ = (
        "node", "key", "left", "right", "up",
        "prev", "next", "cl_prev", "cl_next", "is_agency",
    )

    def __init__(self, node: int, key: int):
        self.node = node
        self.key = key
        self.left: LizardItem | None = None
        self.right: LizardItem | None = None
        self.up: LizardItem | None = None  # BST parent
        self.prev: LizardItem | None = None  # ARA
        self.next: LizardItem | None = None
        self.cl_prev: LizardItem | None = None  # cousin circle
        self.cl_next: LizardItem | None = None
        self.is_agency = False

    def __repr__(self):
        tag = "agency" if self.is_agency else "cousin"
        return f"LizardItem(node={self.node}, key={self.key}, {tag})"


class LizardEntity:
    """The assembled priority structure with instrumented costs."""

    __slots__ = ("bst_root", "ara_min", "ara_max", "size", "counters", "_index")

    def __init__(self):
        self.bst_root: LizardItem | None = None
        self.ara_min: LizardItem | None = None
        self.ara_max: LizardItem | None = None
        self.size = 0
        self.counters = CostCounters()
        self._index: dict[int, LizardItem] = {}

    def __len__(self) -> int:
        return self.size

    def __contains__(self, node: int) -> bool:
        # uncharged O(1) bookkeeping test; see contains() for the charged inquiry
        return node in self._index

    def min_key(self) -> int:
        if self.ara_min is None:
            raise EmptyStructureError()
        return self.ara_min.key

    # -- construction ------------------------------------------------

    @classmethod
    def build(cls, items: list[tuple[int, int]]) -> LizardEntity:
        """Sort, group equal keys, thread the ARA, and pyramid the BST.

        Stable sorting keeps the first occurrence of each key as the
        agency.  Charge: |items| * ceil(log2 |items|) + |items|.
        """
        le = cls()
        k = len(items)
        if k == 0:
            return le
        index = le._index
        ordered = sorted(items, key=lambda t: t[1])
        agencies: list[LizardItem] = []
        for node, key in ordered:
            if node in index:
                raise DuplicateNodeError(node)
            item = LizardItem(node, key)
            index[node] = item
            if agencies and agencies[-1].key == key:
                _cl_append(agencies[-1], item)
            else:
                item.is_agency = True
                agencies.append(item)
        prev = agencies[0]
        for item in agencies[1:]:
            prev.next = item
            item.prev = prev
            prev = item
        le.ara_min = agencies[0]
        le.ara_max = agencies[-1]
        le.bst_root = _pyramid(agencies, 0, len(agencies), None)
        le.size = k
        le.counters.build += k * (k - 1).bit_length() + k
        return le

    # -- mutation ----------------------------------------------------

    def insert(self, node: int, key: int) -> None:
        """Place a new item; equal keys join the existing agency's circle.

        Charge: BST search-path length, plus one when a fresh agency is
        attached as a leaf.
        """
        if node in self._index:
            raise DuplicateNodeError(node)
        item = LizardItem(node, key)
        self._index[node] = item
        self.size += 1
        cur = self.bst_root
        if cur is None:
            item.is_agency = True
            self.bst_root = item
            self.ara_min = item
            self.ara_max = item
            self.counters.insert += 1
            return
        visited = 0
        while True:
            visited += 1
            ck = cur.key
            if key == ck:
                _cl_append(cur, item)
                self.counters.insert += visited
                return
            if key < ck:
                if cur.left is None:
                    cur.left = item
                    item.up = cur
                    item.is_agency = True
                    self._ara_link_before(cur, item)
                    self.counters.insert += visited + 1
                    return
                cur = cur.left
            else:
                if cur.right is None:
                    cur.right = item
                    item.up = cur
                    item.is_agency = True
                    self._ara_link_after(cur, item)
                    self.counters.insert += visited + 1
                    return
                cur = cur.right

    def delete(self, node: int) -> None:
        """Remove one item: cousin unlink, agency promotion, or BST excision.

        Charge 2 for a cousin, 4 for any agency; one deletion counted.
        """
        item = self._index.pop(node, None)
        if item is None:
            raise MissingNodeError(node)
        if not item.is_agency:
            _cl_remove_cousin(item)
            self.counters.delete += 2
        elif item.cl_next is not None:
            self._promote(item)
            self.counters.delete += 4
        else:
            self._excise_agency(item)
            self.counters.delete += 4
        self.size -= 1
        self.counters.deletions += 1

    def get_min_batch(self, mode: str = "repeat_delete") -> list[int]:
        """Remove and return every node holding the minimum key.

        repeat_delete reaps the cousin list one agency-promotion at a
        time (charge 2 per item, each counted as a deletion); cut_agency
        detaches the whole list by excising only its agency (charge 3,
        one deletion counted).  Both leave the identical structure.
        """
        if mode not in ("repeat_delete", "cut_agency"):
            raise ValueError(f"unknown reap mode {mode!r}")
        agency = self.ara_min
        if agency is None:
            raise EmptyStructureError()
        nodes = [agency.node]
        cousin = agency.cl_next
        while cousin is not None and cousin is not agency:
            nodes.append(cousin.node)
            cousin = cousin.cl_next
        kbatch = len(nodes)
        self._excise_agency(agency)
        index = self._index
        for n in nodes:
            del index[n]
        self.size -= kbatch
        if mode == "repeat_delete":
            self.counters.getmin += 2 * kbatch
            self.counters.deletions += kbatch
        else:
            self.counters.getmin += 3
            self.counters.deletions += 1
        return nodes

    def resort(self, node: int, new_key: int) -> None:
        """Re-key one item: delete then insert, both charged as usual."""
        if node not in self._index:
            raise MissingNodeError(node)
        self.delete(node)
        self.insert(node, new_key)

    def contains(self, node: int) -> bool:
        """Structural membership inquiry, charged like an insert search."""
        item = self._index.get(node)
        if item is None:
            return False
        key = item.key
        cur = self.bst_root
        visited = 0
        while cur is not None:
            visited += 1
            if key == cur.key:
                break
            cur = cur.left if key < cur.key else cur.right
        self.counters.contains += visited
        return True

    # -- link plumbing -----------------------------------------------

    def _ara_link_before(self, anchor: LizardItem, item: LizardItem) -> None:
        item.next = anchor
        item.prev = anchor.prev
        if anchor.prev is None:
            self.ara_min = item
        else:
            anchor.prev.next = item
        anchor.prev = item

    def _ara_link_after(self, anchor: LizardItem, item: LizardItem) -> None:
        item.prev = anchor
        item.next = anchor.next
        if anchor.next is None:
            self.ara_max = item
        else:
            anchor.next.prev = item
        anchor.next = item

    def _ara_unlink(self, item: LizardItem) -> None:
        if item.prev is None:
            self.ara_min = item.next
        else:
            item.prev.next = item.next
        if item.next is None:
            self.ara_max = item.prev
        else:
            item.next.prev = item.prev
        item.prev = None
        item.next = None

    def _promote(self, old: LizardItem) -> None:
        """Head cousin takes over the agency's tree and list position."""
        head = old.cl_next
        if head.cl_next is old:
            head.cl_next = None
            head.cl_prev = None
        else:
            tail = old.cl_prev
            head.cl_prev = tail
            tail.cl_next = head
        head.is_agency = True
        head.left = old.left
        head.right = old.right
        head.up = old.up
        if old.left is not None:
            old.left.up = head
        if old.right is not None:
            old.right.up = head
        if old.up is None:
            self.bst_root = head
        elif old.up.left is old:
            old.up.left = head
        else:
            old.up.right = head
        head.prev = old.prev
        head.next = old.next
        if old.prev is None:
            self.ara_min = head
        else:
            old.prev.next = head
        if old.next is None:
            self.ara_max = head
        else:
            old.next.prev = head
        _scrub(old)

    def _excise_agency(self, item: LizardItem) -> None:
        """Remove a cousin-free agency from both BST and ARA.

        The two-child replacement is item.next, one ARA step to the
        right, which keeps the whole removal constant-bounded.  BST
        surgery runs first because it reads that successor link.
        """
        if item.left is None:
            self._transplant(item, item.right)
        elif item.right is None:
            self._transplant(item, item.left)
        else:
            succ = item.next  # in-order successor, inside item's right subtree
            if succ.up is not item:
                self._transplant(succ, succ.right)
                succ.right = item.right
                succ.right.up = succ
            self._transplant(item, succ)
            succ.left = item.left
            succ.left.up = succ
        self._ara_unlink(item)
        _scrub(item)

    def _transplant(self, old: LizardItem, new: LizardItem | None) -> None:
        if old.up is None:
            self.bst_root = new
        elif old.up.left is old:
            old.up.left = new
        else:
            old.up.right = new
        if new is not None:
            new.up = old.up

    # -- inspection ---------------------------------------------------

    def agencies_in_order(self) -> list[LizardItem]:
        """In-order BST traversal (iterative)."""
        out: list[LizardItem] = []
        stack: list[LizardItem] = []
        cur = self.bst_root
        while cur is not None or stack:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            out.append(cur)
            cur = cur.right
        return out

    def bst_height(self) -> int:
        height = 0
        stack: list[tuple[LizardItem, int]] = []
        if self.bst_root is not None:
            stack.append((self.bst_root, 1))
        while stack:
            item, depth = stack.pop()
            if depth > height:
                height = depth
            if item.left is not None:
                stack.append((item.left, depth + 1))
            if item.right is not None:
                stack.append((item.right, depth + 1))
        return height


def _pyramid(agencies: list[LizardItem], lo: int, hi: int, up: LizardItem | None) -> LizardItem | None:
    """Balanced BST over agencies[lo:hi] by recursive midpoint."""
    if lo >= hi:
        return None
    mid = (lo + hi) // 2
    item = agencies[mid]
    item.up = up
    item.left = _pyramid(agencies, lo, mid, item)
    item.right = _pyramid(agencies, mid + 1, hi, item)
    return item


def _cl_append(agency: LizardItem, item: LizardItem) -> None:
    """FIFO append into the agency's circular cousin list."""
    if agency.cl_next is None:
        agency.cl_next = item
        agency.cl_prev = item
        item.cl_prev = agency
        item.cl_next = agency
    else:
        tail = agency.cl_prev
        tail.cl_next = item
        item.cl_prev = tail
        item.cl_next = agency
        agency.cl_prev = item


def _cl_remove_cousin(item: LizardItem) -> None:
    before = item.cl_prev
    after = item.cl_next
    if before is after:  # lone cousin: the circle collapses
        before.cl_next = None
        before.cl_prev = None
    else:
        before.cl_next = after
        after.cl_prev = before
    item.cl_prev = None
    item.cl_next = None


def _scrub(item: LizardItem) -> None:
    item.left = None
    item.right = None
    item.up = None
    item.prev = None
    item.next = None
    item.cl_next = None
    item.cl_prev = None


def verify_structure(le: LizardEntity) -> str | None:
    """Walk all three systems and report the first invariant violation.

    Returns None when the structure is sound.  Test-only helper; cost is
    linear in the item count and nothing is charged.
    """
    if le.size == 0:
        if le.bst_root is not None or le.ara_min is not None or le.ara_max is not None:
            return "empty structure retains dangling entry pointers"
        if le._index:
            return "empty structure retains index entries"
        return None
    if le.bst_root is None or le.ara_min is None or le.ara_max is None:
        return "nonempty structure lost an entry pointer"
    if le.bst_root.up is not None:
        return "root has a parent link"

    in_order = le.agencies_in_order()
    for item in in_order:
        if not item.is_agency:
            return f"BST holds non-agency item {item!r}"
        if item.left is not None and item.left.up is not item:
            return f"left child of {item!r} has a bad parent link"
        if item.right is not None and item.right.up is not item:
            return f"right child of {item!r} has a bad parent link"
    for a, b in zip(in_order, in_order[1:]):
        if a.key >= b.key:
            return f"BST order violated: {a.key} before {b.key}"

    # ARA must thread exactly the in-order agency sequence
    chain: list[LizardItem] = []
    item = le.ara_min
    if item.prev is not None:
        return "ara_min has a predecessor"
    while item is not None:
        chain.append(item)
        if len(chain) > le.size:
            return "ARA chain longer than item count (cycle?)"
        if item.next is not None and item.next.prev is not item:
            return f"ARA backlink broken after {item!r}"
        item = item.next
    if chain[-1] is not le.ara_max:
        return "ARA chain does not end at ara_max"
    if len(chain) != len(in_order) or any(x is not y for x, y in zip(chain, in_order)):
        return "ARA sequence differs from BST in-order sequence"

    total = 0
    for agency in in_order:
        total += 1
        cousin = agency.cl_next
        if cousin is None:
            if agency.cl_prev is not None:
                return f"{agency!r} has a tail link but no cousins"
            continue
        seen = 0
        cur = cousin
        while cur is not agency:
            if cur is None:
                return f"cousin circle of {agency!r} is broken"
            if cur.is_agency:
                return f"cousin circle of {agency!r} contains an agency"
            if cur.key != agency.key:
                return f"cousin {cur!r} key differs from agency key {agency.key}"
            if cur.left or cur.right or cur.up or cur.prev or cur.next:
                return f"cousin {cur!r} carries tree or list links"
            nxt = cur.cl_next
            if nxt is None or nxt.cl_prev is not cur:
                return f"cousin circle backlink broken at {cur!r}"
            seen += 1
            if seen > le.size:
                return f"cousin circle of {agency!r} does not close"
            cur = nxt
        if agency.cl_prev is None or agency.cl_prev.cl_next is not agency:
            return f"tail link of {agency!r} is inconsistent"
        total += seen

    if total != le.size:
        return f"item walk found {total} items, size says {le.size}"
    if len(le._index) != le.size:
        return f"index holds {len(le._index)} entries, size says {le.size}"
    for node, item in le._index.items():
        if item.node != node:
            return f"index entry {node} points at item of node {item.node}"
    return None
