"""Exact counting of graph compositions via exponential generating functions."""

from graphcomp.bipartite import (
    ATable,
    a_table_recurrence,
    a_table_stirling,
    connected_bipartite_count,
    count_bipartite,
    count_bipartite_via_egf,
    rho_row,
)
from graphcomp.combinatorics import bell, binomial, factorial, stirling2
from graphcomp.egf import CapsMismatchError, Egf, product
from graphcomp.multipartite import PartSpec, count_multipartite, multipartite_edge_count
from graphcomp.oracle import (
    Graph,
    SetPartitionCursor,
    complete_bipartite,
    complete_multipartite,
    connected_bipartite_bruteforce,
    count_compositions,
    from_edge_list,
    is_connected,
)

__version__ = "0.1.0"
