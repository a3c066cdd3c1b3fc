from typing import Optional, Sequence, Tuple

from ..codec import encode
from ..digraphs import converse
from ..event import Event, EventType
from ..hermitian import hermitian_char_poly
from ..models.digraph import Digraph
from ..models.structures import QuaternaryPartition, SwitchReport
from ..switching import bridge_digon_replace, digon_cut_replace, four_way_switch, local_reversal


class SwitchTools:
    """
    Spectrum-preserving operations on single digraphs.
    Each call publishes SWITCH_APPLIED on the facade's event bus.
    """

    OPERATIONS = ("converse", "local-reversal", "digon-cut", "four-way", "bridge")

    def __init__(self, hd):
        """
        Args:
            hd: HermDig instance to publish on
        """
        self.hd = hd

    def apply(
        self,
        X: Digraph,
        operation: str,
        vertices: Optional[Sequence[int]] = None,
        partition: Optional[QuaternaryPartition] = None,
        edge: Optional[Tuple[int, int]] = None,
    ) -> SwitchReport:
        """
        Apply a named operation and report the characteristic polynomial on both sides.

        Args:
            X: Input digraph
            operation: One of SwitchTools.OPERATIONS
            vertices: Vertex set S for local-reversal and digon-cut
            partition: Labels for four-way
            edge: The digon (u, v) for bridge; it becomes the arc u -> v

        Returns:
            SwitchReport with input and output hd6
        """
        if operation == "converse":
            Y, params = converse(X), {}
        elif operation in ("local-reversal", "digon-cut"):
            if vertices is None:
                raise ValueError(f"{operation} needs a vertex set")
            fn = local_reversal if operation == "local-reversal" else digon_cut_replace
            Y, params = fn(X, vertices), {"vertices": sorted(set(vertices))}
        elif operation == "four-way":
            if partition is None:
                raise ValueError("four-way needs a partition")
            Y, params = four_way_switch(X, partition), {"partition": str(partition)}
        elif operation == "bridge":
            if edge is None:
                raise ValueError("bridge needs an edge u,v")
            Y, params = bridge_digon_replace(X, *edge), {"edge": list(edge)}
        else:
            raise ValueError(f"unknown operation {operation!r}; known: {', '.join(self.OPERATIONS)}")

        report = SwitchReport(
            input_hd6=encode(X),
            output_hd6=encode(Y),
            operation=operation,
            parameters=params,
            charpoly_before=hermitian_char_poly(X),
            charpoly_after=hermitian_char_poly(Y),
        )
        self.hd.emit(Event(
            type=EventType.SWITCH_APPLIED,
            check=operation,
            hd6=report.input_hd6,
            detail=report.to_dict(),
        ))
        return report
