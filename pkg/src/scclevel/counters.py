from dataclasses import asdict, dataclass


@dataclass
class OpCounters:
    """Operation tallies for one solve run.

    ``unions_performed`` counts effective unions only; a union whose
    arguments already share a root is not counted.
    """

    find_link_traversals: int = 0
    unions_performed: int = 0
    merge_checks: int = 0
    dfs_pushes: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)
