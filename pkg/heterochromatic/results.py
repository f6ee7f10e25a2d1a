"""
    Module that defines the `VerifyReport` class
"""

from collections.abc import Collection
from typing import Any, Dict, Iterator, List, NamedTuple


class Counterexample(NamedTuple):
    """
        A failed check

        ``confirmed`` records whether the independent brute-force oracle
        agreed that the check really fails.
    """

    payload: Dict[str, Any]
    confirmed: bool


class InstanceRecord(NamedTuple):
    descriptor: str
    attempted: int
    passed: int
    counterexamples: List[Counterexample]
    wall_time: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "descriptor": self.descriptor,
            "attempted": self.attempted,
            "passed": self.passed,
            "counterexamples": [
                {"payload": c.payload, "confirmed": c.confirmed} for c in self.counterexamples
            ],
            "wall_time": self.wall_time,
        }


class VerifyReport(Collection):
    """
        The outcome of a verification suite, one record per instance

        Parameters
        ----------
        suite : str
            Name of the suite that was run
        records : List[InstanceRecord]
            Per-instance results, in instance order
        seeds : List[int]
            Seeds used for the instances, aligned with ``records``

        Raises
        ------
        ValueError
            If a record reports failures without a counterexample, or a
            counterexample without a failure.
    """

    def __init__(self, suite: str, records: List[InstanceRecord], seeds: List[int]) -> None:
        self.suite = suite
        self.records = records
        self.seeds = seeds
        if not self._check_consistency():
            raise ValueError("Inconsistent report passed")

    def _check_consistency(self) -> bool:
        if len(self.records) != len(self.seeds):
            return False
        for record in self:
            if not 0 <= record.passed <= record.attempted:
                return False
            if bool(record.counterexamples) != (record.passed < record.attempted):
                return False
        return True

    def __repr__(self) -> str:
        summary = f"<VerifyReport suite={self.suite} instances={len(self)} "
        summary = summary + f"passed={self.passed}/{self.attempted}>"
        return summary

    def __str__(self) -> str:
        return self.__repr__()

    def __iter__(self) -> Iterator[InstanceRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, ind: int) -> bool:
        return 0 <= ind < len(self)

    def __getitem__(self, ind: int) -> InstanceRecord:
        if ind in self:
            return self.records[ind]
        raise IndexError(f"{ind} out of bounds")

    @property
    def attempted(self) -> int:
        return sum(record.attempted for record in self)

    @property
    def passed(self) -> int:
        return sum(record.passed for record in self)

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    @property
    def counterexamples(self) -> List[Counterexample]:
        return [c for record in self for c in record.counterexamples]

    @property
    def confirmed(self) -> List[Counterexample]:
        """ Counterexamples that the brute-force oracle agreed with """
        return [c for c in self.counterexamples if c.confirmed]

    @property
    def unconfirmed(self) -> List[Counterexample]:
        """ Failed checks that the brute-force oracle did not reproduce """
        return [c for c in self.counterexamples if not c.confirmed]

    @property
    def wall_time(self) -> float:
        return sum(record.wall_time for record in self)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "attempted": self.attempted,
            "passed": self.passed,
            "ok": self.ok,
            "confirmed": len(self.confirmed),
            "unconfirmed": len(self.unconfirmed),
            "wall_time": self.wall_time,
            "seeds": [int(seed) for seed in self.seeds],
            "instances": [record.to_dict() for record in self],
        }
