#
# Parity scan over monomial ideals
#
import time as ticker

import numpy as np
import pandas as pd
import ray
from tqdm import tqdm

import hilbtan as ht


def scan_staircase(ring, n, cells):
    """
    Tangent dimension of one monomial ideal by both solvers

    Returns:
        dict:
            One parity-scan row.

    """
    I = ht.staircase_ideal(ring, cells)
    graded = ht.GradedHomSolver(I).run(progress=False).total
    taylor = ht.hom_dim_taylor(I)
    return {
        "n": n,
        "generators": ", ".join(str(g) for g in I.generators),
        "graded": graded,
        "taylor": taylor,
        "agree": graded == taylor,
        "parity_ok": (graded - n) % 2 == 0,
    }


class GenericActor:
    def __init__(self):
        pass

    def setup(self, variables):
        self.ring = ht.RingContext(variables)

    def scan(self, jobs):
        return [scan_staircase(self.ring, n, cells) for n, cells in jobs]


@ray.remote(num_cpus=1)
class RayActor(GenericActor):
    def __init__(self, **kwargs):
        super().__init__(**kwargs)


class GenericManager:
    def __init__(self):
        self.actors = []

    def scan(self, n_max, nproc=1, variables=("x", "y", "z")):
        """
        Scan every monomial ideal of colength at most n_max

        Args:
            n_max (int):
                Largest colength.
            nproc (int):
                Number of workers.
            variables (tuple):
                Variable names of the three-variable ring.

        Returns:
            pandas.DataFrame:
                One row per ideal, in scan order.

        """
        if n_max < 1:
            raise ValueError("n_max must be at least 1")
        self.jobs = [
            (n, cells)
            for n in range(1, n_max + 1)
            for cells in ht.enumerate_staircases(n, len(variables))
        ]
        ht.logger.notice(f"Scanning {len(self.jobs)} monomial ideals up to colength {n_max}")
        tic = ticker.time()
        try:
            self.split_jobs(nproc)
            self.setup_actors(nproc, variables)
            rows = self.run_actors()
        finally:
            self.cleanup()
        toc = ticker.time()
        ht.logger.notice(f"Scan finished in {np.around(toc - tic, 3)}s")
        return pd.DataFrame(rows)

    def split_jobs(self, nproc):
        pass

    def setup_actors(self, nproc, variables):
        pass

    def run_actors(self):
        pass

    def cleanup(self):
        pass


class SerialScanManager(GenericManager):
    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def split_jobs(self, nproc):
        self.chunks = [self.jobs]

    def setup_actors(self, nproc, variables):
        self.actors = [GenericActor()]
        self.actors[0].setup(variables)

    def run_actors(self):
        rows = []
        with tqdm(total=len(self.jobs), desc="Scanning ideals", disable=None) as pbar:
            for job in self.jobs:
                rows.extend(self.actors[0].scan([job]))
                pbar.update(1)
        return rows


class RayScanManager(GenericManager):
    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        ht.logger.notice("Ray initialization started")
        ray.init()
        ht.logger.notice("Ray initialization complete")

    def split_jobs(self, nproc):
        # contiguous chunks keep the merged rows in scan order
        split_index = np.array_split(np.arange(len(self.jobs)), nproc)
        self.chunks = [[self.jobs[i] for i in s] for s in split_index if len(s)]

    def setup_actors(self, nproc, variables):
        tic = ticker.time()
        self.actors = [RayActor.remote() for _ in self.chunks]
        futures = [a.setup.remote(variables) for a in self.actors]
        _ = [ray.get(f) for f in futures]
        toc = ticker.time()
        ht.logger.notice(
            "Ray actors setup in time " + str(np.around(toc - tic, 3)) + "s"
        )

    def run_actors(self):
        futures = [a.scan.remote(c) for a, c in zip(self.actors, self.chunks)]
        rows = []
        with tqdm(total=len(futures), desc="Collecting workers", disable=None) as pbar:
            for f in futures:
                rows.extend(ray.get(f))
                pbar.update(1)
        return rows

    def cleanup(self):
        for actor in self.actors:
            ray.kill(actor)
        ht.logger.notice("Shutting down Ray")
        ray.shutdown()


def parity_scan(n_max, manager="serial", nproc=1, check=True):
    """
    Compare both tangent solvers and the parity n mod 2 on monomial ideals

    Args:
        n_max (int):
            Largest colength scanned.
        manager (str):
            "serial" or "ray".
        nproc (int):
            Number of Ray workers.
        check (bool):
            Raise when a row disagrees.

    Returns:
        pandas.DataFrame:
            Columns n, generators, graded, taylor, agree, parity_ok.

    Raises:
        VerificationError: when ``check`` and some ideal has solvers that
            disagree or a tangent dimension of the wrong parity.

    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if manager == "serial":
        rm = SerialScanManager()
    elif manager == "ray":
        rm = RayScanManager()
    else:
        ht.logger.warning(f"Unknown scan manager {manager!r}, using serial")
        rm = SerialScanManager()
    report = rm.scan(n_max, nproc)
    if check:
        bad = report[~(report["agree"] & report["parity_ok"])]
        if len(bad):
            mismatches = [
                (row.generators, f"equal dimensions = {row.n} mod 2", (row.graded, row.taylor))
                for row in bad.itertuples()
            ]
            raise ht.VerificationError(mismatches)
        ht.logger.success(f"Parity holds for all {len(report)} monomial ideals")
    return report
